#ifndef PRODSIMP_HOMOLOGY_HPP
#define PRODSIMP_HOMOLOGY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "double.hpp"
#include "error.hpp"
#include "incidence.hpp"
#include "linalg.hpp"

namespace prodsimp {

/// Reduced Betti numbers over one field. Degrees run from -1 to dim K.
struct BettiData {
    Field field = Field::GF2;
    std::map<int, std::int64_t> reduced_betti;
    std::int64_t total = 0;

    std::int64_t operator[](int degree) const
    {
        const auto it = reduced_betti.find(degree);
        return it == reduced_betti.end() ? 0 : it->second;
    }
};

namespace detail {

/**
 * Reduced Betti numbers of the complex whose faces are listed by
 * cardinality; faces_by_size[0] must be {0} (the empty face). Boundary maps
 * are reduced from the top dimension down so that pivot rows of one map
 * clear the matching columns of the next.
 */
inline std::map<int, std::int64_t> chain_reduced_betti(const std::vector<std::vector<std::uint64_t>>& faces_by_size,
                                                       Field field)
{
    const int top = static_cast<int>(faces_by_size.size()) - 1;
    std::vector<std::unordered_map<std::uint64_t, int>> index(faces_by_size.size());
    for (std::size_t s = 0; s < faces_by_size.size(); ++s) {
        index[s].reserve(faces_by_size[s].size());
        for (std::size_t i = 0; i < faces_by_size[s].size(); ++i)
            index[s].emplace(faces_by_size[s][i], static_cast<int>(i));
    }
    std::vector<std::int64_t> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<char> clear;
    std::vector<char> pivots;
    for (int s = top; s >= 1; --s) {
        const auto& cols = faces_by_size[static_cast<std::size_t>(s)];
        const auto& rows = index[static_cast<std::size_t>(s) - 1];
        std::vector<SignedColumn> matrix(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            SignedColumn& col = matrix[j];
            int position = 0;
            for (std::uint64_t bits = cols[j]; bits != 0; bits &= bits - 1, ++position) {
                col.rows.push_back(rows.at(cols[j] & ~(bits & (~bits + 1))));
                col.signs.push_back(position % 2 == 0 ? 1 : -1);
            }
            // Removing larger vertices yields distinct rows in arbitrary order.
            std::vector<std::size_t> order(col.rows.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return col.rows[a] < col.rows[b]; });
            SignedColumn sorted;
            for (std::size_t i : order) {
                sorted.rows.push_back(col.rows[i]);
                sorted.signs.push_back(col.signs[i]);
            }
            col = std::move(sorted);
        }
        rank[static_cast<std::size_t>(s)] = sparse_rank(field, matrix, rows.size(), clear, pivots);
        clear = pivots;
    }
    std::map<int, std::int64_t> betti;
    for (int s = 0; s <= top; ++s) {
        const auto count = static_cast<std::int64_t>(faces_by_size[static_cast<std::size_t>(s)].size());
        betti[s - 1] = count - rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s) + 1];
    }
    return betti;
}

inline std::vector<std::vector<std::uint64_t>> group_by_size(const std::vector<std::uint64_t>& faces)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t f : faces) {
        const auto s = static_cast<std::size_t>(std::popcount(f));
        if (out.size() <= s)
            out.resize(s + 1);
        out[s].push_back(f);
    }
    return out;
}

/// Subsets of `ground` containing none of `non_faces`, the empty set first.
inline std::vector<std::uint64_t> faces_avoiding(std::uint64_t ground, const std::vector<std::uint64_t>& non_faces)
{
    std::vector<std::uint64_t> out;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{0, ground}};
    while (!stack.empty()) {
        auto [face, candidates] = stack.back();
        stack.pop_back();
        out.push_back(face);
        for (std::uint64_t bits = candidates; bits != 0; bits &= bits - 1) {
            const std::uint64_t v = bits & (~bits + 1);
            const std::uint64_t grown = face | v;
            const bool blocked = std::any_of(non_faces.begin(), non_faces.end(), [&](std::uint64_t n) {
                return (n & v) && (n & ~grown) == 0;
            });
            if (!blocked)
                stack.emplace_back(grown, candidates & ~((v << 1) - 1));
        }
    }
    return out;
}

} // namespace detail

inline BettiData make_betti(Field field, std::map<int, std::int64_t> betti)
{
    BettiData data;
    data.field = field;
    data.reduced_betti = std::move(betti);
    for (const auto& entry : data.reduced_betti)
        data.total += entry.second;
    return data;
}

/// Reduced Betti numbers from the boundary matrices of every face of K.
inline BettiData reduced_betti(const SimplicialComplex& k, Field field)
{
    std::vector<std::uint64_t> faces;
    for_each_face(k, [&](Simplex s) { faces.push_back(s.mask()); });
    return make_betti(field, detail::chain_reduced_betti(detail::group_by_size(faces), field));
}

enum class HomologyRoute { Direct, AlexanderDual };

/**
 * Reduced Betti numbers of the complex on `ground` whose minimal non-faces
 * are `non_faces` (all inside `ground`).
 *
 * Direct builds every face. AlexanderDual uses H~_i(K) = H~^{n-i-3}(K^dual)
 * with K^dual the complex with maximal faces ground - N, and replaces K^dual
 * by the nerve of those maximal faces: a set S of minimal non-faces spans a
 * nerve face iff their union is not all of `ground`.
 */
inline std::map<int, std::int64_t> betti_from_non_faces(std::uint64_t ground, const std::vector<std::uint64_t>& non_faces,
                                                        Field field, HomologyRoute route)
{
    const int n = std::popcount(ground);
    if (route == HomologyRoute::Direct)
        return detail::chain_reduced_betti(detail::group_by_size(detail::faces_avoiding(ground, non_faces)), field);

    std::map<int, std::int64_t> betti;
    for (int d = -1; d <= n - 2; ++d)
        betti[d] = 0;
    if (non_faces.empty())
        return betti;  // a full simplex
    if (non_faces.size() > 24)
        throw Error(ErrorCode::InvalidParameter, "Alexander route supports at most 24 minimal non-faces");
    if (non_faces.size() == 1 && non_faces.front() == ground) {
        betti[n - 2] = 1;
        return betti;
    }
    const auto r = static_cast<int>(non_faces.size());
    std::vector<std::uint64_t> nerve;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{0, 0}};
    // (index set, union of its non-faces), grown in increasing index order.
    while (!stack.empty()) {
        auto [set, covered] = stack.back();
        stack.pop_back();
        nerve.push_back(set);
        const int start = set == 0 ? 0 : 64 - std::countl_zero(set);
        for (int i = start; i < r; ++i) {
            const std::uint64_t grown = covered | non_faces[static_cast<std::size_t>(i)];
            if (grown != ground)
                stack.emplace_back(set | (std::uint64_t{1} << i), grown);
        }
    }
    for (const auto& [p, value] : detail::chain_reduced_betti(detail::group_by_size(nerve), field))
        if (value != 0)
            betti[n - p - 3] += value;
    return betti;
}

/// Options for the subset sweep behind the Hochster quantities.
struct SweepOptions {
    int cap = 20;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Subsets with at most this many minimal non-faces use the Alexander dual.
    int dual_route_limit = 12;
};

/**
 * Totals of reduced Betti numbers of full subcomplexes, bucketed by
 * (|J|, degree d): ranks[{j, d}] = sum over |J| = j of b~_d(K_J).
 *
 * H^p of the real moment-angle complex is the sum over J of H~^{p-1}(K_J),
 * and the bigraded Betti number beta^{-i,2j} collects degree d = j - i - 1.
 */
struct HochsterTable {
    Field field = Field::GF2;
    int m = 0;
    int dim = -1;
    std::map<std::pair<int, int>, std::int64_t> ranks;

    std::int64_t total() const
    {
        std::int64_t sum = 0;
        for (const auto& entry : ranks)
            sum += entry.second;
        return sum;
    }

    /// rank H^p(RZ_K) for every p with a non-zero rank.
    std::map<int, std::int64_t> cohomology_ranks() const
    {
        std::map<int, std::int64_t> out;
        for (const auto& [key, value] : ranks)
            out[key.second + 1] += value;
        return out;
    }

    std::int64_t euler_characteristic() const
    {
        std::int64_t chi = 0;
        for (const auto& [p, value] : cohomology_ranks())
            chi += (p % 2 == 0 ? 1 : -1) * value;
        return chi;
    }
};

/**
 * Sweeps all J subsets of V(K). A subset not covered by the minimal
 * non-faces it contains leaves a cone point, so K_J is contractible and
 * contributes nothing. The sweep may run on several threads; the result
 * is the same integer table for any schedule.
 */
inline HochsterTable hochster_sweep(const SimplicialComplex& input, Field field, const SweepOptions& options = {})
{
    if (input.num_vertices() > options.cap)
        throw Error(ErrorCode::CapExceeded, "Hochster sweep over " + std::to_string(input.num_vertices()) +
                                               " vertices exceeds cap " + std::to_string(options.cap));
    if (input.num_vertices() > 40)
        throw Error(ErrorCode::CapExceeded, "Hochster sweep supports at most 40 vertices");
    const SimplicialComplex k = compact(input);
    const int m = k.num_vertices();
    std::vector<std::uint64_t> non_faces;
    for (Simplex s : minimal_non_faces(k))
        non_faces.push_back(s.mask());

    HochsterTable table;
    table.field = field;
    table.m = m;
    table.dim = k.dimension();

    const std::uint64_t subsets = std::uint64_t{1} << m;
    unsigned workers = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, subsets / 256)));
    constexpr std::uint64_t kChunk = 256;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::map<std::pair<int, int>, std::int64_t>> partial(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](unsigned id) {
        try {
            auto& local = partial[id];
            std::vector<std::uint64_t> inside;
            for (std::uint64_t begin; (begin = next.fetch_add(kChunk)) < subsets;) {
                const std::uint64_t end = std::min(subsets, begin + kChunk);
                for (std::uint64_t j = begin; j < end; ++j) {
                    if (j == 0) {
                        local[{0, -1}] += 1;
                        continue;
                    }
                    inside.clear();
                    std::uint64_t covered = 0;
                    for (std::uint64_t n : non_faces) {
                        if ((n & ~j) == 0) {
                            inside.push_back(n);
                            covered |= n;
                        }
                    }
                    if (covered != j)
                        continue;
                    const auto route = static_cast<int>(inside.size()) <= options.dual_route_limit
                                           ? HomologyRoute::AlexanderDual
                                           : HomologyRoute::Direct;
                    const int size = std::popcount(j);
                    for (const auto& [d, value] : betti_from_non_faces(j, inside, field, route))
                        if (value != 0)
                            local[{size, d}] += value;
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id)
            pool.emplace_back(work, id);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    for (const auto& local : partial)
        for (const auto& [key, value] : local)
            table.ranks[key] += value;
    return table;
}

inline std::int64_t hochster_total_rank(const SimplicialComplex& k, Field field, const SweepOptions& options = {})
{
    return hochster_sweep(k, field, options).total();
}

/**
 * Sum over every J of total(reduced_betti(K_J)) with no pruning and no
 * duality: the definition, kept as an independent check of the sweep.
 */
inline std::int64_t hochster_total_rank_reference(const SimplicialComplex& k, Field field, int cap = 16)
{
    if (k.num_vertices() > cap)
        throw Error(ErrorCode::CapExceeded, "reference sweep exceeds cap");
    std::int64_t total = 0;
    for_each_subset(k.vertex_set().mask(), [&](std::uint64_t j) {
        total += reduced_betti(full_subcomplex(k, Simplex(j)), field).total;
    });
    return total;
}

/// 2^(m - dim K - 1), or 0 when the exponent is negative.
inline std::int64_t hrk_product_value(const SimplicialComplex& k)
{
    const int exponent = k.num_vertices() - k.dimension() - 1;
    return exponent < 0 ? 0 : std::int64_t{1} << exponent;
}

inline bool hrk_criterion(const SimplicialComplex& k, Field field, const SweepOptions& options = {})
{
    return hochster_total_rank(k, field, options) == hrk_product_value(k);
}

/// hrk(Z_K) computed as the Hochster total of the double L(K); cap applies to 2m.
inline std::int64_t hrk_Z_via_double(const SimplicialComplex& k, Field field, const SweepOptions& options = {})
{
    if (2 * k.num_vertices() > options.cap)
        throw Error(ErrorCode::CapExceeded, "double has " + std::to_string(2 * k.num_vertices()) +
                                               " vertices, cap " + std::to_string(options.cap));
    return hochster_total_rank(double_complex(k), field, options);
}

/// beta^{-i,2j} keyed by (i, j); zero entries are omitted.
struct BigradedBettiTable {
    Field field = Field::GF2;
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::int64_t entry(int i, int j) const
    {
        const auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    std::int64_t total() const
    {
        std::int64_t sum = 0;
        for (const auto& e : entries)
            sum += e.second;
        return sum;
    }
};

inline BigradedBettiTable bigraded_from_sweep(const HochsterTable& table)
{
    BigradedBettiTable out;
    out.field = table.field;
    for (const auto& [key, value] : table.ranks) {
        const auto [j, d] = key;
        out.entries[{j - d - 1, j}] += value;
    }
    return out;
}

inline BigradedBettiTable bigraded_betti(const SimplicialComplex& k, Field field, const SweepOptions& options = {})
{
    return bigraded_from_sweep(hochster_sweep(k, field, options));
}

/**
 * Euler characteristic of RZ_P from the cell structure of the gluing
 * P x (Z_2)^m / ~: a d-face of P lies on n - d facets and so has
 * 2^(m-n+d) copies of its interior. Faces of P are read off the dual
 * complex: a d-face corresponds to a simplex with n - d vertices, and P
 * itself to the empty simplex.
 */
inline std::int64_t euler_char_gluing(const VertexFacetIncidence& inc)
{
    const SimplicialComplex k = dual_boundary_complex(inc);
    std::int64_t chi = 0;
    for_each_face(k, [&](Simplex s) {
        const int d = inc.n - s.size();
        const std::int64_t cells = std::int64_t{1} << (inc.m - s.size());
        chi += (d % 2 == 0 ? 1 : -1) * cells;
    });
    return chi;
}

struct VertexLinkReport {
    int vertex = 0;
    int m_v = 0;
    int link_dim = -1;
    std::int64_t rank = 0;
    std::int64_t bound = 0;
    bool holds() const { return rank >= bound; }
};

struct UstinovskyReport {
    std::int64_t rank = 0;
    std::int64_t bound = 0;
    std::vector<VertexLinkReport> links;

    bool global_holds() const { return rank >= bound; }
    bool holds() const
    {
        return global_holds() && std::all_of(links.begin(), links.end(), [](const auto& l) { return l.holds(); });
    }
};

/**
 * Lower bounds on Hochster totals: 2^(m - dim K - 1) for K and
 * 2^(m_v - n + 1) for each vertex link, with n = dim K + 1.
 */
inline UstinovskyReport ustinovsky_bound_check(const SimplicialComplex& k, Field field,
                                               const SweepOptions& options = {})
{
    UstinovskyReport report;
    report.rank = hochster_total_rank(k, field, options);
    report.bound = hrk_product_value(k);
    const int n = k.dimension() + 1;
    for (int v : k.vertex_set().vertices()) {
        const SimplicialComplex lk = link(k, v);
        VertexLinkReport entry;
        entry.vertex = v;
        entry.m_v = lk.num_vertices();
        entry.link_dim = lk.dimension();
        entry.rank = hochster_total_rank(lk, field, options);
        const int exponent = entry.m_v - n + 1;
        entry.bound = exponent < 0 ? 0 : std::int64_t{1} << exponent;
        report.links.push_back(entry);
    }
    return report;
}

} // namespace prodsimp

#endif // PRODSIMP_HOMOLOGY_HPP
