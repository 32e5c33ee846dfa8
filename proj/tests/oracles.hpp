#ifndef PRODSIMP_TESTS_ORACLES_HPP
#define PRODSIMP_TESTS_ORACLES_HPP

// Brute-force reference implementations. Nothing here calls the library's
// algorithms; complexes are read only through their maximal faces.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <prodsimp/complex.hpp>

namespace oracle {

using Mask = std::uint64_t;
using prodsimp::SimplicialComplex;

inline int popcount(Mask x) { return __builtin_popcountll(x); }

inline Mask vertex_mask(const SimplicialComplex& k)
{
    Mask v = 0;
    for (auto f : k.maximal_faces())
        v |= f.mask();
    return v;
}

inline bool is_face(const SimplicialComplex& k, Mask s)
{
    for (auto f : k.maximal_faces())
        if ((s & ~f.mask()) == 0)
            return true;
    return false;
}

/// Every submask of `ground`, by iterating all of them.
inline std::vector<Mask> submasks(Mask ground)
{
    std::vector<Mask> out;
    Mask s = 0;
    do {
        out.push_back(s);
        s = (s - ground) & ground;
    } while (s != 0);
    return out;
}

/// All faces including the empty one, sorted by (size, mask).
inline std::vector<Mask> faces(const SimplicialComplex& k)
{
    std::vector<Mask> out;
    for (Mask s : submasks(vertex_mask(k)))
        if (is_face(k, s))
            out.push_back(s);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        return std::pair(popcount(a), a) < std::pair(popcount(b), b);
    });
    return out;
}

inline std::vector<std::int64_t> f_vector(const SimplicialComplex& k)
{
    std::vector<std::int64_t> f;
    for (Mask s : faces(k)) {
        if (s == 0)
            continue;
        const auto d = static_cast<std::size_t>(popcount(s) - 1);
        if (f.size() <= d)
            f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

inline std::set<Mask> minimal_non_faces(const SimplicialComplex& k)
{
    std::set<Mask> out;
    for (Mask s : submasks(vertex_mask(k))) {
        if (s == 0 || is_face(k, s))
            continue;
        bool minimal = true;
        for (Mask rest = s; rest && minimal; rest &= rest - 1)
            minimal = is_face(k, s & ~(rest & -rest));
        if (minimal)
            out.insert(s);
    }
    return out;
}

/// Faces of Lk(sigma), by testing cofaces directly.
inline std::set<Mask> link_faces(const SimplicialComplex& k, Mask sigma)
{
    std::set<Mask> out;
    for (Mask t : submasks(vertex_mask(k) & ~sigma))
        if (is_face(k, t | sigma))
            out.insert(t);
    return out;
}

inline std::set<Mask> face_set(const SimplicialComplex& k)
{
    const auto f = faces(k);
    return {f.begin(), f.end()};
}

// ---- dense linear algebra -------------------------------------------------

using Q = boost::multiprecision::cpp_rational;

/// Row-echelon rank over GF(2) of a dense 0/1 matrix.
inline int rank_gf2(std::vector<std::vector<int>> a)
{
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] & 1) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[pivot], a[rank]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && (a[r][c] & 1))
                for (int j = 0; j < cols; ++j)
                    a[r][j] ^= a[rank][j] & 1;
        ++rank;
    }
    return rank;
}

/// Row-echelon rank over Q of a dense integer matrix.
inline int rank_q(const std::vector<std::vector<int>>& in)
{
    std::vector<std::vector<Q>> a;
    for (const auto& row : in)
        a.emplace_back(row.begin(), row.end());
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0)
                continue;
            const Q factor = a[r][c] / a[rank][c];
            for (int j = c; j < cols; ++j)
                a[r][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/**
 * Reduced Betti numbers of the complex with the given face list (which must
 * contain the empty face whenever any face is present), via the
 * augmented chain complex and dense boundary matrices.
 */
inline std::map<int, std::int64_t> reduced_betti_of_faces(const std::vector<Mask>& all, bool rational)
{
    std::map<int, std::vector<Mask>> by_dim;
    for (Mask s : all)
        by_dim[popcount(s) - 1].push_back(s);
    auto boundary_rank = [&](int d) -> int {  // rank of C_d -> C_{d-1}
        if (!by_dim.count(d) || !by_dim.count(d - 1))
            return 0;
        const auto& rows = by_dim[d - 1];
        const auto& cols = by_dim[d];
        std::map<Mask, int> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i)
            row_index[rows[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            int sign = 1;
            for (Mask rest = cols[j]; rest; rest &= rest - 1) {
                m[row_index.at(cols[j] & ~(rest & -rest))][j] = sign;
                sign = -sign;
            }
        }
        return rational ? rank_q(m) : rank_gf2(m);
    };
    std::map<int, std::int64_t> out;
    for (const auto& [d, cells] : by_dim) {
        const std::int64_t b = static_cast<std::int64_t>(cells.size()) - boundary_rank(d) - boundary_rank(d + 1);
        if (b != 0)
            out[d] = b;
    }
    return out;
}

inline std::map<int, std::int64_t> reduced_betti(const SimplicialComplex& k, bool rational)
{
    return reduced_betti_of_faces(faces(k), rational);
}

/// (|J|, d) -> sum of b~_d(K_J), over every J with no pruning.
inline std::map<std::pair<int, int>, std::int64_t> hochster_table(const SimplicialComplex& k, bool rational)
{
    const std::vector<Mask> all = faces(k);
    std::map<std::pair<int, int>, std::int64_t> out;
    for (Mask j : submasks(vertex_mask(k))) {
        std::vector<Mask> sub;
        for (Mask s : all)
            if ((s & ~j) == 0)
                sub.push_back(s);
        for (const auto& [d, b] : reduced_betti_of_faces(sub, rational))
            out[{popcount(j), d}] += b;
    }
    return out;
}

inline std::int64_t hochster_total(const SimplicialComplex& k, bool rational)
{
    std::int64_t t = 0;
    for (const auto& e : hochster_table(k, rational))
        t += e.second;
    return t;
}

/// Alternating sum of ranks of H^p(RZ_K), p = d + 1.
inline std::int64_t hochster_euler(const SimplicialComplex& k)
{
    std::int64_t chi = 0;
    for (const auto& [key, b] : hochster_table(k, false))
        chi += ((key.second + 1) % 2 == 0 ? 1 : -1) * b;
    return chi;
}

// ---- isomorphism with a sphere join ---------------------------------------

/// Maximal faces of the join of simplex boundaries on consecutive blocks of sizes n_i + 1.
inline std::vector<Mask> sphere_join_facets(const std::vector<int>& dims)
{
    std::vector<Mask> facets{0};
    int offset = 0;
    for (int n : dims) {
        std::vector<Mask> next;
        for (Mask f : facets)
            for (int drop = 0; drop <= n; ++drop) {
                Mask block = 0;
                for (int v = 0; v <= n; ++v)
                    if (v != drop)
                        block |= Mask{1} << (offset + v);
                next.push_back(f | block);
            }
        facets = std::move(next);
        offset += n + 1;
    }
    return facets;
}

/// Backtracking search for a vertex bijection carrying facets of `a` onto facets of `b`.
inline bool isomorphic_facets(const std::vector<Mask>& a, Mask va, const std::vector<Mask>& b, Mask vb)
{
    if (a.size() != b.size() || popcount(va) != popcount(vb))
        return false;
    std::vector<int> src, dst;
    for (int v = 0; v < 64; ++v) {
        if (va >> v & 1)
            src.push_back(v);
        if (vb >> v & 1)
            dst.push_back(v);
    }
    auto degree = [](const std::vector<Mask>& fs, int v) {
        return static_cast<int>(std::count_if(fs.begin(), fs.end(), [v](Mask f) { return f >> v & 1; }));
    };
    const std::set<Mask> target(b.begin(), b.end());
    std::vector<int> image(64, -1);
    std::vector<bool> used(64, false);

    // Facets of a fully inside the mapped prefix must map onto facets of b.
    auto consistent = [&](Mask mapped) {
        for (Mask f : a) {
            if ((f & ~mapped) != 0)
                continue;
            Mask g = 0;
            for (Mask rest = f; rest; rest &= rest - 1)
                g |= Mask{1} << image[__builtin_ctzll(rest)];
            if (!target.count(g))
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i, Mask mapped) -> bool {
        if (i == src.size())
            return true;
        const int v = src[i];
        for (int w : dst) {
            if (used[w] || degree(a, v) != degree(b, w))
                continue;
            image[v] = w;
            used[w] = true;
            if (consistent(mapped | Mask{1} << v) && self(self, i + 1, mapped | Mask{1} << v))
                return true;
            used[w] = false;
            image[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

inline void partitions_into(int total_dim, int max_part, std::vector<int>& current,
                            std::vector<std::vector<int>>& out)
{
    if (total_dim == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(total_dim, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_into(total_dim - p, p, current, out);
        current.pop_back();
    }
}

/**
 * The factor dimensions (n_1 >= n_2 >= ...) if K is isomorphic to a join of
 * simplex boundaries, by trying every candidate with sum(n_i + 1) = m and
 * sum n_i = dim K + 1. Empty when no candidate matches.
 */
inline std::vector<int> sphere_join_type(const SimplicialComplex& k)
{
    const Mask v = vertex_mask(k);
    const int m = popcount(v);
    const int n = k.dimension() + 1;
    if (n < 1)
        return {};
    std::vector<Mask> a;
    for (auto f : k.maximal_faces())
        a.push_back(f.mask());
    std::vector<std::vector<int>> candidates;
    std::vector<int> scratch;
    partitions_into(n, n, scratch, candidates);
    for (const auto& dims : candidates) {
        if (n + static_cast<int>(dims.size()) != m)
            continue;
        const auto b = sphere_join_facets(dims);
        if (isomorphic_facets(a, v, b, (m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1)))
            return dims;
    }
    return {};
}

} // namespace oracle

#endif // PRODSIMP_TESTS_ORACLES_HPP
