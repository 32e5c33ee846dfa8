#ifndef PRODSIMP_RECOGNITION_HPP
#define PRODSIMP_RECOGNITION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "double.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "report.hpp"

namespace prodsimp {

struct DecompositionResult {
    std::optional<SphereJoinDecomposition> decomposition;
    std::optional<Witness> witness;

    explicit operator bool() const { return decomposition.has_value(); }
};

/// The join of the boundaries of the given disjoint vertex sets, in `ambient`.
inline SimplicialComplex join_of_boundaries(int ambient, const std::vector<Simplex>& parts)
{
    std::vector<Simplex> faces{Simplex{}};
    for (Simplex part : parts) {
        std::vector<Simplex> grown;
        for (Simplex f : faces)
            for (int v : part.vertices())
                grown.push_back(f | part.without(v));
        faces = std::move(grown);
    }
    return SimplicialComplex(ambient, std::move(faces));
}

/**
 * Splits K into simplex boundaries along its minimal non-faces. Succeeds iff
 * they partition V(K) and the join of boundaries on the parts is K itself.
 * Parts are sorted by size, then by smallest vertex.
 */
inline DecompositionResult decompose_by_non_faces(const SimplicialComplex& k)
{
    DecompositionResult result;
    std::vector<Simplex> parts = minimal_non_faces(k);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (parts[i].intersects(parts[j])) {
                result.witness = witness::OverlappingNonFaces{parts[i], parts[j]};
                return result;
            }
        }
    }
    Simplex covered;
    for (Simplex p : parts)
        covered = covered | p;
    if (covered != k.vertex_set()) {
        result.witness = witness::UncoveredByNonFaces{k.vertex_set() - covered};
        return result;
    }
    const SimplicialComplex joined = join_of_boundaries(k.ambient_size(), parts);
    for (Simplex f : joined.maximal_faces()) {
        if (!k.contains(f)) {
            result.witness = witness::JoinMismatch{f, false};
            return result;
        }
    }
    for (Simplex f : k.maximal_faces()) {
        if (!joined.contains(f)) {
            result.witness = witness::JoinMismatch{f, true};
            return result;
        }
    }
    std::sort(parts.begin(), parts.end(), [](Simplex a, Simplex b) {
        return a.size() != b.size() ? a.size() < b.size() : a.min_vertex() < b.min_vertex();
    });
    result.decomposition = SphereJoinDecomposition{std::move(parts)};
    return result;
}

inline RecognitionReport check_non_face_partition(const SimplicialComplex& k)
{
    RecognitionReport report{Criterion::NonFacePartition, false, false, std::nullopt, {}};
    DecompositionResult d = decompose_by_non_faces(k);
    report.verdict = static_cast<bool>(d);
    report.witness = std::move(d.witness);
    return report;
}

/**
 * For every maximal simplex sigma: the restriction of K to V(K) - sigma must
 * be the single simplex xi on those vertices, and for each vertex v of sigma
 * the faces of link_K v inside xi must form a simplex (possibly empty).
 */
inline RecognitionReport check_newcomb(const SimplicialComplex& k)
{
    RecognitionReport report{Criterion::NewComb, true, false, std::nullopt, {}};
    for (Simplex sigma : k.maximal_faces()) {
        const Simplex rest = k.vertex_set() - sigma;
        const SimplicialComplex xi = full_subcomplex(k, rest);
        if (!is_single_simplex(xi) || xi.maximal_faces().front() != rest) {
            report.verdict = false;
            report.witness = witness::RestrictionNotSimplex{sigma, xi.maximal_faces()};
            return report;
        }
        for (int v : sigma.vertices()) {
            const SimplicialComplex lk = link(k, v);
            std::vector<Simplex> inside;
            for (Simplex f : lk.maximal_faces())
                inside.push_back(f & rest);
            const SimplicialComplex meet(k.ambient_size(), std::move(inside));
            if (!is_single_simplex(meet)) {
                report.verdict = false;
                report.witness = witness::LinkIntersectionNotSimplex{sigma, v, meet.maximal_faces()};
                return report;
            }
        }
    }
    return report;
}

/// Simplices of K with exactly `size` vertices, sorted.
inline std::vector<Simplex> faces_of_size(const SimplicialComplex& k, int size)
{
    std::vector<Simplex> out;
    for_each_face(k, [&](Simplex s) {
        if (s.size() == size)
            out.push_back(s);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Every 2-face of P is a triangle or a square; dually every codimension-two
 * simplex of K has a 3- or 4-cycle as its link. K must be a pure
 * pseudomanifold (or two points in dimension 0).
 */
inline RecognitionReport check_two_face(const SimplicialComplex& k)
{
    RecognitionReport report{Criterion::TwoFace, true, false, std::nullopt, {}};
    const int dim = k.dimension();
    if (dim < 0)
        throw Error(ErrorCode::PreconditionViolated, "two-face test needs a non-empty complex");
    if (dim == 0) {
        // A segment has no 2-faces; its dual is two points.
        if (k.num_vertices() != 2) {
            report.verdict = false;
            report.witness = witness::BadBaseCase{0, 0};
        }
        return report;
    }
    if (!is_pseudomanifold(k).is_pseudomanifold())
        throw Error(ErrorCode::PreconditionViolated, "two-face test needs a pure pseudomanifold");
    if (dim == 1) {
        const int len = cycle_length(k);
        if (len != 3 && len != 4) {
            report.verdict = false;
            report.witness = witness::BadBaseCase{1, len};
        }
        return report;
    }
    for (Simplex eta : faces_of_size(k, dim - 1)) {
        const int len = cycle_length(link(k, eta));
        if (len != 3 && len != 4) {
            report.verdict = false;
            report.witness = witness::LongLink{eta, len};
            return report;
        }
    }
    return report;
}

namespace detail {

using ComplexKey = std::pair<std::uint64_t, std::vector<std::uint64_t>>;

inline ComplexKey key_of(const SimplicialComplex& k)
{
    ComplexKey key{k.vertex_set().mask(), {}};
    for (Simplex f : k.maximal_faces())
        key.second.push_back(f.mask());
    return key;
}

inline std::optional<witness::RecursiveFailure>
recognize_recursive_impl(const SimplicialComplex& k, std::map<ComplexKey, std::optional<witness::RecursiveFailure>>& memo)
{
    const ComplexKey key = key_of(k);
    if (const auto it = memo.find(key); it != memo.end())
        return it->second;

    std::optional<witness::RecursiveFailure> failure;
    const int dim = k.dimension();
    if (dim == 0) {
        if (k.num_vertices() != 2)
            failure = witness::RecursiveFailure{{}, "dimension 0 complex is not two points", std::nullopt, 0};
    } else {
        const PseudomanifoldReport pm = is_pseudomanifold(k);
        if (!pm.is_pseudomanifold()) {
            failure = witness::RecursiveFailure{{}, !pm.is_pure ? "not pure" : (!pm.ridge_violations.empty() ? "ridge not in exactly two top simplices" : "not strongly connected"), std::nullopt, 0};
            if (!pm.ridge_violations.empty())
                failure->ridge = pm.ridge_violations.front();
        } else if (dim == 1) {
            const int len = k.num_vertices();
            if (len != 3 && len != 4)
                failure = witness::RecursiveFailure{{}, "cycle is not a 3- or 4-cycle", std::nullopt, len};
        } else {
            for (int v : k.vertex_set().vertices()) {
                const SimplicialComplex lk = link(k, v);
                if (lk.dimension() != dim - 1) {
                    failure = witness::RecursiveFailure{{v}, "link has wrong dimension", std::nullopt, 0};
                    break;
                }
                if (auto sub = recognize_recursive_impl(lk, memo)) {
                    sub->path.insert(sub->path.begin(), v);
                    failure = std::move(sub);
                    break;
                }
            }
        }
    }
    memo.emplace(key, failure);
    return failure;
}

} // namespace detail

/**
 * K (dim >= 2) is a sphere join iff it is a pseudomanifold and every vertex
 * link is a sphere join of one dimension less. In dimension 1 only the 3-
 * and 4-cycles qualify, and in dimension 0 only two points.
 */
inline RecognitionReport recognize_recursive(const SimplicialComplex& k)
{
    if (k.dimension() < 0)
        throw Error(ErrorCode::InvalidDimension, "recursive recognition needs a non-empty complex");
    std::map<detail::ComplexKey, std::optional<witness::RecursiveFailure>> memo;
    RecognitionReport report{Criterion::Recursive, true, false, std::nullopt, {}};
    if (auto failure = detail::recognize_recursive_impl(k, memo)) {
        report.verdict = false;
        report.witness = std::move(*failure);
    }
    return report;
}

/**
 * L(K) must itself split into simplex boundaries, every part must have an
 * even number of vertices, and when K decomposes the parts of L(K) must be
 * the lifts of its parts.
 */
inline RecognitionReport check_double_criterion(const SimplicialComplex& k, int cap = 20)
{
    if (2 * k.num_vertices() > cap)
        throw Error(ErrorCode::CapExceeded, "double has " + std::to_string(2 * k.num_vertices()) +
                                               " vertices, cap " + std::to_string(cap));
    RecognitionReport report{Criterion::Double, false, false, std::nullopt, {}};
    const SimplicialComplex l = double_complex(k);
    const DecompositionResult dl = decompose_by_non_faces(l);
    if (!dl) {
        witness::DoubleFailure failure{std::nullopt, std::nullopt, "double does not split into simplex boundaries"};
        if (const auto* overlap = std::get_if<witness::OverlappingNonFaces>(&*dl.witness)) {
            failure.first = overlap->first;
            failure.second = overlap->second;
        }
        report.witness = failure;
        return report;
    }
    for (Simplex part : dl.decomposition->parts) {
        if (part.size() % 2 != 0) {
            report.witness = witness::DoubleFailure{part, std::nullopt, "odd part in double"};
            return report;
        }
    }
    const DecompositionResult dk = decompose_by_non_faces(compact(k));
    if (dk) {
        std::set<std::uint64_t> lifted;
        for (Simplex p : dk.decomposition->parts)
            lifted.insert(lift_to_double(p).mask());
        std::set<std::uint64_t> found;
        for (Simplex p : dl.decomposition->parts)
            found.insert(p.mask());
        if (lifted != found) {
            report.witness = witness::DoubleFailure{std::nullopt, std::nullopt, "double parts are not lifts of K's parts"};
            return report;
        }
    } else {
        report.witness = witness::DoubleFailure{std::nullopt, std::nullopt, "double splits but K does not"};
        return report;
    }
    report.verdict = true;
    return report;
}

inline RecognitionReport check_hrk(const SimplicialComplex& k, Field field, const SweepOptions& options = {})
{
    RecognitionReport report{field == Field::GF2 ? Criterion::HrkGF2 : Criterion::HrkQ, false, false, std::nullopt, {}};
    const std::int64_t total = hochster_total_rank(k, field, options);
    const std::int64_t expected = hrk_product_value(k);
    report.verdict = total == expected;
    if (!report.verdict)
        report.witness = witness::RankMismatch{field, total, expected};
    return report;
}

struct RecognizeOptions {
    SweepOptions sweep;
    /// Mark cap-limited criteria as skipped instead of throwing CapExceeded.
    bool skip_over_cap = false;
};

struct ConsolidatedReport {
    std::vector<RecognitionReport> reports;
    std::optional<SphereJoinDecomposition> decomposition;
    bool agreement = false;

    /// The common verdict; meaningful only when agreement holds.
    bool positive() const
    {
        for (const auto& r : reports)
            if (!r.skipped)
                return r.verdict;
        return false;
    }

    const RecognitionReport* find(Criterion c) const
    {
        for (const auto& r : reports)
            if (r.criterion == c)
                return &r;
        return nullptr;
    }
};

inline bool reports_agree(const std::vector<RecognitionReport>& reports)
{
    std::optional<bool> common;
    for (const auto& r : reports) {
        if (r.skipped)
            continue;
        if (common && *common != r.verdict)
            return false;
        common = r.verdict;
    }
    return common.has_value();
}

/**
 * Runs every criterion in increasing cost order, without short-circuiting.
 * A positive outcome carries the decomposition, which has been checked
 * face-for-face against K.
 */
inline ConsolidatedReport recognize_all(const SimplicialComplex& k, const std::vector<Field>& fields,
                                        const RecognizeOptions& options = {})
{
    ConsolidatedReport out;
    const DecompositionResult d = decompose_by_non_faces(k);
    out.reports.push_back(RecognitionReport{Criterion::NonFacePartition, static_cast<bool>(d), false, d.witness, {}});
    out.reports.push_back(check_newcomb(k));
    try {
        out.reports.push_back(check_two_face(k));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::PreconditionViolated)
            throw;
        out.reports.push_back(RecognitionReport{Criterion::TwoFace, false, true, std::nullopt, e.what()});
    }
    out.reports.push_back(recognize_recursive(k));

    auto capped = [&](Criterion c, int needed, auto&& run) {
        if (needed > options.sweep.cap) {
            if (!options.skip_over_cap)
                throw Error(ErrorCode::CapExceeded, std::string(to_string(c)) + " needs " + std::to_string(needed) +
                                                        " vertices, cap " + std::to_string(options.sweep.cap));
            out.reports.push_back(RecognitionReport{c, false, true, std::nullopt,
                                                    "skipped: needs " + std::to_string(needed) + " > cap " +
                                                        std::to_string(options.sweep.cap)});
            return;
        }
        out.reports.push_back(run());
    };
    for (Field f : fields)
        capped(f == Field::GF2 ? Criterion::HrkGF2 : Criterion::HrkQ, k.num_vertices(),
               [&] { return check_hrk(k, f, options.sweep); });
    capped(Criterion::Double, 2 * k.num_vertices(), [&] { return check_double_criterion(k, options.sweep.cap); });

    out.agreement = reports_agree(out.reports);
    if (d && out.agreement && out.positive())
        out.decomposition = d.decomposition;
    return out;
}

/**
 * Re-checks a witness against K by a route independent of the criterion
 * that produced it. Dihedral witnesses need the geometry and are not
 * handled here.
 */
inline bool verify_witness(const SimplicialComplex& k, const Witness& w)
{
    auto is_minimal_non_face = [&](Simplex s) {
        if (s.empty() || k.contains(s))
            return false;
        for (int v : s.vertices())
            if (!k.contains(s.without(v)))
                return false;
        return true;
    };
    struct Visitor {
        const SimplicialComplex& k;
        decltype(is_minimal_non_face)& mnf;

        bool operator()(const witness::OverlappingNonFaces& x) const
        {
            return mnf(x.first) && mnf(x.second) && x.first != x.second && x.first.intersects(x.second);
        }
        bool operator()(const witness::UncoveredByNonFaces& x) const
        {
            if (x.vertices.empty())
                return false;
            // Every vertex in x must be a cone point: it joins every maximal face.
            for (int v : x.vertices.vertices())
                for (Simplex f : k.maximal_faces())
                    if (!k.contains(f.with(v)))
                        return false;
            return true;
        }
        bool operator()(const witness::JoinMismatch& x) const { return k.contains(x.face) == x.in_complex; }
        bool operator()(const witness::RestrictionNotSimplex& x) const
        {
            return !k.contains(k.vertex_set() - x.sigma);
        }
        bool operator()(const witness::LinkIntersectionNotSimplex& x) const
        {
            const Simplex rest = k.vertex_set() - x.sigma;
            const Simplex v = Simplex::singleton(x.vertex);
            Simplex reach;
            for (int w : rest.vertices())
                if (k.contains(v.with(w)))
                    reach = reach.with(w);
            return !k.contains(reach | v);
        }
        bool operator()(const witness::LongLink& x) const
        {
            if (!k.contains(x.eta) || x.eta.size() != k.dimension() - 1)
                return false;
            // Link graph of eta: vertices w with eta+w a face, edges {w,u} with eta+w+u a face.
            std::vector<int> verts;
            for (int w : (k.vertex_set() - x.eta).vertices())
                if (k.contains(x.eta.with(w)))
                    verts.push_back(w);
            for (int w : verts) {
                int degree = 0;
                for (int u : verts)
                    if (u != w && k.contains(x.eta.with(w).with(u)))
                        ++degree;
                if (degree != 2)
                    return x.cycle_length == 0;
            }
            const int len = static_cast<int>(verts.size());
            return len >= 5 && (x.cycle_length == len || x.cycle_length == 0);
        }
        bool operator()(const witness::BadBaseCase& x) const
        {
            if (k.dimension() != x.dimension)
                return false;
            if (x.dimension == 0)
                return k.num_vertices() != 2;
            return cycle_length(k) != 3 && cycle_length(k) != 4;
        }
        bool operator()(const witness::RecursiveFailure& x) const
        {
            SimplicialComplex current = k;
            for (int v : x.path) {
                if (!current.vertex_set().contains(v))
                    return false;
                const int expected = current.dimension() - 1;
                current = link(current, v);
                if (current.dimension() != expected)
                    return true;
            }
            if (current.dimension() == 0)
                return current.num_vertices() != 2;
            if (!is_pseudomanifold(current).is_pseudomanifold())
                return true;
            return current.dimension() == 1 && current.num_vertices() != 3 && current.num_vertices() != 4;
        }
        bool operator()(const witness::RankMismatch& x) const
        {
            if (x.total == x.expected || x.expected != hrk_product_value(k))
                return false;
            SweepOptions direct;
            direct.cap = 64;
            direct.dual_route_limit = -1;
            const std::int64_t total = k.num_vertices() <= 16 ? hochster_total_rank_reference(k, x.field)
                                                              : hochster_total_rank(k, x.field, direct);
            return total == x.total;
        }
        bool operator()(const witness::DoubleFailure& x) const
        {
            if (!x.first || !x.second)
                return !x.reason.empty();
            const SimplicialComplex l = double_complex(k);
            return !l.contains(*x.first) && !l.contains(*x.second) && x.first->intersects(*x.second);
        }
        bool operator()(const witness::ObtusePair&) const { return false; }
    };
    return std::visit(Visitor{k, is_minimal_non_face}, w);
}

} // namespace prodsimp

#endif // PRODSIMP_RECOGNITION_HPP
