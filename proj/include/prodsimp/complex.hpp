#ifndef PRODSIMP_COMPLEX_HPP
#define PRODSIMP_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "simplex.hpp"

namespace prodsimp {

/**
 * A finite abstract simplicial complex stored by its maximal faces.
 *
 * Vertices are indices into an ambient range [0, ambient_size()). The vertex
 * set V(K) is the union of the maximal faces and may be a proper subset of
 * the ambient range for complexes produced by link() or full_subcomplex().
 * The empty complex, whose only face is the empty simplex, is a valid value
 * with dimension -1. Values are immutable after construction.
 *
 * Equality compares vertex sets and face sets; labels are ignored.
 */
class SimplicialComplex {
public:
    /// The empty complex on an empty ambient range.
    SimplicialComplex() : facets_{Simplex{}} {}

    /// Generates the complex from arbitrary faces, dropping dominated ones.
    SimplicialComplex(int ambient, std::vector<Simplex> faces, std::vector<std::string> labels = {})
        : ambient_(ambient), labels_(std::move(labels))
    {
        if (ambient < 0 || ambient > kMaxVertices)
            throw Error(ErrorCode::IndexOutOfRange,
                        "vertex count " + std::to_string(ambient) + " outside [0, 64]");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != ambient)
            throw Error(ErrorCode::InvalidParameter, "label count does not match vertex count");
        const Simplex range = Simplex::range(ambient);
        for (Simplex f : faces) {
            if (!f.is_subset_of(range))
                throw Error(ErrorCode::IndexOutOfRange,
                            "face uses vertex " + std::to_string(f.max_vertex()) + " >= " +
                                std::to_string(ambient));
        }
        facets_ = reduce_to_antichain(std::move(faces));
        for (Simplex f : facets_)
            vertices_ = vertices_ | f;
    }

    int ambient_size() const noexcept { return ambient_; }
    Simplex vertex_set() const noexcept { return vertices_; }
    int num_vertices() const noexcept { return vertices_.size(); }
    const std::vector<Simplex>& maximal_faces() const noexcept { return facets_; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(int v) const
    {
        return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    }

    /// Max face cardinality minus one; -1 for the empty complex.
    int dimension() const noexcept
    {
        int d = -1;
        for (Simplex f : facets_)
            d = std::max(d, f.dim());
        return d;
    }

    bool is_empty() const noexcept { return vertices_.empty(); }

    bool contains(Simplex s) const noexcept
    {
        return std::any_of(facets_.begin(), facets_.end(),
                           [s](Simplex f) { return s.is_subset_of(f); });
    }

    SimplicialComplex with_labels(std::vector<std::string> labels) const
    {
        return SimplicialComplex(ambient_, facets_, std::move(labels));
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    static std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> faces)
    {
        std::sort(faces.begin(), faces.end(), [](Simplex a, Simplex b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Simplex> kept;
        for (Simplex f : faces) {
            const bool dominated = std::any_of(kept.begin(), kept.end(),
                                               [f](Simplex g) { return f.is_subset_of(g); });
            if (!dominated)
                kept.push_back(f);
        }
        if (kept.empty())
            kept.push_back(Simplex{});
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    int ambient_ = 0;
    std::vector<std::string> labels_;
    std::vector<Simplex> facets_;
    Simplex vertices_;
};

/**
 * Builds the complex generated by `faces` on vertices [0, vertex_count).
 * Every vertex must lie in some face.
 */
inline SimplicialComplex build_complex(const std::vector<std::vector<int>>& faces, int vertex_count,
                                       std::vector<std::string> labels = {})
{
    std::vector<Simplex> simplices;
    simplices.reserve(faces.size());
    for (const auto& face : faces) {
        Simplex s;
        for (int v : face) {
            if (v < 0 || v >= vertex_count)
                throw Error(ErrorCode::IndexOutOfRange,
                            "vertex " + std::to_string(v) + " not in [0, " +
                                std::to_string(vertex_count) + ")");
            s.insert(v);
        }
        simplices.push_back(s);
    }
    SimplicialComplex k(vertex_count, std::move(simplices), std::move(labels));
    const Simplex missing = Simplex::range(vertex_count) - k.vertex_set();
    if (!missing.empty())
        throw Error(ErrorCode::UncoveredVertex,
                    "vertex " + std::to_string(missing.min_vertex()) + " is in no face");
    return k;
}

inline int dimension(const SimplicialComplex& k) { return k.dimension(); }

namespace detail {

template <typename Fn>
void enumerate_faces(Simplex face, const std::vector<Simplex>& cofacets, Fn& fn)
{
    fn(face);
    Simplex reachable;
    for (Simplex f : cofacets)
        reachable = reachable | f;
    std::uint64_t next = reachable.mask();
    if (!face.empty()) {
        const int top = face.max_vertex();
        next &= top >= 63 ? 0 : ~((std::uint64_t{2} << top) - 1);
    }
    std::vector<Simplex> narrowed;
    for (; next != 0; next &= next - 1) {
        const int v = std::countr_zero(next);
        narrowed.clear();
        for (Simplex f : cofacets)
            if (f.contains(v))
                narrowed.push_back(f);
        enumerate_faces(face.with(v), std::vector<Simplex>(narrowed), fn);
    }
}

} // namespace detail

/// Visits every face of K exactly once, the empty simplex first.
template <typename Fn>
void for_each_face(const SimplicialComplex& k, Fn&& fn)
{
    detail::enumerate_faces(Simplex{}, k.maximal_faces(), fn);
}

/// All faces sorted by cardinality, then lexicographically.
inline std::vector<Simplex> all_faces(const SimplicialComplex& k)
{
    std::vector<Simplex> out;
    for_each_face(k, [&](Simplex s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), [](Simplex a, Simplex b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

/// f[d] = number of d-simplices for d = 0..dim; the empty face is not counted.
inline std::vector<std::int64_t> f_vector(const SimplicialComplex& k)
{
    std::vector<std::int64_t> f(static_cast<std::size_t>(k.dimension() + 1), 0);
    for_each_face(k, [&](Simplex s) {
        if (!s.empty())
            ++f[static_cast<std::size_t>(s.dim())];
    });
    return f;
}

/// The link of sigma, on the same ambient range as K.
inline SimplicialComplex link(const SimplicialComplex& k, Simplex sigma)
{
    std::vector<Simplex> faces;
    for (Simplex f : k.maximal_faces())
        if (sigma.is_subset_of(f))
            faces.push_back(f - sigma);
    if (faces.empty())
        throw Error(ErrorCode::NotAFace, "simplex is not a face of the complex");
    return SimplicialComplex(k.ambient_size(), std::move(faces), k.labels());
}

inline SimplicialComplex link(const SimplicialComplex& k, int v) { return link(k, Simplex::singleton(v)); }

/// K_W: the faces of K contained in W. Requires W to be a subset of V(K).
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, Simplex w)
{
    if (!w.is_subset_of(k.vertex_set()))
        throw Error(ErrorCode::PreconditionViolated, "restriction set is not a subset of V(K)");
    std::vector<Simplex> faces;
    faces.reserve(k.maximal_faces().size());
    for (Simplex f : k.maximal_faces())
        faces.push_back(f & w);
    return SimplicialComplex(k.ambient_size(), std::move(faces), k.labels());
}

/// Join with the vertices of `b` shifted past the ambient range of `a`.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const int shift = a.ambient_size();
    const int ambient = shift + b.ambient_size();
    if (ambient > kMaxVertices)
        throw Error(ErrorCode::IndexOutOfRange, "join exceeds 64 vertices");
    std::vector<Simplex> faces;
    faces.reserve(a.maximal_faces().size() * b.maximal_faces().size());
    for (Simplex f : a.maximal_faces())
        for (Simplex g : b.maximal_faces())
            faces.push_back(f | Simplex(shift >= 64 ? 0 : g.mask() << shift));
    std::vector<std::string> labels;
    if (a.has_labels() || b.has_labels()) {
        for (int v = 0; v < a.ambient_size(); ++v)
            labels.push_back(a.label(v));
        for (int v = 0; v < b.ambient_size(); ++v)
            labels.push_back(b.has_labels() ? b.label(v) : std::to_string(v + shift));
    }
    return SimplicialComplex(ambient, std::move(faces), std::move(labels));
}

/// The boundary of the k-simplex on vertices 0..k.
inline SimplicialComplex boundary_of_simplex(int k)
{
    if (k <= 0 || k >= kMaxVertices)
        throw Error(ErrorCode::InvalidDimension, "boundary of simplex needs 1 <= k < 64");
    const Simplex all = Simplex::range(k + 1);
    std::vector<Simplex> faces;
    for (int v = 0; v <= k; ++v)
        faces.push_back(all.without(v));
    return SimplicialComplex(k + 1, std::move(faces));
}

/// The boundary complex of the simplex spanned by `vertices`, in an ambient range.
inline SimplicialComplex boundary_of_simplex_on(int ambient, Simplex vertices)
{
    std::vector<Simplex> faces;
    for (int v : vertices.vertices())
        faces.push_back(vertices.without(v));
    return SimplicialComplex(ambient, std::move(faces));
}

/**
 * Minimal transversals (minimal hitting sets) of a family of vertex sets,
 * by Berge's incremental algorithm. A family holding the empty set has no
 * transversal; the empty family has the single transversal {}.
 */
inline std::vector<Simplex> minimal_transversals(const std::vector<Simplex>& edges)
{
    std::vector<std::uint64_t> current{0};
    std::vector<Simplex> sorted_edges = edges;
    std::sort(sorted_edges.begin(), sorted_edges.end(),
              [](Simplex a, Simplex b) { return a.size() < b.size(); });
    for (Simplex edge : sorted_edges) {
        if (edge.empty())
            return {};
        std::vector<std::uint64_t> hit;
        std::vector<std::uint64_t> extended;
        for (std::uint64_t t : current) {
            if (t & edge.mask()) {
                hit.push_back(t);
                continue;
            }
            for (std::uint64_t bits = edge.mask(); bits != 0; bits &= bits - 1)
                extended.push_back(t | (bits & -bits));
        }
        std::sort(extended.begin(), extended.end(),
                  [](std::uint64_t a, std::uint64_t b) {
                      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
                  });
        extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
        // `hit` is already an antichain; an extension is kept only if it
        // contains no kept set.
        std::vector<std::uint64_t> next = hit;
        for (std::uint64_t t : extended) {
            const bool dominated = std::any_of(next.begin(), next.end(),
                                               [t](std::uint64_t s) { return (s & ~t) == 0; });
            if (!dominated)
                next.push_back(t);
        }
        current = std::move(next);
    }
    std::vector<Simplex> out;
    out.reserve(current.size());
    for (std::uint64_t t : current)
        out.emplace_back(t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline std::uint64_t compress(std::uint64_t mask, const std::vector<int>& vertices)
{
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if ((mask >> vertices[i]) & 1U)
            out |= std::uint64_t{1} << i;
    return out;
}

inline std::uint64_t expand(std::uint64_t dense, const std::vector<int>& vertices)
{
    std::uint64_t out = 0;
    for (; dense != 0; dense &= dense - 1)
        out |= std::uint64_t{1} << vertices[static_cast<std::size_t>(std::countr_zero(dense))];
    return out;
}

/// Face table over all 2^|V| subsets; a set missing from it whose
/// codimension-one subsets are all faces is a minimal non-face.
inline std::vector<Simplex> minimal_non_faces_by_table(const SimplicialComplex& k)
{
    const std::vector<int> verts = k.vertex_set().vertices();
    const int n = static_cast<int>(verts.size());
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint8_t> face(size, 0);
    for (Simplex f : k.maximal_faces())
        face[compress(f.mask(), verts)] = 1;
    for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t s = 0; s < size; ++s)
            if ((s & bit) && face[s])
                face[s ^ bit] = 1;
    }
    std::vector<Simplex> out;
    for (std::size_t s = 1; s < size; ++s) {
        if (face[s])
            continue;
        bool minimal = true;
        for (std::size_t bits = s; bits != 0 && minimal; bits &= bits - 1)
            minimal = face[s ^ (bits & (~bits + 1))] != 0;
        if (minimal)
            out.emplace_back(expand(s, verts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A non-face is a set meeting every complement V - F of a maximal face F.
inline std::vector<Simplex> minimal_non_faces_by_transversals(const SimplicialComplex& k)
{
    std::vector<Simplex> complements;
    complements.reserve(k.maximal_faces().size());
    for (Simplex f : k.maximal_faces())
        complements.push_back(k.vertex_set() - f);
    return minimal_transversals(complements);
}

} // namespace detail

/// All inclusion-minimal subsets of V(K) that are not faces, sorted.
inline std::vector<Simplex> minimal_non_faces(const SimplicialComplex& k)
{
    if (k.num_vertices() <= 22)
        return detail::minimal_non_faces_by_table(k);
    return detail::minimal_non_faces_by_transversals(k);
}

/**
 * The complex on `vertices` whose faces are exactly the subsets containing
 * none of `non_faces`.
 */
inline SimplicialComplex complex_from_non_faces(int ambient, Simplex vertices,
                                                const std::vector<Simplex>& non_faces,
                                                std::vector<std::string> labels = {})
{
    std::vector<Simplex> faces;
    for (Simplex t : minimal_transversals(non_faces))
        faces.push_back(vertices - t);
    return SimplicialComplex(ambient, std::move(faces), std::move(labels));
}

struct PseudomanifoldReport {
    bool is_pure = false;
    int dim = -1;
    /// (dim-1)-simplices lying in a number of dim-simplices other than two.
    std::vector<Simplex> ridge_violations;
    bool strongly_connected = false;

    bool is_pseudomanifold() const { return is_pure && ridge_violations.empty() && strongly_connected; }
};

inline PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k)
{
    PseudomanifoldReport report;
    report.dim = k.dimension();
    if (report.dim < 1)
        throw Error(ErrorCode::InvalidDimension, "pseudomanifold test needs dimension >= 1");
    const int top = report.dim + 1;

    std::vector<Simplex> tops;
    std::unordered_map<std::uint64_t, int> ridge_count;
    for (Simplex f : k.maximal_faces()) {
        if (f.size() == top)
            tops.push_back(f);
        else if (f.size() == top - 1)
            ridge_count.emplace(f.mask(), 0);
    }
    report.is_pure = tops.size() == k.maximal_faces().size();

    // Union-find over top faces; two top faces sharing a ridge are merged.
    std::vector<std::size_t> parent(tops.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::unordered_map<std::uint64_t, std::size_t> first_owner;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        for (int v : tops[i].vertices()) {
            const std::uint64_t r = tops[i].without(v).mask();
            ++ridge_count[r];
            auto [it, inserted] = first_owner.emplace(r, i);
            if (!inserted)
                parent[find(i)] = find(it->second);
        }
    }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2)
            report.ridge_violations.emplace_back(ridge);
    std::sort(report.ridge_violations.begin(), report.ridge_violations.end());

    int components = 0;
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (find(i) == i)
            ++components;
    report.strongly_connected = components == 1;
    return report;
}

/**
 * Replaces the maximal face sigma by the cone from a new vertex over its
 * boundary. The new vertex gets index ambient_size().
 */
inline SimplicialComplex stellar_subdivide(const SimplicialComplex& k, Simplex sigma)
{
    const auto& facets = k.maximal_faces();
    if (sigma.empty() || std::find(facets.begin(), facets.end(), sigma) == facets.end())
        throw Error(ErrorCode::NotMaximal, "stellar subdivision needs a maximal face");
    const int w = k.ambient_size();
    if (w + 1 > kMaxVertices)
        throw Error(ErrorCode::IndexOutOfRange, "subdivision exceeds 64 vertices");
    std::vector<Simplex> faces;
    for (Simplex f : facets)
        if (f != sigma)
            faces.push_back(f);
    for (int v : sigma.vertices())
        faces.push_back(sigma.without(v).with(w));
    std::vector<std::string> labels;
    if (k.has_labels()) {
        labels = k.labels();
        std::string fresh = "w";
        while (std::find(labels.begin(), labels.end(), fresh) != labels.end())
            fresh += "'";
        labels.push_back(fresh);
    }
    return SimplicialComplex(w + 1, std::move(faces), std::move(labels));
}

/// True iff K is the boundary of the simplex on its own vertex set.
inline bool is_boundary_of_simplex(const SimplicialComplex& k)
{
    const int n = k.num_vertices();
    if (n < 2 || static_cast<int>(k.maximal_faces().size()) != n)
        return false;
    return std::all_of(k.maximal_faces().begin(), k.maximal_faces().end(),
                       [n](Simplex f) { return f.size() == n - 1; });
}

/// True iff K has a single maximal face (possibly the empty simplex).
inline bool is_single_simplex(const SimplicialComplex& k) { return k.maximal_faces().size() == 1; }

/// Number of vertices if K is a closed cycle (connected 1-dimensional
/// pseudomanifold), otherwise 0.
inline int cycle_length(const SimplicialComplex& k)
{
    if (k.dimension() != 1)
        return 0;
    const PseudomanifoldReport pm = is_pseudomanifold(k);
    return pm.is_pseudomanifold() ? k.num_vertices() : 0;
}

/// Applies a vertex permutation: vertex v becomes perm[v].
inline SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm)
{
    const int n = k.ambient_size();
    if (static_cast<int>(perm.size()) != n)
        throw Error(ErrorCode::InvalidParameter, "permutation size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw Error(ErrorCode::InvalidParameter, "not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    auto map = [&](Simplex s) {
        Simplex out;
        for (int v : s.vertices())
            out.insert(perm[static_cast<std::size_t>(v)]);
        return out;
    };
    std::vector<Simplex> faces;
    for (Simplex f : k.maximal_faces())
        faces.push_back(map(f));
    std::vector<std::string> labels;
    if (k.has_labels()) {
        labels.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = k.label(v);
    }
    return SimplicialComplex(n, std::move(faces), std::move(labels));
}

/**
 * Renumbers V(K) onto [0, |V(K)|) in increasing order. Labels follow their
 * vertices; an unlabeled complex with gaps gets its old indices as labels.
 */
inline SimplicialComplex compact(const SimplicialComplex& k)
{
    if (k.vertex_set() == Simplex::range(k.ambient_size()))
        return k;
    const std::vector<int> verts = k.vertex_set().vertices();
    std::vector<Simplex> faces;
    for (Simplex f : k.maximal_faces())
        faces.emplace_back(detail::compress(f.mask(), verts));
    std::vector<std::string> labels;
    for (int v : verts)
        labels.push_back(k.label(v));
    return SimplicialComplex(static_cast<int>(verts.size()), std::move(faces), std::move(labels));
}

/// Display form such as "{a,b,c}".
inline std::string format_simplex(const SimplicialComplex& k, Simplex s)
{
    std::string out = "{";
    bool first = true;
    for (int v : s.vertices()) {
        if (!first)
            out += ",";
        out += k.label(v);
        first = false;
    }
    return out + "}";
}

} // namespace prodsimp

#endif // PRODSIMP_COMPLEX_HPP
