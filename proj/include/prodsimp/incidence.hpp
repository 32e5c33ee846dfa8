#ifndef PRODSIMP_INCIDENCE_HPP
#define PRODSIMP_INCIDENCE_HPP

#include <string>
#include <vector>

#include "complex.hpp"
#include "error.hpp"

namespace prodsimp {

/// Which facets of an n-polytope with m facets pass through each vertex.
struct VertexFacetIncidence {
    int n = 0;
    int m = 0;
    std::vector<Simplex> vertex_facets;

    friend bool operator==(const VertexFacetIncidence&, const VertexFacetIncidence&) = default;
};

/// True iff every vertex lies on exactly n facets.
inline bool check_simple(const VertexFacetIncidence& inc, int n)
{
    for (Simplex s : inc.vertex_facets)
        if (s.size() != n)
            return false;
    return true;
}

/// Throws NotSimple unless the incidence is that of a simple n-polytope
/// whose every facet holds at least n vertices.
inline void validate_incidence(const VertexFacetIncidence& inc)
{
    if (inc.n < 1 || inc.m < inc.n + 1 || inc.m > kMaxVertices)
        throw Error(ErrorCode::InvalidParameter,
                    "incidence needs 1 <= n < m <= 64, got n=" + std::to_string(inc.n) +
                        " m=" + std::to_string(inc.m));
    if (!check_simple(inc, inc.n))
        throw Error(ErrorCode::NotSimple, "some vertex is not on exactly n facets");
    std::vector<int> per_facet(static_cast<std::size_t>(inc.m), 0);
    for (Simplex s : inc.vertex_facets) {
        if (!s.is_subset_of(Simplex::range(inc.m)))
            throw Error(ErrorCode::IndexOutOfRange, "facet index out of range");
        for (int f : s.vertices())
            ++per_facet[static_cast<std::size_t>(f)];
    }
    for (int f = 0; f < inc.m; ++f)
        if (per_facet[static_cast<std::size_t>(f)] < inc.n)
            throw Error(ErrorCode::NotSimple,
                        "facet " + std::to_string(f) + " holds fewer than n vertices");
}

/**
 * K = boundary of the dual simplicial polytope: one vertex per facet, one
 * maximal face per polytope vertex. The result must be a pure
 * (n-1)-dimensional pseudomanifold, otherwise NotSimple is thrown.
 */
inline SimplicialComplex dual_boundary_complex(const VertexFacetIncidence& inc)
{
    validate_incidence(inc);
    SimplicialComplex k(inc.m, inc.vertex_facets);
    if (k.vertex_set() != Simplex::range(inc.m) || k.dimension() != inc.n - 1 ||
        k.maximal_faces().size() != inc.vertex_facets.size())
        throw Error(ErrorCode::NotSimple, "vertex facet sets do not form a simplicial sphere candidate");
    if (inc.n >= 2 && !is_pseudomanifold(k).is_pseudomanifold())
        throw Error(ErrorCode::NotSimple, "dual complex is not a pseudomanifold");
    if (inc.n == 1 && k.num_vertices() != 2)
        throw Error(ErrorCode::NotSimple, "a 1-polytope has exactly two facets");
    return k;
}

/**
 * Cuts vertex `vertex` off the polytope combinatorially: a new facet m is
 * added and the vertex is replaced by n vertices, one per edge leaving it.
 */
inline VertexFacetIncidence gen_truncated(const VertexFacetIncidence& inc, int vertex)
{
    validate_incidence(inc);
    if (vertex < 0 || vertex >= static_cast<int>(inc.vertex_facets.size()))
        throw Error(ErrorCode::InvalidParameter, "no vertex " + std::to_string(vertex));
    if (inc.m + 1 > kMaxVertices)
        throw Error(ErrorCode::InvalidParameter, "truncation exceeds 64 facets");
    VertexFacetIncidence out{inc.n, inc.m + 1, {}};
    const Simplex cut = inc.vertex_facets[static_cast<std::size_t>(vertex)];
    for (std::size_t v = 0; v < inc.vertex_facets.size(); ++v)
        if (static_cast<int>(v) != vertex)
            out.vertex_facets.push_back(inc.vertex_facets[v]);
    for (int f : cut.vertices())
        out.vertex_facets.push_back(cut.without(f).with(inc.m));
    return out;
}

} // namespace prodsimp

#endif // PRODSIMP_INCIDENCE_HPP
