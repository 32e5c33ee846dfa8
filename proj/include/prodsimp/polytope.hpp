#ifndef PRODSIMP_POLYTOPE_HPP
#define PRODSIMP_POLYTOPE_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "error.hpp"
#include "incidence.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace prodsimp {

/// Half-space normal . x >= offset, with the normal pointing inward.
struct Inequality {
    RationalVector normal;
    Rational offset;
};

struct PolytopeHRep {
    int dim = 0;
    std::vector<Inequality> inequalities;
};

struct PolytopeVRep {
    std::vector<RationalVector> vertices;
};

/// Both descriptions of one polytope; they are cross-validated, never converted.
struct Polytope {
    PolytopeHRep h;
    PolytopeVRep v;
};

namespace detail {

inline int affine_rank(const std::vector<const RationalVector*>& points)
{
    if (points.size() <= 1)
        return 0;
    std::vector<RationalVector> rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector diff(points[i]->size());
        for (std::size_t c = 0; c < diff.size(); ++c)
            diff[c] = (*points[i])[c] - (*points[0])[c];
        rows.push_back(std::move(diff));
    }
    return matrix_rank(std::move(rows));
}

/// True iff (a, b) = t (c, d) for some rational t > 0.
inline bool positive_multiple(const Inequality& a, const Inequality& b)
{
    std::optional<Rational> ratio;
    auto match = [&](const Rational& x, const Rational& y) {
        if (x == 0 || y == 0)
            return x == 0 && y == 0;
        const Rational t = x / y;
        if (t <= 0 || (ratio && *ratio != t))
            return false;
        ratio = t;
        return true;
    };
    for (std::size_t i = 0; i < a.normal.size(); ++i)
        if (!match(a.normal[i], b.normal[i]))
            return false;
    return match(a.offset, b.offset) && ratio.has_value();
}

} // namespace detail

/**
 * Derives vertex-facet incidence by exact equality tests, validating that
 * P is full-dimensional and simple and that every inequality defines a facet.
 */
inline VertexFacetIncidence incidence_from_hv(const PolytopeHRep& h, const PolytopeVRep& v)
{
    const int n = h.dim;
    const auto m = static_cast<int>(h.inequalities.size());
    if (n < 1 || m > kMaxVertices)
        throw Error(ErrorCode::InvalidParameter, "need dimension >= 1 and at most 64 inequalities");
    for (const auto& ineq : h.inequalities)
        if (static_cast<int>(ineq.normal.size()) != n)
            throw Error(ErrorCode::InvalidParameter, "normal length differs from dimension");
    for (const auto& x : v.vertices)
        if (static_cast<int>(x.size()) != n)
            throw Error(ErrorCode::InvalidParameter, "vertex length differs from dimension");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (detail::positive_multiple(h.inequalities[static_cast<std::size_t>(i)],
                                          h.inequalities[static_cast<std::size_t>(j)]))
                throw Error(ErrorCode::RedundantInequality,
                            "inequalities " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    for (std::size_t a = 0; a < v.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < v.vertices.size(); ++b)
            if (v.vertices[a] == v.vertices[b])
                throw Error(ErrorCode::InvalidParameter, "duplicate vertex " + std::to_string(b));

    std::vector<const RationalVector*> all;
    for (const auto& x : v.vertices)
        all.push_back(&x);
    if (detail::affine_rank(all) != n)
        throw Error(ErrorCode::InvalidParameter, "vertices do not span a full-dimensional polytope");

    VertexFacetIncidence inc{n, m, {}};
    for (std::size_t vi = 0; vi < v.vertices.size(); ++vi) {
        Simplex tight;
        for (int f = 0; f < m; ++f) {
            const auto& ineq = h.inequalities[static_cast<std::size_t>(f)];
            const Rational value = dot(ineq.normal, v.vertices[vi]);
            if (value < ineq.offset)
                throw Error(ErrorCode::InfeasibleVertex,
                            "vertex " + std::to_string(vi) + " violates inequality " + std::to_string(f));
            if (value == ineq.offset)
                tight = tight.with(f);
        }
        if (tight.size() != n)
            throw Error(ErrorCode::NotSimple, "vertex " + std::to_string(vi) + " lies on " +
                                                  std::to_string(tight.size()) + " facets, expected " +
                                                  std::to_string(n));
        inc.vertex_facets.push_back(tight);
    }
    for (int f = 0; f < m; ++f) {
        std::vector<const RationalVector*> on_facet;
        for (std::size_t vi = 0; vi < v.vertices.size(); ++vi)
            if (inc.vertex_facets[vi].contains(f))
                on_facet.push_back(&v.vertices[vi]);
        if (on_facet.empty() || detail::affine_rank(on_facet) != n - 1)
            throw Error(ErrorCode::RedundantInequality,
                        "inequality " + std::to_string(f) + " does not define a facet");
    }
    validate_incidence(inc);
    return inc;
}

inline VertexFacetIncidence incidence(const Polytope& p) { return incidence_from_hv(p.h, p.v); }

/// Block product: factor inequalities padded with zeros, vertices paired.
inline Polytope product_polytope(const Polytope& a, const Polytope& b)
{
    incidence(a);
    incidence(b);
    const int na = a.h.dim;
    const int nb = b.h.dim;
    Polytope out;
    out.h.dim = na + nb;
    for (const auto& ineq : a.h.inequalities) {
        Inequality padded{ineq.normal, ineq.offset};
        padded.normal.resize(static_cast<std::size_t>(na + nb), Rational(0));
        out.h.inequalities.push_back(std::move(padded));
    }
    for (const auto& ineq : b.h.inequalities) {
        Inequality padded{RationalVector(static_cast<std::size_t>(na), Rational(0)), ineq.offset};
        padded.normal.insert(padded.normal.end(), ineq.normal.begin(), ineq.normal.end());
        out.h.inequalities.push_back(std::move(padded));
    }
    for (const auto& x : a.v.vertices) {
        for (const auto& y : b.v.vertices) {
            RationalVector z = x;
            z.insert(z.end(), y.begin(), y.end());
            out.v.vertices.push_back(std::move(z));
        }
    }
    return out;
}

/// {x_i >= 0, x_1 + ... + x_n <= 1}: normals e_1..e_n and (-1, ..., -1).
inline Polytope gen_simplex(int n)
{
    if (n < 1 || n + 1 > kMaxVertices)
        throw Error(ErrorCode::InvalidParameter, "simplex dimension must be in [1, 63]");
    Polytope p;
    p.h.dim = n;
    const auto size = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < size; ++i) {
        Inequality ineq{RationalVector(size, Rational(0)), Rational(0)};
        ineq.normal[i] = 1;
        p.h.inequalities.push_back(std::move(ineq));
    }
    p.h.inequalities.push_back(Inequality{RationalVector(size, Rational(-1)), Rational(-1)});
    p.v.vertices.emplace_back(size, Rational(0));
    for (std::size_t i = 0; i < size; ++i) {
        RationalVector e(size, Rational(0));
        e[i] = 1;
        p.v.vertices.push_back(std::move(e));
    }
    return p;
}

namespace detail {

/// Counter-clockwise lattice polygons, none of them regular.
inline std::vector<std::pair<int, int>> polygon_vertices(int k)
{
    switch (k) {
    case 3: return {{0, 0}, {4, 0}, {0, 4}};
    case 4: return {{0, 0}, {3, 0}, {3, 2}, {0, 2}};
    case 5: return {{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}};
    case 6: return {{0, 0}, {3, 0}, {5, 2}, {4, 5}, {1, 5}, {-1, 2}};
    case 7: return {{0, 0}, {3, 0}, {5, 1}, {6, 4}, {4, 6}, {1, 6}, {-1, 3}};
    case 8: return {{1, 0}, {3, 0}, {4, 1}, {4, 3}, {3, 4}, {1, 4}, {0, 3}, {0, 1}};
    default: return {};
    }
}

} // namespace detail

/// A fixed convex lattice k-gon for k in [3, 8]; facet i is the edge from
/// vertex i to vertex i+1.
inline Polytope gen_polygon(int k)
{
    const auto pts = detail::polygon_vertices(k);
    if (pts.empty())
        throw Error(ErrorCode::InvalidParameter, "polygon catalog covers k = 3..8, got " + std::to_string(k));
    Polytope p;
    p.h.dim = 2;
    const auto count = pts.size();
    for (std::size_t i = 0; i < count; ++i) {
        const auto [x0, y0] = pts[i];
        const auto [x1, y1] = pts[(i + 1) % count];
        // Left normal of a counter-clockwise edge points inside.
        RationalVector normal{Rational(-(y1 - y0)), Rational(x1 - x0)};
        const Rational offset = normal[0] * x0 + normal[1] * y0;
        p.h.inequalities.push_back(Inequality{std::move(normal), offset});
    }
    for (const auto& [x, y] : pts)
        p.v.vertices.push_back(RationalVector{Rational(x), Rational(y)});
    return p;
}

inline Polytope gen_product_of_simplices(const std::vector<int>& dims)
{
    if (dims.empty())
        throw Error(ErrorCode::InvalidParameter, "product needs at least one factor");
    Polytope p = gen_simplex(dims.front());
    for (std::size_t i = 1; i < dims.size(); ++i)
        p = product_polytope(p, gen_simplex(dims[i]));
    return p;
}

/// k-gon times a segment.
inline Polytope gen_prism(int k) { return product_polytope(gen_polygon(k), gen_simplex(1)); }

/**
 * Non-obtuse dihedral angle test: for facets i, j meeting in an (n-2)-face
 * the angle is non-obtuse iff the inward normals satisfy eta_i . eta_j <= 0.
 * Adjacent pairs are the edges of the dual complex.
 */
inline RecognitionReport dihedral_nonobtuse_check(const PolytopeHRep& h, const VertexFacetIncidence& inc)
{
    validate_incidence(inc);
    if (static_cast<int>(h.inequalities.size()) != inc.m)
        throw Error(ErrorCode::InvalidParameter, "inequality count differs from facet count");
    RecognitionReport report;
    report.criterion = Criterion::Dihedral;
    report.verdict = true;
    for (int i = 0; i < inc.m && report.verdict; ++i) {
        for (int j = i + 1; j < inc.m; ++j) {
            const Simplex pair = Simplex::singleton(i).with(j);
            const bool adjacent = std::any_of(inc.vertex_facets.begin(), inc.vertex_facets.end(),
                                              [pair](Simplex s) { return pair.is_subset_of(s); });
            if (!adjacent)
                continue;
            const Rational product = dot(h.inequalities[static_cast<std::size_t>(i)].normal,
                                         h.inequalities[static_cast<std::size_t>(j)].normal);
            if (product > 0) {
                report.verdict = false;
                report.witness = witness::ObtusePair{i, j, product};
                break;
            }
        }
    }
    return report;
}

} // namespace prodsimp

#endif // PRODSIMP_POLYTOPE_HPP
