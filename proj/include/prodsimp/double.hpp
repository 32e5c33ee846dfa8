#ifndef PRODSIMP_DOUBLE_HPP
#define PRODSIMP_DOUBLE_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "complex.hpp"

namespace prodsimp {

/// The image of a vertex set of K under v_i -> {v_i, v'_i} (2i and 2i+1).
inline Simplex lift_to_double(Simplex s)
{
    Simplex out;
    for (int v : s.vertices())
        out = out.with(2 * v).with(2 * v + 1);
    return out;
}

/**
 * The double L(K). K is first compacted onto [0, m); vertex i becomes the
 * pair 2i (label "x") and 2i+1 (label "x'"). L(K) is reconstructed from its
 * prescribed minimal non-faces, the lifts of those of K, and the result is
 * checked to have exactly those minimal non-faces.
 */
inline SimplicialComplex double_complex(const SimplicialComplex& input)
{
    const SimplicialComplex k = compact(input);
    const int m = k.num_vertices();
    if (2 * m > kMaxVertices)
        throw Error(ErrorCode::CapExceeded, "double needs 2m <= 64 vertices");
    std::vector<Simplex> lifted;
    for (Simplex n : minimal_non_faces(k))
        lifted.push_back(lift_to_double(n));
    std::sort(lifted.begin(), lifted.end());
    std::vector<std::string> labels;
    for (int v = 0; v < m; ++v) {
        labels.push_back(k.label(v));
        labels.push_back(k.label(v) + "'");
    }
    SimplicialComplex out = complex_from_non_faces(2 * m, Simplex::range(2 * m), lifted, std::move(labels));
    if (minimal_non_faces(out) != lifted)
        throw std::logic_error("double reconstruction does not reproduce the lifted minimal non-faces");
    return out;
}

} // namespace prodsimp

#endif // PRODSIMP_DOUBLE_HPP
