#ifndef PRODSIMP_TESTS_FIXTURES_HPP
#define PRODSIMP_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include <prodsimp/prodsimp.hpp>

namespace fx {

using namespace prodsimp;

inline Simplex S(std::initializer_list<int> vs) { return Simplex::from_vertices(vs); }

inline SimplicialComplex cycle(int k)
{
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < k; ++i)
        edges.push_back({i, (i + 1) % k});
    return build_complex(edges, k);
}

/// dB^2 * dB^1 on a,b,c | d,e  (vertices 0..4).
inline SimplicialComplex prism_dual()
{
    return join(boundary_of_simplex(2), boundary_of_simplex(1)).with_labels({"a", "b", "c", "d", "e"});
}

inline SimplicialComplex octahedron()
{
    return join(join(boundary_of_simplex(1), boundary_of_simplex(1)), boundary_of_simplex(1));
}

/// The 6-vertex real projective plane.
inline SimplicialComplex rp2()
{
    return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
                         6);
}

inline SimplicialComplex two_points() { return boundary_of_simplex(1); }

} // namespace fx

#endif // PRODSIMP_TESTS_FIXTURES_HPP
