#ifndef PRODSIMP_CATALOG_HPP
#define PRODSIMP_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "incidence.hpp"
#include "polytope.hpp"

namespace prodsimp {

/// A simple polytope of the built-in catalog with its derived combinatorics.
struct CatalogEntry {
    std::string name;
    std::string family;
    std::optional<Polytope> geometry;
    VertexFacetIncidence incidence;
    SimplicialComplex complex;
    /// Factor dimensions when the entry is built as a product of simplices.
    std::vector<int> product_dims;

    bool is_product() const { return !product_dims.empty(); }
};

inline CatalogEntry make_entry(std::string name, std::string family, Polytope p, std::vector<int> dims = {})
{
    VertexFacetIncidence inc = incidence(p);
    SimplicialComplex k = dual_boundary_complex(inc);
    return CatalogEntry{std::move(name), std::move(family), std::move(p), std::move(inc), std::move(k),
                        std::move(dims)};
}

inline CatalogEntry make_entry(std::string name, std::string family, VertexFacetIncidence inc)
{
    SimplicialComplex k = dual_boundary_complex(inc);
    return CatalogEntry{std::move(name), std::move(family), std::nullopt, std::move(inc), std::move(k), {}};
}

/// Non-increasing positive sequences with sum in [1, max_sum], by sum then lexicographically descending.
inline std::vector<std::vector<int>> partitions_up_to(int max_sum)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    for (int sum = 1; sum <= max_sum; ++sum)
        rec(rec, sum, sum);
    return out;
}

inline std::string product_name(const std::vector<int>& dims)
{
    std::string name = "product:";
    for (std::size_t i = 0; i < dims.size(); ++i)
        name += (i ? "," : "") + std::to_string(dims[i]);
    return name;
}

inline CatalogEntry product_entry(const std::vector<int>& dims)
{
    return make_entry(product_name(dims), "product", gen_product_of_simplices(dims), dims);
}

/**
 * Polygons k = 3..8, every product of simplices with total dimension at
 * most 5, k-gon prisms for k = 5..7, and single-vertex truncations of the
 * tetrahedron, the cube and the triangular prism.
 */
inline std::vector<CatalogEntry> default_catalog()
{
    std::vector<CatalogEntry> out;
    for (int k = 3; k <= 8; ++k)
        out.push_back(make_entry("polygon:" + std::to_string(k), "polygon", gen_polygon(k)));
    for (const auto& dims : partitions_up_to(5))
        out.push_back(product_entry(dims));
    for (int k = 5; k <= 7; ++k)
        out.push_back(make_entry("prism:" + std::to_string(k), "prism", gen_prism(k)));
    out.push_back(make_entry("truncate:simplex:3,0", "truncation", gen_truncated(incidence(gen_simplex(3)), 0)));
    out.push_back(make_entry("truncate:product:1,1,1,0", "truncation",
                             gen_truncated(incidence(gen_product_of_simplices({1, 1, 1})), 0)));
    out.push_back(make_entry("truncate:product:2,1,0", "truncation",
                             gen_truncated(incidence(gen_product_of_simplices({2, 1})), 0)));
    return out;
}

} // namespace prodsimp

#endif // PRODSIMP_CATALOG_HPP
