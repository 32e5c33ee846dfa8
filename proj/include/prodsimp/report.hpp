#ifndef PRODSIMP_REPORT_HPP
#define PRODSIMP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace prodsimp {

enum class Criterion { NonFacePartition, NewComb, TwoFace, Recursive, Double, HrkGF2, HrkQ, Dihedral };

inline std::string_view to_string(Criterion c)
{
    switch (c) {
    case Criterion::NonFacePartition: return "NonFacePartition";
    case Criterion::NewComb: return "NewComb";
    case Criterion::TwoFace: return "TwoFace";
    case Criterion::Recursive: return "Recursive";
    case Criterion::Double: return "Double";
    case Criterion::HrkGF2: return "HrkGF2";
    case Criterion::HrkQ: return "HrkQ";
    case Criterion::Dihedral: return "Dihedral";
    }
    return "Unknown";
}

namespace witness {

/// Two minimal non-faces sharing a vertex.
struct OverlappingNonFaces {
    Simplex first;
    Simplex second;
};

/// Vertices of K lying in no minimal non-face.
struct UncoveredByNonFaces {
    Simplex vertices;
};

/// A face of exactly one of K and the join of boundaries on the parts.
struct JoinMismatch {
    Simplex face;
    bool in_complex = false;
};

/// K restricted to V(K) - sigma is not a single simplex.
struct RestrictionNotSimplex {
    Simplex sigma;
    std::vector<Simplex> restriction;
};

/// The faces of link_K v inside V(K) - sigma do not form a simplex.
struct LinkIntersectionNotSimplex {
    Simplex sigma;
    int vertex = 0;
    std::vector<Simplex> intersection;
};

/// A codimension-two simplex whose link is not a 3- or 4-cycle; cycle_length
/// is 0 when the link is not a cycle at all.
struct LongLink {
    Simplex eta;
    int cycle_length = 0;
};

/// A one-dimensional complex that is not a 3- or 4-cycle (two points for dimension 0).
struct BadBaseCase {
    int dimension = 0;
    int cycle_length = 0;
};

/// Failure found after descending through the links of `path` (in order).
struct RecursiveFailure {
    std::vector<int> path;
    std::string reason;
    std::optional<Simplex> ridge;
    int cycle_length = 0;
};

struct RankMismatch {
    Field field = Field::GF2;
    std::int64_t total = 0;
    std::int64_t expected = 0;
};

/// Overlapping lifted minimal non-faces of the double, or a size failure.
struct DoubleFailure {
    std::optional<Simplex> first;
    std::optional<Simplex> second;
    std::string reason;
};

/// Adjacent facets whose inward normals have a positive inner product.
struct ObtusePair {
    int facet_a = 0;
    int facet_b = 0;
    Rational inner_product;
};

} // namespace witness

using Witness = std::variant<witness::OverlappingNonFaces, witness::UncoveredByNonFaces, witness::JoinMismatch,
                             witness::RestrictionNotSimplex, witness::LinkIntersectionNotSimplex, witness::LongLink,
                             witness::BadBaseCase, witness::RecursiveFailure, witness::RankMismatch,
                             witness::DoubleFailure, witness::ObtusePair>;

/// Verdict of one criterion. A negative verdict always carries a witness.
struct RecognitionReport {
    Criterion criterion = Criterion::NonFacePartition;
    bool verdict = false;
    bool skipped = false;
    std::optional<Witness> witness;
    std::string note;
};

/// Parts P_1..P_q certifying K = boundary(P_1) * ... * boundary(P_q).
struct SphereJoinDecomposition {
    std::vector<Simplex> parts;

    std::vector<int> dims() const
    {
        std::vector<int> out;
        for (Simplex p : parts)
            out.push_back(p.size() - 1);
        return out;
    }
};

} // namespace prodsimp

#endif // PRODSIMP_REPORT_HPP
