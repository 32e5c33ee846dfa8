#ifndef PRODSIMP_SIMPLEX_HPP
#define PRODSIMP_SIMPLEX_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace prodsimp {

/// Maximum number of vertex indices a complex can address.
inline constexpr int kMaxVertices = 64;

/**
 * A simplex as a set of vertex indices in [0, 64), stored as a bit mask.
 *
 * The mask makes the vertex set canonical (sorted, duplicate free) by
 * construction. The default value is the empty simplex.
 */
class Simplex {
public:
    constexpr Simplex() = default;
    constexpr explicit Simplex(std::uint64_t mask) : mask_(mask) {}

    Simplex(std::initializer_list<int> vertices)
    {
        for (int v : vertices)
            insert(v);
    }

    static Simplex from_vertices(const std::vector<int>& vertices)
    {
        Simplex s;
        for (int v : vertices)
            s.insert(v);
        return s;
    }

    /// The full vertex range [0, count).
    static constexpr Simplex range(int count)
    {
        return Simplex(count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1));
    }

    static constexpr Simplex singleton(int v) { return Simplex(std::uint64_t{1} << v); }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    /// dim = |vertices| - 1; the empty simplex has dimension -1.
    constexpr int dim() const noexcept { return size() - 1; }

    constexpr bool contains(int v) const noexcept { return (mask_ >> v) & 1U; }
    constexpr bool is_subset_of(Simplex other) const noexcept
    {
        return (mask_ & ~other.mask_) == 0;
    }
    constexpr bool intersects(Simplex other) const noexcept { return (mask_ & other.mask_) != 0; }

    /// Smallest vertex; undefined for the empty simplex.
    constexpr int min_vertex() const noexcept { return std::countr_zero(mask_); }
    constexpr int max_vertex() const noexcept { return 63 - std::countl_zero(mask_); }

    void insert(int v)
    {
        if (v < 0 || v >= kMaxVertices)
            throw Error(ErrorCode::IndexOutOfRange, "vertex index " + std::to_string(v));
        mask_ |= std::uint64_t{1} << v;
    }

    constexpr Simplex with(int v) const noexcept { return Simplex(mask_ | (std::uint64_t{1} << v)); }
    constexpr Simplex without(int v) const noexcept
    {
        return Simplex(mask_ & ~(std::uint64_t{1} << v));
    }

    std::vector<int> vertices() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

    friend constexpr Simplex operator|(Simplex a, Simplex b) noexcept { return Simplex(a.mask_ | b.mask_); }
    friend constexpr Simplex operator&(Simplex a, Simplex b) noexcept { return Simplex(a.mask_ & b.mask_); }
    /// Set difference.
    friend constexpr Simplex operator-(Simplex a, Simplex b) noexcept { return Simplex(a.mask_ & ~b.mask_); }

    friend constexpr bool operator==(Simplex a, Simplex b) noexcept = default;

    /// Lexicographic order on the sorted vertex lists.
    friend constexpr std::strong_ordering operator<=>(Simplex a, Simplex b) noexcept
    {
        const std::uint64_t diff = a.mask_ ^ b.mask_;
        if (diff == 0)
            return std::strong_ordering::equal;
        const int p = std::countr_zero(diff);
        // Both lists agree below p; the one holding p continues with p,
        // the other continues with something larger or stops.
        const bool a_has = (a.mask_ >> p) & 1U;
        const std::uint64_t rest = (a_has ? b.mask_ : a.mask_) >> p;
        if (rest == 0)
            return a_has ? std::strong_ordering::greater : std::strong_ordering::less;
        return a_has ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    std::uint64_t mask_ = 0;
};

/// Calls fn(sub) for every subset of mask, including empty and mask itself.
template <typename Fn>
void for_each_subset(std::uint64_t mask, Fn&& fn)
{
    std::uint64_t sub = mask;
    while (true) {
        fn(sub);
        if (sub == 0)
            break;
        sub = (sub - 1) & mask;
    }
}

} // namespace prodsimp

#endif // PRODSIMP_SIMPLEX_HPP
