#ifndef PRODSIMP_LINALG_HPP
#define PRODSIMP_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace prodsimp {

enum class Field { GF2, Rational };

inline std::string_view to_string(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

/// Sparse column with entries in {-1, +1}, rows sorted ascending.
struct SignedColumn {
    std::vector<int> rows;
    std::vector<int> signs;
};

namespace detail {

inline std::int64_t rank_gf2(const std::vector<SignedColumn>& matrix, std::size_t row_count,
                             const std::vector<char>& skip, std::vector<char>& pivot_rows)
{
    std::vector<std::vector<int>> reduced(matrix.size());
    std::vector<int> owner(row_count, -1);
    pivot_rows.assign(row_count, 0);
    std::vector<int> scratch;
    std::int64_t rank = 0;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
        if (!skip.empty() && skip[j])
            continue;
        std::vector<int> col = matrix[j].rows;
        while (!col.empty()) {
            const int low = col.back();
            const int other = owner[static_cast<std::size_t>(low)];
            if (other < 0)
                break;
            const auto& pivot = reduced[static_cast<std::size_t>(other)];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), pivot.begin(), pivot.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            owner[static_cast<std::size_t>(col.back())] = static_cast<int>(j);
            pivot_rows[static_cast<std::size_t>(col.back())] = 1;
            reduced[j] = std::move(col);
            ++rank;
        }
    }
    return rank;
}

inline std::int64_t rank_rational(const std::vector<SignedColumn>& matrix, std::size_t row_count,
                                  const std::vector<char>& skip, std::vector<char>& pivot_rows)
{
    using Entry = std::pair<int, Rational>;
    std::vector<std::vector<Entry>> reduced(matrix.size());
    std::vector<int> owner(row_count, -1);
    pivot_rows.assign(row_count, 0);
    std::int64_t rank = 0;
    std::vector<Entry> scratch;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
        if (!skip.empty() && skip[j])
            continue;
        std::vector<Entry> col;
        col.reserve(matrix[j].rows.size());
        for (std::size_t i = 0; i < matrix[j].rows.size(); ++i)
            col.emplace_back(matrix[j].rows[i], Rational(matrix[j].signs[i]));
        while (!col.empty()) {
            const int low = col.back().first;
            const int other = owner[static_cast<std::size_t>(low)];
            if (other < 0)
                break;
            const auto& pivot = reduced[static_cast<std::size_t>(other)];
            // Pivot columns are normalised so their lowest entry is 1.
            const Rational factor = col.back().second;
            scratch.clear();
            auto a = col.begin();
            auto b = pivot.begin();
            while (a != col.end() || b != pivot.end()) {
                if (b == pivot.end() || (a != col.end() && a->first < b->first)) {
                    scratch.push_back(*a++);
                } else if (a == col.end() || b->first < a->first) {
                    scratch.emplace_back(b->first, -factor * b->second);
                    ++b;
                } else {
                    Rational value = a->second - factor * b->second;
                    if (value != 0)
                        scratch.emplace_back(a->first, std::move(value));
                    ++a;
                    ++b;
                }
            }
            col.swap(scratch);
        }
        if (!col.empty()) {
            const Rational lead = col.back().second;
            for (auto& entry : col)
                entry.second /= lead;
            owner[static_cast<std::size_t>(col.back().first)] = static_cast<int>(j);
            pivot_rows[static_cast<std::size_t>(col.back().first)] = 1;
            reduced[j] = std::move(col);
            ++rank;
        }
    }
    return rank;
}

} // namespace detail

/**
 * Ranks of sparse matrices by column reduction on the lowest non-zero row.
 *
 * Columns flagged in `skip` are known to reduce to zero (they are pivot rows
 * of the next boundary map) and are not reduced; this does not change the
 * rank. The rows that end up as pivots are reported in `pivot_rows`.
 */
inline std::int64_t sparse_rank(Field field, const std::vector<SignedColumn>& matrix, std::size_t row_count,
                                const std::vector<char>& skip, std::vector<char>& pivot_rows)
{
    return field == Field::GF2 ? detail::rank_gf2(matrix, row_count, skip, pivot_rows)
                               : detail::rank_rational(matrix, row_count, skip, pivot_rows);
}

inline std::int64_t sparse_rank(Field field, const std::vector<SignedColumn>& matrix, std::size_t row_count)
{
    std::vector<char> pivots;
    return sparse_rank(field, matrix, row_count, {}, pivots);
}

} // namespace prodsimp

#endif // PRODSIMP_LINALG_HPP
