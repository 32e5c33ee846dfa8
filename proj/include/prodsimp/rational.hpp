#ifndef PRODSIMP_RATIONAL_HPP
#define PRODSIMP_RATIONAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace prodsimp {

/// Exact arbitrary-precision fraction, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Parses "p" or "p/q" with optional sign; q must be non-zero.
inline Rational parse_rational(std::string_view text)
{
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
        throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    const boost::multiprecision::cpp_int p(strip_plus(num));
    const boost::multiprecision::cpp_int q(strip_plus(den));
    if (q == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

/// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r)
{
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline Rational dot(const RationalVector& a, const RationalVector& b)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

/// Rank of a dense matrix given as rows, by exact Gaussian elimination.
inline int matrix_rank(std::vector<RationalVector> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const RationalVector& p = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            const Rational factor = rows[r][c] / p[c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= factor * p[k];
        }
        ++rank;
    }
    return rank;
}

} // namespace prodsimp

#endif // PRODSIMP_RATIONAL_HPP
