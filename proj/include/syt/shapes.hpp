#pragma once

/* Integer partitions (shapes), cells, and the constrained subshape
 * enumerations that feed the occupancy and sorting formulas.
 *
 * All row/column indices are 1-based: cell [i,j] is row i, column j.
 */

#include <algorithm>
#include <charconv>
#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace syt {

struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(Cell c)
{
    return "[" + std::to_string(c.row) + "," + std::to_string(c.col) + "]";
}

// a precedes b in the cell order: weakly above and weakly left.
constexpr bool precedes(Cell a, Cell b) { return a.row <= b.row && a.col <= b.col; }
constexpr bool related(Cell a, Cell b) { return precedes(a, b) || precedes(b, a); }

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t t = 0; t < parts_.size(); ++t) {
            if (parts_[t] < 1)
                throw InvalidPartition("partition parts must be positive");
            if (t > 0 && parts_[t] > parts_[t - 1])
                throw InvalidPartition("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition rectangle(int rows, int cols)
    {
        if (rows <= 0 || cols <= 0) return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }

    // Drops trailing zeros; throws if the rest is not a partition.
    static Partition from_padded(std::vector<int> parts)
    {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    // Row length, 1-based; zero past the last row.
    int operator[](int row) const
    {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }

    bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= (*this)[c.row]; }

    bool contains(const Partition& inner) const
    {
        if (inner.length() > length()) return false;
        for (int t = 1; t <= inner.length(); ++t)
            if (inner[t] > (*this)[t]) return false;
        return true;
    }

    std::vector<Cell> cells() const
    {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= (*this)[i]; ++j) out.push_back({i, j});
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (int t = 1; t <= p.length(); ++t) {
        if (t > 1) s += ",";
        s += std::to_string(p[t]);
    }
    return s + ")";
}

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_))
    {
        if (!outer.contains(inner))
            throw InnerNotContained(to_string(inner) + " is not contained in " + to_string(outer));
    }

    int size() const { return outer.size() - inner.size(); }
};

inline Partition conjugate(const Partition& lambda)
{
    std::vector<int> cols(static_cast<std::size_t>(lambda[1]), 0);
    for (int t = 1; t <= lambda.length(); ++t)
        for (int j = 0; j < lambda[t]; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

inline bool is_corner(const Partition& lambda, Cell c)
{
    return lambda.contains(c) && c.col == lambda[c.row] && lambda[c.row + 1] < c.col;
}

// Cells [t, lambda_t] whose removal leaves a partition, top to bottom.
inline std::vector<Cell> corners(const Partition& lambda)
{
    std::vector<Cell> out;
    for (int t = 1; t <= lambda.length(); ++t)
        if (lambda[t + 1] < lambda[t]) out.push_back({t, lambda[t]});
    return out;
}

inline Partition remove_corner(const Partition& lambda, Cell c)
{
    if (!is_corner(lambda, c))
        throw CellOutsideShape(to_string(c) + " is not a corner of " + to_string(lambda));
    std::vector<int> parts = lambda.parts();
    --parts[static_cast<std::size_t>(c.row - 1)];
    return Partition::from_padded(std::move(parts));
}

struct OccupantRange {
    int lo = 0;
    int hi = 0;

    friend bool operator==(const OccupantRange&, const OccupantRange&) = default;
};

// i*j <= r <= lambda_1+...+lambda_{i-1} + lambda'_1+...+lambda'_{j-1} - (i-1)(j-1) + 1
inline OccupantRange occupant_range(const Partition& lambda, Cell c)
{
    if (!lambda.contains(c))
        throw CellOutsideShape(to_string(c) + " is not a cell of " + to_string(lambda));
    const Partition conj = conjugate(lambda);
    int above = 0;
    for (int t = 1; t < c.row; ++t) above += lambda[t];
    int left = 0;
    for (int s = 1; s < c.col; ++s) left += conj[s];
    return {c.row * c.col, above + left - (c.row - 1) * (c.col - 1) + 1};
}

namespace detail {

// Visits every partition of n whose t-th part lies in [lower[t], upper[t]]
// (rows past the vectors are unconstrained below and bounded by `upper`
// only through weak decrease), in descending lexicographic order.
inline void partitions_in_box(int n, const std::vector<int>& lower, const std::vector<int>& upper,
                              const std::function<void(const std::vector<int>&)>& visit)
{
    const int rows = static_cast<int>(upper.size());
    std::vector<int> suffix_cap(static_cast<std::size_t>(rows) + 1, 0);
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(rows));

    auto lo_at = [&](int t) { return t < static_cast<int>(lower.size()) ? lower[static_cast<std::size_t>(t)] : 0; };

    std::function<void(int, int, int)> rec = [&](int t, int remaining, int prev) {
        if (remaining == 0) {
            for (int u = t; u < rows; ++u)
                if (lo_at(u) > 0) return;
            visit(parts);
            return;
        }
        if (t == rows) return;
        const int hi = std::min({prev, upper[static_cast<std::size_t>(t)], remaining});
        const int lo = std::max(lo_at(t), 1);
        for (int p = hi; p >= lo; --p) {
            // The remaining rows can hold at most p each, bounded by their caps.
            int room = 0;
            for (int u = t + 1; u < rows && room < remaining - p; ++u)
                room += std::min(p, upper[static_cast<std::size_t>(u)]);
            if (room < remaining - p) break;
            parts.push_back(p);
            rec(t + 1, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(0, n, n);
}

} // namespace detail

// All nu |- n with nu contained in `bound`, descending lexicographic.
inline std::vector<Partition> partitions_within(int n, const Partition& bound)
{
    std::vector<Partition> out;
    if (n < 0 || n > bound.size()) return out;
    detail::partitions_in_box(n, {}, bound.parts(), [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

// The set S([i,j], r): nu |- r, nu within lambda, nu_i = j and [i,j] a corner of nu.
inline std::vector<Partition> subshapes_with_corner(const Partition& lambda, Cell c, int r)
{
    if (!lambda.contains(c))
        throw CellOutsideShape(to_string(c) + " is not a cell of " + to_string(lambda));
    std::vector<Partition> out;
    if (r < c.row * c.col || r > lambda.size()) return out;

    std::vector<int> lower(static_cast<std::size_t>(c.row), 0);
    std::vector<int> upper = lambda.parts();
    lower[static_cast<std::size_t>(c.row - 1)] = c.col;
    upper[static_cast<std::size_t>(c.row - 1)] = c.col;
    if (c.row < lambda.length())
        upper[static_cast<std::size_t>(c.row)] = std::min(upper[static_cast<std::size_t>(c.row)], c.col - 1);
    detail::partitions_in_box(r, lower, upper, [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

// nu |- r within lambda with c1 a corner of nu and c2 another cell of nu.
inline std::vector<Partition> subshapes_for_sorting(const Partition& lambda, Cell c1, Cell c2, int r)
{
    if (!lambda.contains(c2))
        throw CellOutsideShape(to_string(c2) + " is not a cell of " + to_string(lambda));
    std::vector<Partition> out;
    if (c1 == c2) return out;
    for (Partition& nu : subshapes_with_corner(lambda, c1, r))
        if (nu.contains(c2)) out.push_back(std::move(nu));
    return out;
}

// All partitions of n, descending lexicographic.
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0) return {};
    return partitions_within(n, Partition(std::vector<int>(static_cast<std::size_t>(n), n)));
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what)
{
    std::vector<int> out;
    std::size_t pos = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    if (trim(text).empty()) return out;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trim(text.substr(pos, comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// "10,4,3" -> (10,4,3); the empty string is the empty partition.
inline Partition parse_partition(std::string_view text)
{
    std::vector<int> parts = detail::parse_int_list(text, "shape");
    try {
        return Partition(std::move(parts));
    } catch (const InvalidPartition& e) {
        throw ParseError(std::string("invalid shape '") + std::string(text) + "': " + e.what());
    }
}

// "i,j" -> [i,j]
inline Cell parse_cell(std::string_view text)
{
    std::vector<int> v = detail::parse_int_list(text, "cell");
    if (v.size() != 2 || v[0] < 1 || v[1] < 1)
        throw ParseError("cell must be 'i,j' with positive entries, got '" + std::string(text) + "'");
    return {v[0], v[1]};
}

} // namespace syt
