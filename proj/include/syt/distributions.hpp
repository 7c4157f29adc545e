#pragma once

/* Exact occupancy laws and sorting probabilities for numeric shapes.
 *
 * Pr(T_c = r) = sum over nu in S(c, r) of f^{nu minus c} f^{lambda/nu}, over f^lambda:
 * the entries 1..r fill a subshape nu |- r in which c is a corner holding r.
 * Sorting probabilities condition the same way on c1 and ask that c2 is
 * already inside nu.
 */

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "numbers.hpp"
#include "shapes.hpp"

namespace syt {

// Finite law on the integers; only nonzero atoms are stored.
class DiscreteDistribution {
public:
    DiscreteDistribution() = default;

    DiscreteDistribution(std::vector<int> support, std::vector<BigRational> probs)
        : support_(std::move(support)), probs_(std::move(probs))
    {
        if (support_.size() != probs_.size())
            throw std::invalid_argument("distribution: support and probabilities differ in length");
        BigRational total = 0;
        for (std::size_t t = 0; t < support_.size(); ++t) {
            if (t > 0 && support_[t] <= support_[t - 1])
                throw std::invalid_argument("distribution: support must be strictly increasing");
            if (probs_[t] < 0) throw std::invalid_argument("distribution: negative probability");
            total += probs_[t];
        }
        if (!support_.empty() && total != 1) throw std::invalid_argument("distribution: probabilities must sum to 1");
    }

    const std::vector<int>& support() const { return support_; }
    const std::vector<BigRational>& probs() const { return probs_; }
    std::size_t size() const { return support_.size(); }

    BigRational probability(int r) const
    {
        auto it = std::lower_bound(support_.begin(), support_.end(), r);
        if (it == support_.end() || *it != r) return 0;
        return probs_[static_cast<std::size_t>(it - support_.begin())];
    }

    friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

private:
    std::vector<int> support_;
    std::vector<BigRational> probs_;
};

namespace detail {

inline void require_cell(const Partition& lambda, Cell c)
{
    if (!lambda.contains(c))
        throw CellOutsideShape(to_string(c) + " is not a cell of " + to_string(lambda));
}

// Number of SYT of lambda whose entries 1..r fill nu, with r at the corner c.
inline BigInteger weight_through(const Partition& lambda, const Partition& nu, Cell c)
{
    return count_syt_yf(remove_corner(nu, c)) * count_skew(lambda, nu);
}

} // namespace detail

inline BigRational occupancy_prob(const Partition& lambda, Cell c, int r)
{
    detail::require_cell(lambda, c);
    const OccupantRange range = occupant_range(lambda, c);
    if (r < range.lo || r > range.hi) return 0;
    BigInteger hits = 0;
    for (const Partition& nu : subshapes_with_corner(lambda, c, r)) hits += detail::weight_through(lambda, nu, c);
    return make_rational(hits, count_syt_yf(lambda));
}

inline DiscreteDistribution occupancy_pgf(const Partition& lambda, Cell c)
{
    detail::require_cell(lambda, c);
    const OccupantRange range = occupant_range(lambda, c);
    const BigInteger total = count_syt_yf(lambda);
    std::vector<int> support;
    std::vector<BigRational> probs;
    for (int r = range.lo; r <= range.hi; ++r) {
        BigInteger hits = 0;
        for (const Partition& nu : subshapes_with_corner(lambda, c, r)) hits += detail::weight_through(lambda, nu, c);
        if (hits != 0) {
            support.push_back(r);
            probs.push_back(make_rational(hits, total));
        }
    }
    return {std::move(support), std::move(probs)};
}

// Pr(T_c1 > T_c2)
inline BigRational prob_greater(const Partition& lambda, Cell c1, Cell c2)
{
    detail::require_cell(lambda, c1);
    detail::require_cell(lambda, c2);
    if (c1 == c2) throw SameCell("sorting probability needs two distinct cells");
    const OccupantRange range = occupant_range(lambda, c1);
    BigInteger hits = 0;
    for (int r = range.lo; r <= range.hi; ++r)
        for (const Partition& nu : subshapes_for_sorting(lambda, c1, c2, r))
            hits += detail::weight_through(lambda, nu, c1);
    return make_rational(hits, count_syt_yf(lambda));
}

// SP = Pr(T_c1 > T_c2) - Pr(T_c2 > T_c1) = 2 Pr(T_c1 > T_c2) - 1
inline BigRational sort_prob(const Partition& lambda, Cell c1, Cell c2)
{
    BigRational p = prob_greater(lambda, c1, c2);
    return BigRational(2 * p - 1);
}

struct MinSortResult {
    BigRational minimum = 1;
    // Each pair ordered with the upper (smaller row) cell first; sorted.
    std::vector<std::pair<Cell, Cell>> champions;
};

// Minimum of |SP| over unordered pairs of unrelated cells, with every pair
// attaining it. Shapes without unrelated pairs give minimum 1, no champions.
inline MinSortResult min_sort_prob(const Partition& lambda)
{
    if (lambda.size() < 2) throw std::invalid_argument("min_sort_prob: shape needs at least two cells");
    const std::vector<Cell> cells = lambda.cells();
    MinSortResult best;
    bool any = false;
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            if (related(cells[a], cells[b])) continue;
            BigRational sp = abs(sort_prob(lambda, cells[a], cells[b]));
            if (!any || sp < best.minimum) {
                best.minimum = sp;
                best.champions.clear();
                any = true;
            }
            if (sp == best.minimum) best.champions.emplace_back(cells[a], cells[b]);
        }
    }
    std::sort(best.champions.begin(), best.champions.end());
    return best;
}

} // namespace syt
