#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "syt/distributions.hpp"
#include "syt/sampler.hpp"

using namespace syt;
using oracle::q;

TEST(OccupancyProb, Examples)
{
    EXPECT_EQ(occupancy_prob({2, 2, 1}, {2, 1}, 2), q(3, 5));
    EXPECT_EQ(occupancy_prob({2, 2, 1}, {2, 1}, 3), q(2, 5));
    EXPECT_EQ(occupancy_prob({2, 2, 1}, {2, 1}, 4), 0);
    EXPECT_EQ(occupancy_prob({5, 5, 5}, {1, 3}, 7), q(5, 143));
    EXPECT_EQ(occupancy_prob({1}, {1, 1}, 1), 1);
    EXPECT_THROW(occupancy_prob({2, 2, 1}, {1, 3}, 2), CellOutsideShape);
}

TEST(OccupancyPgf, Examples)
{
    EXPECT_EQ(occupancy_pgf({2, 2, 1}, {2, 1}), DiscreteDistribution({2, 3}, {q(3, 5), q(2, 5)}));
    EXPECT_EQ(occupancy_pgf({4, 4, 4}, {2, 2}),
              DiscreteDistribution({4, 5, 6, 7}, {q(8, 33), q(4, 11), q(2, 7), q(25, 231)}));
    EXPECT_EQ(occupancy_pgf({6, 3, 1}, {1, 1}), DiscreteDistribution({1}, {BigRational(1)}));
    const auto d = occupancy_pgf({4, 4, 4}, {2, 2});
    const std::vector<double> quoted = {.2396, .3639, .2875, .1090};
    for (std::size_t t = 0; t < 4; ++t) EXPECT_NEAR(d.probs()[t].get_d(), quoted[t], 0.02);
}

TEST(DiscreteDistribution, Validation)
{
    EXPECT_THROW(DiscreteDistribution({1, 1}, {q(1, 2), q(1, 2)}), std::invalid_argument);
    EXPECT_THROW(DiscreteDistribution({1, 2}, {q(1, 2), q(1, 3)}), std::invalid_argument);
    EXPECT_THROW(DiscreteDistribution({1, 2}, {q(3, 2), q(-1, 2)}), std::invalid_argument);
    EXPECT_EQ(DiscreteDistribution({1, 4}, {q(1, 4), q(3, 4)}).probability(4), q(3, 4));
    EXPECT_EQ(DiscreteDistribution({1, 4}, {q(1, 4), q(3, 4)}).probability(2), 0);
}

TEST(OccupancyProb, NormalizedUpToTen)
{
    for (const Partition& p : oracle::all_partitions_up_to(10)) {
        for (Cell c : p.cells()) {
            const OccupantRange range = occupant_range(p, c);
            BigRational total = 0;
            for (int r = range.lo; r <= range.hi; ++r) total += occupancy_prob(p, c, r);
            EXPECT_EQ(total, 1) << to_string(p) << " " << to_string(c);
        }
    }
}

TEST(OccupancyProb, MatchesEnumerationUpToEight)
{
    for (const Partition& p : oracle::all_partitions_up_to(8)) {
        for (Cell c : p.cells()) {
            const auto law = oracle::occupancy(p, c);
            for (int r = 1; r <= p.size(); ++r) {
                auto it = law.find(r);
                const BigRational expected = it == law.end() ? BigRational(0) : it->second;
                EXPECT_EQ(occupancy_prob(p, c, r), expected) << to_string(p) << " " << to_string(c) << " r=" << r;
            }
            std::vector<int> support;
            std::vector<BigRational> probs;
            for (const auto& [r, pr] : law) {
                support.push_back(r);
                probs.push_back(pr);
            }
            EXPECT_EQ(occupancy_pgf(p, c), DiscreteDistribution(support, probs));
        }
    }
}

TEST(OccupancyProb, ConjugationCovariance)
{
    for (const Partition& p : oracle::all_partitions_up_to(9)) {
        const Partition pc = conjugate(p);
        for (Cell c : p.cells())
            for (int r = 1; r <= p.size(); ++r)
                EXPECT_EQ(occupancy_prob(p, c, r), occupancy_prob(pc, Cell{c.col, c.row}, r));
    }
}

TEST(SortProb, Examples)
{
    EXPECT_EQ(sort_prob({2, 2, 1}, {1, 2}, {2, 1}), q(1, 5));
    EXPECT_EQ(sort_prob({3, 3}, {1, 3}, {2, 1}), q(3, 5));
    EXPECT_EQ(sort_prob({3, 3, 3}, {1, 2}, {2, 1}), 0);
    EXPECT_EQ(sort_prob({3, 3, 3}, {1, 1}, {3, 3}), -1);
    EXPECT_EQ(sort_prob({3, 3, 3}, {3, 3}, {1, 1}), 1);
    EXPECT_EQ(sort_prob({10, 4, 3}, {1, 5}, {3, 1}), q(-1, 273));
    EXPECT_THROW(sort_prob({2, 2}, {1, 1}, {1, 1}), SameCell);
    EXPECT_THROW(sort_prob({2, 2}, {1, 1}, {1, 3}), CellOutsideShape);
}

TEST(SortProb, MatchesEnumerationUpToEight)
{
    for (const Partition& p : oracle::all_partitions_up_to(8)) {
        const auto cells = p.cells();
        for (Cell a : cells)
            for (Cell b : cells) {
                if (a == b) continue;
                const BigRational sp = sort_prob(p, a, b);
                EXPECT_EQ(sp, oracle::sort_prob(p, a, b)) << to_string(p) << " " << to_string(a) << to_string(b);
                if (precedes(a, b)) {
                    EXPECT_EQ(sp, -1);
                }
            }
    }
}

TEST(SortProb, Antisymmetric)
{
    for (const Partition& p : oracle::all_partitions_up_to(9)) {
        const auto cells = p.cells();
        for (std::size_t s = 0; s < cells.size(); ++s)
            for (std::size_t t = s + 1; t < cells.size(); ++t)
                EXPECT_EQ(sort_prob(p, cells[s], cells[t]), -sort_prob(p, cells[t], cells[s]));
    }
}

TEST(MinSortProb, Examples)
{
    using Pairs = std::vector<std::pair<Cell, Cell>>;
    const auto big = min_sort_prob({10, 4, 3});
    EXPECT_EQ(big.minimum, q(1, 273));
    EXPECT_EQ(big.champions, (Pairs{{{1, 5}, {3, 1}}}));

    // (1,2)/(2,1) and its mirror image (2,2)/(3,1) tie at 1/5.
    const auto small = min_sort_prob({2, 2, 1});
    EXPECT_EQ(small.minimum, q(1, 5));
    EXPECT_EQ(small.champions, (Pairs{{{1, 2}, {2, 1}}, {{2, 2}, {3, 1}}}));

    const auto square = min_sort_prob({2, 2});
    EXPECT_EQ(square.minimum, 0);
    EXPECT_EQ(square.champions, (Pairs{{{1, 2}, {2, 1}}}));

    const auto row = min_sort_prob({4});
    EXPECT_EQ(row.minimum, 1);
    EXPECT_TRUE(row.champions.empty());
}

TEST(MinSortProb, MatchesEnumerationUpToEight)
{
    for (const Partition& p : oracle::all_partitions_up_to(8)) {
        if (p.size() < 2) continue;
        const auto got = min_sort_prob(p);
        const auto want = oracle::min_sort_prob(p);
        EXPECT_EQ(got.minimum, want.minimum) << to_string(p);
        EXPECT_EQ(got.champions, want.champions) << to_string(p);
    }
}

TEST(MonteCarlo, ErrorShrinksWithSamples)
{
    const Partition lambda{4, 3, 2};
    const Cell c1{1, 3}, c2{2, 1};
    const double exact = sort_prob(lambda, c1, c2).get_d();
    const BigRational exact_occ = occupancy_prob(lambda, {2, 2}, 5);
    // Average over seeds so a lucky small run cannot mask the trend.
    auto mean_error = [&](std::uint64_t samples) {
        double sp = 0, occ = 0;
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            sp += std::abs(empirical_sortprob(lambda, c1, c2, samples, RngSeed{seed}) - exact);
            occ += std::abs(empirical_occupancy(lambda, {2, 2}, samples, RngSeed{seed}).frequency_float(5) -
                            exact_occ.get_d());
        }
        return std::pair{sp / 8, occ / 8};
    };
    const auto coarse = mean_error(1000);
    const auto fine = mean_error(100000);
    EXPECT_LT(fine.first, coarse.first);
    EXPECT_LT(fine.second, coarse.second);
    EXPECT_LT(fine.first, 0.01);
}
