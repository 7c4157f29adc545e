#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "syt/distributions.hpp"
#include "syt/sampler.hpp"

using namespace syt;

namespace {

using Rows = std::vector<std::vector<int>>;

std::vector<std::uint64_t> tableau_counts(const Partition& lambda, std::uint64_t samples, std::uint64_t seed)
{
    std::map<Rows, std::uint64_t> index;
    for (const Tableau& t : enumerate_syt(lambda)) index[t.rows] = 0;
    Generator gen(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Tableau t = gnw_sample(lambda, gen);
        auto it = index.find(t.rows);
        EXPECT_NE(it, index.end());
        if (it != index.end()) ++it->second;
    }
    std::vector<std::uint64_t> out;
    for (const auto& [rows, n] : index) out.push_back(n);
    return out;
}

double tv_distance(const OccupancyCounts& emp, const DiscreteDistribution& exact)
{
    std::map<int, double> diff;
    for (std::size_t i = 0; i < exact.support().size(); ++i) diff[exact.support()[i]] += exact.probs()[i].get_d();
    for (const auto& [r, n] : emp.counts) diff[r] -= static_cast<double>(n) / static_cast<double>(emp.samples);
    double tv = 0;
    for (const auto& [r, d] : diff) tv += std::abs(d);
    return tv / 2;
}

} // namespace

TEST(Sampler, SingleCell)
{
    Generator gen(7);
    for (int s = 0; s < 20; ++s) EXPECT_EQ(gnw_sample({1}, gen).rows, (Rows{{1}}));
}

TEST(Sampler, EverySampleIsStandard)
{
    Generator gen(11);
    for (const Partition& p : oracle::all_partitions_up_to(10)) {
        if (p.empty()) continue;
        for (int s = 0; s < 20; ++s) {
            const Tableau t = gnw_sample(p, gen);
            EXPECT_EQ(t.shape, p);
            EXPECT_TRUE(is_standard(t)) << to_string(p);
        }
    }
}

TEST(Sampler, TwoTwoOneFrequencies)
{
    const auto counts = tableau_counts({2, 2, 1}, 50000, 1);
    ASSERT_EQ(counts.size(), 5u);
    for (auto n : counts) EXPECT_NEAR(static_cast<double>(n) / 50000.0, 0.2, 0.01);
}

TEST(Sampler, UniformOnSmallShapes)
{
    // Every shape with 2 to 10 tableaux; none has more than 11 cells.
    for (const Partition& p : oracle::all_partitions_up_to(11)) {
        if (p.size() < 2 || count_syt_yf(p) > 10) continue;
        if (count_syt_yf(p) == 1) continue;
        int accepted = 0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            if (oracle::chi_square_uniform_p(tableau_counts(p, 100000, seed)) > 1e-3) ++accepted;
        EXPECT_GE(accepted, 9) << to_string(p);
    }
}

TEST(Sampler, UniformOnFourThreeTwo)
{
    const auto counts = tableau_counts({4, 3, 2}, 500000, 2024);
    ASSERT_EQ(counts.size(), 168u);
    EXPECT_GT(oracle::chi_square_uniform_p(counts), 1e-3);
}

TEST(Sampler, DeterministicPerSeed)
{
    Generator a(99), b(99);
    for (int s = 0; s < 50; ++s) EXPECT_EQ(gnw_sample({5, 3, 3, 1}, a).rows, gnw_sample({5, 3, 3, 1}, b).rows);

    const auto x = empirical_occupancy({4, 4, 4}, {2, 2}, 10000, RngSeed{5});
    const auto y = empirical_occupancy({4, 4, 4}, {2, 2}, 10000, RngSeed{5});
    EXPECT_EQ(x.counts, y.counts);
    const auto z = empirical_occupancy({4, 4, 4}, {2, 2}, 10000, RngSeed{6});
    EXPECT_NE(x.counts, z.counts);
}

TEST(Sampler, IndependentOfWorkerCount)
{
    const auto one = empirical_occupancy({5, 4, 2}, {2, 2}, 30000, RngSeed{17}, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        EXPECT_EQ(empirical_occupancy({5, 4, 2}, {2, 2}, 30000, RngSeed{17}, w).counts, one.counts);
        const auto s1 = empirical_sort_counts({5, 4, 2}, {1, 3}, {2, 1}, 30000, RngSeed{3}, 1);
        const auto sw = empirical_sort_counts({5, 4, 2}, {1, 3}, {2, 1}, 30000, RngSeed{3}, w);
        EXPECT_EQ(s1.first_larger, sw.first_larger);
    }
}

TEST(EmpiricalOccupancy, FourFourFour)
{
    const auto emp = empirical_occupancy({4, 4, 4}, {2, 2}, 10000, RngSeed{2024});
    const auto exact = occupancy_pgf({4, 4, 4}, {2, 2});
    EXPECT_LT(tv_distance(emp, exact), 0.03);
    // simulated coefficients quoted for this shape
    const std::map<int, double> quoted = {{4, .2396}, {5, .3639}, {6, .2875}, {7, .1090}};
    for (const auto& [r, p] : quoted) EXPECT_NEAR(emp.frequency_float(r), p, 0.02);

    BigRational total = 0;
    const OccupantRange range = occupant_range({4, 4, 4}, {2, 2});
    for (const auto& [r, n] : emp.counts) {
        total += emp.frequency(r);
        EXPECT_GE(r, range.lo);
        EXPECT_LE(r, range.hi);
    }
    EXPECT_EQ(total, 1);
}

TEST(EmpiricalOccupancy, ConvergesAtScale)
{
    const auto emp = empirical_occupancy({4, 4, 4}, {2, 2}, 100000, RngSeed{1}, 4);
    const auto exact = occupancy_pgf({4, 4, 4}, {2, 2});
    EXPECT_LT(tv_distance(emp, exact), 3 * std::sqrt(4.0 / 100000.0));
}

TEST(EmpiricalOccupancy, SmallShapes)
{
    const auto one = empirical_occupancy({1}, {1, 1}, 100, RngSeed{0});
    EXPECT_EQ(one.frequency(1), 1);
    const auto e = empirical_occupancy({2, 2, 1}, {2, 1}, 50000, RngSeed{3});
    EXPECT_NEAR(e.frequency_float(2), 0.6, 0.01);
    EXPECT_NEAR(e.frequency_float(3), 0.4, 0.01);
    EXPECT_THROW(empirical_occupancy({2, 2, 1}, {3, 2}, 10, RngSeed{0}), CellOutsideShape);
}

TEST(EmpiricalSortprob, Examples)
{
    EXPECT_LT(std::abs(empirical_sortprob({3, 3, 3}, {1, 2}, {2, 1}, 10000, RngSeed{8})), 0.03);
    EXPECT_EQ(empirical_sortprob({3, 3, 3}, {1, 1}, {2, 2}, 5000, RngSeed{8}), -1.0);
    EXPECT_EQ(empirical_sortprob({3, 3, 3}, {2, 2}, {1, 1}, 5000, RngSeed{8}), 1.0);
    EXPECT_NEAR(empirical_sortprob({2, 2, 1}, {1, 2}, {2, 1}, 100000, RngSeed{8}), 0.2, 0.01);
    EXPECT_THROW(empirical_sortprob({2, 2}, {1, 1}, {1, 1}, 10, RngSeed{0}), SameCell);
    EXPECT_THROW(empirical_sortprob({2, 2}, {1, 1}, {3, 1}, 10, RngSeed{0}), CellOutsideShape);
}
