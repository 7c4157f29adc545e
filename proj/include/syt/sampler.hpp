#pragma once

/* Greene-Nijenhuis-Wilf hook walk and the Monte-Carlo estimators built on it.
 *
 * The generator is std::mt19937_64 (fully specified by the standard) and
 * bounded integers are drawn by rejection, so a seed reproduces the same
 * samples on every platform. Batch estimators split the sample index range
 * into fixed blocks, each driven by its own generator seeded from
 * (seed, block index); any number of workers therefore yields the same
 * merged counts.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <thread>
#include <vector>

#include "counting.hpp"
#include "errors.hpp"
#include "numbers.hpp"
#include "shapes.hpp"

namespace syt {

struct RngSeed {
    std::uint64_t value = 0;
};

using Generator = std::mt19937_64;

inline constexpr std::uint64_t samples_per_block = 4096;

// Uniform in [0, bound), bound >= 1.
inline std::uint64_t uniform_below(Generator& gen, std::uint64_t bound)
{
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = gen();
        if (x >= threshold) return x % bound;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(RngSeed seed, std::uint64_t block)
{
    return splitmix64(splitmix64(seed.value) ^ splitmix64(block + 0x5851f42d4c957f2dULL));
}

// One uniformly random SYT of shape lambda. For m = |lambda| down to 1: start
// at a uniform cell, jump to a uniform cell of the current hook (arm or leg)
// until a corner is reached, write m there and delete it.
inline Tableau gnw_sample(const Partition& lambda, Generator& gen)
{
    const int k = lambda.length();
    std::vector<int> rows(lambda.parts());
    std::vector<int> cols(static_cast<std::size_t>(lambda[1]), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) ++cols[static_cast<std::size_t>(j)];

    Tableau out{lambda, {}};
    for (int i = 1; i <= k; ++i) out.rows.emplace_back(static_cast<std::size_t>(lambda[i]), 0);

    for (int m = lambda.size(); m >= 1; --m) {
        auto pick = static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(m)));
        int i = 0;
        while (pick >= rows[static_cast<std::size_t>(i)]) {
            pick -= rows[static_cast<std::size_t>(i)];
            ++i;
        }
        int j = pick;
        for (;;) {
            const int arm = rows[static_cast<std::size_t>(i)] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
            if (arm + leg == 0) break;
            const auto step = static_cast<int>(uniform_below(gen, static_cast<std::uint64_t>(arm + leg)));
            if (step < arm)
                j += step + 1;
            else
                i += step - arm + 1;
        }
        out.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
        --rows[static_cast<std::size_t>(i)];
        --cols[static_cast<std::size_t>(j)];
    }
    return out;
}

namespace detail {

// Runs visit(tableau) for every sample, block by block, and merges the
// per-worker accumulators with merge(into, from).
template <typename Acc, typename Visit, typename Merge>
Acc run_sampled(const Partition& lambda, std::uint64_t samples, RngSeed seed, unsigned workers, Visit visit,
                Merge merge)
{
    const std::uint64_t blocks = (samples + samples_per_block - 1) / samples_per_block;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(blocks, 1))));
    std::vector<Acc> partial(workers);

    auto work = [&](unsigned w) {
        for (std::uint64_t b = w; b < blocks; b += workers) {
            Generator gen(derive_seed(seed, b));
            const std::uint64_t end = std::min(samples, (b + 1) * samples_per_block);
            for (std::uint64_t s = b * samples_per_block; s < end; ++s) visit(partial[w], gnw_sample(lambda, gen));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    Acc total{};
    for (auto& p : partial) merge(total, p);
    return total;
}

} // namespace detail

struct OccupancyCounts {
    std::uint64_t samples = 0;
    std::map<int, std::uint64_t> counts;

    BigRational frequency(int r) const
    {
        auto it = counts.find(r);
        if (it == counts.end() || samples == 0) return 0;
        return make_rational(BigInteger(static_cast<unsigned long>(it->second)),
                             BigInteger(static_cast<unsigned long>(samples)));
    }
    double frequency_float(int r) const { return frequency(r).get_d(); }
};

struct SortCounts {
    std::uint64_t samples = 0;
    std::uint64_t first_larger = 0;  // T_c1 > T_c2
    std::uint64_t second_larger = 0; // T_c2 > T_c1

    double value() const
    {
        return (static_cast<double>(first_larger) - static_cast<double>(second_larger)) / static_cast<double>(samples);
    }
};

inline OccupancyCounts empirical_occupancy(const Partition& lambda, Cell c, std::uint64_t samples, RngSeed seed,
                                           unsigned workers = 1)
{
    if (!lambda.contains(c))
        throw CellOutsideShape(to_string(c) + " is not a cell of " + to_string(lambda));
    if (samples == 0) throw std::invalid_argument("empirical_occupancy: samples must be >= 1");
    using Acc = std::map<int, std::uint64_t>;
    Acc counts = detail::run_sampled<Acc>(
        lambda, samples, seed, workers, [c](Acc& acc, const Tableau& t) { ++acc[t.at(c)]; },
        [](Acc& into, const Acc& from) {
            for (const auto& [r, n] : from) into[r] += n;
        });
    return {samples, std::move(counts)};
}

inline SortCounts empirical_sort_counts(const Partition& lambda, Cell c1, Cell c2, std::uint64_t samples,
                                        RngSeed seed, unsigned workers = 1)
{
    for (Cell c : {c1, c2})
        if (!lambda.contains(c))
            throw CellOutsideShape(to_string(c) + " is not a cell of " + to_string(lambda));
    if (c1 == c2) throw SameCell("sorting probability needs two distinct cells");
    if (samples == 0) throw std::invalid_argument("empirical_sortprob: samples must be >= 1");
    SortCounts out = detail::run_sampled<SortCounts>(
        lambda, samples, seed, workers,
        [c1, c2](SortCounts& acc, const Tableau& t) {
            if (t.at(c1) > t.at(c2))
                ++acc.first_larger;
            else
                ++acc.second_larger;
        },
        [](SortCounts& into, const SortCounts& from) {
            into.first_larger += from.first_larger;
            into.second_larger += from.second_larger;
        });
    out.samples = samples;
    return out;
}

// (#{T_c1 > T_c2} - #{T_c2 > T_c1}) / samples
inline double empirical_sortprob(const Partition& lambda, Cell c1, Cell c2, std::uint64_t samples, RngSeed seed,
                                 unsigned workers = 1)
{
    return empirical_sort_counts(lambda, c1, c2, samples, seed, workers).value();
}

} // namespace syt
