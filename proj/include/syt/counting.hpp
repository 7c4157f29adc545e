#pragma once

/* Counting standard Young tableaux of straight and skew shapes.
 *
 *  - count_syt_yf:   Young-Frobenius product formula
 *  - count_syt_hook: hook length formula
 *  - count_skew:     signed sum of lattice-walk multinomials over the k!
 *                    mirror images of the inner shape
 *
 * plus deterministic backtracking enumerators used as oracles.
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"
#include "shapes.hpp"

namespace syt {

inline constexpr int default_enumeration_cap = 18;

// Reads SYT_MAX_CELLS; falls back to default_enumeration_cap.
inline int enumeration_cap_from_env()
{
    if (const char* v = std::getenv("SYT_MAX_CELLS")) {
        char* end = nullptr;
        long cap = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && cap > 0) return static_cast<int>(cap);
    }
    return default_enumeration_cap;
}

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int at(Cell c) const { return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)]; }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

// A filling of outer/inner; cells of `inner` hold 0.
struct SkewTableau {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> rows;

    int at(Cell c) const { return rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)]; }

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

// Shape matches, entries are 1..n once each, rows and columns increase.
inline bool is_standard(const Tableau& t)
{
    const Partition& lambda = t.shape;
    if (static_cast<int>(t.rows.size()) != lambda.length()) return false;
    std::vector<bool> seen(static_cast<std::size_t>(lambda.size()) + 1, false);
    for (int i = 1; i <= lambda.length(); ++i) {
        if (static_cast<int>(t.rows[static_cast<std::size_t>(i - 1)].size()) != lambda[i]) return false;
        for (int j = 1; j <= lambda[i]; ++j) {
            int v = t.at({i, j});
            if (v < 1 || v > lambda.size() || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
            if (j > 1 && t.at({i, j - 1}) >= v) return false;
            if (i > 1 && t.at({i - 1, j}) >= v) return false;
        }
    }
    return true;
}

inline BigInteger count_syt_yf(const Partition& lambda)
{
    Factorials fact;
    const int k = lambda.length();
    BigInteger den = 1;
    for (int t = 1; t <= k; ++t) den *= fact(static_cast<std::size_t>(lambda[t] + k - t));
    BigInteger num = fact(static_cast<std::size_t>(lambda.size()));
    for (int t = 1; t <= k; ++t)
        for (int u = t + 1; u <= k; ++u) num *= lambda[t] - lambda[u] + u - t;
    BigInteger out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline BigInteger count_syt_hook(const Partition& lambda)
{
    const Partition conj = conjugate(lambda);
    BigInteger hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) hooks *= (lambda[i] - j) + (conj[j] - i) + 1;
    Factorials fact;
    BigInteger out;
    mpz_divexact(out.get_mpz_t(), fact(static_cast<std::size_t>(lambda.size())).get_mpz_t(), hooks.get_mpz_t());
    return out;
}

namespace detail {

inline BigInteger walk_count(const std::vector<long>& start, const std::vector<long>& end, Factorials& fact)
{
    long steps = 0;
    for (std::size_t t = 0; t < start.size(); ++t) {
        long d = end[t] - start[t];
        if (d < 0) return 0;
        steps += d;
    }
    BigInteger out = fact(static_cast<std::size_t>(steps));
    for (std::size_t t = 0; t < start.size(); ++t) {
        BigInteger q;
        mpz_divexact(q.get_mpz_t(), out.get_mpz_t(), fact(static_cast<std::size_t>(end[t] - start[t])).get_mpz_t());
        out = std::move(q);
    }
    return out;
}

inline std::vector<long> padded(const Partition& p, int k)
{
    std::vector<long> out(static_cast<std::size_t>(k), 0);
    for (int t = 1; t <= std::min(k, p.length()); ++t) out[static_cast<std::size_t>(t - 1)] = p[t];
    return out;
}

} // namespace detail

// Number of lattice walks from mu to lambda with unit positive steps:
// the multinomial (sum d_t)!/prod d_t!, d = lambda - mu; zero if any d_t < 0.
inline BigInteger walk_count(const std::vector<long>& mu, const Partition& lambda)
{
    if (lambda.length() > static_cast<int>(mu.size()))
        throw std::invalid_argument("walk_count: lambda has more rows than mu has coordinates");
    // Walks live in the nonnegative orthant. The signed sum below needs the
    // unrestricted multinomial, so it calls the detail version directly.
    for (long m : mu)
        if (m < 0) return 0;
    Factorials fact;
    return detail::walk_count(mu, detail::padded(lambda, static_cast<int>(mu.size())), fact);
}

// f^{lambda/nu} = sum over sigma in S_k of sgn(sigma) W(mu(sigma), lambda),
// mu(sigma)_t = nu_{sigma(t)} - sigma(t) + t.
inline BigInteger count_skew(const Partition& lambda, const Partition& nu)
{
    if (!lambda.contains(nu))
        throw InnerNotContained(to_string(nu) + " is not contained in " + to_string(lambda));
    const int k = lambda.length();
    if (k == 0) return 1;
    Factorials fact;
    const std::vector<long> target = detail::padded(lambda, k);
    const std::vector<long> inner = detail::padded(nu, k);

    std::vector<int> sigma(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) sigma[static_cast<std::size_t>(t)] = t;
    std::vector<long> mu(static_cast<std::size_t>(k));
    BigInteger total = 0;
    do {
        int inversions = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)]) ++inversions;
        for (int t = 0; t < k; ++t) {
            const int s = sigma[static_cast<std::size_t>(t)];
            mu[static_cast<std::size_t>(t)] = inner[static_cast<std::size_t>(s)] - s + t;
        }
        BigInteger w = detail::walk_count(mu, target, fact);
        if (inversions % 2 == 0)
            total += w;
        else
            total -= w;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

// f^{n^k} n!^k / (nk)!, checked against prod_{m=1}^{k-1} m!/(n+1)_m.
inline BigRational rect_count_prefactor_check(int k, int n)
{
    if (k < 1 || n < 0) throw std::invalid_argument("rect_count_prefactor_check: need k >= 1, n >= 0");
    Factorials fact;
    BigInteger nk_fact = fact(static_cast<std::size_t>(n * k));
    BigInteger n_fact_pow = 1;
    for (int t = 0; t < k; ++t) n_fact_pow *= fact(static_cast<std::size_t>(n));
    BigRational from_count = make_rational(count_syt_yf(Partition::rectangle(k, n)) * n_fact_pow, nk_fact);

    BigRational product = 1;
    for (int m = 1; m < k; ++m) {
        BigInteger rising = 1;
        for (int s = 0; s < m; ++s) rising *= n + 1 + s;
        product *= make_rational(fact(static_cast<std::size_t>(m)), rising);
    }
    if (product != from_count)
        throw std::logic_error("rectangle prefactor mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n));
    return product;
}

namespace detail {

// Backtracking over fillings of outer/inner: value m goes into an addable
// cell of the filled region, rows tried smallest first. Yields each filling
// once, in lexicographic order of the row sequence.
class FillingEnumerator {
public:
    FillingEnumerator(Partition outer, Partition inner, int cap)
        : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (!outer_.contains(inner_))
            throw InnerNotContained(to_string(inner_) + " is not contained in " + to_string(outer_));
        total_ = outer_.size() - inner_.size();
        if (total_ > cap)
            throw ShapeTooLarge("enumeration of " + std::to_string(total_) + " cells exceeds the cap of " +
                                std::to_string(cap));
        filled_ = padded(inner_, outer_.length());
    }

    // Row index (0-based) sequence of the next filling, or nullopt when done.
    const std::vector<int>* next()
    {
        if (done_) return nullptr;
        if (!started_) {
            started_ = true;
            descend();
            return &choice_;
        }
        while (!choice_.empty()) {
            int row = choice_.back();
            choice_.pop_back();
            --filled_[static_cast<std::size_t>(row)];
            for (int r = row + 1; r < outer_.length(); ++r) {
                if (addable(r)) {
                    place(r);
                    descend();
                    return &choice_;
                }
            }
        }
        done_ = true;
        return nullptr;
    }

    std::vector<std::vector<int>> rows_for(const std::vector<int>& choice) const
    {
        std::vector<std::vector<int>> rows;
        std::vector<long> fill = padded(inner_, outer_.length());
        for (int i = 1; i <= outer_.length(); ++i)
            rows.emplace_back(static_cast<std::size_t>(outer_[i]), 0);
        for (std::size_t m = 0; m < choice.size(); ++m) {
            const auto r = static_cast<std::size_t>(choice[m]);
            rows[r][static_cast<std::size_t>(fill[r])] = static_cast<int>(m) + 1;
            ++fill[r];
        }
        return rows;
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

private:
    bool addable(int r) const
    {
        const auto u = static_cast<std::size_t>(r);
        if (filled_[u] >= outer_[r + 1]) return false;
        return r == 0 || filled_[u - 1] > filled_[u];
    }

    void place(int r)
    {
        ++filled_[static_cast<std::size_t>(r)];
        choice_.push_back(r);
    }

    void descend()
    {
        while (static_cast<int>(choice_.size()) < total_) {
            int r = 0;
            while (!addable(r)) ++r;
            place(r);
        }
    }

    Partition outer_;
    Partition inner_;
    int total_ = 0;
    std::vector<long> filled_;
    std::vector<int> choice_;
    bool started_ = false;
    bool done_ = false;
};

template <typename Derived, typename Value>
class StreamIterable {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Value;
        using difference_type = std::ptrdiff_t;
        using pointer = const Value*;
        using reference = const Value&;

        iterator() = default;
        explicit iterator(Derived* s) : stream_(s) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++()
        {
            current_ = stream_->next();
            if (!current_) stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        Derived* stream_ = nullptr;
        std::optional<Value> current_;
    };

    iterator begin() { return iterator(static_cast<Derived*>(this)); }
    iterator end() { return iterator(); }
};

} // namespace detail

// Single-consumer stream of the SYT of a straight shape.
class SytStream : public detail::StreamIterable<SytStream, Tableau> {
public:
    explicit SytStream(const Partition& lambda, int cap = default_enumeration_cap) : walker_(lambda, Partition(), cap) {}

    std::optional<Tableau> next()
    {
        const std::vector<int>* choice = walker_.next();
        if (!choice) return std::nullopt;
        return Tableau{walker_.outer(), walker_.rows_for(*choice)};
    }

private:
    detail::FillingEnumerator walker_;
};

class SkewSytStream : public detail::StreamIterable<SkewSytStream, SkewTableau> {
public:
    SkewSytStream(const Partition& lambda, const Partition& nu, int cap = default_enumeration_cap)
        : walker_(lambda, nu, cap)
    {
    }

    std::optional<SkewTableau> next()
    {
        const std::vector<int>* choice = walker_.next();
        if (!choice) return std::nullopt;
        return SkewTableau{walker_.outer(), walker_.inner(), walker_.rows_for(*choice)};
    }

private:
    detail::FillingEnumerator walker_;
};

inline SytStream enumerate_syt(const Partition& lambda, int cap = default_enumeration_cap)
{
    return SytStream(lambda, cap);
}

inline SkewSytStream enumerate_skew_syt(const Partition& lambda, const Partition& nu,
                                        int cap = default_enumeration_cap)
{
    return SkewSytStream(lambda, nu, cap);
}

} // namespace syt
