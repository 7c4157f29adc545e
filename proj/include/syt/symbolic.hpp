#pragma once

/* Closed forms in the rectangle width n for k-row rectangles (n,...,n).
 *
 * The exact numeric engine is sampled at consecutive integers n and the
 * unique reduced rational function through those values is reconstructed
 * (Newton interpolation followed by extended Euclid, i.e. Cauchy
 * interpolation), then confirmed at further points. On top of that: limits
 * at infinity, expansions in 1/n, limiting laws and their moments, the
 * two-row (Catalan) closed forms and the zero-limit pair search.
 */

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "counting.hpp"
#include "distributions.hpp"
#include "errors.hpp"
#include "numbers.hpp"
#include "polynomial.hpp"
#include "shapes.hpp"

namespace syt {

// The shape (n,...,n) with k rows, n symbolic.
struct RectFamily {
    int k = 1;

    explicit RectFamily(int rows) : k(rows)
    {
        if (rows < 1) throw std::invalid_argument("RectFamily: need at least one row");
    }

    Partition at(long n) const { return Partition::rectangle(k, static_cast<int>(n)); }
};

inline constexpr int default_max_degree = 24;

using Evaluator = std::function<BigRational(long)>;

namespace detail {

// Trial degrees 0,1,2,3,4,6,8,12,16,24,32,48,... up to and including max_deg.
inline std::vector<int> degree_schedule(int max_deg)
{
    std::vector<int> out;
    for (int d : {0, 1, 2, 3}) {
        if (d > max_deg) return out;
        out.push_back(d);
    }
    for (int p = 4; p <= max_deg; p *= 2) {
        out.push_back(p);
        if (p + p / 2 <= max_deg) out.push_back(p + p / 2);
    }
    if (out.back() != max_deg) out.push_back(max_deg);
    return out;
}

// Rational function with deg num <= num_deg and deg den <= den_deg through
// the points, if one exists; xs.size() must be num_deg + den_deg + 1.
inline std::optional<RationalFunction> cauchy_interpolate(const std::vector<BigRational>& xs,
                                                          const std::vector<BigRational>& ys, int num_deg, int den_deg)
{
    const std::size_t count = xs.size();
    std::vector<BigRational> dd = ys;
    for (std::size_t j = 1; j < count; ++j)
        for (std::size_t i = count - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);

    Polynomial interp = Polynomial::constant(dd[count - 1]);
    for (std::size_t i = count - 1; i-- > 0;)
        interp = interp * Polynomial::linear(1, -xs[i]) + Polynomial::constant(dd[i]);
    Polynomial modulus = Polynomial::constant(1);
    for (const BigRational& x : xs) modulus *= Polynomial::linear(1, -x);

    Polynomial r0 = std::move(modulus), r1 = std::move(interp);
    Polynomial t0, t1 = Polynomial::constant(1);
    while (r1.degree() > num_deg) {
        auto [q, r] = divmod(r0, r1);
        Polynomial t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (t1.is_zero() || t1.degree() > den_deg) return std::nullopt;
    for (std::size_t i = 0; i < count; ++i) {
        BigRational d = t1(xs[i]);
        if (d == 0 || r1(xs[i]) != ys[i] * d) return std::nullopt;
    }
    return RationalFunction(std::move(r1), std::move(t1));
}

} // namespace detail

// Reconstructs the reduced rational function behind an exact evaluator. For
// each trial degree d the candidate comes from 2d+1 consecutive samples
// starting at n_min, and must also match the next 2 consecutive values and 3
// held-out values further out.
inline RationalFunction fit_rational_function(const Evaluator& evaluator, long n_min, int max_deg = default_max_degree)
{
    std::map<long, BigRational> cache;
    auto value = [&](long n) -> const BigRational& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, evaluator(n)).first;
        return it->second;
    };

    for (int d : detail::degree_schedule(max_deg)) {
        const long points = 2L * d + 1;
        std::vector<BigRational> xs, ys;
        for (long t = 0; t < points; ++t) {
            xs.emplace_back(n_min + t);
            ys.push_back(value(n_min + t));
        }
        std::optional<RationalFunction> candidate = detail::cauchy_interpolate(xs, ys, d, d);
        if (!candidate) continue;

        const long after = n_min + points;
        bool ok = true;
        for (long n : {after, after + 1, after + 9, after + 23, after + 57}) {
            const RationalFunction& f = *candidate;
            if (f.denominator()(BigRational(n)) == 0 || f(BigRational(n)) != value(n)) {
                ok = false;
                break;
            }
        }
        if (ok) return *candidate;
    }
    throw FitFailed("no rational function of degree <= " + std::to_string(max_deg) + " fits the samples from n = " +
                    std::to_string(n_min));
}

// Pr(T_c = r) on (n,...,n) as a rational function of n.
inline RationalFunction occupancy_prob_symbolic(const RectFamily& fam, Cell c, int r, int max_deg = default_max_degree)
{
    if (c.row > fam.k || c.row < 1 || c.col < 1)
        throw CellOutsideShape(to_string(c) + " is not a cell of the " + std::to_string(fam.k) + "-row rectangle");
    const long n_min = static_cast<long>(std::max(r, 1)) + c.col + 2;
    return fit_rational_function([&](long n) { return occupancy_prob(fam.at(n), c, r); }, n_min, max_deg);
}

// (r, Pr(T_{1,j} = r)) for r = j .. k(j-1)+1.
inline std::vector<std::pair<int, RationalFunction>> occupancy_pgf_symbolic(const RectFamily& fam, int j,
                                                                            int max_deg = default_max_degree)
{
    if (j < 1) throw CellOutsideShape("column must be positive");
    std::vector<std::pair<int, RationalFunction>> out;
    for (int r = j; r <= fam.k * (j - 1) + 1; ++r) out.emplace_back(r, occupancy_prob_symbolic(fam, {1, j}, r, max_deg));
    return out;
}

// SP((n,...,n), [1,j], c2) as a rational function of n.
inline RationalFunction sort_prob_symbolic(const RectFamily& fam, int j, Cell c2, int max_deg = default_max_degree)
{
    const Cell c1{1, j};
    if (j < 1 || c2.row < 1 || c2.col < 1 || c2.row > fam.k)
        throw CellOutsideShape("cells must lie in the " + std::to_string(fam.k) + "-row rectangle");
    if (c1 == c2) throw SameCell("sorting probability needs two distinct cells");
    const long n_min = std::max({fam.k * (j - 1) + 1, j, c2.col}) + j + 2L;
    return fit_rational_function([&](long n) { return sort_prob(fam.at(n), c1, c2); }, n_min, max_deg);
}

struct Divergent {
    friend bool operator==(Divergent, Divergent) { return true; }
};
using Limit = std::variant<BigRational, Divergent>;

inline Limit limit_at_infinity(const RationalFunction& f)
{
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    if (num.degree() < den.degree()) return BigRational(0);
    if (num.degree() > den.degree()) return Divergent{};
    return BigRational(num.leading() / den.leading());
}

inline std::string to_string(const Limit& l)
{
    if (std::holds_alternative<Divergent>(l)) return "divergent";
    return to_string(std::get<BigRational>(l));
}

struct InverseSeries {
    BigRational constant;
    std::vector<BigRational> coefficients; // of n^-1, n^-2, ...
};

// Expansion of f at n = infinity in powers of 1/n.
inline InverseSeries series_in_inverse_n(const RationalFunction& f, int order)
{
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    if (num.degree() > den.degree()) throw DivergesAtInfinity("series in 1/n needs deg num <= deg den");
    InverseSeries out;
    out.coefficients.assign(static_cast<std::size_t>(std::max(order, 0)), BigRational(0));
    if (num.is_zero()) return out;

    // With x = 1/n: f = x^shift * A(x)/B(x), A and B the reversed coefficient lists.
    const int dn = num.degree(), dd = den.degree();
    const int shift = dd - dn;
    const int terms = order + 1 - shift; // coefficients of A/B needed
    std::vector<BigRational> quotient;
    if (terms > 0) {
        auto rev = [](const Polynomial& p, int t) { return t <= p.degree() ? p.coeff(static_cast<std::size_t>(p.degree() - t)) : BigRational(0); };
        quotient.assign(static_cast<std::size_t>(terms), BigRational(0));
        const BigRational b0 = rev(den, 0);
        for (int t = 0; t < terms; ++t) {
            BigRational acc = rev(num, t);
            for (int s = 1; s <= t; ++s) acc -= rev(den, s) * quotient[static_cast<std::size_t>(t - s)];
            quotient[static_cast<std::size_t>(t)] = acc / b0;
        }
    }
    for (int e = 0; e <= order; ++e) {
        const int t = e - shift;
        if (t < 0 || t >= terms) continue;
        if (e == 0)
            out.constant = quotient[static_cast<std::size_t>(t)];
        else
            out.coefficients[static_cast<std::size_t>(e - 1)] = quotient[static_cast<std::size_t>(t)];
    }
    return out;
}

// Limiting law of T_{1,j} as n -> infinity, from the fitted closed forms.
inline DiscreteDistribution limiting_occupancy(const RectFamily& fam, int j, int max_deg = 64)
{
    std::vector<int> support;
    std::vector<BigRational> probs;
    for (const auto& [r, f] : occupancy_pgf_symbolic(fam, j, max_deg)) {
        Limit l = limit_at_infinity(f);
        if (std::holds_alternative<Divergent>(l)) throw std::logic_error("occupancy probability diverges in n");
        const BigRational& p = std::get<BigRational>(l);
        if (p != 0) {
            support.push_back(r);
            probs.push_back(p);
        }
    }
    return {std::move(support), std::move(probs)};
}

// Same law without fitting: f^{lambda/nu}/f^lambda tends to dim_k(nu)/k^|nu|
// on (n,...,n), with dim_k(nu) = prod_{t<u<=k} (nu_t - nu_u + u - t)/(u - t).
inline DiscreteDistribution limiting_occupancy_direct(const RectFamily& fam, int j)
{
    if (j < 1) throw CellOutsideShape("column must be positive");
    const int k = fam.k;
    auto weyl_dimension = [k](const Partition& nu) {
        BigRational d = 1;
        for (int t = 1; t <= k; ++t)
            for (int u = t + 1; u <= k; ++u) d *= make_rational(BigInteger(nu[t] - nu[u] + u - t), BigInteger(u - t));
        return d;
    };
    std::vector<int> support;
    std::vector<BigRational> probs;
    BigInteger k_pow = 1;
    for (int r = 1; r <= k * (j - 1) + 1; ++r) {
        k_pow *= k;
        if (r < j) continue;
        BigRational p = 0;
        for (const Partition& nu : subshapes_with_corner(Partition::rectangle(k, r), {1, j}, r))
            p += count_syt_yf(remove_corner(nu, {1, j})) * weyl_dimension(nu);
        p /= k_pow;
        if (p != 0) {
            support.push_back(r);
            probs.push_back(p);
        }
    }
    return {std::move(support), std::move(probs)};
}

struct Moments {
    BigRational mean;
    BigRational variance;
    // E[(X - mean)^t] / sigma^t for t = 3..kmax; empty optional when variance is 0.
    std::optional<std::vector<double>> scaled;
};

inline BigRational central_moment(const DiscreteDistribution& d, const BigRational& mean, int t)
{
    BigRational acc = 0;
    for (std::size_t s = 0; s < d.size(); ++s) {
        BigRational dev = d.support()[s] - mean;
        BigRational pw = 1;
        for (int e = 0; e < t; ++e) pw *= dev;
        acc += pw * d.probs()[s];
    }
    return acc;
}

inline BigRational mean_of(const DiscreteDistribution& d)
{
    BigRational m = 0;
    for (std::size_t s = 0; s < d.size(); ++s) m += d.support()[s] * d.probs()[s];
    return m;
}

// Throws DegenerateDistribution when the variance is 0.
inline double scaled_moment(const DiscreteDistribution& d, int t)
{
    const BigRational mean = mean_of(d);
    const BigRational var = central_moment(d, mean, 2);
    if (var == 0) throw DegenerateDistribution("scaled moments are undefined for a distribution with variance 0");
    return central_moment(d, mean, t).get_d() / std::pow(std::sqrt(var.get_d()), t);
}

inline Moments moments(const DiscreteDistribution& d, int kmax)
{
    Moments out;
    out.mean = mean_of(d);
    out.variance = central_moment(d, out.mean, 2);
    if (out.variance != 0) {
        const double sigma = std::sqrt(out.variance.get_d());
        std::vector<double> scaled;
        for (int t = 3; t <= kmax; ++t) scaled.push_back(central_moment(d, out.mean, t).get_d() / std::pow(sigma, t));
        out.scaled = std::move(scaled);
    }
    return out;
}

namespace detail {

// (2i+1)! / (4^i i!^2)
inline BigRational catalan_ratio(int i)
{
    Factorials fact;
    BigInteger den = fact(static_cast<std::size_t>(i)) * fact(static_cast<std::size_t>(i));
    den <<= 2 * i;
    return make_rational(fact(static_cast<std::size_t>(2 * i + 1)), den);
}

} // namespace detail

// Mean of the limiting occupant of [1,i] in (n,n): 2i + 2 - 2 (2i+1)!/(4^i i!^2).
inline BigRational catalan_expectation(int i)
{
    if (i < 1) throw std::invalid_argument("catalan_expectation: i >= 1");
    return BigRational(2 * i + 2 - 2 * detail::catalan_ratio(i));
}

// -4 ((2i+1)!/(4^i i!^2))^2 - 2 (2i+1)!/(4^i i!^2) + 6i + 6
inline BigRational catalan_variance(int i)
{
    if (i < 1) throw std::invalid_argument("catalan_variance: i >= 1");
    const BigRational q = detail::catalan_ratio(i);
    return BigRational(-4 * q * q - 2 * q + 6 * i + 6);
}

// 2i + 2 - 4/sqrt(pi) i^(1/2) - 3/(2 sqrt(pi)) i^(-1/2) + 7/(32 sqrt(pi)) i^(-3/2) - 9/(256 sqrt(pi)) i^(-5/2)
inline double catalan_expectation_asymptotic(double i)
{
    const double s = std::sqrt(std::numbers::pi);
    return 2 * i + 2 - 4 / s * std::sqrt(i) - 3 / (2 * s) / std::sqrt(i) + 7 / (32 * s) * std::pow(i, -1.5) -
           9 / (256 * s) * std::pow(i, -2.5);
}

struct MetaLimitConstants {
    double skewness;
    double kurtosis;
    double scaled_fifth;
    double scaled_sixth;
};

// Closed forms in pi of the i -> infinity limits.
inline MetaLimitConstants meta_limit_closed_forms()
{
    const double pi = std::numbers::pi;
    const double base = 3 * pi - 8;
    return {2 * (5 * pi - 16) * std::sqrt(2.0) / std::pow(base, 1.5),
            (15 * pi * pi + 16 * pi - 192) / (base * base),
            2 * (51 * pi * pi - 80 * pi - 256) * std::sqrt(2.0) / std::pow(base, 2.5),
            (105 * pi * pi * pi + 648 * pi * pi - 2240 * pi - 2560) / (base * base * base)};
}

// Published decimal values of the meta-limits.
inline constexpr MetaLimitConstants meta_limit_targets{-0.4856928234, 3.108163850, -4.642979574, 18.66866547};

struct MetaLimitEntry {
    std::string name;
    double target = 0;
    double tolerance = 0;
    std::optional<double> computed; // empty when not applicable

    std::optional<double> deviation() const
    {
        if (!computed) return std::nullopt;
        return std::abs(*computed - target);
    }
    bool within() const { return computed && *deviation() <= tolerance; }
};

struct MetaLimitReport {
    int i = 0;
    bool degenerate = false;
    std::vector<MetaLimitEntry> entries;

    const MetaLimitEntry& entry(const std::string& name) const
    {
        for (const auto& e : entries)
            if (e.name == name) return e;
        throw std::out_of_range("no meta-limit entry " + name);
    }
};

// Statistics of the limiting law of T_{1,i} on (n,n) against the i -> infinity
// constants. Moments are exact rationals converted to double at the end.
inline MetaLimitReport catalan_meta_limits_check(int i)
{
    if (i < 1) throw std::invalid_argument("catalan_meta_limits_check: i >= 1");
    const DiscreteDistribution law = limiting_occupancy_direct(RectFamily(2), i);
    const Moments m = moments(law, 6);

    MetaLimitReport report;
    report.i = i;
    report.degenerate = !m.scaled.has_value();
    report.entries.push_back({"expectation", catalan_expectation_asymptotic(i), 1e-3, m.mean.get_d()});
    const MetaLimitConstants& c = meta_limit_targets;
    const std::pair<const char*, std::pair<double, double>> rows[] = {
        {"skewness", {c.skewness, 0.05}},
        {"kurtosis", {c.kurtosis, 0.05}},
        {"scaled_fifth_moment", {c.scaled_fifth, 0.15}},
        {"scaled_sixth_moment", {c.scaled_sixth, 0.5}},
    };
    for (std::size_t t = 0; t < 4; ++t) {
        MetaLimitEntry e{rows[t].first, rows[t].second.first, rows[t].second.second, std::nullopt};
        if (m.scaled) e.computed = (*m.scaled)[t];
        report.entries.push_back(std::move(e));
    }
    return report;
}

struct CellPair {
    Cell first;
    Cell second;

    friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

struct FindZeroResult {
    std::vector<CellPair> pairs;
    std::vector<std::string> warnings;
};

// Pairs [1,j], [m1,m2] with m1 in 2..k, m2 < j, j <= K whose sorting
// probability tends to 0 on (n,...,n). Pairs that cannot be fitted are
// skipped with a warning.
inline FindZeroResult find_zero_pairs(const RectFamily& fam, int max_col, int max_deg = 32)
{
    FindZeroResult out;
    for (int j = 2; j <= max_col; ++j)
        for (int m1 = 2; m1 <= fam.k; ++m1)
            for (int m2 = 1; m2 < j; ++m2) {
                const Cell c2{m1, m2};
                try {
                    Limit l = limit_at_infinity(sort_prob_symbolic(fam, j, c2, max_deg));
                    if (std::holds_alternative<BigRational>(l) && std::get<BigRational>(l) == 0)
                        out.pairs.push_back({{1, j}, c2});
                } catch (const FitFailed& e) {
                    out.warnings.push_back("skipped " + to_string(Cell{1, j}) + " vs " + to_string(c2) + ": " + e.what());
                }
            }
    return out;
}

// Whether den divides prod_{s=1}^{k(j-1)} (k n - s) up to a constant, the
// structure seen in every first-row occupancy closed form.
inline bool denominator_divides_rectangle_product(const RationalFunction& f, int k, int j)
{
    Polynomial product = Polynomial::constant(1);
    for (int s = 1; s <= k * (j - 1); ++s) product *= Polynomial::linear(k, -s);
    return divmod(product, f.denominator()).second.is_zero();
}

} // namespace syt
