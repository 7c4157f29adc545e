#pragma once

/* Univariate polynomials over the rationals and reduced rational functions.
 *
 * A RationalFunction is kept in one canonical form: numerator and
 * denominator coprime, both with integer coefficients whose joint content is
 * 1, denominator leading coefficient positive. Two equal functions therefore
 * compare equal structurally.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numbers.hpp"

namespace syt {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const BigRational& c) { return Polynomial({c}); }
    // a*n + b
    static Polynomial linear(const BigRational& a, const BigRational& b) { return Polynomial({b, a}); }
    static Polynomial monomial(const BigRational& c, std::size_t degree)
    {
        std::vector<BigRational> v(degree + 1, BigRational(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    // Ascending; empty for the zero polynomial.
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(std::size_t t) const { return t < coeffs_.size() ? coeffs_[t] : BigRational(0); }
    BigRational leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

    BigRational operator()(const BigRational& x) const
    {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
        for (std::size_t t = 0; t < o.coeffs_.size(); ++t) coeffs_[t] += o.coeffs_[t];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
        for (std::size_t t = 0; t < o.coeffs_.size(); ++t) coeffs_[t] -= o.coeffs_[t];
        trim();
        return *this;
    }

    Polynomial& operator*=(const BigRational& c)
    {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= BigRational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
        for (std::size_t s = 0; s < a.coeffs_.size(); ++s) {
            if (a.coeffs_[s] == 0) continue;
            for (std::size_t t = 0; t < b.coeffs_.size(); ++t) out[s + t] += a.coeffs_[s] * b.coeffs_[t];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Euclidean division; divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<BigRational> rem = a.coeffs_;
        const int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - db + 1), BigRational(0));
        const BigRational lead = b.leading();
        for (int d = a.degree(); d >= db; --d) {
            const BigRational q = rem[static_cast<std::size_t>(d)] / lead;
            quot[static_cast<std::size_t>(d - db)] = q;
            if (q == 0) continue;
            for (int t = 0; t <= db; ++t)
                rem[static_cast<std::size_t>(d - db + t)] -= q * b.coeffs_[static_cast<std::size_t>(t)];
        }
        rem.resize(static_cast<std::size_t>(db));
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const
    {
        if (is_zero()) return {};
        return *this * BigRational(1 / leading());
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// e.g. "15*n^2 - 21*n + 6"; requires integer coefficients to look as expected
// but renders any rational coefficient.
inline std::string to_string(const Polynomial& p, const std::string& var = "n")
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        BigRational c = p.coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
        if (d == 0)
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + "*" + mono;
    }
    return out;
}

class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}
    RationalFunction(const BigRational& c) : RationalFunction(Polynomial::constant(c), Polynomial::constant(1)) {}
    RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Throws std::domain_error at a pole.
    BigRational operator()(const BigRational& x) const
    {
        BigRational d = den_(x);
        if (d == 0) throw std::domain_error("rational function evaluated at a pole");
        return BigRational(num_(x) / d);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    void canonicalize()
    {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        // Clear denominators, then divide out the joint content.
        BigInteger lcm_den = 1;
        BigInteger content = 0;
        for (const Polynomial* p : {&num_, &den_})
            for (const BigRational& c : p->coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
        BigRational scale(lcm_den);
        for (const Polynomial* p : {&num_, &den_})
            for (const BigRational& c : p->coeffs()) {
                BigRational scaled = c * scale;
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num_mpz_t());
            }
        scale /= content;
        if (den_.leading() < 0) scale = -scale;
        num_ *= scale;
        den_ *= scale;
    }

    Polynomial num_;
    Polynomial den_;
};

// "3/(2*n - 1)", "(n + 1)/3", "n^2 + 1"
inline std::string to_string(const RationalFunction& f, const std::string& var = "n")
{
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    if (den.degree() == 0 && den.leading() == 1) return to_string(num, var);
    auto terms = [](const Polynomial& p) {
        return static_cast<int>(std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const BigRational& c) { return c != 0; }));
    };
    std::string n = to_string(num, var);
    std::string d = to_string(den, var);
    if (terms(num) > 1) n = "(" + n + ")";
    if (terms(den) > 1 || den.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace syt
