#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace syt {

using BigInteger = mpz_class;
using BigRational = mpq_class;

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInteger& z) { return z.get_str(); }

inline BigRational make_rational(const BigInteger& num, const BigInteger& den)
{
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational abs(const BigRational& q)
{
    BigRational r = q;
    if (r < 0) r = -r;
    return r;
}

// Nearest double. get_d() truncates toward zero, so 1/5 would print as
// 0.19999999999999998.
inline double to_double(const BigRational& q)
{
    const double d = q.get_d();
    if (q == 0 || !std::isfinite(d)) return d;
    const double away = std::nextafter(d, q > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away)) return d;
    const BigRational lo_gap = abs(BigRational(q - BigRational(d)));
    const BigRational hi_gap = abs(BigRational(BigRational(away) - q));
    return hi_gap < lo_gap ? away : d;
}

// Memoized n!. One table per computation; not shared between threads.
class Factorials {
public:
    const BigInteger& operator()(std::size_t n)
    {
        while (table_.size() <= n) {
            BigInteger next = table_.back() * static_cast<unsigned long>(table_.size());
            table_.push_back(std::move(next));
        }
        return table_[n];
    }

private:
    std::vector<BigInteger> table_{BigInteger(1)};
};

} // namespace syt
