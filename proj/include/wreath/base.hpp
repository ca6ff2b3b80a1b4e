#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreath {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when caller-supplied data is malformed (bad partition string,
/// zero denominator, out-of-range color index, ...).
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when an internal mathematical invariant fails (inexact division,
/// solution space of wrong dimension, non-unit leading series term, ...).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// Raised when a random evaluation point hits a pole of some requested
/// denominator and the retry budget is exhausted.
struct DegeneratePoint : std::runtime_error {
    explicit DegeneratePoint(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check(bool cond, const char* msg) {
    if (!cond) throw InternalError(msg);
}

inline void require(bool cond, const char* msg) {
    if (!cond) throw InvalidInput(msg);
}

inline Rat make_rat(long num, long den) {
    require(den != 0, "zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

/// x^k for integer k of either sign; x must be nonzero when k < 0.
inline Rat rat_pow(const Rat& x, long k) {
    if (k == 0) return Rat(1);
    bool inv = k < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Rat num, den;
    mpz_pow_ui(num.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(num.get_den_mpz_t(), x.get_den_mpz_t(), e);
    if (inv) {
        require(sgn(x) != 0, "0 raised to negative power");
        num = Rat(1) / num;
    }
    return num;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

inline Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// Floor modulus, always in [0, m).
inline long imod(long a, long m) {
    long v = a % m;
    return v < 0 ? v + m : v;
}

}  // namespace wreath
