#pragma once

#include <optional>
#include <string>
#include <utility>

#include "wreath/poly.hpp"

namespace wreath {

/// Rational function num/den over the six-variable Laurent ring.
///
/// Normalization is deliberately lazy: after each operation we pull out
/// rational and monomial content, fold constant or fully-dividing
/// denominators into the numerator, and otherwise leave num/den as they are.
/// Equality is decided by cross-multiplication, which is exact regardless of
/// how reduced the representatives happen to be.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rat(1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        require(!den_.is_zero(), "RatFunc with zero denominator");
        reduce();
    }

    static RatFunc var(int v, int k = 1) { return RatFunc(Poly::var(v, k)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly(Rat(1)) && num_ == Poly(Rat(1)); }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        require(!b.is_zero(), "RatFunc division by zero");
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long k) const {
        if (k < 0) {
            require(!is_zero(), "RatFunc zero to negative power");
            return RatFunc(den_, num_).pow(-k);
        }
        RatFunc r(Rat(1));
        RatFunc base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    RatFunc substitute_powers(long k) const {
        return RatFunc(num_.substitute_powers(k), den_.substitute_powers(k));
    }
    RatFunc invert_vars(std::initializer_list<int> vars) const {
        return RatFunc(num_.invert_vars(vars), den_.invert_vars(vars));
    }
    RatFunc substitute_value(int var, const Rat& val) const {
        return RatFunc(num_.substitute_value(var, val), den_.substitute_value(var, val));
    }

    /// Full evaluation; a vanishing denominator raises DegeneratePoint.
    Rat evaluate(const std::array<std::optional<Rat>, kNumVars>& vals) const {
        Rat d = den_.evaluate(vals);
        if (sgn(d) == 0) throw DegeneratePoint("evaluation point hits a pole");
        return num_.evaluate(vals) / d;
    }

    /// Exact equality of the represented rational functions.
    friend bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    bool operator==(const RatFunc& o) const { return ratfunc_equal(*this, o); }

    std::string str() const {
        if (den_ == Poly(Rat(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Exps mn = num_.extract_monomial();
        Exps md = den_.extract_monomial();
        Rat cn = num_.extract_content();
        Rat cd = den_.extract_content();
        Rat c = cn / cd;
        Exps m = mn - md;
        if (den_.is_constant()) {
            num_ *= c / den_.constant_value();
            num_ = num_ * Poly::monomial(m, Rat(1));
            den_ = Poly(Rat(1));
            return;
        }
        if (num_ == den_) {
            num_ = Poly::monomial(m, c);
            den_ = Poly(Rat(1));
            return;
        }
        // opportunistic full cancellation, abandoned quickly when it stalls
        long cap = 16 * static_cast<long>(num_.term_count()) + 256;
        if (auto q = try_exact_div(num_, den_, cap)) {
            num_ = std::move(*q) * Poly::monomial(m, c);
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(std::move(num_), g);
            den_ = exact_div(std::move(den_), g);
            c *= num_.extract_content() / den_.extract_content();
            if (den_.is_constant()) {
                num_ *= c / den_.constant_value();
                num_ = num_ * Poly::monomial(m, Rat(1));
                den_ = Poly(Rat(1));
                return;
            }
        }
        num_ = num_ * Poly::monomial(m, c);
    }

    Poly num_, den_;
};

}  // namespace wreath
