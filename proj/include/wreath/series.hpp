#pragma once

#include <array>

#include "wreath/ratfunc.hpp"

namespace wreath {

/// Truncation caps for formal series.  A variable with cap >= 0 is a series
/// variable: exponents must be >= 0 and terms above the cap are dropped.
/// qt_total, when >= 0, additionally bounds the joint degree in q and t and
/// forces both to be series variables.  Uncapped variables (typically u) stay
/// fully Laurent.
struct SeriesCaps {
    std::array<int, kNumVars> var_cap{-1, -1, -1, -1, -1, -1};
    int qt_total = -1;

    bool operator==(const SeriesCaps&) const = default;

    bool is_series_var(int v) const {
        if (var_cap[v] >= 0) return true;
        return qt_total >= 0 && (v == VQ || v == VT);
    }
    bool keeps(const Exps& m) const {
        for (int v = 0; v < kNumVars; ++v) {
            if (is_series_var(v)) require(m.e[v] >= 0, "negative exponent on series variable");
            if (var_cap[v] >= 0 && m.e[v] > var_cap[v]) return false;
        }
        if (qt_total >= 0 && m.e[VQ] + m.e[VT] > qt_total) return false;
        return true;
    }
    /// Total exponent over series variables; additive under products and
    /// nonnegative on valid series terms.
    long weight(const Exps& m) const {
        long w = 0;
        for (int v = 0; v < kNumVars; ++v)
            if (is_series_var(v)) w += m.e[v];
        return w;
    }
};

/// Polynomial truncation of a formal series under fixed caps.
class Series {
public:
    Series() = default;
    explicit Series(SeriesCaps caps) : caps_(caps) {}
    Series(SeriesCaps caps, const Poly& p) : caps_(caps) { assign(p); }
    Series(SeriesCaps caps, const Rat& c) : caps_(caps), p_(c) {}
    Series(SeriesCaps caps, long c) : caps_(caps), p_(Rat(c)) {}

    const SeriesCaps& caps() const { return caps_; }
    const Poly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    bool operator==(const Series& o) const { return caps_ == o.caps_ && p_ == o.p_; }

    friend Series operator+(const Series& a, const Series& b) {
        check(a.caps_ == b.caps_, "series cap mismatch");
        Series r(a.caps_);
        r.p_ = a.p_ + b.p_;
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        check(a.caps_ == b.caps_, "series cap mismatch");
        Series r(a.caps_);
        r.p_ = a.p_ - b.p_;
        return r;
    }
    Series operator-() const {
        Series r(caps_);
        r.p_ = -p_;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        check(a.caps_ == b.caps_, "series cap mismatch");
        Series r(a.caps_);
        r.assign(a.p_ * b.p_);
        return r;
    }
    friend Series operator*(const Series& a, const Rat& c) {
        Series r(a.caps_);
        r.p_ = a.p_ * c;
        return r;
    }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series pow(long k) const {
        check(k >= 0, "Series::pow wants k >= 0");
        Series r(caps_, Rat(1));
        Series base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse.  The weight-0 part must be a single term in
    /// uncapped variables (typically a rational multiple of a u-power); the
    /// Neumann series for the rest terminates under truncation.
    Series inverse() const {
        Poly lead;
        for (const auto& [m, c] : p_.terms())
            if (caps_.weight(m) == 0) lead.add_term(m, c);
        check(lead.term_count() == 1, "Series::inverse: weight-0 part is not a single term");
        Exps lm = lead.terms().begin()->first;
        Rat lc = lead.terms().begin()->second;
        Poly linv = Poly::monomial(Exps{} - lm, Rat(1) / lc);
        Series g(caps_, p_ * linv);
        g.p_.add_term(Exps{}, Rat(-1));  // f = lead*(1+g), every g-term has weight >= 1
        Series sum(caps_, Rat(1));
        Series pw(caps_, Rat(1));
        int sign = 1;
        while (true) {
            pw *= g;
            if (pw.is_zero()) break;
            sign = -sign;
            sum.p_ += sign < 0 ? -pw.p_ : pw.p_;
        }
        return Series(caps_, sum.p_ * linv);
    }

    std::string str() const { return p_.str(); }

private:
    void assign(const Poly& p) {
        p_ = Poly();
        for (const auto& [m, c] : p.terms())
            if (caps_.keeps(m)) p_.add_term(m, c);
    }
    SeriesCaps caps_;
    Poly p_;
};

/// Truncating product (the truncation happens inside operator*).
inline Series series_truncate_product(const Series& a, const Series& b) { return a * b; }

/// exp of a series whose every term has positive weight.
inline Series series_exp(const Series& x) {
    for (const auto& [m, c] : x.poly().terms())
        check(x.caps().weight(m) >= 1, "series_exp: term of weight 0");
    Series sum(x.caps(), Rat(1));
    Series pw(x.caps(), Rat(1));
    Rat fact(1);
    long k = 0;
    while (true) {
        pw *= x;
        if (pw.is_zero()) break;
        ++k;
        fact *= Rat(k);
        sum += pw * (Rat(1) / fact);
    }
    return sum;
}

/// Expands a rational function as a series: num * den^-1 under the caps.
inline Series series_from_ratfunc(const SeriesCaps& caps, const RatFunc& f) {
    Series num(caps, f.num());
    if (f.den() == Poly(Rat(1))) return num;
    Series den(caps, f.den());
    return num * den.inverse();
}

}  // namespace wreath
