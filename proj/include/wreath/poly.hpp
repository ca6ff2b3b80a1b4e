#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "wreath/base.hpp"

namespace wreath {

/// Variable slots of the ambient Laurent polynomial ring.
/// q, t   : the two Macdonald parameters
/// u      : spectral / Ext parameter
/// T      : grading (box-count) series variable
/// p      : elliptic nome
/// S      : second grading variable for bidegree series
enum Var : int { VQ = 0, VT = 1, VU = 2, VBT = 3, VP = 4, VS = 5 };
inline constexpr int kNumVars = 6;
inline constexpr const char* kVarNames[kNumVars] = {"q", "t", "u", "T", "p", "S"};

/// Exponent vector of one Laurent monomial.
struct Exps {
    std::array<int16_t, kNumVars> e{};

    static Exps unit(int var, int k = 1) {
        Exps m;
        m.e[var] = static_cast<int16_t>(k);
        return m;
    }
    bool is_zero() const {
        for (int v = 0; v < kNumVars; ++v)
            if (e[v] != 0) return false;
        return true;
    }
    Exps operator+(const Exps& o) const {
        Exps m;
        for (int v = 0; v < kNumVars; ++v) m.e[v] = static_cast<int16_t>(e[v] + o.e[v]);
        return m;
    }
    Exps operator-(const Exps& o) const {
        Exps m;
        for (int v = 0; v < kNumVars; ++v) m.e[v] = static_cast<int16_t>(e[v] - o.e[v]);
        return m;
    }
    Exps scaled(long k) const {
        Exps m;
        for (int v = 0; v < kNumVars; ++v) m.e[v] = static_cast<int16_t>(e[v] * k);
        return m;
    }
    auto operator<=>(const Exps&) const = default;
};

/// Sparse Laurent polynomial over Q in the six global variables.
/// Terms are kept in a map ordered lexicographically by exponent vector,
/// which fixes the canonical textual form.
class Poly {
public:
    using TermMap = std::map<Exps, Rat>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (sgn(c) != 0) terms_[Exps{}] = c;
    }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly var(int v, int k = 1) { return monomial(Exps::unit(v, k), Rat(1)); }
    static Poly monomial(const Exps& m, const Rat& c) {
        Poly p;
        if (sgn(c) != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
    }
    Rat constant_value() const {
        check(is_constant(), "constant_value on non-constant poly");
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }
    /// Coefficient of an exact monomial.
    Rat coeff(const Exps& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Exps& m, const Rat& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly p;
        if (a.is_zero() || b.is_zero()) return p;
        const Poly& small = a.term_count() <= b.term_count() ? a : b;
        const Poly& big = a.term_count() <= b.term_count() ? b : a;
        for (const auto& [ma, ca] : small.terms_)
            for (const auto& [mb, cb] : big.terms_) p.add_term(ma + mb, ca * cb);
        return p;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c) {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, cc] : terms_) cc *= c;
        return *this;
    }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly pow(long k) const {
        check(k >= 0, "Poly::pow wants k >= 0");
        Poly r(Rat(1));
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    /// Substitutes every variable v by v^k (k >= 1): the degree-k power map.
    Poly substitute_powers(long k) const {
        require(k >= 1, "substitute_powers wants k >= 1");
        Poly p;
        for (const auto& [m, c] : terms_) p.terms_[m.scaled(k)] = c;
        return p;
    }

    /// Inverts the listed variables (v -> v^-1), e.g. bar involution on q,t.
    Poly invert_vars(std::initializer_list<int> vars) const {
        Poly p;
        for (const auto& [m, c] : terms_) {
            Exps mm = m;
            for (int v : vars) mm.e[v] = static_cast<int16_t>(-mm.e[v]);
            p.terms_[mm] = c;
        }
        return p;
    }

    /// Substitutes one variable by a rational value (negative exponents need
    /// val != 0).
    Poly substitute_value(int var, const Rat& val) const {
        Poly p;
        for (const auto& [m, c] : terms_) {
            Exps mm = m;
            long k = mm.e[var];
            mm.e[var] = 0;
            p.add_term(mm, c * rat_pow(val, k));
        }
        return p;
    }

    /// Laurent degree range of one variable over all terms.
    std::pair<int, int> degree_range(int var) const {
        check(!is_zero(), "degree_range of zero poly");
        int lo = terms_.begin()->first.e[var], hi = lo;
        for (const auto& [m, c] : terms_) {
            lo = std::min<int>(lo, m.e[var]);
            hi = std::max<int>(hi, m.e[var]);
        }
        return {lo, hi};
    }

    bool uses_var(int var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[var] != 0) return true;
        return false;
    }

    /// Clears integer denominators and divides out integer content; returns
    /// the removed rational factor r with *this == r * result.
    Rat extract_content() {
        if (is_zero()) return Rat(1);
        Int den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            Int d = c.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        Int num_gcd = 0;
        for (const auto& [m, c] : terms_) {
            Int scaled = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        Rat content(num_gcd, den_lcm);
        content.canonicalize();
        if (sgn(terms_.begin()->second) < 0) content = -content;
        Rat inv = Rat(1) / content;
        for (auto& [m, c] : terms_) c *= inv;
        return content;
    }

    /// Factors out the largest monomial dividing all terms (componentwise min
    /// exponent); returns it.
    Exps extract_monomial() {
        if (is_zero()) return Exps{};
        Exps mn = terms_.begin()->first;
        for (const auto& [m, c] : terms_)
            for (int v = 0; v < kNumVars; ++v) mn.e[v] = std::min(mn.e[v], m.e[v]);
        if (mn.is_zero()) return mn;
        TermMap shifted;
        for (const auto& [m, c] : terms_) shifted[m - mn] = c;
        terms_ = std::move(shifted);
        return mn;
    }

    /// Division organized along the lexicographically smallest divisor term;
    /// fails (nullopt) when the division is not exact or exceeds step_cap.
    /// In an exact division every quotient term is bounded above (lex) by
    /// max(num) - max(den), because lex-maximal terms of a product never
    /// cancel.
    friend std::optional<Poly> try_exact_div(Poly num, const Poly& den,
                                             long step_cap = 2000000) {
        if (den.is_zero()) return std::nullopt;
        if (num.is_zero()) return Poly();
        Poly q;
        Exps dm = den.terms_.begin()->first;
        Rat dc = den.terms_.begin()->second;
        Exps qbound = num.terms_.rbegin()->first - den.terms_.rbegin()->first;
        long steps = 0;
        while (!num.is_zero()) {
            Exps m = num.terms_.begin()->first - dm;
            if (qbound < m) return std::nullopt;
            if (++steps > step_cap) return std::nullopt;
            Rat c = num.terms_.begin()->second / dc;
            q.add_term(m, c);
            num -= den * Poly::monomial(m, c);
        }
        return q;
    }

    /// Exact division; throws InternalError when the division is not exact.
    friend Poly exact_div(Poly num, const Poly& den) {
        require(!den.is_zero(), "division by zero poly");
        auto q = try_exact_div(std::move(num), den, 50000000);
        check(q.has_value(), "exact_div: inexact division");
        return *q;
    }

    /// Evaluates with all used variables assigned; missing assignment throws.
    Rat evaluate(const std::array<std::optional<Rat>, kNumVars>& vals) const {
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int v = 0; v < kNumVars; ++v) {
                if (m.e[v] == 0) continue;
                require(vals[v].has_value(), "evaluate: unassigned variable");
                t *= rat_pow(*vals[v], m.e[v]);
            }
            acc += t;
        }
        return acc;
    }

    /// Canonical textual form: terms ascending in the lex order on exponent
    /// vectors (q,t,u,T,p,S).
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (sgn(a) < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (sgn(a) < 0 ? " - " : " + ");
                if (sgn(a) < 0) a = -a;
            }
            first = false;
            bool unit_coeff = (a == 1);
            bool any_var = !m.is_zero();
            if (!unit_coeff || !any_var) os << a.get_str();
            bool need_star = !unit_coeff;
            for (int v = 0; v < kNumVars; ++v) {
                if (m.e[v] == 0) continue;
                if (need_star) os << "*";
                os << kVarNames[v];
                if (m.e[v] != 1) os << "^" << m.e[v];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline Poly operator-(const Rat& c, const Poly& p) { return Poly(c) - p; }
inline Poly operator+(const Rat& c, const Poly& p) { return Poly(c) + p; }

/// Normal form up to units: no monomial factor, integer-primitive content,
/// positive leading coefficient.  Zero stays zero.
inline Poly primitive_part(Poly p) {
    if (p.is_zero()) return p;
    p.extract_monomial();
    p.extract_content();
    return p;
}

inline Poly poly_gcd(const Poly& a0, const Poly& b0);

namespace detail {

/// Euclid over Q for polynomials in the single variable v, with content
/// stripped each round to keep the rationals small.
inline Poly gcd_univariate(Poly a, Poly b, int v) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    auto deg = [&](const Poly& p) { return p.degree_range(v).second; };
    auto coeff = [&](const Poly& p, int k) {
        auto it = p.terms().find(Exps::unit(v, k));
        return it == p.terms().end() ? Rat(0) : it->second;
    };
    while (!b.is_zero()) {
        int db = deg(b);
        if (db == 0) return Poly(Rat(1));
        Rat lb = coeff(b, db);
        while (!a.is_zero() && deg(a) >= db) {
            int da = deg(a);
            Rat f = coeff(a, da) / lb;
            a -= b * Poly::monomial(Exps::unit(v, da - db), f);
        }
        std::swap(a, b);
        b.extract_content();
    }
    return primitive_part(std::move(a));
}

/// Coefficients of p in the main variable v (p monomial-free).
inline std::map<int, Poly> main_var_view(const Poly& p, int v) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        Exps mm = m;
        int k = mm.e[v];
        mm.e[v] = 0;
        out[k].add_term(mm, c);
    }
    return out;
}

inline Poly join_main_var(const std::map<int, Poly>& view, int v) {
    Poly p;
    for (const auto& [k, c] : view) p += c * Poly::monomial(Exps::unit(v, k), Rat(1));
    return p;
}

/// Pseudo-remainder of a by b in the main variable; both views nonempty with
/// deg a >= deg b.
inline std::map<int, Poly> view_prem(std::map<int, Poly> a, const std::map<int, Poly>& b) {
    int db = b.rbegin()->first;
    const Poly& lb = b.rbegin()->second;
    while (!a.empty() && a.rbegin()->first >= db) {
        int da = a.rbegin()->first;
        Poly la = a.rbegin()->second;
        std::map<int, Poly> next;
        for (const auto& [k, c] : a) {
            if (k == da) continue;
            next[k] = c * lb;
        }
        for (const auto& [k, c] : b) {
            if (k == db) continue;
            auto [it, fresh] = next.emplace(k + da - db, Poly());
            it->second -= c * la;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        a = std::move(next);
    }
    return a;
}

/// gcd of all coefficient polynomials of a view.
inline Poly view_content(const std::map<int, Poly>& view) {
    Poly g;
    for (const auto& [k, c] : view) {
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

/// gcd for polynomials using exactly the variables v and w, by evaluating w
/// at integer points, running univariate Euclid in v, and Newton-interpolating
/// the images back.  Images are scaled to share the leading coefficient
/// gcd(lc_v a, lc_v b)(e), so they interpolate one polynomial; candidates are
/// verified by trial division, hence unlucky points only cost extra rounds.
inline Poly gcd_bivariate(Poly a, Poly b, int v, int w) {
    auto content_in_w = [&](const Poly& p) {
        Poly g;
        for (const auto& [k, c] : main_var_view(p, v)) {
            g = g.is_zero() ? c : gcd_univariate(g, c, w);
            if (!g.is_zero() && g.is_constant()) break;
        }
        return g;
    };
    Poly ca = content_in_w(a), cb = content_in_w(b);
    if (!ca.is_constant()) a = exact_div(std::move(a), ca);
    if (!cb.is_constant()) b = exact_div(std::move(b), cb);
    Poly cont = gcd_univariate(ca, cb, w);

    int da = a.degree_range(v).second, db = b.degree_range(v).second;
    auto lead = [&](const Poly& p, int d) {
        Poly out;
        for (const auto& [m, c] : p.terms())
            if (m.e[v] == d) {
                Exps mm = m;
                mm.e[v] = 0;
                out.add_term(mm, c);
            }
        return out;
    };
    // gcd_univariate normalizes away monomial factors; the leading-coefficient
    // scaling below needs the honest gcd, monomial part included.
    auto gcd_uni_full = [](const Poly& x, const Poly& y, int var) {
        Poly g = gcd_univariate(x, y, var);
        int low = std::min(x.degree_range(var).first, y.degree_range(var).first);
        if (low > 0) g = g * Poly::var(var).pow(low);
        return g;
    };
    Poly la = lead(a, da), lb = lead(b, db);
    Poly gamma = gcd_uni_full(la, lb, w);

    // Divisibility of the evaluations at one fresh point; a cheap and sharp
    // filter that spares the full trial division for real candidates.
    auto divides_probed = [&](const Poly& big, const Poly& cand) {
        Rat e(1009);
        Poly ce = cand.substitute_value(w, e);
        if (ce.is_zero()) return true;
        auto coeff = [&](const Poly& p, int k) {
            auto it = p.terms().find(Exps::unit(v, k));
            return it == p.terms().end() ? Rat(0) : it->second;
        };
        int dc = ce.degree_range(v).second;
        Rat lc = coeff(ce, dc);
        Poly rem = big.substitute_value(w, e);
        while (!rem.is_zero()) {
            int dr = rem.degree_range(v).second;
            if (dr < dc) return false;
            rem -= ce * Poly::monomial(Exps::unit(v, dr - dc), coeff(rem, dr) / lc);
        }
        return true;
    };

    long budget = std::min(a.degree_range(w).second, b.degree_range(w).second) +
                  gamma.degree_range(w).second + 3;
    Poly interp, basis(Rat(1));
    int dmin = std::min(da, db) + 1;
    for (long step = 0; step < 8 * budget + 64; ++step) {
        Rat e((step + 1) / 2 * (step % 2 ? 1 : -1));
        if (la.substitute_value(w, e).is_zero()) continue;
        if (lb.substitute_value(w, e).is_zero()) continue;
        Poly g = gcd_uni_full(a.substitute_value(w, e), b.substitute_value(w, e), v);
        int d = g.degree_range(v).second;
        if (d == 0) return primitive_part(cont);
        if (d > dmin) continue;
        if (d < dmin) {
            dmin = d;
            interp = Poly();
            basis = Poly(Rat(1));
        }
        auto lg = g.terms().find(Exps::unit(v, d));
        g = g * Poly(gamma.substitute_value(w, e).constant_value() / lg->second);

        Poly diff = g - interp.substitute_value(w, e);
        if (diff.is_zero()) {
            Poly cand = interp;
            Poly cc = content_in_w(cand);
            if (!cc.is_constant()) cand = exact_div(std::move(cand), cc);
            cand = primitive_part(std::move(cand));
            if (divides_probed(a, cand) && divides_probed(b, cand) &&
                try_exact_div(a, cand) && try_exact_div(b, cand))
                return primitive_part(cont * cand);
            continue;
        }
        interp = interp + diff * basis * Poly(Rat(1) / basis.substitute_value(w, e).constant_value());
        basis = basis * (Poly::var(w) - Poly(e));
    }
    check(false, "bivariate gcd interpolation failed to converge");
    return Poly();
}

}  // namespace detail

/// gcd of Laurent polynomials up to units.  One- and two-variable inputs
/// (the common case) go through univariate Euclid, directly or by evaluation
/// and interpolation.  Inputs in three or more variables fall back to
/// primitive pseudo-remainder sequences with recursive coefficient contents,
/// after a cheap univariate specialization filters out the coprime case; an
/// unlucky evaluation point can only cost time, never exactness.
inline Poly poly_gcd(const Poly& a0, const Poly& b0) {
    Poly a = primitive_part(a0);
    Poly b = primitive_part(b0);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

    int nused = 0, nshared = 0;
    int used[kNumVars], shared_var = -1;
    for (int v = 0; v < kNumVars; ++v) {
        bool ua = a.uses_var(v), ub = b.uses_var(v);
        if (ua || ub) used[nused++] = v;
        if (ua && ub) nshared++, shared_var = v;
    }
    if (nshared == 0) return Poly(Rat(1));
    if (nused == 1) return detail::gcd_univariate(std::move(a), std::move(b), used[0]);
    if (nused == 2) {
        int v = shared_var, w = used[0] == v ? used[1] : used[0];
        if (nshared == 2) {
            // keep the higher-degree variable for Euclid, evaluate the other
            int d0 = std::min(a.degree_range(used[0]).second, b.degree_range(used[0]).second);
            int d1 = std::min(a.degree_range(used[1]).second, b.degree_range(used[1]).second);
            v = d0 >= d1 ? used[0] : used[1];
            w = d0 >= d1 ? used[1] : used[0];
        }
        return detail::gcd_bivariate(std::move(a), std::move(b), v, w);
    }

    static const Rat kProbe[kNumVars] = {Rat(5),  Rat(7),  Rat(11),
                                         Rat(13), Rat(17), Rat(19)};
    int main_var = -1;
    int main_deg = 0;
    for (int v = 0; v < kNumVars; ++v) {
        if (!a.uses_var(v) || !b.uses_var(v)) continue;
        Poly ua = a, ub = b;
        for (int w = 0; w < kNumVars; ++w) {
            if (w == v) continue;
            if (ua.uses_var(w)) ua = ua.substitute_value(w, kProbe[w]);
            if (ub.uses_var(w)) ub = ub.substitute_value(w, kProbe[w]);
        }
        int bound;
        if (ua.is_zero() || ub.is_zero() || ua.is_constant() || ub.is_constant()) {
            // degenerate probe, fall back to the full degree bound
            bound = std::min(a.degree_range(v).second, b.degree_range(v).second);
        } else {
            Poly g = detail::gcd_univariate(std::move(ua), std::move(ub), v);
            bound = g.is_constant() ? 0 : g.degree_range(v).second;
        }
        if (bound > 0 && (main_var < 0 || bound < main_deg)) {
            main_var = v;
            main_deg = bound;
        }
    }
    if (main_var < 0) return Poly(Rat(1));

    auto va = detail::main_var_view(a, main_var);
    auto vb = detail::main_var_view(b, main_var);
    if (va.rbegin()->first < vb.rbegin()->first) std::swap(va, vb);
    Poly ca = detail::view_content(va);
    Poly cb = detail::view_content(vb);
    Poly cont = poly_gcd(ca, cb);
    for (auto& [k, c] : va) c = exact_div(std::move(c), ca);
    for (auto& [k, c] : vb) c = exact_div(std::move(c), cb);

    while (true) {
        auto r = detail::view_prem(va, vb);
        if (r.empty()) {
            Poly g = detail::join_main_var(vb, main_var);
            return primitive_part(cont * g);
        }
        if (r.rbegin()->first == 0) return primitive_part(std::move(cont));
        Poly cr = detail::view_content(r);
        for (auto& [k, c] : r) c = exact_div(std::move(c), cr);
        va = std::move(vb);
        vb = std::move(r);
    }
}

}  // namespace wreath
