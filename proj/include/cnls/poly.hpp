#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cnls/rational.hpp"

namespace cnls {

// Power product over interned symbol ids. Factors sorted by id, exponents > 0.
struct Monomial {
    std::vector<std::pair<int, unsigned>> factors;

    bool is_one() const { return factors.empty(); }

    unsigned exponent_of(int var) const {
        for (auto& [v, e] : factors)
            if (v == var) return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial out;
        auto a = factors.begin(), b = o.factors.begin();
        while (a != factors.end() || b != o.factors.end()) {
            if (b == o.factors.end() || (a != factors.end() && a->first < b->first))
                out.factors.push_back(*a++);
            else if (a == factors.end() || b->first < a->first)
                out.factors.push_back(*b++);
            else {
                out.factors.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return out;
    }

    // Quotient this / o, or nullopt when o does not divide this.
    std::optional<Monomial> divided_by(const Monomial& o) const {
        Monomial out;
        auto a = factors.begin();
        for (auto& [v, e] : o.factors) {
            while (a != factors.end() && a->first < v) out.factors.push_back(*a++);
            if (a == factors.end() || a->first != v || a->second < e) return std::nullopt;
            if (a->second > e) out.factors.emplace_back(v, a->second - e);
            ++a;
        }
        while (a != factors.end()) out.factors.push_back(*a++);
        return out;
    }

    bool operator==(const Monomial& o) const { return factors == o.factors; }

    // Lex order with lower symbol ids more significant.
    static int cmp(const Monomial& a, const Monomial& b) {
        auto i = a.factors.begin(), j = b.factors.begin();
        while (i != a.factors.end() && j != b.factors.end()) {
            if (i->first != j->first) return i->first < j->first ? 1 : -1;
            if (i->second != j->second) return i->second > j->second ? 1 : -1;
            ++i, ++j;
        }
        if (i != a.factors.end()) return 1;
        if (j != b.factors.end()) return -1;
        return 0;
    }
};

struct MonomialDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

// Multivariate polynomial with exact rational coefficients, stored in
// descending lex order so begin() is the leading term.
class Poly {
public:
    using Map = std::map<Monomial, Rational, MonomialDescending>;

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static Poly var(int id, unsigned exp = 1) {
        Poly p;
        if (exp == 0) return Poly(Rational(1));
        p.terms_[Monomial{{{id, exp}}}] = 1;
        return p;
    }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw InternalError("Poly::as_rational on non-constant");
        return terms_.begin()->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw InternalError("leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const Rational& leading_coeff() const {
        if (terms_.empty()) throw InternalError("leading term of zero polynomial");
        return terms_.begin()->second;
    }

    Poly operator-() const {
        Poly out;
        for (auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }
    Poly operator+(const Poly& o) const {
        Poly out = *this;
        for (auto& [m, c] : o.terms_) {
            auto it = out.terms_.find(m);
            if (it == out.terms_.end())
                out.terms_[m] = c;
            else {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
        return out;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly out;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) {
                Monomial m = m1.times(m2);
                auto it = out.terms_.find(m);
                if (it == out.terms_.end()) {
                    Rational c = c1 * c2;
                    if (c != 0) out.terms_[m] = c;
                } else {
                    it->second += c1 * c2;
                    if (it->second == 0) out.terms_.erase(it);
                }
            }
        return out;
    }
    Poly operator*(const Rational& c) const {
        Poly out;
        if (c == 0) return out;
        for (auto& [m, k] : terms_) out.terms_[m] = k * c;
        return out;
    }
    Poly pow(unsigned n) const {
        Poly acc(Rational(1));
        for (unsigned i = 0; i < n; ++i) acc = acc * *this;
        return acc;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Total order for canonical sorting of fractions.
    static int cmp(const Poly& a, const Poly& b) {
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() && j != b.terms_.end()) {
            int c = Monomial::cmp(i->first, j->first);
            if (c != 0) return c;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i, ++j;
        }
        if (i != a.terms_.end()) return 1;
        if (j != b.terms_.end()) return -1;
        return 0;
    }

    void collect_vars(std::set<int>& out) const {
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.factors) out.insert(v);
    }
    std::set<int> vars() const {
        std::set<int> s;
        collect_vars(s);
        return s;
    }

    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.exponent_of(var));
        return d;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) {
            unsigned s = 0;
            for (auto& [v, e] : m.factors) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    // Coefficient of var^k, a polynomial in the remaining symbols.
    Poly coeff_of(int var, unsigned k) const {
        Poly out;
        for (auto& [m, c] : terms_) {
            if (m.exponent_of(var) != k) continue;
            Monomial rest;
            for (auto& [v, e] : m.factors)
                if (v != var) rest.factors.emplace_back(v, e);
            out.terms_[rest] = c;
        }
        return out;
    }

    Poly mul_var_pow(int v, unsigned k) const {
        if (k == 0) return *this;
        return *this * var(v, k);
    }

    double eval(const std::function<double(int)>& value_of) const {
        double acc = 0;
        for (auto& [m, c] : terms_) {
            double t = to_double(c);
            for (auto& [v, e] : m.factors) {
                double base = value_of(v);
                for (unsigned i = 0; i < e; ++i) t *= base;
            }
            acc += t;
        }
        return acc;
    }

    // c * P with P integer, primitive, positive leading coefficient.
    std::pair<Rational, Poly> int_normal_form() const {
        if (terms_.empty()) return {Rational(0), Poly()};
        BigInt den_lcm = 1, num_gcd = 0;
        for (auto& [m, c] : terms_) {
            den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
            num_gcd = boost::multiprecision::gcd(num_gcd, rat_num(c));
        }
        Rational scale(num_gcd, den_lcm);
        if (leading_coeff() < 0) scale = -scale;
        Poly prim;
        for (auto& [m, c] : terms_) prim.terms_[m] = c / scale;
        return {scale, prim};
    }
    Poly primitive() const { return int_normal_form().second; }

    // Exact division; callers guarantee divisibility.
    Poly divexact(const Poly& d) const {
        if (d.is_zero()) throw InternalError("division by zero polynomial");
        if (d.is_rational()) return *this * (Rational(1) / d.as_rational());
        Poly rem = *this, q;
        while (!rem.is_zero()) {
            auto mq = rem.leading_monomial().divided_by(d.leading_monomial());
            if (!mq) throw InternalError("divexact: not divisible");
            Rational cq = rem.leading_coeff() / d.leading_coeff();
            Poly t = Poly::term(*mq, cq);
            q = q + t;
            rem = rem - t * d;
        }
        return q;
    }

private:
    Map terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

namespace detail {

// Pseudo-remainder of a by b in variable x (b nonzero in x).
inline Poly prem(Poly a, const Poly& b, int x) {
    unsigned db = b.degree_in(x);
    Poly lb = b.coeff_of(x, db);
    while (!a.is_zero() && a.degree_in(x) >= db) {
        unsigned da = a.degree_in(x);
        Poly la = a.coeff_of(x, da);
        a = a * lb - (la * b).mul_var_pow(x, da - db);
        if (!a.is_zero() && a.degree_in(x) == da) // guard against coefficient collapse
            throw InternalError("prem failed to reduce degree");
        if (da == 0) break;
    }
    return a;
}

} // namespace detail

// Primitive-PRS gcd, canonicalized integer-primitive with positive lead.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_rational() || b.is_rational()) return Poly(Rational(1));

    std::set<int> vs = a.vars();
    b.collect_vars(vs);
    int x = *vs.rbegin(); // innermost variable; recursion peels from the highest id

    unsigned da = a.degree_in(x), db = b.degree_in(x);
    if (da == 0 || db == 0) {
        // gcd lies in the coefficients w.r.t. x
        Poly g = (da == 0) ? a : b;
        const Poly& other = (da == 0) ? b : a;
        unsigned d = other.degree_in(x);
        for (unsigned k = 0; k <= d; ++k) {
            Poly c = other.coeff_of(x, k);
            if (!c.is_zero()) g = poly_gcd(g, c);
            if (g.is_rational()) return Poly(Rational(1));
        }
        return g.primitive();
    }

    auto content = [&](const Poly& p) {
        Poly g;
        unsigned d = p.degree_in(x);
        for (unsigned k = 0; k <= d; ++k) {
            Poly c = p.coeff_of(x, k);
            if (!c.is_zero()) g = g.is_zero() ? c : poly_gcd(g, c);
        }
        return g;
    };

    Poly ca = content(a), cb = content(b);
    Poly cg = poly_gcd(ca, cb);
    a = a.divexact(ca);
    b = b.divexact(cb);
    if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = detail::prem(a, b, x);
        a = b;
        if (r.is_zero())
            b = Poly();
        else if (r.degree_in(x) == 0)
            return cg; // primitive parts coprime in x
        else
            b = r.divexact(content(r));
    }
    return (cg * a).primitive();
}

} // namespace cnls
