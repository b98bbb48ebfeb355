#pragma once

#include "cnls/funcexpr.hpp"

namespace cnls {

namespace detail {

inline std::string term_blurb(const Term& t) {
    std::string s = "t^(" + render_exponent_form(t.tpow) + ")";
    if (!t.expfreq.is_zero()) s += "*exp((" + render_exponent_form(t.expfreq) + ")*t)";
    if (t.logpow > 0) s += "*ln(t)^" + std::to_string(t.logpow);
    if (t.trig == TrigKind::Cos) s += "*cos";
    if (t.trig == TrigKind::Sin) s += "*sin";
    if (!t.ufuncs.empty()) s += "*<function factors>";
    return s;
}

// freq * c as an ExponentForm; c rational always works, otherwise c must be
// a rational-linear coefficient against a rational freq.
inline ExponentForm scale_frequency(const ExponentForm& freq, const Coeff& c, const Term& t) {
    if (c.is_rational()) return freq * c.as_rational();
    auto cf = c.as_exponent_form();
    if (cf && freq.is_rational()) return *cf * freq.rational_part();
    throw UnsupportedClass("frequency leaves the class under scaling in term " + term_blurb(t));
}

} // namespace detail

// t -> c*t (exact). Emits pow(c, a) coefficients for symbolic powers.
inline FuncExpr substitute_scale(const FuncExpr& e, const Coeff& c) {
    if (c.is_zero()) throw DomainError("scale factor must be invertible");
    if (c.is_one()) return e;
    std::vector<Term> out;
    for (const Term& t : e.terms()) {
        Term n = t;
        if (!t.ufuncs.empty())
            throw UnsupportedClass("cannot rescale the argument of a function factor in term " +
                                   detail::term_blurb(t));
        if (t.logpow > 0)
            throw UnsupportedClass("ln(c*t) leaves the class in term " + detail::term_blurb(t));
        if (!t.tpow.is_zero()) n.coeff = n.coeff * pow_coeff(c, t.tpow);
        if (!t.expfreq.is_zero()) n.expfreq = detail::scale_frequency(t.expfreq, c, t);
        if (t.trig != TrigKind::None) n.trigfreq = detail::scale_frequency(t.trigfreq, c, t);
        out.push_back(std::move(n));
    }
    return FuncExpr::canonicalize(std::move(out));
}

// t -> t + a (exact). Integer powers expand binomially; exponentials emit
// e^(lambda a) constants; trig atoms split against cos(omega a), sin(omega a).
inline FuncExpr substitute_shift(const FuncExpr& e, const Coeff& a) {
    if (a.is_zero()) return e;
    std::vector<Term> out;
    for (const Term& t : e.terms()) {
        if (!t.ufuncs.empty())
            throw UnsupportedClass("cannot shift the argument of a function factor in term " +
                                   detail::term_blurb(t));
        if (t.logpow > 0)
            throw UnsupportedClass("ln(t + a) leaves the class in term " + detail::term_blurb(t));
        auto n = t.tpow.as_long();
        if (!n || *n < 0)
            throw UnsupportedClass("shift of non-integer power t^(" + render_exponent_form(t.tpow) +
                                   ") leaves the class");

        // polynomial part: (t + a)^n
        std::vector<std::pair<Coeff, long>> poly_part; // (coefficient, power of t)
        Rational binom(1);
        for (long k = *n; k >= 0; --k) {
            Coeff ck = Coeff(binom) * a.pow_int(*n - k);
            poly_part.emplace_back(ck, k);
            if (k > 0) binom = binom * Rational(k) / Rational(*n - k + 1);
        }

        Coeff exp_scale{Rational(1)};
        if (!t.expfreq.is_zero())
            exp_scale = exp_const(Coeff::from_exponent_form(t.expfreq) * a);

        // trig(omega (t + a)) expanded by the angle-addition formulas
        std::vector<std::pair<Coeff, TrigKind>> trig_part;
        if (t.trig == TrigKind::None) {
            trig_part.emplace_back(Coeff(Rational(1)), TrigKind::None);
        } else {
            Coeff phase = Coeff::from_exponent_form(t.trigfreq) * a;
            Coeff cp = cos_const(phase), sp = sin_const(phase);
            if (t.trig == TrigKind::Cos) {
                trig_part.emplace_back(cp, TrigKind::Cos);
                trig_part.emplace_back(-sp, TrigKind::Sin);
            } else {
                trig_part.emplace_back(sp, TrigKind::Cos);
                trig_part.emplace_back(cp, TrigKind::Sin);
            }
        }

        for (auto& [ck, k] : poly_part)
            for (auto& [cs, kind] : trig_part) {
                Term m = t;
                m.coeff = t.coeff * ck * exp_scale * cs;
                m.tpow = ExponentForm(k);
                m.trig = kind;
                m.trigfreq = kind == TrigKind::None ? ExponentForm() : t.trigfreq;
                out.push_back(std::move(m));
            }
    }
    return FuncExpr::canonicalize(std::move(out));
}

} // namespace cnls
