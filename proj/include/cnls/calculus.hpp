#pragma once

#include "cnls/funcexpr.hpp"

namespace cnls {

// Exact d/dt. Total on the whole class.
inline FuncExpr differentiate(const FuncExpr& e) {
    std::vector<Term> out;
    for (const Term& t : e.terms()) {
        // power rule: d t^a = a t^(a-1)
        if (!t.tpow.is_zero()) {
            Term n = t;
            n.coeff = t.coeff * Coeff::from_exponent_form(t.tpow);
            n.tpow = t.tpow - ExponentForm(1);
            out.push_back(std::move(n));
        }
        // exponential factor
        if (!t.expfreq.is_zero()) {
            Term n = t;
            n.coeff = t.coeff * Coeff::from_exponent_form(t.expfreq);
            out.push_back(std::move(n));
        }
        // d ln^k = k ln^(k-1) / t
        if (t.logpow > 0) {
            Term n = t;
            n.coeff = t.coeff * Coeff(Rational(t.logpow));
            n.logpow = t.logpow - 1;
            n.tpow = t.tpow - ExponentForm(1);
            out.push_back(std::move(n));
        }
        if (t.trig == TrigKind::Cos) {
            Term n = t;
            n.coeff = -(t.coeff * Coeff::from_exponent_form(t.trigfreq));
            n.trig = TrigKind::Sin;
            out.push_back(std::move(n));
        } else if (t.trig == TrigKind::Sin) {
            Term n = t;
            n.coeff = t.coeff * Coeff::from_exponent_form(t.trigfreq);
            n.trig = TrigKind::Cos;
            out.push_back(std::move(n));
        }
        // Leibniz across uninterpreted factors
        for (std::size_t i = 0; i < t.ufuncs.size(); ++i) {
            Term n = t;
            n.ufuncs[i].order += 1;
            out.push_back(std::move(n));
        }
    }
    return FuncExpr::canonicalize(std::move(out));
}

inline FuncExpr differentiate(const FuncExpr& e, unsigned order) {
    FuncExpr out = e;
    for (unsigned i = 0; i < order; ++i) out = differentiate(out);
    return out;
}

namespace detail {

// Primitive of the pure atom t^n * e^(lambda t) * trig(omega t) for integer
// n >= 0, by recursion on n. The n = 0 primitive is the standard linear
// recombination A e cos + B e sin with (A, B) solving the 2x2 system.
inline FuncExpr antidiff_exp_trig(const Term& t, long n) {
    Term atom = t;
    atom.tpow = ExponentForm();
    atom.coeff = Coeff(Rational(1));
    FuncExpr prim0;
    Coeff lambda = Coeff::from_exponent_form(t.expfreq);
    if (atom.trig == TrigKind::None) {
        // e^(lambda t) / lambda (lambda nonzero here)
        prim0 = FuncExpr::from_term(atom).scalar_mul(lambda.inverse());
    } else {
        Coeff omega = Coeff::from_exponent_form(t.trigfreq);
        Coeff denom = lambda * lambda + omega * omega;
        Term c = atom, s = atom;
        c.trig = TrigKind::Cos;
        s.trig = TrigKind::Sin;
        c.trigfreq = s.trigfreq = t.trigfreq;
        FuncExpr ec = FuncExpr::from_term(c), es = FuncExpr::from_term(s);
        if (atom.trig == TrigKind::Cos)
            prim0 = ec.scalar_mul(lambda / denom) + es.scalar_mul(omega / denom);
        else
            prim0 = es.scalar_mul(lambda / denom) - ec.scalar_mul(omega / denom);
    }
    if (n == 0) return prim0.scalar_mul(t.coeff);
    // integrate t^n * E by parts: t^n P(E) - n * Int t^(n-1) P(E)
    FuncExpr tn = FuncExpr::t_power(ExponentForm(n));
    FuncExpr head = tn * prim0;
    FuncExpr tail;
    for (const Term& pt : prim0.terms()) {
        Term scaled = pt;
        scaled.coeff = pt.coeff * Coeff(Rational(n));
        scaled.tpow = pt.tpow + ExponentForm(n - 1);
        tail = tail + antidiff_exp_trig(scaled, n - 1);
    }
    return (head - tail).scalar_mul(t.coeff);
}

// Primitive of t^a ln^k for a generically different from -1, recursing on k.
inline FuncExpr antidiff_power_log(const Coeff& coeff, const ExponentForm& a, unsigned k) {
    Coeff ap1 = Coeff::from_exponent_form(a + ExponentForm(1));
    Term head;
    head.coeff = coeff / ap1;
    head.tpow = a + ExponentForm(1);
    head.logpow = k;
    if (k == 0) return FuncExpr::from_term(head);
    Coeff next = coeff * Coeff(Rational(k)) / ap1;
    return FuncExpr::from_term(head) - antidiff_power_log(next, a, k - 1);
}

} // namespace detail

// Primitive with zero constant of integration, defined on the subclass the
// formulas close over; throws NotElementary otherwise.
inline FuncExpr antidifferentiate(const FuncExpr& e) {
    FuncExpr acc;
    for (const Term& t : e.terms()) {
        if (!t.ufuncs.empty()) {
            // only the exact shape c * f^(j+1)(t) integrates inside the class
            if (t.ufuncs.size() == 1 && t.ufuncs[0].order >= 1 && t.tpow.is_zero() &&
                t.expfreq.is_zero() && t.logpow == 0 && t.trig == TrigKind::None) {
                Term n = t;
                n.ufuncs[0].order -= 1;
                acc = acc + FuncExpr::from_term(n);
                continue;
            }
            throw NotElementary("no elementary primitive for a term with function factors");
        }
        if (!t.expfreq.is_zero() || t.trig != TrigKind::None) {
            if (t.logpow > 0)
                throw NotElementary("no elementary primitive mixing exp/trig with ln");
            auto n = t.tpow.as_long();
            if (!n || *n < 0)
                throw NotElementary("no elementary primitive of exp/trig against t^" +
                                    render_exponent_form(t.tpow));
            if (t.expfreq.is_zero() && t.trig != TrigKind::None) {
                // pure trig: rotate the atom
                Term atom = t;
                atom.tpow = ExponentForm();
                Coeff omega = Coeff::from_exponent_form(t.trigfreq);
                Term rot = atom;
                if (t.trig == TrigKind::Cos) {
                    rot.trig = TrigKind::Sin;
                    rot.coeff = t.coeff / omega;
                } else {
                    rot.trig = TrigKind::Cos;
                    rot.coeff = -(t.coeff / omega);
                }
                if (*n == 0) {
                    acc = acc + FuncExpr::from_term(rot);
                } else {
                    // by parts against the rotated primitive
                    FuncExpr tn = FuncExpr::t_power(ExponentForm(*n));
                    FuncExpr head = tn * FuncExpr::from_term(rot);
                    Term tail_term = rot;
                    tail_term.coeff = rot.coeff * Coeff(Rational(*n));
                    tail_term.tpow = ExponentForm(*n - 1);
                    acc = acc + head - antidifferentiate(FuncExpr::from_term(tail_term));
                }
                continue;
            }
            acc = acc + detail::antidiff_exp_trig(t, *n);
            continue;
        }
        // pure powers of t and ln t
        if (t.tpow.is_rational() && t.tpow.rational_part() == -1) {
            Term n = t;
            n.tpow = ExponentForm();
            n.logpow = t.logpow + 1;
            n.coeff = t.coeff / Coeff(Rational(t.logpow + 1));
            acc = acc + FuncExpr::from_term(n);
            continue;
        }
        acc = acc + detail::antidiff_power_log(t.coeff, t.tpow, t.logpow);
    }
    return acc;
}

// Replace uninterpreted function atoms by concrete expressions; an atom of
// derivative order j becomes the j-th derivative of the binding. Unbound
// names stay in place.
inline FuncExpr substitute_ufuncs(const FuncExpr& e, const std::map<std::string, FuncExpr>& bindings) {
    FuncExpr acc;
    for (const Term& t : e.terms()) {
        Term base = t;
        base.ufuncs.clear();
        FuncExpr prod = FuncExpr::from_term(base);
        for (const UFuncAtom& u : t.ufuncs) {
            auto it = bindings.find(u.name);
            if (it == bindings.end()) {
                prod = prod * FuncExpr::ufunc(u.name, u.order);
            } else {
                prod = prod * differentiate(it->second, u.order);
            }
        }
        acc = acc + prod;
    }
    return acc;
}

} // namespace cnls
