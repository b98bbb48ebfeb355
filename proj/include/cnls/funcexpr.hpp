#pragma once

#include <string>
#include <vector>

#include "cnls/coeff.hpp"

namespace cnls {

enum class TrigKind { None, Cos, Sin };

struct UFuncAtom {
    std::string name;
    unsigned order = 0; // derivative order

    bool operator==(const UFuncAtom& o) const { return name == o.name && order == o.order; }
    bool operator<(const UFuncAtom& o) const {
        if (name != o.name) return name < o.name;
        return order < o.order;
    }
};

// One canonical monomial: coeff * t^tpow * e^(expfreq*t) * ln(t)^logpow
//                         * trig(trigfreq*t) * prod of uninterpreted factors.
struct Term {
    Coeff coeff;
    ExponentForm tpow;
    ExponentForm expfreq;
    unsigned logpow = 0;
    TrigKind trig = TrigKind::None;
    ExponentForm trigfreq;
    std::vector<UFuncAtom> ufuncs; // sorted multiset

    static int cmp_signature(const Term& a, const Term& b) {
        int c = ExponentForm::cmp(a.tpow, b.tpow);
        if (c) return c;
        c = ExponentForm::cmp(a.expfreq, b.expfreq);
        if (c) return c;
        if (a.logpow != b.logpow) return a.logpow < b.logpow ? -1 : 1;
        if (a.trig != b.trig) return static_cast<int>(a.trig) < static_cast<int>(b.trig) ? -1 : 1;
        c = ExponentForm::cmp(a.trigfreq, b.trigfreq);
        if (c) return c;
        if (a.ufuncs != b.ufuncs) return a.ufuncs < b.ufuncs ? -1 : 1;
        return 0;
    }
};

// Canonical element of the univariate function class. Terms strictly
// increasing by signature; empty list is the zero function. Immutable in use:
// all operations return fresh values.
class FuncExpr {
public:
    FuncExpr() = default;

    static FuncExpr zero() { return FuncExpr(); }
    static FuncExpr constant(const Coeff& c) {
        Term t;
        t.coeff = c;
        return canonicalize({t});
    }
    static FuncExpr one() { return constant(Coeff(Rational(1))); }
    static FuncExpr t_power(const ExponentForm& e, const Coeff& c = Coeff(Rational(1))) {
        Term t;
        t.coeff = c;
        t.tpow = e;
        return canonicalize({t});
    }
    static FuncExpr exponential(const ExponentForm& freq, const Coeff& c = Coeff(Rational(1))) {
        Term t;
        t.coeff = c;
        t.expfreq = freq;
        return canonicalize({t});
    }
    static FuncExpr log_power(unsigned k, const Coeff& c = Coeff(Rational(1))) {
        Term t;
        t.coeff = c;
        t.logpow = k;
        return canonicalize({t});
    }
    static FuncExpr trig(TrigKind kind, const ExponentForm& freq, const Coeff& c = Coeff(Rational(1))) {
        Term t;
        t.coeff = c;
        t.trig = kind;
        t.trigfreq = freq;
        return canonicalize({t});
    }
    static FuncExpr ufunc(const std::string& name, unsigned order = 0) {
        Term t;
        t.coeff = Coeff(Rational(1));
        t.ufuncs.push_back({name, order});
        return canonicalize({t});
    }
    static FuncExpr from_term(const Term& t) { return canonicalize({t}); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const Term& t = terms_[0];
        return t.tpow.is_zero() && t.expfreq.is_zero() && t.logpow == 0 &&
               t.trig == TrigKind::None && t.ufuncs.empty();
    }
    Coeff constant_value() const {
        if (terms_.empty()) return Coeff(Rational(0));
        if (!is_constant()) throw InternalError("FuncExpr::constant_value on non-constant");
        return terms_[0].coeff;
    }

    bool operator==(const FuncExpr& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (Term::cmp_signature(terms_[i], o.terms_[i]) != 0) return false;
            if (!(terms_[i].coeff == o.terms_[i].coeff)) return false;
        }
        return true;
    }
    bool operator!=(const FuncExpr& o) const { return !(*this == o); }

    FuncExpr operator-() const {
        FuncExpr out;
        out.terms_ = terms_;
        for (Term& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }
    FuncExpr operator+(const FuncExpr& o) const {
        std::vector<Term> all = terms_;
        all.insert(all.end(), o.terms_.begin(), o.terms_.end());
        return canonicalize(std::move(all));
    }
    FuncExpr operator-(const FuncExpr& o) const { return *this + (-o); }
    FuncExpr operator*(const FuncExpr& o) const {
        std::vector<Term> all;
        for (const Term& a : terms_)
            for (const Term& b : o.terms_) mul_term(a, b, all);
        return canonicalize(std::move(all));
    }
    FuncExpr scalar_mul(const Coeff& c) const {
        if (c.is_zero()) return FuncExpr();
        FuncExpr out;
        out.terms_ = terms_;
        for (Term& t : out.terms_) t.coeff = t.coeff * c;
        return out;
    }
    FuncExpr pow_int(unsigned n) const {
        FuncExpr acc = one();
        for (unsigned i = 0; i < n; ++i) acc = acc * *this;
        return acc;
    }

    // Full canonicalization of a raw term list: trig normalization, signature
    // sort, merge, zero removal. Idempotent.
    static FuncExpr canonicalize(std::vector<Term> raw) {
        std::vector<Term> fixed;
        fixed.reserve(raw.size());
        for (Term& t : raw) {
            if (t.coeff.is_zero()) continue;
            if (t.trig == TrigKind::None) {
                t.trigfreq = ExponentForm();
            } else if (t.trigfreq.is_zero()) {
                if (t.trig == TrigKind::Sin) continue; // sin(0) = 0
                t.trig = TrigKind::None;               // cos(0) = 1
            } else if (t.trigfreq.leading_sign() < 0) {
                t.trigfreq = -t.trigfreq;
                if (t.trig == TrigKind::Sin) t.coeff = -t.coeff;
            }
            std::sort(t.ufuncs.begin(), t.ufuncs.end());
            fixed.push_back(std::move(t));
        }
        std::stable_sort(fixed.begin(), fixed.end(),
                         [](const Term& a, const Term& b) { return Term::cmp_signature(a, b) < 0; });
        FuncExpr out;
        for (Term& t : fixed) {
            if (!out.terms_.empty() && Term::cmp_signature(out.terms_.back(), t) == 0) {
                out.terms_.back().coeff = out.terms_.back().coeff + t.coeff;
                if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
            } else {
                out.terms_.push_back(std::move(t));
            }
        }
        return out;
    }

    // Exact substitution of coefficients for parameter symbols throughout the
    // expression (coefficients, powers and frequencies). Values landing in an
    // exponent slot must be rational.
    FuncExpr bind_params(const std::map<int, Coeff>& values) const {
        auto bind_exponent = [&](const ExponentForm& e) {
            return e.bind([&](int id) -> std::optional<Rational> {
                auto it = values.find(id);
                if (it == values.end()) return std::nullopt;
                if (!it->second.is_rational())
                    throw UnsupportedClass("cannot bind exponent symbol to a non-rational value");
                return it->second.as_rational();
            });
        };
        std::vector<Term> out;
        for (const Term& t : terms_) {
            Term n = t;
            n.coeff = t.coeff.bind(values);
            n.tpow = bind_exponent(t.tpow);
            n.expfreq = bind_exponent(t.expfreq);
            n.trigfreq = bind_exponent(t.trigfreq);
            out.push_back(std::move(n));
        }
        return canonicalize(std::move(out));
    }

    double eval_numeric(double t0,
                        const std::function<std::optional<double>(const std::string&)>& params,
                        const std::function<std::optional<double>(const std::string&, unsigned)>&
                            ufunc_values = {}) const {
        double acc = 0;
        for (const Term& t : terms_) {
            double v = t.coeff.eval(params);
            auto eval_form = [&](const ExponentForm& e) {
                return e.eval([&](int id) {
                    auto r = params(SymbolTable::instance().display(id));
                    if (!r) throw UnboundSymbol("unbound symbol: " + SymbolTable::instance().display(id));
                    return *r;
                });
            };
            if (!t.tpow.is_zero()) {
                double e = eval_form(t.tpow);
                bool integral = t.tpow.is_integer();
                if (t0 == 0 && e < 0) throw DomainError("t^negative at t=0");
                if (t0 < 0 && !integral) throw DomainError("fractional power of negative t");
                if (t0 == 0 && !integral && e > 0)
                    v *= 0;
                else
                    v *= std::pow(t0, e);
            }
            if (!t.expfreq.is_zero()) v *= std::exp(eval_form(t.expfreq) * t0);
            if (t.logpow > 0) {
                if (t0 <= 0) throw DomainError("ln(t) at t <= 0");
                v *= std::pow(std::log(t0), static_cast<double>(t.logpow));
            }
            if (t.trig == TrigKind::Cos) v *= std::cos(eval_form(t.trigfreq) * t0);
            if (t.trig == TrigKind::Sin) v *= std::sin(eval_form(t.trigfreq) * t0);
            for (const UFuncAtom& u : t.ufuncs) {
                std::optional<double> b = ufunc_values ? ufunc_values(u.name, u.order) : std::nullopt;
                if (!b)
                    throw UnboundSymbol("unbound function value: " + u.name + "^(" +
                                        std::to_string(u.order) + ")");
                v *= *b;
            }
            acc += v;
        }
        return acc;
    }

    // Names of uninterpreted functions appearing anywhere in the expression.
    std::set<std::string> ufunc_names() const {
        std::set<std::string> out;
        for (const Term& t : terms_)
            for (const UFuncAtom& u : t.ufuncs) out.insert(u.name);
        return out;
    }

private:
    // a*b appended to out; trig products reduced to single atoms on the spot.
    static void mul_term(const Term& a, const Term& b, std::vector<Term>& out) {
        Term base;
        base.coeff = a.coeff * b.coeff;
        base.tpow = a.tpow + b.tpow;
        base.expfreq = a.expfreq + b.expfreq;
        base.logpow = a.logpow + b.logpow;
        base.ufuncs = a.ufuncs;
        base.ufuncs.insert(base.ufuncs.end(), b.ufuncs.begin(), b.ufuncs.end());
        std::sort(base.ufuncs.begin(), base.ufuncs.end());

        if (a.trig == TrigKind::None && b.trig == TrigKind::None) {
            out.push_back(std::move(base));
            return;
        }
        if (a.trig == TrigKind::None || b.trig == TrigKind::None) {
            const Term& w = a.trig == TrigKind::None ? b : a;
            base.trig = w.trig;
            base.trigfreq = w.trigfreq;
            out.push_back(std::move(base));
            return;
        }
        // product-to-sum; the half-angle split keeps one atom per term
        const ExponentForm& A = a.trigfreq;
        const ExponentForm& B = b.trigfreq;
        Coeff half{Rational(1, 2)};
        auto emit = [&](TrigKind kind, ExponentForm freq, const Coeff& scale) {
            Term t = base;
            t.coeff = base.coeff * scale;
            t.trig = kind;
            t.trigfreq = std::move(freq);
            out.push_back(std::move(t));
        };
        if (a.trig == TrigKind::Cos && b.trig == TrigKind::Cos) {
            emit(TrigKind::Cos, A - B, half);
            emit(TrigKind::Cos, A + B, half);
        } else if (a.trig == TrigKind::Sin && b.trig == TrigKind::Sin) {
            emit(TrigKind::Cos, A - B, half);
            emit(TrigKind::Cos, A + B, -half);
        } else if (a.trig == TrigKind::Sin && b.trig == TrigKind::Cos) {
            emit(TrigKind::Sin, A + B, half);
            emit(TrigKind::Sin, A - B, half);
        } else { // cos * sin
            emit(TrigKind::Sin, A + B, half);
            emit(TrigKind::Sin, A - B, -half);
        }
    }

    std::vector<Term> terms_;
};

inline bool is_zero(const FuncExpr& e) { return e.is_zero(); }
inline bool equals(const FuncExpr& a, const FuncExpr& b) { return a == b; }

} // namespace cnls
