#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "cnls/exponent.hpp"
#include "cnls/poly.hpp"

namespace cnls {

class Coeff;

enum class SymKind { Param, Pow, Exp, Cos, Sin };

struct OpaqueDef {
    SymKind kind;
    std::shared_ptr<const Coeff> arg; // Pow: base; Exp/Cos/Sin: argument
    ExponentForm exponent;            // Pow only
};

// Process-wide interning of parameter symbols and the opaque constants
// (c^e, e^c, cos c, sin c) produced by substitutions. Append-only; ids are
// stable for the lifetime of the process.
class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    int param(const std::string& name);
    std::optional<int> find_param(const std::string& name) const;
    int intern_opaque(SymKind kind, const Coeff& arg, const ExponentForm& e);

    SymKind kind(int id) const {
        std::lock_guard lk(mu_);
        return entries_.at(id).kind;
    }
    std::string display(int id) const {
        std::lock_guard lk(mu_);
        return entries_.at(id).display;
    }
    OpaqueDef opaque_def(int id) const {
        std::lock_guard lk(mu_);
        const Entry& e = entries_.at(id);
        if (e.kind == SymKind::Param) throw InternalError("symbol is not opaque");
        return *e.def;
    }

    // Reserved physical symbols, interned first so their ids are stable.
    int p() { return param("p"); }
    int q() { return param("q"); }
    int r() { return param("r"); }
    int eps() { return param("eps"); }

private:
    SymbolTable() {
        param("p");
        param("q");
        param("r");
        param("eps");
    }
    struct Entry {
        SymKind kind;
        std::string display;
        std::shared_ptr<OpaqueDef> def;
    };
    mutable std::mutex mu_;
    std::vector<Entry> entries_;
    std::map<std::string, int> param_ids_;
    std::map<std::string, int> opaque_ids_;
};

// Element of the coefficient field: a ratio of multivariate polynomials over
// exact rationals in the interned symbols. Canonical form: gcd-reduced, with
// integer-primitive positive-leading denominator.
class Coeff {
public:
    Coeff() : num_(), den_(Rational(1)) {}
    Coeff(const Rational& r) : num_(r), den_(Rational(1)) {}
    Coeff(long n) : num_(Rational(n)), den_(Rational(1)) {}
    explicit Coeff(const Poly& p) : num_(p), den_(Rational(1)) {}
    Coeff(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Coeff symbol(int id) { return Coeff(Poly::var(id)); }
    static Coeff param(const std::string& name) {
        return symbol(SymbolTable::instance().param(name));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_rational() && den_.as_rational() == 1 && num_.is_rational() && num_.as_rational() == 1; }
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
    Rational as_rational() const {
        if (!is_rational()) throw InternalError("Coeff::as_rational on symbolic value");
        if (num_.is_zero()) return Rational(0);
        return num_.as_rational() / den_.as_rational();
    }

    Coeff operator-() const {
        Coeff out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }
    Coeff operator+(const Coeff& o) const { return Coeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Coeff operator-(const Coeff& o) const { return Coeff(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Coeff operator*(const Coeff& o) const { return Coeff(num_ * o.num_, den_ * o.den_); }
    Coeff operator/(const Coeff& o) const {
        if (o.is_zero()) throw DomainError("division by zero coefficient");
        return Coeff(num_ * o.den_, den_ * o.num_);
    }
    Coeff inverse() const {
        if (is_zero()) throw DomainError("inverse of zero coefficient");
        return Coeff(den_, num_);
    }
    Coeff pow_int(long n) const {
        if (n == 0) return Coeff(Rational(1));
        Coeff base = n < 0 ? inverse() : *this;
        unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        Coeff acc(Rational(1));
        for (unsigned long i = 0; i < k; ++i) acc = acc * base;
        return acc;
    }

    bool operator==(const Coeff& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    static int cmp(const Coeff& a, const Coeff& b) {
        int c = Poly::cmp(a.num_, b.num_);
        if (c != 0) return c;
        return Poly::cmp(a.den_, b.den_);
    }
    bool operator<(const Coeff& o) const { return cmp(*this, o) < 0; }

    // Sign convention for canonicalizing +/- pairs (cos/sin arguments):
    // the sign of the numerator's leading rational coefficient.
    int canonical_sign() const {
        if (num_.is_zero()) return 0;
        return num_.leading_coeff() > 0 ? 1 : -1;
    }

    std::set<int> vars() const {
        std::set<int> s = num_.vars();
        den_.collect_vars(s);
        return s;
    }

    // Exact polynomial of degree <= 1 over params with rational denominator,
    // reinterpreted as an ExponentForm; nullopt when out of shape.
    std::optional<ExponentForm> as_exponent_form() const {
        if (!den_.is_rational()) return std::nullopt;
        Rational d = den_.as_rational();
        ExponentForm out;
        for (auto& [m, c] : num_.terms()) {
            if (m.is_one()) {
                out = out + ExponentForm(c / d);
            } else if (m.factors.size() == 1 && m.factors[0].second == 1) {
                int v = m.factors[0].first;
                if (SymbolTable::instance().kind(v) != SymKind::Param) return std::nullopt;
                out = out + ExponentForm::symbol(v, c / d);
            } else {
                return std::nullopt;
            }
        }
        return out;
    }

    static Coeff from_exponent_form(const ExponentForm& e) {
        Poly p(e.rational_part());
        for (auto& [v, c] : e.linear_part()) p = p + Poly::var(v) * c;
        return Coeff(p);
    }

    double eval(const std::function<std::optional<double>(const std::string&)>& param_value) const;

    // Substitute coefficients for parameter symbols (exact); rebuilds opaque
    // constants whose definitions mention the bound symbols.
    Coeff bind(const std::map<int, Coeff>& values) const;

    std::string render() const;
    // Canonical key used for interning opaque constants.
    std::string key() const { return render(); }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (!g.is_rational()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        auto [scale, prim] = den_.int_normal_form();
        den_ = prim;
        num_ = num_ * (Rational(1) / scale);
    }

    Poly num_, den_;
};

inline Coeff operator*(const Rational& r, const Coeff& c) { return Coeff(r) * c; }

// --- factories for derived constants -------------------------------------

inline BigInt rat_floor(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// base^e with exact simplification where possible, opaque pow symbol else.
// The integer part of a rational exponent is split off exactly, so opaque
// symbols only carry fractional parts in [0, 1).
inline Coeff pow_coeff(const Coeff& base, const ExponentForm& e) {
    if (e.is_zero()) return Coeff(Rational(1));
    if (base.is_one()) return Coeff(Rational(1));
    if (auto n = e.as_long()) return base.pow_int(*n);
    {
        BigInt fl = rat_floor(e.rational_part());
        if (fl != 0 && fl > -256 && fl < 256) {
            long n = fl.convert_to<long>();
            return base.pow_int(n) * pow_coeff(base, e - ExponentForm(Rational(fl)));
        }
    }
    if (base.is_zero()) {
        if (auto r = e.as_rational(); r && *r > 0) return Coeff(Rational(0));
        throw DomainError("0 raised to non-positive or symbolic power");
    }
    if (base.is_rational()) {
        Rational b = base.as_rational();
        if (auto r = e.as_rational()) {
            // exact rational root when it exists
            BigInt pnum = rat_num(*r), pden = rat_den(*r);
            if (pden <= 64) {
                if (auto root = rat_nth_root_exact(b, pden.convert_to<unsigned>())) {
                    BigInt abs_p = pnum < 0 ? BigInt(-pnum) : pnum;
                    if (abs_p <= 256) {
                        Rational v = rat_pow(*root, pnum.convert_to<long>());
                        return Coeff(v);
                    }
                }
            }
        }
    }
    // pow-of-pow: combine exponents when the product stays linear
    {
        const Poly& n = base.num();
        if (base.den().is_rational() && n.terms().size() == 1) {
            const auto& [m, c] = *n.terms().begin();
            if (m.factors.size() == 1 && m.factors[0].second == 1) {
                int v = m.factors[0].first;
                auto& tab = SymbolTable::instance();
                if (tab.kind(v) == SymKind::Pow) {
                    OpaqueDef def = tab.opaque_def(v);
                    if (auto combined = def.exponent.times(e)) {
                        Coeff k = Coeff(c / base.den().as_rational());
                        return pow_coeff(k, e) * pow_coeff(*def.arg, *combined);
                    }
                }
            }
        }
    }
    int id = SymbolTable::instance().intern_opaque(SymKind::Pow, base, e);
    return Coeff::symbol(id);
}

inline Coeff exp_const(const Coeff& arg) {
    if (arg.is_zero()) return Coeff(Rational(1));
    int id = SymbolTable::instance().intern_opaque(SymKind::Exp, arg, ExponentForm());
    return Coeff::symbol(id);
}

inline Coeff cos_const(const Coeff& arg) {
    if (arg.is_zero()) return Coeff(Rational(1));
    Coeff a = arg.canonical_sign() < 0 ? -arg : arg;
    int id = SymbolTable::instance().intern_opaque(SymKind::Cos, a, ExponentForm());
    return Coeff::symbol(id);
}

// sin(-c) = -sin(c); returns the signed multiple of the canonical atom.
inline Coeff sin_const(const Coeff& arg) {
    if (arg.is_zero()) return Coeff(Rational(0));
    bool flip = arg.canonical_sign() < 0;
    Coeff a = flip ? -arg : arg;
    int id = SymbolTable::instance().intern_opaque(SymKind::Sin, a, ExponentForm());
    Coeff out = Coeff::symbol(id);
    return flip ? -out : out;
}

// --- rendering -------------------------------------------------------------

inline std::string render_exponent_form(const ExponentForm& e) {
    if (e.is_rational()) return to_string(e.rational_part());
    std::ostringstream os;
    bool first = true;
    if (e.rational_part() != 0) {
        os << to_string(e.rational_part());
        first = false;
    }
    for (auto& [v, c] : e.linear_part()) {
        std::string name = SymbolTable::instance().display(v);
        if (c == 1)
            os << (first ? "" : " + ") << name;
        else if (c == -1)
            os << (first ? "-" : " - ") << name;
        else if (c > 0)
            os << (first ? "" : " + ") << to_string(c) << "*" << name;
        else
            os << (first ? "-" : " - ") << to_string(Rational(-c)) << "*" << name;
        first = false;
    }
    return os.str();
}

namespace detail {

inline std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool coeff_shown = false;
        if (m.is_one() || ac != 1) {
            os << to_string(ac);
            coeff_shown = true;
        }
        for (auto& [v, e] : m.factors) {
            if (coeff_shown) os << "*";
            os << SymbolTable::instance().display(v);
            if (e != 1) os << "^" << e;
            coeff_shown = true;
        }
    }
    return os.str();
}

inline bool poly_is_atom(const Poly& p) {
    if (p.is_rational()) return p.as_rational() >= 0 && cnls::is_integer(p.as_rational());
    if (p.terms().size() != 1) return false;
    const auto& [m, c] = *p.terms().begin();
    return c == 1 && m.factors.size() == 1 && m.factors[0].second == 1;
}

} // namespace detail

inline std::string Coeff::render() const {
    if (den_.is_rational() && den_.as_rational() == 1) return detail::render_poly(num_);
    // clear rational content of the numerator into the displayed denominator
    BigInt lcm = 1;
    for (auto& [m, c] : num_.terms()) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
    Poly shown_num = num_ * Rational(lcm);
    Poly shown_den = den_ * Rational(lcm);
    std::ostringstream os;
    bool num_atom = shown_num.terms().size() == 1;
    os << (num_atom ? detail::render_poly(shown_num) : "(" + detail::render_poly(shown_num) + ")");
    os << "/";
    bool den_atom = detail::poly_is_atom(shown_den) || (shown_den.is_rational() && shown_den.as_rational() > 0);
    os << (den_atom ? detail::render_poly(shown_den) : "(" + detail::render_poly(shown_den) + ")");
    return os.str();
}

// --- SymbolTable out-of-line pieces ----------------------------------------

inline int SymbolTable::param(const std::string& name) {
    std::lock_guard lk(mu_);
    auto it = param_ids_.find(name);
    if (it != param_ids_.end()) return it->second;
    int id = static_cast<int>(entries_.size());
    entries_.push_back({SymKind::Param, name, nullptr});
    param_ids_[name] = id;
    return id;
}

inline std::optional<int> SymbolTable::find_param(const std::string& name) const {
    std::lock_guard lk(mu_);
    auto it = param_ids_.find(name);
    if (it == param_ids_.end()) return std::nullopt;
    return it->second;
}

inline int SymbolTable::intern_opaque(SymKind kind, const Coeff& arg, const ExponentForm& e) {
    std::string key;
    std::string display;
    switch (kind) {
        case SymKind::Pow: {
            std::string base = arg.render();
            bool atom = detail::poly_is_atom(arg.num()) && arg.den().is_rational() && arg.den().as_rational() == 1;
            std::string b = atom ? base : "(" + base + ")";
            std::string ex = render_exponent_form(e);
            bool ex_atom = e.is_rational() ? (cnls::is_integer(e.rational_part()) && e.rational_part() >= 0)
                                           : (e.rational_part() == 0 && e.linear_part().size() == 1 &&
                                              e.linear_part()[0].second == 1);
            display = b + "^" + (ex_atom ? ex : "(" + ex + ")");
            key = "pow|" + base + "|" + ex;
            break;
        }
        case SymKind::Exp:
            display = "exp(" + arg.render() + ")";
            key = "exp|" + arg.render();
            break;
        case SymKind::Cos:
            display = "cos(" + arg.render() + ")";
            key = "cos|" + arg.render();
            break;
        case SymKind::Sin:
            display = "sin(" + arg.render() + ")";
            key = "sin|" + arg.render();
            break;
        default:
            throw InternalError("intern_opaque on param kind");
    }
    std::lock_guard lk(mu_);
    auto it = opaque_ids_.find(key);
    if (it != opaque_ids_.end()) return it->second;
    int id = static_cast<int>(entries_.size());
    auto def = std::make_shared<OpaqueDef>(OpaqueDef{kind, std::make_shared<Coeff>(arg), e});
    entries_.push_back({kind, display, def});
    opaque_ids_[key] = id;
    return id;
}

// --- evaluation and binding -------------------------------------------------

inline double Coeff::eval(const std::function<std::optional<double>(const std::string&)>& param_value) const {
    std::function<double(int)> value_of = [&](int id) -> double {
        auto& tab = SymbolTable::instance();
        switch (tab.kind(id)) {
            case SymKind::Param: {
                auto v = param_value(tab.display(id));
                if (!v) throw UnboundSymbol("unbound symbol: " + tab.display(id));
                return *v;
            }
            case SymKind::Pow: {
                OpaqueDef def = tab.opaque_def(id);
                double b = def.arg->eval(param_value);
                double e = def.exponent.eval([&](int pid) {
                    auto v = param_value(tab.display(pid));
                    if (!v) throw UnboundSymbol("unbound symbol: " + tab.display(pid));
                    return *v;
                });
                if (b == 0 && e <= 0) throw DomainError("0^nonpositive");
                if (b < 0 && std::floor(e) != e) throw DomainError("negative base with fractional power");
                return std::pow(b, e);
            }
            case SymKind::Exp:
                return std::exp(tab.opaque_def(id).arg->eval(param_value));
            case SymKind::Cos:
                return std::cos(tab.opaque_def(id).arg->eval(param_value));
            case SymKind::Sin:
                return std::sin(tab.opaque_def(id).arg->eval(param_value));
        }
        throw InternalError("unreachable");
    };
    double n = num_.eval(value_of);
    double d = den_.eval(value_of);
    if (d == 0) throw DomainError("denominator evaluates to zero");
    return n / d;
}

namespace detail {

inline Coeff subst_poly(const Poly& p, const std::function<std::optional<Coeff>(int)>& value_of) {
    Coeff acc(Rational(0));
    for (auto& [m, c] : p.terms()) {
        Coeff t{c};
        for (auto& [v, e] : m.factors) {
            auto val = value_of(v);
            Coeff base = val ? *val : Coeff::symbol(v);
            t = t * base.pow_int(static_cast<long>(e));
        }
        acc = acc + t;
    }
    return acc;
}

} // namespace detail

inline Coeff Coeff::bind(const std::map<int, Coeff>& values) const {
    auto& tab = SymbolTable::instance();
    std::function<std::optional<Coeff>(int)> value_of = [&](int id) -> std::optional<Coeff> {
        auto it = values.find(id);
        if (it != values.end()) return it->second;
        if (tab.kind(id) == SymKind::Param) return std::nullopt;
        OpaqueDef def = tab.opaque_def(id);
        Coeff arg2 = def.arg->bind(values);
        ExponentForm e2 = def.exponent.bind([&](int pid) -> std::optional<Rational> {
            auto vit = values.find(pid);
            if (vit == values.end()) return std::nullopt;
            if (!vit->second.is_rational())
                throw UnsupportedClass("cannot bind exponent symbol to a non-rational value");
            return vit->second.as_rational();
        });
        bool changed = !(arg2 == *def.arg) || !(e2 == def.exponent);
        if (!changed) return std::nullopt;
        switch (def.kind) {
            case SymKind::Pow: return pow_coeff(arg2, e2);
            case SymKind::Exp: return exp_const(arg2);
            case SymKind::Cos: return cos_const(arg2);
            case SymKind::Sin: return sin_const(arg2);
            default: throw InternalError("unreachable");
        }
    };
    Coeff n = detail::subst_poly(num_, value_of);
    Coeff d = detail::subst_poly(den_, value_of);
    return n / d;
}

} // namespace cnls
