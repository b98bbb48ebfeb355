#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "cnls/funcexpr.hpp"

namespace cnls {

// Recursive-descent parser for the expression grammar:
//
//   expr     := term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := base ("^" exponent)?
//   base     := number | symbol | "t" | call | "(" expr ")" | "-" factor
//   call     := ("exp"|"ln"|"cos"|"sin") "(" expr ")" | ident "'"* "(" "t" ")"
//   exponent := signed number | symbol | "(" expr ")"   -- rational-linear
//
// exp/cos/sin arguments are Q-linear forms in t; the ln argument is exactly t.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    FuncExpr parse() {
        FuncExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    FuncExpr parse_expr() {
        FuncExpr acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    FuncExpr parse_term() {
        FuncExpr acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                acc = acc * invert(parse_factor(), at);
            } else {
                return acc;
            }
        }
    }

    FuncExpr parse_factor() {
        FuncExpr base = parse_base();
        if (peek() == '^') {
            std::size_t at = pos_;
            ++pos_;
            ExponentForm e = parse_exponent();
            return apply_power(base, e, at);
        }
        return base;
    }

    FuncExpr parse_base() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
        if (c == '(') {
            ++pos_;
            FuncExpr e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FuncExpr::constant(Coeff(parse_number()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            if (name == "t" && peek() != '(' && peek() != '\'') return FuncExpr::t_power(ExponentForm(1));
            if (name == "exp" || name == "ln" || name == "cos" || name == "sin") {
                expect('(');
                FuncExpr arg = parse_expr();
                expect(')');
                return make_call(name, arg, at);
            }
            unsigned order = 0;
            while (accept('\'')) ++order;
            if (peek() == '(') {
                ++pos_;
                skip_ws();
                if (!(pos_ < text_.size() && text_[pos_] == 't'))
                    throw UnsupportedConstruct("function arguments other than t are not supported (position " +
                                               std::to_string(pos_) + ")");
                ++pos_;
                expect(')');
                return FuncExpr::ufunc(name, order);
            }
            if (order > 0) throw SyntaxError("derivative mark on a plain symbol", at);
            return FuncExpr::constant(Coeff::param(name));
        }
        throw SyntaxError("unexpected character", pos_);
    }

    Rational parse_number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected a number", pos_);
        return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ExponentForm parse_exponent() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            FuncExpr e = parse_expr();
            expect(')');
            if (!e.is_constant())
                throw UnsupportedConstruct("exponent must be a rational-linear form (position " +
                                           std::to_string(at) + ")");
            auto ef = e.constant_value().as_exponent_form();
            if (!ef)
                throw UnsupportedConstruct("exponent must be a rational-linear form (position " +
                                           std::to_string(at) + ")");
            return *ef;
        }
        bool neg = false;
        if (c == '-' || c == '+') {
            neg = c == '-';
            ++pos_;
            skip_ws();
            c = peek();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r = parse_number();
            return ExponentForm(neg ? Rational(-r) : r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            if (neg) throw SyntaxError("sign applies to numeric exponents only; parenthesize", at);
            std::string name = parse_ident();
            return ExponentForm::symbol(SymbolTable::instance().param(name));
        }
        throw SyntaxError("malformed exponent", pos_);
    }

    FuncExpr make_call(const std::string& name, const FuncExpr& arg, std::size_t at) {
        if (name == "ln") {
            // argument must be exactly t
            if (arg == FuncExpr::t_power(ExponentForm(1))) return FuncExpr::log_power(1);
            throw UnsupportedConstruct("ln argument must be exactly t (position " + std::to_string(at) + ")");
        }
        if (arg.is_zero()) {
            if (name == "sin") return FuncExpr::zero();
            return FuncExpr::one(); // exp(0) = cos(0) = 1
        }
        if (arg.terms().size() == 1) {
            const Term& t = arg.terms()[0];
            bool linear_in_t = t.expfreq.is_zero() && t.logpow == 0 && t.trig == TrigKind::None &&
                               t.ufuncs.empty() && t.tpow == ExponentForm(1);
            if (linear_in_t) {
                if (auto freq = t.coeff.as_exponent_form()) {
                    if (name == "exp") return FuncExpr::exponential(*freq);
                    if (name == "cos") return FuncExpr::trig(TrigKind::Cos, *freq);
                    return FuncExpr::trig(TrigKind::Sin, *freq);
                }
            }
        }
        throw UnsupportedConstruct(name + " argument must be a Q-linear form in t (position " +
                                   std::to_string(at) + ")");
    }

    FuncExpr invert(const FuncExpr& e, std::size_t at) {
        if (e.is_zero()) throw SyntaxError("division by zero", at);
        if (e.is_constant()) return FuncExpr::constant(e.constant_value().inverse());
        if (e.terms().size() != 1)
            throw UnsupportedConstruct("division by a multi-term expression (position " +
                                       std::to_string(at) + ")");
        const Term& t = e.terms()[0];
        if (t.trig != TrigKind::None || t.logpow > 0 || !t.ufuncs.empty())
            throw UnsupportedConstruct("reciprocal leaves the class (position " + std::to_string(at) + ")");
        Term n;
        n.coeff = t.coeff.inverse();
        n.tpow = -t.tpow;
        n.expfreq = -t.expfreq;
        return FuncExpr::from_term(n);
    }

    FuncExpr apply_power(const FuncExpr& base, const ExponentForm& e, std::size_t at) {
        if (auto n = e.as_long(); n && *n >= 0) return base.pow_int(static_cast<unsigned>(*n));
        if (base.terms().size() != 1)
            throw UnsupportedConstruct("non-integer power of a multi-term expression (position " +
                                       std::to_string(at) + ")");
        const Term& t = base.terms()[0];
        if (t.trig != TrigKind::None || t.logpow > 0 || !t.ufuncs.empty())
            throw UnsupportedConstruct("power leaves the class (position " + std::to_string(at) + ")");
        Term n;
        n.coeff = pow_coeff(t.coeff, e);
        auto tp = t.tpow.times(e);
        auto ef = t.expfreq.times(e);
        if (!tp || !ef)
            throw UnsupportedConstruct("power produces a non-linear exponent (position " +
                                       std::to_string(at) + ")");
        n.tpow = *tp;
        n.expfreq = *ef;
        return FuncExpr::from_term(n);
    }
};

inline FuncExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

// --- rendering --------------------------------------------------------------

namespace detail {

inline bool token_like(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^')) return false;
    return true;
}

inline std::string wrap(const std::string& s) { return token_like(s) ? s : "(" + s + ")"; }

inline std::string render_freq_times_t(const ExponentForm& f) {
    if (f == ExponentForm(1)) return "t";
    if (f.is_rational() && f.rational_part() == -1) return "-t";
    std::string s = render_exponent_form(f);
    if (!token_like(s)) {
        // a leading minus on a single addend parses fine without parens
        bool simple_neg = s.size() > 1 && s[0] == '-' && token_like(s.substr(1));
        if (!simple_neg) s = "(" + s + ")";
    }
    return s + "*t";
}

inline std::string render_term_body(const Term& t) {
    std::vector<std::string> factors;
    if (!t.tpow.is_zero()) {
        if (t.tpow == ExponentForm(1)) {
            factors.push_back("t");
        } else {
            std::string e = render_exponent_form(t.tpow);
            bool atom = token_like(e) && !(t.tpow.is_rational() && t.tpow.rational_part() < 0);
            factors.push_back("t^" + (atom ? e : "(" + e + ")"));
        }
    }
    if (!t.expfreq.is_zero()) factors.push_back("exp(" + render_freq_times_t(t.expfreq) + ")");
    if (t.logpow > 0) factors.push_back(t.logpow == 1 ? "ln(t)" : "ln(t)^" + std::to_string(t.logpow));
    if (t.trig == TrigKind::Cos) factors.push_back("cos(" + render_freq_times_t(t.trigfreq) + ")");
    if (t.trig == TrigKind::Sin) factors.push_back("sin(" + render_freq_times_t(t.trigfreq) + ")");
    for (const UFuncAtom& u : t.ufuncs) {
        std::string s = u.name;
        for (unsigned i = 0; i < u.order; ++i) s += "'";
        factors.push_back(s + "(t)");
    }
    std::string body;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) body += "*";
        body += factors[i];
    }
    return body;
}

} // namespace detail

inline std::string render(const FuncExpr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : e.terms()) {
        Coeff c = t.coeff;
        bool negative = c.canonical_sign() < 0;
        if (negative) c = -c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::string body = detail::render_term_body(t);
        if (c.is_one()) {
            out += body.empty() ? "1" : body;
        } else {
            std::string cs = c.render();
            bool atom = detail::token_like(cs) ||
                        (c.is_rational() && cs.find('/') != std::string::npos && cs.find(' ') == std::string::npos);
            out += atom ? cs : "(" + cs + ")";
            if (!body.empty()) out += "*" + body;
        }
    }
    return out;
}

} // namespace cnls
