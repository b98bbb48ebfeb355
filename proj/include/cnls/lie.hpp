#pragma once

#include "cnls/calculus.hpp"
#include "cnls/parser.hpp"
#include "cnls/substitute.hpp"

namespace cnls {

// General element X_f + Y_g + Z_h + W_k of the symmetry algebra, carried by
// its four labeling functions.
struct LieElement {
    FuncExpr f, g, h, k;

    static LieElement X(FuncExpr e) { return {std::move(e), {}, {}, {}}; }
    static LieElement Y(FuncExpr e) { return {{}, std::move(e), {}, {}}; }
    static LieElement Z(FuncExpr e) { return {{}, {}, std::move(e), {}}; }
    static LieElement W(FuncExpr e) { return {{}, {}, {}, std::move(e)}; }

    bool is_zero() const { return f.is_zero() && g.is_zero() && h.is_zero() && k.is_zero(); }

    bool operator==(const LieElement& o) const {
        return f == o.f && g == o.g && h == o.h && k == o.k;
    }
    LieElement operator+(const LieElement& o) const {
        return {f + o.f, g + o.g, h + o.h, k + o.k};
    }
    LieElement operator-(const LieElement& o) const {
        return {f - o.f, g - o.g, h - o.h, k - o.k};
    }
    LieElement operator-() const { return {-f, -g, -h, -k}; }
    LieElement scalar_mul(const Coeff& c) const {
        return {f.scalar_mul(c), g.scalar_mul(c), h.scalar_mul(c), k.scalar_mul(c)};
    }
    LieElement bind_params(const std::map<int, Coeff>& values) const {
        return {f.bind_params(values), g.bind_params(values), h.bind_params(values),
                k.bind_params(values)};
    }
    LieElement substitute_ufuncs(const std::map<std::string, FuncExpr>& bindings) const {
        return {cnls::substitute_ufuncs(f, bindings), cnls::substitute_ufuncs(g, bindings),
                cnls::substitute_ufuncs(h, bindings), cnls::substitute_ufuncs(k, bindings)};
    }
};

// The commutator table, extended bilinearly to general quadruples:
//   [Z_H, Z_h] = Z_{H h' - H' h}         [Z_H, X_f] = X_{H f' - (1/2) H' f}
//   [Z_H, Y_g] = Y_{H g' - (1/2) H' g}   [Z_H, W_k] = W_{H k'}
//   [X_F, X_f] = -(1/2p) W_{F f' - F' f} [Y_G, Y_g] = (1/2q) W_{G g' - G' g}
//   [W_K, Z_h] = -W_{h K'}               all X-Y, X-W, Y-W brackets vanish.
inline LieElement bracket(const LieElement& V, const LieElement& v) {
    const FuncExpr &F = V.f, &G = V.g, &H = V.h, &K = V.k;
    const FuncExpr &f = v.f, &g = v.g, &h = v.h, &k = v.k;
    FuncExpr Fd = differentiate(F), Gd = differentiate(G), Hd = differentiate(H),
             Kd = differentiate(K);
    FuncExpr fd = differentiate(f), gd = differentiate(g), hd = differentiate(h),
             kd = differentiate(k);
    Coeff half{Rational(1, 2)};
    Coeff inv2p = Coeff(Rational(1)) / (Coeff(Rational(2)) * Coeff::param("p"));
    Coeff inv2q = Coeff(Rational(1)) / (Coeff(Rational(2)) * Coeff::param("q"));

    LieElement out;
    out.h = H * hd - Hd * h;
    out.f = (H * fd - (Hd * f).scalar_mul(half)) + ((F * hd).scalar_mul(half) - Fd * h);
    out.g = (H * gd - (Hd * g).scalar_mul(half)) + ((G * hd).scalar_mul(half) - Gd * h);
    out.k = (H * kd - h * Kd) - (F * fd - Fd * f).scalar_mul(inv2p) +
            (G * gd - Gd * g).scalar_mul(inv2q);
    return out;
}

// [[V1,V2],V3] + [[V2,V3],V1] + [[V3,V1],V2]; identically zero for the table.
inline LieElement jacobi_defect(const LieElement& V1, const LieElement& V2, const LieElement& V3) {
    return bracket(bracket(V1, V2), V3) + bracket(bracket(V2, V3), V1) +
           bracket(bracket(V3, V1), V2);
}

// exp(delta ad(Z)) V with ad(Z)Y = [Y, Z]; the series must terminate within
// kMaxAdjointDepth applications (the table's closed forms stop at degree 2).
inline constexpr unsigned kMaxAdjointDepth = 8;

inline LieElement exp_ad(const LieElement& Z, const Coeff& delta, const LieElement& V) {
    LieElement acc = V;
    LieElement cur = V;
    Rational factorial(1);
    for (unsigned n = 1; n <= kMaxAdjointDepth; ++n) {
        cur = bracket(cur, Z);
        if (cur.is_zero()) return acc;
        factorial *= Rational(n);
        acc = acc + cur.scalar_mul(delta.pow_int(n) / Coeff(factorial));
    }
    if (!bracket(cur, Z).is_zero())
        throw NonNilpotent("adjoint series did not terminate within " +
                           std::to_string(kMaxAdjointDepth) + " steps");
    return acc;
}

// One-parameter reparameterizations of t realized on the labels.
// translate(delta): labels(t) -> labels(t + delta). The sign is fixed so that
// a translation with parameter -a/2 carries Z_{2t+a} to Z_{2t}.
// scale(s):        f -> s^(1/2) f(t/s), g likewise, h -> s h(t/s), k -> k(t/s).
struct FlowSpec {
    enum class Kind { Translate, Scale } kind;
    Coeff amount; // delta for translations, the factor s for scalings

    static FlowSpec translate(Coeff delta) { return {Kind::Translate, std::move(delta)}; }
    static FlowSpec scale(Coeff s) { return {Kind::Scale, std::move(s)}; }
};

inline LieElement flow(const FlowSpec& spec, const LieElement& V) {
    if (spec.kind == FlowSpec::Kind::Translate) {
        const Coeff& d = spec.amount;
        return {substitute_shift(V.f, d), substitute_shift(V.g, d), substitute_shift(V.h, d),
                substitute_shift(V.k, d)};
    }
    const Coeff& s = spec.amount;
    if (s.is_zero()) throw DomainError("scale flow needs an invertible factor");
    Coeff inv = s.inverse();
    Coeff root = pow_coeff(s, ExponentForm(Rational(1, 2)));
    return {substitute_scale(V.f, inv).scalar_mul(root),
            substitute_scale(V.g, inv).scalar_mul(root),
            substitute_scale(V.h, inv).scalar_mul(s),
            substitute_scale(V.k, inv)};
}

enum class ReflectAxis { X, Y, XY, U };

// Conjugation by the discrete reflections of the system, computed on the
// vector fields: x -> -x flips f, y -> -y flips g, u -> -u acts trivially.
inline LieElement reflect(ReflectAxis axis, const LieElement& V) {
    switch (axis) {
        case ReflectAxis::X: return {-V.f, V.g, V.h, V.k};
        case ReflectAxis::Y: return {V.f, -V.g, V.h, V.k};
        case ReflectAxis::XY: return {-V.f, -V.g, V.h, V.k};
        case ReflectAxis::U: return V;
    }
    throw InternalError("unreachable");
}

struct AdjointStep {
    LieElement generator;
    Coeff delta;
};

// Normalization of V = Z_1 + X_f + Y_g + W_k to Z_1 by successive adjoint
// actions: Y_G kills g, X_F kills f, W_K kills k, each with parameter 1 and
// the label solved from an antiderivative. Restricted to h = 1; general h
// needs quadratures outside the representable class.
inline std::pair<LieElement, std::vector<AdjointStep>> normalize_to_Z1(const LieElement& V) {
    if (V.h != FuncExpr::one())
        throw UnsupportedClass("normalize_to_Z1 requires the Z-label to be the constant 1");
    LieElement cur = V;
    std::vector<AdjointStep> trace;
    Coeff one{Rational(1)};

    if (!cur.g.is_zero()) {
        LieElement Yg = LieElement::Y(-antidifferentiate(cur.g));
        cur = exp_ad(Yg, one, cur);
        trace.push_back({Yg, one});
    }
    if (!cur.f.is_zero()) {
        LieElement Xf = LieElement::X(-antidifferentiate(cur.f));
        cur = exp_ad(Xf, one, cur);
        trace.push_back({Xf, one});
    }
    if (!cur.k.is_zero()) {
        LieElement Wk = LieElement::W(-antidifferentiate(cur.k));
        cur = exp_ad(Wk, one, cur);
        trace.push_back({Wk, one});
    }
    if (!(cur == LieElement::Z(FuncExpr::one())))
        throw InternalError("normalization did not reach Z_1");
    return {cur, trace};
}

// --- text forms --------------------------------------------------------------

// Slot-tagged element syntax: "X: <expr>; Z: <expr>" (any subset of slots).
inline LieElement parse_lie_element(const std::string& text) {
    LieElement out;
    std::size_t start = 0;
    bool any = false;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string part = text.substr(start, end == std::string::npos ? end : end - start);
        std::size_t a = part.find_first_not_of(" \t\n");
        if (a != std::string::npos) {
            std::size_t colon = part.find(':');
            if (colon == std::string::npos) {
                std::string trimmed = part.substr(a, part.find_last_not_of(" \t\n") - a + 1);
                if (trimmed == "0" && !any && end == std::string::npos) return out;
                throw SyntaxError("expected a slot tag such as 'X:'", start + a);
            }
            std::string tag = part.substr(a, colon - a);
            std::size_t te = tag.find_last_not_of(" \t");
            tag = tag.substr(0, te + 1);
            FuncExpr e = parse_expr(part.substr(colon + 1));
            if (tag == "X") out.f = out.f + e;
            else if (tag == "Y") out.g = out.g + e;
            else if (tag == "Z") out.h = out.h + e;
            else if (tag == "W") out.k = out.k + e;
            else throw SyntaxError("unknown slot tag '" + tag + "'", start + a);
            any = true;
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

inline std::string render_lie_element(const LieElement& V) {
    std::string out;
    auto emit = [&](const char* tag, const FuncExpr& e) {
        if (e.is_zero()) return;
        if (!out.empty()) out += "; ";
        out += tag;
        out += ": ";
        out += render(e);
    };
    emit("X", V.f);
    emit("Y", V.g);
    emit("Z", V.h);
    emit("W", V.k);
    return out.empty() ? "0" : out;
}

// Differential-operator rendering of the vector field, with the coefficient
// blocks of the generators substituted.
inline std::string render_vector_field(const LieElement& V) {
    FuncExpr fd = differentiate(V.f), fdd = differentiate(fd);
    FuncExpr gd = differentiate(V.g), gdd = differentiate(gd);
    FuncExpr hd = differentiate(V.h), hdd = differentiate(hd), hddd = differentiate(hdd);
    FuncExpr kd = differentiate(V.k);
    Coeff half{Rational(1, 2)};
    Coeff p = Coeff::param("p"), q = Coeff::param("q");

    struct Piece {
        FuncExpr coeff;
        std::string monomial; // formal x/y/u/v part
        bool imaginary;
        const char* d; // partial token
    };
    std::vector<Piece> pieces = {
        {V.h, "", false, "∂t"},
        {V.f, "", false, "∂x"},
        {hd.scalar_mul(half), "x", false, "∂x"},
        {V.g, "", false, "∂y"},
        {hd.scalar_mul(half), "y", false, "∂y"},
        {V.k, "u", true, "∂u"},
        {hd.scalar_mul(-half), "u", false, "∂u"},
        {fd.scalar_mul(-(Coeff(Rational(1, 2)) / p)), "x*u", true, "∂u"},
        {gd.scalar_mul(Coeff(Rational(1, 2)) / q), "y*u", true, "∂u"},
        {hdd.scalar_mul(-(Coeff(Rational(1, 8)) / p)), "x^2*u", true, "∂u"},
        {hdd.scalar_mul(Coeff(Rational(1, 8)) / q), "y^2*u", true, "∂u"},
        {-hd, "v", false, "∂v"},
        {kd.scalar_mul(-half), "", false, "∂v"},
        {fdd.scalar_mul(Coeff(Rational(1, 4)) / p), "x", false, "∂v"},
        {gdd.scalar_mul(-(Coeff(Rational(1, 4)) / q)), "y", false, "∂v"},
        {hddd.scalar_mul(Coeff(Rational(1, 16)) / p), "x^2", false, "∂v"},
        {hddd.scalar_mul(-(Coeff(Rational(1, 16)) / q)), "y^2", false, "∂v"},
    };

    std::string out;
    for (const Piece& piece : pieces) {
        if (piece.coeff.is_zero()) continue;
        FuncExpr c = piece.coeff;
        bool negative = false;
        if (c.terms().size() == 1 && c.terms()[0].coeff.canonical_sign() < 0) {
            negative = true;
            c = -c;
        }
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string body;
        if (!(c == FuncExpr::one())) {
            std::string cs = render(c);
            body = detail::token_like(cs) ? cs : "(" + cs + ")";
        }
        if (piece.imaginary) body += body.empty() ? "i" : "·i";
        if (!piece.monomial.empty()) body += body.empty() ? piece.monomial : "·" + piece.monomial;
        body += body.empty() ? piece.d : "·" + std::string(piece.d);
        out += body;
    }
    return out.empty() ? "0" : out;
}

} // namespace cnls
