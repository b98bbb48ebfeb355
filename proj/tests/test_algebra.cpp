#include <catch2/catch_amalgamated.hpp>

#include "cnls/lie.hpp"

using namespace cnls;

namespace {

FuncExpr P(const std::string& s) { return parse_expr(s); }
LieElement L(const std::string& s) { return parse_lie_element(s); }

const Coeff kHalf{Rational(1, 2)};

FuncExpr uf(const char* name) { return FuncExpr::ufunc(name); }

} // namespace

TEST_CASE("bracket on concrete generators") {
    // [Z_1, Z_t^2] = 2 Z_t
    CHECK(bracket(L("Z: 1"), L("Z: t^2")) == L("Z: 2*t"));
    // [Z_t, X_1] = -1/2 X_1
    CHECK(bracket(L("Z: t"), L("X: 1")) == L("X: -1/2"));
    // [X_t, X_1] = (1/2p) W_1
    CHECK(bracket(L("X: t"), L("X: 1")) == L("W: 1/(2*p)"));
    // W-W brackets vanish for arbitrary labels
    CHECK(bracket(L("W: k(t)"), L("W: K(t)")).is_zero());
}

TEST_CASE("bracket is antisymmetric and bilinear on abstract labels") {
    LieElement V{uf("F"), uf("G"), uf("H"), uf("K")};
    LieElement v{uf("f"), uf("g"), uf("h"), uf("k")};
    CHECK(bracket(V, v) == -bracket(v, V));

    Coeff a = Coeff::param("a"), b = Coeff::param("b");
    LieElement lin = bracket(V.scalar_mul(a) + v.scalar_mul(b), L("Z: h2(t)"));
    LieElement expect = bracket(V, L("Z: h2(t)")).scalar_mul(a) + bracket(v, L("Z: h2(t)")).scalar_mul(b);
    CHECK(lin == expect);
}

TEST_CASE("jacobi defect vanishes identically") {
    LieElement ZH = L("Z: H(t)"), XF = L("X: F(t)"), Xf = L("X: f(t)"), Zh = L("Z: h(t)"),
               Wk = L("W: k(t)");
    CHECK(jacobi_defect(ZH, XF, Xf).is_zero());
    CHECK(jacobi_defect(ZH, Zh, Wk).is_zero());
    LieElement mixed1{uf("F"), uf("G"), uf("H"), uf("K")};
    LieElement mixed2{uf("f"), uf("g"), uf("h"), uf("k")};
    LieElement mixed3{uf("u1"), uf("u2"), uf("u3"), uf("u4")};
    CHECK(jacobi_defect(mixed1, mixed2, mixed3).is_zero());
}

TEST_CASE("levi decomposition: the X,Y,W span is an ideal") {
    LieElement n{uf("f"), uf("g"), FuncExpr::zero(), uf("k")};
    LieElement general{uf("F"), uf("G"), uf("H"), uf("K")};
    CHECK(bracket(n, general).h.is_zero());
    CHECK(bracket(general, n).h.is_zero());
}

TEST_CASE("exp_ad on concrete instances") {
    Coeff one{Rational(1)};
    CHECK(exp_ad(L("W: t"), one, L("Z: 1")) == L("Z: 1; W: 1"));
    Coeff two_p = Coeff(Rational(2)) * Coeff::param("p");
    CHECK(exp_ad(L("X: t"), two_p, L("X: 1")) == L("X: 1; W: -1"));
    // ad(Z_t) has Z_1 as an eigenvector; the series cannot terminate
    CHECK_THROWS_AS(exp_ad(L("Z: t"), one, L("Z: 1")), NonNilpotent);
    // but ad(Z_{t^2}) is nilpotent on Z_1: two steps and the top closes
    CHECK(exp_ad(L("Z: t^2"), one, L("Z: 1")) == L("Z: 1 + 2*t + t^2"));
}

TEST_CASE("exp_ad matches the closed adjoint forms with abstract labels") {
    Coeff delta = Coeff::param("delta");
    Coeff p = Coeff::param("p"), q = Coeff::param("q");
    FuncExpr F = uf("F"), G = uf("G"), h = uf("h"), f = uf("f"), g = uf("g"), K = uf("K"),
             k = uf("k");
    LieElement Zh = LieElement::Z(h);

    SECTION("X_F row") {
        // on Z_h: Z_h - 4 p delta X_Fhat - delta^2 W_{F Fhat' - F' Fhat}
        FuncExpr Fhat = ((F * differentiate(h)).scalar_mul(kHalf) - differentiate(F) * h)
                            .scalar_mul(Coeff(Rational(1, 4)) / p);
        LieElement expect = Zh +
            LieElement::X(Fhat.scalar_mul(Coeff(Rational(-4)) * p * delta)) +
            LieElement::W((F * differentiate(Fhat) - differentiate(F) * Fhat)
                              .scalar_mul(-(delta * delta)));
        CHECK(exp_ad(LieElement::X(F), delta, Zh) == expect);

        // on X_f: X_f + delta W_{(F f' - F' f)/2p}
        FuncExpr Fbar = (F * differentiate(f) - differentiate(F) * f)
                            .scalar_mul(Coeff(Rational(1, 2)) / p);
        CHECK(exp_ad(LieElement::X(F), delta, LieElement::X(f)) ==
              LieElement::X(f) + LieElement::W(Fbar.scalar_mul(delta)));
        CHECK(exp_ad(LieElement::X(F), delta, LieElement::Y(g)) == LieElement::Y(g));
        CHECK(exp_ad(LieElement::X(F), delta, LieElement::W(k)) == LieElement::W(k));
    }

    SECTION("Y_G row") {
        FuncExpr Ghat = ((G * differentiate(h)).scalar_mul(kHalf) - differentiate(G) * h)
                            .scalar_mul(Coeff(Rational(1, 4)) / q);
        LieElement expect = Zh +
            LieElement::Y(Ghat.scalar_mul(Coeff(Rational(-4)) * q * delta)) +
            LieElement::W((G * differentiate(Ghat) - differentiate(G) * Ghat)
                              .scalar_mul(delta * delta));
        CHECK(exp_ad(LieElement::Y(G), delta, Zh) == expect);

        FuncExpr Gbar = (G * differentiate(g) - differentiate(G) * g)
                            .scalar_mul(Coeff(Rational(1, 2)) / q);
        CHECK(exp_ad(LieElement::Y(G), delta, LieElement::Y(g)) ==
              LieElement::Y(g) + LieElement::W(Gbar.scalar_mul(-delta)));
        CHECK(exp_ad(LieElement::Y(G), delta, LieElement::X(f)) == LieElement::X(f));
    }

    SECTION("W_K row") {
        CHECK(exp_ad(LieElement::W(K), delta, Zh) ==
              Zh + LieElement::W((h * differentiate(K)).scalar_mul(delta)));
        CHECK(exp_ad(LieElement::W(K), delta, LieElement::X(f)) == LieElement::X(f));
        CHECK(exp_ad(LieElement::W(K), delta, LieElement::W(k)) == LieElement::W(k));
    }
}

TEST_CASE("flows") {
    Coeff a = Coeff::param("a");
    // the translation generated by Z_1 fixes Z_1
    CHECK(flow(FlowSpec::translate(Coeff(Rational(3))), L("Z: 1")) == L("Z: 1"));
    // parameter -a/2 carries Z_{2t+a} to Z_{2t}
    CHECK(flow(FlowSpec::translate(-(a / Coeff(Rational(2)))), L("Z: 2*t + a")) == L("Z: 2*t"));
    // scaling acts on X_t with weight -1/2
    Coeff s = Coeff::param("s");
    LieElement scaled = flow(FlowSpec::scale(s), L("X: t"));
    CHECK(scaled == L("X: t").scalar_mul(pow_coeff(s, ExponentForm(Rational(-1, 2)))));
}

TEST_CASE("flows are automorphisms") {
    LieElement V = L("Z: t^2; X: t"), W = L("Z: 1; Y: t; W: t^2");
    FlowSpec tr = FlowSpec::translate(Coeff(Rational(2)));
    CHECK(flow(tr, bracket(V, W)) == bracket(flow(tr, V), flow(tr, W)));
    FlowSpec sc = FlowSpec::scale(Coeff(Rational(3)));
    CHECK(flow(sc, bracket(V, W)) == bracket(flow(sc, V), flow(sc, W)));
}

TEST_CASE("reflections") {
    CHECK(reflect(ReflectAxis::X, L("X: 1")) == L("X: -1"));
    CHECK(reflect(ReflectAxis::X, L("Z: h(t)")) == L("Z: h(t)"));
    CHECK(reflect(ReflectAxis::U, L("W: k(t)")) == L("W: k(t)"));
    // involutive automorphism commuting with the bracket
    LieElement V = L("Z: t; X: t^2; Y: 1; W: t"), W2 = L("X: 1; Y: t^3");
    for (ReflectAxis ax : {ReflectAxis::X, ReflectAxis::Y, ReflectAxis::XY, ReflectAxis::U}) {
        CHECK(reflect(ax, reflect(ax, V)) == V);
        CHECK(reflect(ax, bracket(V, W2)) == bracket(reflect(ax, V), reflect(ax, W2)));
    }
}

TEST_CASE("normalization to Z_1") {
    auto [r1, t1] = normalize_to_Z1(L("Z: 1; W: t"));
    CHECK(r1 == L("Z: 1"));
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].generator == LieElement::W(P("-1/2*t^2")));
    CHECK(t1[0].delta == Coeff(Rational(1)));

    auto [r2, t2] = normalize_to_Z1(L("Z: 1; X: exp(-t)"));
    CHECK(r2 == L("Z: 1"));

    auto [r3, t3] = normalize_to_Z1(L("Z: 1"));
    CHECK(r3 == L("Z: 1"));
    CHECK(t3.empty());

    // replaying the trace reproduces the normalization
    LieElement V = L("Z: 1; X: t; Y: t^2; W: exp(-2*t)");
    auto [r4, t4] = normalize_to_Z1(V);
    CHECK(r4 == L("Z: 1"));
    LieElement replay = V;
    for (const AdjointStep& s : t4) replay = exp_ad(s.generator, s.delta, replay);
    CHECK(replay == L("Z: 1"));

    CHECK_THROWS_AS(normalize_to_Z1(L("Z: t; X: 1")), UnsupportedClass);
}

TEST_CASE("a k-label can be removed against X_F when f is constant") {
    // X_1 + W_t ~ X_1 via exp_ad(X_F) with F = a p t^2, delta = 1/a
    Coeff a = Coeff::param("a"), p = Coeff::param("p");
    FuncExpr F = FuncExpr::t_power(ExponentForm(2), a * p);
    LieElement out = exp_ad(LieElement::X(F), a.inverse(), L("X: 1; W: t"));
    CHECK(out == L("X: 1"));
}

TEST_CASE("vector field rendering") {
    CHECK(render_vector_field(L("W: 1")) == "i·u·∂u");
    CHECK(render_vector_field(L("X: 1")) == "∂x");
    CHECK(render_vector_field(L("Z: t")) ==
          "t·∂t + (1/2)·x·∂x + (1/2)·y·∂y - (1/2)·u·∂u - v·∂v");
    CHECK(render_vector_field(L("0")) == "0");
}

TEST_CASE("slot-tagged element round trip") {
    for (const char* s : {"Z: 2*t", "X: 1; Y: -t", "0", "X: exp(-t); W: 1/(2*p)"}) {
        LieElement e = L(s);
        CHECK(parse_lie_element(render_lie_element(e)) == e);
    }
}
