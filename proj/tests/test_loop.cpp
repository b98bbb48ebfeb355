#include <catch2/catch_amalgamated.hpp>

#include "cnls/loop.hpp"

using namespace cnls;

namespace {
LieElement L(const std::string& s) { return parse_lie_element(s); }
}

TEST_CASE("laurent basis elements") {
    CHECK(laurent_basis(GenKind::W, ExponentForm::symbol(SymbolTable::instance().param("n"))) ==
          LieElement::W(parse_expr("t^n")));
    CHECK(laurent_basis(GenKind::Z, ExponentForm(0)) == L("Z: 1"));
    CHECK(laurent_basis(GenKind::X, ExponentForm(2)) == L("X: t^2"));
}

TEST_CASE("laurent commutator table with symbolic exponents") {
    int np = SymbolTable::instance().param("n");
    int mp = SymbolTable::instance().param("m");
    ExponentForm n = ExponentForm::symbol(np), m = ExponentForm::symbol(mp);
    SuiteReport rep = verify_table2(n, m);
    INFO(rep.to_text());
    CHECK(rep.ok());
    CHECK(rep.lines.size() == 16);

    // the (Z,Z) cell carries coefficient m - n on t^(n+m-1)
    LieElement zz = bracket(laurent_basis(GenKind::Z, n), laurent_basis(GenKind::Z, m));
    CHECK(zz == laurent_basis(GenKind::Z, n + m - ExponentForm(1))
                    .scalar_mul(Coeff::symbol(mp) - Coeff::symbol(np)));
    // the (X,X) cell lands on W with -(m-n)/2p
    LieElement xx = bracket(laurent_basis(GenKind::X, n), laurent_basis(GenKind::X, m));
    Coeff c = -(Coeff::symbol(mp) - Coeff::symbol(np)) /
              (Coeff(Rational(2)) * Coeff::param("p"));
    CHECK(xx == laurent_basis(GenKind::W, n + m - ExponentForm(1)).scalar_mul(c));
    // equal exponents: the diagonal dies by antisymmetry
    CHECK(bracket(laurent_basis(GenKind::Z, ExponentForm(1)), laurent_basis(GenKind::Z, ExponentForm(1)))
              .is_zero());
}

TEST_CASE("loop bracket basics") {
    // [d_0, d_2] = 2 d_1
    CHECK(loop_bracket(LoopElement::derivation(0), LoopElement::derivation(2)) ==
          LoopElement::derivation(1, Coeff(Rational(2))));
    // [d_1, t (x) A] = t (x) A
    BlockMat A = gen11_matrix(Gen11::A);
    CHECK(loop_bracket(LoopElement::derivation(1), LoopElement::matrix(1, A)) ==
          LoopElement::matrix(1, A));
    // [1 (x) A, 1 (x) A] = 0
    CHECK(loop_bracket(LoopElement::matrix(0, A), LoopElement::matrix(0, A)).is_zero());
}

TEST_CASE("loop bracket is antisymmetric and satisfies jacobi on samples") {
    std::vector<LoopElement> samples = {
        embed(GenKind::Z, 2), embed(GenKind::X, -1) + LoopElement::derivation(1),
        embed(GenKind::W, 0) + embed(GenKind::Y, 2),
        LoopElement::matrix(-2, gen11_matrix(Gen11::P)) + LoopElement::derivation(-1)};
    for (const LoopElement& a : samples)
        for (const LoopElement& b : samples) {
            CHECK(loop_bracket(a, b) == loop_bracket(b, a).scaled(Coeff(Rational(-1))));
            for (const LoopElement& c : samples) {
                LoopElement defect = loop_bracket(loop_bracket(a, b), c) +
                                     loop_bracket(loop_bracket(b, c), a) +
                                     loop_bracket(loop_bracket(c, a), b);
                CHECK(defect.is_zero());
            }
        }
}

TEST_CASE("embedding formulas at small exponents") {
    // W at n=0 is the plain U matrix
    CHECK(embed(GenKind::W, 0) == LoopElement::matrix(0, gen11_matrix(Gen11::U)));
    // Z at n=1: Delta plus the degree-1 derivation
    LoopElement z1 = embed(GenKind::Z, 1);
    CHECK(z1.mat.size() == 1);
    CHECK(z1.mat.at(0) == gen11_matrix(Gen11::Delta));
    CHECK(z1.der.at(1) == Coeff(Rational(1)));
    // X at n=1: t X + U_x
    LoopElement x1 = embed(GenKind::X, 1);
    CHECK(x1.mat.at(1) == gen11_matrix(Gen11::X));
    CHECK(x1.mat.at(0) == gen11_matrix(Gen11::Ux));
}

TEST_CASE("the embedding reproduces the laurent table") {
    SuiteReport rep = verify_embedding(-3, 3);
    INFO(rep.to_text());
    CHECK(rep.ok());
    // the recorded orientation is a genuine homomorphism
    REQUIRE(!rep.lines.empty());
    CHECK(rep.lines.back().detail.find("+1") != std::string::npos);
}

TEST_CASE("witt relations") {
    SuiteReport rep = verify_witt(-3, 3);
    INFO(rep.to_text());
    CHECK(rep.ok());
}

TEST_CASE("eleven-dimensional matrix algebra") {
    SuiteReport rep = check_l11();
    INFO(rep.to_text());
    CHECK(rep.ok());
}
