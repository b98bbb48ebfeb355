#include <catch2/catch_amalgamated.hpp>

#include "cnls/structure.hpp"
#include "mclass_oracle.hpp"

using namespace cnls;

namespace {

LieElement L(const std::string& s) { return parse_lie_element(s); }

Mat2 mat2(long a, long b, long c, long d) {
    return Mat2{{{Coeff(Rational(a)), Coeff(Rational(b))}, {Coeff(Rational(c)), Coeff(Rational(d))}}};
}

StructureConstants sl2_constants() {
    // [A1,A2] = A1, [A1,A3] = 2 A2, [A2,A3] = A3
    std::map<std::pair<int, int>, CoeffVec> t;
    t[{0, 1}] = {Coeff(Rational(1)), Coeff(Rational(0)), Coeff(Rational(0))};
    t[{0, 2}] = {Coeff(Rational(0)), Coeff(Rational(2)), Coeff(Rational(0))};
    t[{1, 2}] = {Coeff(Rational(0)), Coeff(Rational(0)), Coeff(Rational(1))};
    return StructureConstants(3, t);
}

} // namespace

TEST_CASE("rank of element lists") {
    CHECK(rank({L("X: 1"), L("X: t")}).rank == 2);

    RankResult dep = rank({L("X: 1"), L("X: 2")});
    CHECK(dep.rank == 1);
    REQUIRE(dep.dependency.has_value());
    // kernel vector proportional to (2, -1)
    const CoeffVec& v = *dep.dependency;
    CHECK((v[0] * Coeff(Rational(-1)) - v[1] * Coeff(Rational(2))).is_zero());

    RankResult sym = rank({L("Z: 1"), L("X: 1; Y: alpha"), L("X: beta; Y: gamma; W: mu")});
    CHECK(sym.rank == 3);
    // the eliminator records the generic-nonvanishing pivot gamma - alpha*beta
    bool found = false;
    for (const std::string& s : sym.side_conditions)
        found = found || s.find("alpha*beta") != std::string::npos;
    CHECK(found);
}

TEST_CASE("structure constants of concrete spans") {
    StructureConstants sc =
        StructureConstants::from_elements({L("Z: 1"), L("Z: t"), L("Z: t^2")});
    CHECK(sc.bracket_coords(0, 1) == CoeffVec{Coeff(Rational(1)), Coeff(Rational(0)), Coeff(Rational(0))});
    CHECK(sc.bracket_coords(0, 2) == CoeffVec{Coeff(Rational(0)), Coeff(Rational(2)), Coeff(Rational(0))});
    CHECK(sc.bracket_coords(1, 2) == CoeffVec{Coeff(Rational(0)), Coeff(Rational(0)), Coeff(Rational(1))});

    StructureConstants ab = StructureConstants::from_elements({L("Z: 1"), L("X: 1")});
    CHECK(ab.bracket_coords(0, 1) == CoeffVec{Coeff(Rational(0)), Coeff(Rational(0))});

    try {
        StructureConstants::from_elements({L("Z: 1"), L("X: t")});
        FAIL("expected NotClosed");
    } catch (const NotClosed& e) {
        CHECK(e.residual == L("X: 1"));
    }
}

TEST_CASE("derived and lower central series") {
    SeriesResult sl2 = series(sl2_constants());
    CHECK(sl2.derived_dims == std::vector<int>{3, 3});
    CHECK_FALSE(sl2.solvable);

    // first-degree polynomial span: solvable, with a 7-dim nilpotent ideal
    std::vector<LieElement> l8 = {L("X: t"), L("Y: t"), L("Z: t"), L("W: t"),
                                  L("X: 1"), L("Y: 1"), L("Z: 1"), L("W: 1")};
    StructureConstants sc8 = StructureConstants::from_elements(l8);
    SeriesResult s8 = series(sc8);
    CHECK(s8.solvable);
    CHECK_FALSE(s8.nilpotent);

    std::vector<LieElement> nil = {L("X: t"), L("Y: t"), L("W: t"), L("X: 1"),
                                   L("Y: 1"), L("Z: 1"), L("W: 1")};
    StructureConstants scn = StructureConstants::from_elements(nil);
    SeriesResult sn = series(scn);
    CHECK(sn.nilpotent);

    StructureConstants w3 = StructureConstants::from_elements({L("W: 1"), L("W: t"), L("W: t^2")});
    SeriesResult sw = series(w3);
    CHECK(sw.derived_dims == std::vector<int>{3, 0});
    CHECK(sw.center_dim == 3);
}

TEST_CASE("two-dimensional classification") {
    StructureConstants ab = StructureConstants::from_elements({L("Z: 1"), L("W: 1")});
    CHECK(classify_dim2(ab).abelian);

    StructureConstants na = StructureConstants::from_elements({L("Z: 1"), L("Z: t")});
    Dim2Class c = classify_dim2(na);
    CHECK_FALSE(c.abelian);
    REQUIRE(c.adapted.has_value());
    // adapted pair satisfies [A1', A2'] = A1'
    CHECK(na.apply(c.adapted->first, c.adapted->second) == c.adapted->first);

    StructureConstants we = StructureConstants::from_elements({L("W: exp(-t)"), L("Z: 1")});
    CHECK_FALSE(classify_dim2(we).abelian);
}

TEST_CASE("killing form") {
    CoeffMat k = killing_form(sl2_constants());
    CHECK(matrix_rank(k) == 3);

    StructureConstants ab = StructureConstants::from_elements({L("W: 1"), L("W: t")});
    CoeffMat kab = killing_form(ab);
    for (auto& row : kab)
        for (auto& v : row) CHECK(v.is_zero());

    StructureConstants na = StructureConstants::from_elements({L("Z: 1"), L("Z: t")});
    CoeffMat kna = killing_form(na);
    CHECK(matrix_rank(kna) == 1);
    CHECK(kna[1][1] == Coeff(Rational(1))); // tr(ad Z_t ad Z_t)
}

TEST_CASE("three-dimensional classification") {
    AlgebraReport sl2 = analyze_elements({L("Z: 1"), L("Z: t"), L("Z: t^2")});
    CHECK(sl2.verdict == AlgebraReport::Verdict::SL2);
    REQUIRE(sl2.adapted_basis.has_value());
    // the adapted basis realizes the standard relations
    StructureConstants sc = StructureConstants::from_elements({L("Z: 1"), L("Z: t"), L("Z: t^2")});
    const auto& b = *sl2.adapted_basis;
    CHECK(sc.apply(b[0], b[1]) == b[0]);
    CoeffVec two_a2 = b[1];
    for (Coeff& v : two_a2) v = v * Coeff(Rational(2));
    CHECK(sc.apply(b[0], b[2]) == two_a2);
    CHECK(sc.apply(b[1], b[2]) == b[2]);

    AlgebraReport nil = analyze_elements({L("Z: 1"), L("W: 1"), L("W: t")});
    CHECK(nil.verdict == AlgebraReport::Verdict::Solvable);
    REQUIRE(nil.m_class.has_value());
    CHECK(nil.m_class->tag == MClass::Tag::M3_nilpotent);

    AlgebraReport diag = analyze_elements({L("X: 1"), L("Y: exp(-t)"), L("Z: 1")});
    CHECK(diag.verdict == AlgebraReport::Verdict::Solvable);
    REQUIRE(diag.m_class.has_value());
    CHECK(diag.m_class->tag == MClass::Tag::M2_rank1_diag);

    AlgebraReport abel = analyze_elements({L("W: 1"), L("W: t"), L("W: t^2")});
    CHECK(abel.verdict == AlgebraReport::Verdict::Abelian);
}

TEST_CASE("sl2 verdict iff nondegenerate killing form in dimension 3") {
    for (auto& elems : std::vector<std::vector<LieElement>>{
             {L("Z: 1"), L("Z: t"), L("Z: t^2")},
             {L("Z: 1"), L("W: 1"), L("W: t")},
             {L("X: 1"), L("Y: exp(-t)"), L("Z: 1")}}) {
        StructureConstants sc = StructureConstants::from_elements(elems);
        AlgebraReport rep = classify_dim3(sc);
        bool nondeg = matrix_rank(killing_form(sc)) == 3;
        int derived1 = rep.derived_dims.size() > 1 ? rep.derived_dims[1] : 0;
        CHECK((rep.verdict == AlgebraReport::Verdict::SL2) == (nondeg && derived1 == 3));
    }
}

TEST_CASE("M classifier on fixed matrices") {
    CHECK(classify_M(mat2(0, 0, 0, 0)).tag == MClass::Tag::M1_zero);
    MClass scalar = classify_M(mat2(2, 0, 0, 2));
    CHECK(scalar.tag == MClass::Tag::M4_diag);
    CHECK(*scalar.alpha == Coeff(Rational(1)));
    CHECK(classify_M(mat2(0, 0, 1, 0)).tag == MClass::Tag::M3_nilpotent);
    CHECK(classify_M(mat2(3, 0, 0, 0)).tag == MClass::Tag::M2_rank1_diag);
    MClass diag = classify_M(mat2(2, 0, 0, 1));
    CHECK(diag.tag == MClass::Tag::M4_diag);
    CHECK(*diag.alpha == Coeff(Rational(1, 2)));
    MClass rot = classify_M(mat2(0, 1, -1, 0));
    CHECK(rot.tag == MClass::Tag::M5_complex);
    CHECK(*rot.alpha == Coeff(Rational(0)));
    CHECK(classify_M(mat2(1, 0, 1, 1)).tag == MClass::Tag::M6_jordan);
    // opposite-sign eigenvalues: still the diagonal family
    MClass opp = classify_M(mat2(1, 0, 0, -1));
    CHECK(opp.tag == MClass::Tag::M4_diag);
    CHECK(*opp.alpha == Coeff(Rational(-1)));

    Mat2 sym{{{Coeff::param("a"), Coeff(Rational(1))}, {Coeff(Rational(0)), Coeff(Rational(1))}}};
    CHECK_THROWS_AS(classify_M(sym), UndecidableSign);
}

TEST_CASE("M classifier agrees with the numeric conjugation oracle") {
    std::mt19937_64 rng(0);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        long e[4];
        for (long& x : e) x = static_cast<long>(oracle::pick_int(rng, -4, 4));
        Mat2 m = mat2(e[0], e[1], e[2], e[3]);
        oracle::DMat2 dm{{{double(e[0]), double(e[1])}, {double(e[2]), double(e[3])}}};
        oracle::Result expect = oracle::classify(dm, rng);
        if (!expect.stable) continue;
        MClass got = classify_M(m);
        ++checked;
        CHECK(static_cast<int>(got.tag) + 1 == expect.tag);
        if (got.j && (expect.tag == 4 || expect.tag == 5))
            CHECK(to_double(got.j->as_rational()) == Catch::Approx(expect.j).margin(1e-6));
    }
    CHECK(checked > 40);
}

TEST_CASE("M class invariance under conjugation and scaling") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        long e[4];
        for (long& x : e) x = static_cast<long>(oracle::pick_int(rng, -3, 3));
        Mat2 m = mat2(e[0], e[1], e[2], e[3]);
        long p[4];
        long det = 0;
        do {
            for (long& x : p) x = static_cast<long>(oracle::pick_int(rng, -3, 3));
            det = p[0] * p[3] - p[1] * p[2];
        } while (det == 0);
        long s = 0;
        while (s == 0) s = static_cast<long>(oracle::pick_int(rng, -3, 3));
        // s P m P^-1 over exact rationals
        Coeff dets{Rational(det)};
        Mat2 pm{{{Coeff(Rational(p[0])), Coeff(Rational(p[1]))},
                 {Coeff(Rational(p[2])), Coeff(Rational(p[3]))}}};
        Mat2 pinv{{{Coeff(Rational(p[3])) / dets, Coeff(Rational(-p[1])) / dets},
                   {Coeff(Rational(-p[2])) / dets, Coeff(Rational(p[0])) / dets}}};
        Mat2 conj;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Coeff acc{Rational(0)};
                for (int u = 0; u < 2; ++u)
                    for (int v = 0; v < 2; ++v) acc = acc + pm[a][u] * m[u][v] * pinv[v][b];
                conj[a][b] = acc * Coeff(Rational(s));
            }
        CHECK(classify_M(conj) == classify_M(m));
    }
}
