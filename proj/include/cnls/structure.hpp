#pragma once

#include <optional>
#include <string>

#include "cnls/lie.hpp"
#include "cnls/linalg.hpp"

namespace cnls {

// --- coordinates for spans of algebra elements ------------------------------

// Coordinate system indexed by (slot, term signature) pairs collected from a
// set of elements; linear independence over constants reduces to exact rank.
class Coordinates {
public:
    explicit Coordinates(const std::vector<LieElement>& elements) {
        for (const LieElement& e : elements) absorb(e);
    }
    Coordinates(const std::vector<LieElement>& elements, const LieElement& extra) {
        for (const LieElement& e : elements) absorb(e);
        absorb(extra);
    }

    std::size_t size() const { return keys_.size(); }

    CoeffVec coords(const LieElement& e) const {
        CoeffVec out(keys_.size(), Coeff(Rational(0)));
        place(0, e.f, out);
        place(1, e.g, out);
        place(2, e.h, out);
        place(3, e.k, out);
        return out;
    }

private:
    struct Key {
        int slot;
        Term sig; // coeff ignored
    };
    std::vector<Key> keys_;

    static int cmp(const Key& a, const Key& b) {
        if (a.slot != b.slot) return a.slot < b.slot ? -1 : 1;
        return Term::cmp_signature(a.sig, b.sig);
    }
    std::size_t lower_bound(const Key& k) const {
        std::size_t lo = 0, hi = keys_.size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cmp(keys_[mid], k) < 0) lo = mid + 1; else hi = mid;
        }
        return lo;
    }
    void insert(int slot, const Term& t) {
        Key k{slot, t};
        std::size_t at = lower_bound(k);
        if (at < keys_.size() && cmp(keys_[at], k) == 0) return;
        keys_.insert(keys_.begin() + at, std::move(k));
    }
    void absorb(const LieElement& e) {
        for (const Term& t : e.f.terms()) insert(0, t);
        for (const Term& t : e.g.terms()) insert(1, t);
        for (const Term& t : e.h.terms()) insert(2, t);
        for (const Term& t : e.k.terms()) insert(3, t);
    }
    void place(int slot, const FuncExpr& e, CoeffVec& out) const {
        for (const Term& t : e.terms()) {
            Key k{slot, t};
            std::size_t at = lower_bound(k);
            if (at == keys_.size() || cmp(keys_[at], k) != 0)
                throw InternalError("coordinate system does not cover element");
            out[at] = t.coeff;
        }
    }
};

struct RankResult {
    int rank = 0;
    std::optional<CoeffVec> dependency; // nonzero kernel vector when rank < n
    std::vector<std::string> side_conditions;
};

// Rank over the constant field; generic when symbols are present, with the
// pivot nonvanishing assumptions reported.
inline RankResult rank(const std::vector<LieElement>& elements) {
    RankResult out;
    if (elements.empty()) return out;
    Coordinates sys(elements);
    CoeffMat rows;
    for (const LieElement& e : elements) rows.push_back(sys.coords(e));
    Elimination e = row_reduce(rows);
    out.rank = e.rank();
    out.side_conditions = e.side_conditions;
    if (out.rank < static_cast<int>(elements.size())) {
        CoeffMat ker = kernel_basis(transpose(rows));
        if (!ker.empty()) out.dependency = ker.front();
    }
    return out;
}

// --- structure constants ------------------------------------------------------

struct NotClosed : Error {
    NotClosed(std::string msg, int i, int j, LieElement residual_elem)
        : Error(std::move(msg)), pair_i(i), pair_j(j), residual(std::move(residual_elem)) {}
    int pair_i, pair_j;
    LieElement residual;
};

// Exact structure constants c[i][j][k] for i < j over the coefficient field.
class StructureConstants {
public:
    StructureConstants() = default;
    // abstract mode: dimension and the (i<j) table supplied directly
    StructureConstants(int n, std::map<std::pair<int, int>, CoeffVec> table) : n_(n) {
        alloc();
        for (auto& [ij, v] : table) {
            if (ij.first >= ij.second || ij.second >= n) throw InternalError("bad table index");
            if (static_cast<int>(v.size()) != n) throw InternalError("bad table row");
            c_[ij.first][ij.second] = v;
        }
        validate_jacobi();
    }

    static StructureConstants from_elements(const std::vector<LieElement>& basis,
                                            bool check_independent = true) {
        StructureConstants sc;
        sc.n_ = static_cast<int>(basis.size());
        sc.alloc();
        if (check_independent) {
            RankResult r = rank(basis);
            sc.side_conditions_ = r.side_conditions;
            if (r.rank < sc.n_) throw InternalError("basis elements are dependent");
        }
        for (int i = 0; i < sc.n_; ++i) {
            for (int j = i + 1; j < sc.n_; ++j) {
                LieElement w = bracket(basis[i], basis[j]);
                Coordinates sys(basis, w);
                CoeffMat a;
                for (const LieElement& e : basis) a.push_back(sys.coords(e));
                CoeffMat at = transpose(a); // rows: coordinates, cols: unknowns
                SolveResult sol = solve_exact(at, sys.coords(w));
                for (const std::string& s : sol.side_conditions) {
                    bool seen = false;
                    for (auto& t : sc.side_conditions_) seen = seen || t == s;
                    if (!seen) sc.side_conditions_.push_back(s);
                }
                if (!sol.consistent) {
                    LieElement residual = w;
                    for (int k = 0; k < sc.n_; ++k)
                        residual = residual - basis[k].scalar_mul(sol.x[k]);
                    throw NotClosed("bracket of basis elements " + std::to_string(i) + "," +
                                        std::to_string(j) + " leaves the span",
                                    i, j, residual);
                }
                sc.c_[i][j] = sol.x;
            }
        }
        sc.validate_jacobi();
        return sc;
    }

    int dim() const { return n_; }
    const std::vector<std::string>& side_conditions() const { return side_conditions_; }

    CoeffVec bracket_coords(int i, int j) const {
        if (i == j) return CoeffVec(n_, Coeff(Rational(0)));
        if (i < j) return c_[i][j];
        CoeffVec out = c_[j][i];
        for (Coeff& v : out) v = -v;
        return out;
    }

    // bilinear extension to coordinate vectors
    CoeffVec apply(const CoeffVec& x, const CoeffVec& y) const {
        CoeffVec out(n_, Coeff(Rational(0)));
        for (int i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (y[j].is_zero() || i == j) continue;
                CoeffVec b = bracket_coords(i, j);
                Coeff s = x[i] * y[j];
                for (int k = 0; k < n_; ++k)
                    if (!b[k].is_zero()) out[k] = out[k] + s * b[k];
            }
        }
        return out;
    }

    // ad(e_i) as a matrix: column j holds [e_i, e_j]
    CoeffMat ad_matrix(int i) const {
        CoeffMat m(n_, CoeffVec(n_, Coeff(Rational(0))));
        for (int j = 0; j < n_; ++j) {
            CoeffVec b = bracket_coords(i, j);
            for (int k = 0; k < n_; ++k) m[k][j] = b[k];
        }
        return m;
    }

    void validate_jacobi() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k) {
                    CoeffVec ei(n_, Coeff(Rational(0))), ej = ei, ek = ei;
                    ei[i] = ej[j] = ek[k] = Coeff(Rational(1));
                    CoeffVec d = apply(apply(ei, ej), ek);
                    CoeffVec d2 = apply(apply(ej, ek), ei);
                    CoeffVec d3 = apply(apply(ek, ei), ej);
                    for (int s = 0; s < n_; ++s) {
                        Coeff sum = d[s] + d2[s] + d3[s];
                        if (!sum.is_zero())
                            throw InternalError("structure constants violate the Jacobi identity");
                    }
                }
    }

private:
    void alloc() { c_.assign(n_, std::vector<CoeffVec>(n_, CoeffVec(n_, Coeff(Rational(0))))); }
    int n_ = 0;
    std::vector<std::vector<CoeffVec>> c_;
    std::vector<std::string> side_conditions_;
};

// --- subspace chains -----------------------------------------------------------

namespace detail {

// reduced basis of the span of the pairwise brackets of two subspaces
inline CoeffMat bracket_span(const StructureConstants& sc, const CoeffMat& s1, const CoeffMat& s2) {
    CoeffMat rows;
    for (const CoeffVec& x : s1)
        for (const CoeffVec& y : s2) {
            CoeffVec b = sc.apply(x, y);
            bool zero = true;
            for (const Coeff& v : b) zero = zero && v.is_zero();
            if (!zero) rows.push_back(std::move(b));
        }
    if (rows.empty()) return {};
    return row_reduce(rows).rows;
}

inline CoeffMat full_space(int n) {
    CoeffMat id(n, CoeffVec(n, Coeff(Rational(0))));
    for (int i = 0; i < n; ++i) id[i][i] = Coeff(Rational(1));
    return id;
}

} // namespace detail

struct SeriesResult {
    std::vector<int> derived_dims;       // starting from the algebra itself
    std::vector<int> lower_central_dims; // starting from the algebra itself
    int center_dim = 0;
    bool solvable = false;
    bool nilpotent = false;
};

inline SeriesResult series(const StructureConstants& sc) {
    SeriesResult out;
    int n = sc.dim();
    CoeffMat cur = detail::full_space(n);
    out.derived_dims.push_back(n);
    for (int iter = 0; iter <= n; ++iter) {
        CoeffMat next = detail::bracket_span(sc, cur, cur);
        int d = static_cast<int>(next.size());
        out.derived_dims.push_back(d);
        if (d == 0 || d == static_cast<int>(cur.size())) break;
        cur = std::move(next);
    }
    out.solvable = out.derived_dims.back() == 0;

    cur = detail::full_space(n);
    out.lower_central_dims.push_back(n);
    for (int iter = 0; iter <= n; ++iter) {
        CoeffMat next = detail::bracket_span(sc, detail::full_space(n), cur);
        int d = static_cast<int>(next.size());
        out.lower_central_dims.push_back(d);
        if (d == 0 || d == static_cast<int>(cur.size())) break;
        cur = std::move(next);
    }
    out.nilpotent = out.lower_central_dims.back() == 0;

    // center: x with [x, e_j] = 0 for all j
    CoeffMat eqs;
    for (int j = 0; j < n; ++j) {
        CoeffVec ej(n, Coeff(Rational(0)));
        ej[j] = Coeff(Rational(1));
        // row block: for each component k, sum_i x_i c(i,j)_k = 0
        for (int k = 0; k < n; ++k) {
            CoeffVec row(n, Coeff(Rational(0)));
            for (int i = 0; i < n; ++i) row[i] = sc.bracket_coords(i, j)[k];
            eqs.push_back(std::move(row));
        }
    }
    out.center_dim = n - row_reduce(eqs).rank();
    return out;
}

// K(e_i, e_j) = trace(ad e_i ad e_j), exact and symmetric.
inline CoeffMat killing_form(const StructureConstants& sc) {
    int n = sc.dim();
    std::vector<CoeffMat> ads;
    for (int i = 0; i < n; ++i) ads.push_back(sc.ad_matrix(i));
    CoeffMat k(n, CoeffVec(n, Coeff(Rational(0))));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Coeff tr{Rational(0)};
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) tr = tr + ads[i][a][b] * ads[j][b][a];
            k[i][j] = tr;
            k[j][i] = tr;
        }
    return k;
}

inline int matrix_rank(const CoeffMat& m) { return row_reduce(m).rank(); }

// --- two-dimensional classification --------------------------------------------

struct Dim2Class {
    bool abelian;
    // non-Abelian case: change of basis realizing [A1', A2'] = A1'
    std::optional<std::pair<CoeffVec, CoeffVec>> adapted;
};

inline Dim2Class classify_dim2(const StructureConstants& sc) {
    if (sc.dim() != 2) throw InternalError("classify_dim2 needs dimension 2");
    CoeffVec d = sc.bracket_coords(0, 1);
    if (d[0].is_zero() && d[1].is_zero()) return {true, std::nullopt};
    // [d, x A1 + y A2] = (-b x + a y) d for d = a A1 + b A2
    const Coeff &a = d[0], &b = d[1];
    CoeffVec second(2, Coeff(Rational(0)));
    if (!a.is_zero())
        second[1] = a.inverse();
    else
        second[0] = -b.inverse();
    return {false, std::make_pair(d, second)};
}

// --- the six standard forms of the 2x2 action matrix ----------------------------

struct MClass {
    enum class Tag { M1_zero, M2_rank1_diag, M3_nilpotent, M4_diag, M5_complex, M6_jordan } tag;
    std::optional<Coeff> j;     // invariant tr^2/det for M4/M5
    std::optional<Coeff> alpha; // canonical parameter when rational

    bool operator==(const MClass& o) const {
        if (tag != o.tag) return false;
        if (j.has_value() != o.j.has_value()) return false;
        return !j || *j == *o.j;
    }

    std::string name() const {
        switch (tag) {
            case Tag::M1_zero: return "M1_zero";
            case Tag::M2_rank1_diag: return "M2_rank1_diag";
            case Tag::M3_nilpotent: return "M3_nilpotent";
            case Tag::M4_diag: return "M4_diag";
            case Tag::M5_complex: return "M5_complex";
            case Tag::M6_jordan: return "M6_jordan";
        }
        return "?";
    }
    std::string render() const {
        std::string s = name();
        if (alpha) s += "(alpha = " + alpha->render() + ")";
        else if (j) s += "(j = " + j->render() + ")";
        return s;
    }
};

using Mat2 = std::array<std::array<Coeff, 2>, 2>;

// Canonical class of M under conjugation and nonzero scaling, decided through
// the invariants det, tr and j = tr^2/det (exact, no square roots needed).
inline MClass classify_M(const Mat2& m) {
    const Coeff &a = m[0][0], &b = m[0][1], &c = m[1][0], &d = m[1][1];
    Coeff det = a * d - b * c;
    Coeff tr = a + d;
    bool zero = a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero();
    if (zero) return {MClass::Tag::M1_zero, std::nullopt, std::nullopt};
    if (det.is_zero()) {
        // M^2 = tr M when det = 0: nilpotent iff traceless
        if (tr.is_zero()) return {MClass::Tag::M3_nilpotent, std::nullopt, std::nullopt};
        return {MClass::Tag::M2_rank1_diag, std::nullopt, std::nullopt};
    }
    Coeff disc = tr * tr - Coeff(Rational(4)) * det;
    if (disc.is_zero()) {
        bool scalar = b.is_zero() && c.is_zero() && (a - d).is_zero();
        if (scalar) return {MClass::Tag::M4_diag, Coeff(Rational(4)), Coeff(Rational(1))};
        return {MClass::Tag::M6_jordan, std::nullopt, std::nullopt};
    }
    Coeff j = tr * tr / det;
    if (!disc.is_rational())
        throw UndecidableSign("sign of tr^2 - 4 det undecidable for " + disc.render());
    bool real_split = disc.as_rational() > 0;
    if (real_split) {
        // alpha + 1/alpha = j - 2, |alpha| <= 1 canonical
        std::optional<Coeff> alpha;
        if (j.is_rational()) {
            Rational jr = j.as_rational();
            Rational disc_alpha = jr * (jr - 4);
            BigInt num = rat_num(disc_alpha), den = rat_den(disc_alpha);
            auto ns = int_nth_root_exact(num, 2);
            auto ds = int_nth_root_exact(den, 2);
            if (ns && ds) {
                Rational s(*ns, *ds);
                Rational r1 = (jr - 2 - s) / 2, r2 = (jr - 2 + s) / 2;
                Rational pick = (r1 * r1 <= 1) ? r1 : r2;
                alpha = Coeff(pick);
            }
        }
        return {MClass::Tag::M4_diag, j, alpha};
    }
    // complex pair: alpha^2 = j / (4 - j), alpha >= 0 canonical
    std::optional<Coeff> alpha;
    if (j.is_rational()) {
        Rational jr = j.as_rational();
        Rational a2 = jr / (4 - jr);
        auto ns = int_nth_root_exact(rat_num(a2), 2);
        auto ds = int_nth_root_exact(rat_den(a2), 2);
        if (ns && ds) alpha = Coeff(Rational(*ns, *ds));
    }
    return {MClass::Tag::M5_complex, j, alpha};
}

// --- three-dimensional classification --------------------------------------------

struct AlgebraReport {
    int dimension = 0;
    std::vector<int> derived_dims;
    std::vector<int> lower_central_dims;
    int center_dim = 0;
    enum class Verdict { Abelian, Solvable, NonAbelian2, SL2, Unclassified } verdict =
        Verdict::Unclassified;
    std::optional<MClass> m_class;
    std::optional<Mat2> m_matrix;
    // sl2: basis realizing [A1,A2]=A1, [A1,A3]=2A2, [A2,A3]=A3;
    // solvable: (A1, A2, A3) with <A1, A2> the Abelian ideal M acts on
    std::optional<std::array<CoeffVec, 3>> adapted_basis;
    std::vector<std::string> side_conditions;
    std::string notes;
};

namespace detail {

inline Coeff det3(const CoeffMat& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Search for a rational sl2 adapted basis: an element with ad-eigenvalues
// -s, 0, s and rational s, then the +/- eigenvectors.
inline std::optional<std::array<CoeffVec, 3>> sl2_adapted_basis(const StructureConstants& sc) {
    int n = 3;
    std::vector<CoeffVec> candidates;
    for (int i = 0; i < n; ++i) {
        CoeffVec e(n, Coeff(Rational(0)));
        e[i] = Coeff(Rational(1));
        candidates.push_back(e);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int s : {1, -1, 2, -2}) {
                CoeffVec e(n, Coeff(Rational(0)));
                e[i] = Coeff(Rational(1));
                e[j] = Coeff(Rational(s));
                candidates.push_back(e);
            }
        }
    for (const CoeffVec& x : candidates) {
        // ad(x) in coordinates
        CoeffMat ad(n, CoeffVec(n, Coeff(Rational(0))));
        for (int jcol = 0; jcol < n; ++jcol) {
            CoeffVec ej(n, Coeff(Rational(0)));
            ej[jcol] = Coeff(Rational(1));
            CoeffVec b = sc.apply(x, ej);
            for (int k = 0; k < n; ++k) ad[k][jcol] = b[k];
        }
        Coeff tr = ad[0][0] + ad[1][1] + ad[2][2];
        if (!tr.is_zero()) continue;
        if (!det3(ad).is_zero()) continue;
        // char poly lambda^3 + m2 lambda with m2 the sum of principal 2-minors
        Coeff m2 = ad[0][0] * ad[1][1] - ad[0][1] * ad[1][0] + ad[0][0] * ad[2][2] -
                   ad[0][2] * ad[2][0] + ad[1][1] * ad[2][2] - ad[1][2] * ad[2][1];
        Coeff s2 = -m2;
        if (!s2.is_rational()) continue;
        Rational s2r = s2.as_rational();
        if (s2r <= 0) continue;
        auto ns = int_nth_root_exact(rat_num(s2r), 2);
        auto ds = int_nth_root_exact(rat_den(s2r), 2);
        if (!ns || !ds) continue;
        Coeff s{Rational(*ns, *ds)};
        // h = x / s has eigenvalues -1, 0, 1
        CoeffVec h(n);
        for (int i = 0; i < n; ++i) h[i] = x[i] / s;
        CoeffMat adh(n, CoeffVec(n));
        for (int r = 0; r < n; ++r)
            for (int ccol = 0; ccol < n; ++ccol) adh[r][ccol] = ad[r][ccol] / s;
        auto eigvec = [&](int sign) -> std::optional<CoeffVec> {
            CoeffMat m = adh;
            for (int i = 0; i < n; ++i) m[i][i] = m[i][i] - Coeff(Rational(sign));
            CoeffMat ker = kernel_basis(m);
            if (ker.empty()) return std::nullopt;
            return ker.front();
        };
        auto aminus = eigvec(-1); // [h, A1] = -A1
        auto aplus = eigvec(1);   // [h, A3] = +A3
        if (!aminus || !aplus) continue;
        // [A1, A3] = c h with c nonzero; rescale A1 so that c = 2
        CoeffVec br = sc.apply(*aminus, *aplus);
        Coeff c{Rational(0)};
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (h[i].is_zero()) {
                if (!br[i].is_zero()) ok = false;
            } else if (c.is_zero()) {
                c = br[i] / h[i];
            } else if (!(br[i] - c * h[i]).is_zero()) {
                ok = false;
            }
        }
        if (!ok || c.is_zero()) continue;
        CoeffVec a1 = *aminus;
        Coeff scale = Coeff(Rational(2)) / c;
        for (Coeff& v : a1) v = v * scale;
        return std::array<CoeffVec, 3>{a1, h, *aplus};
    }
    return std::nullopt;
}

} // namespace detail

inline AlgebraReport classify_dim3(const StructureConstants& sc) {
    if (sc.dim() != 3) throw InternalError("classify_dim3 needs dimension 3");
    AlgebraReport rep;
    rep.dimension = 3;
    SeriesResult s = series(sc);
    rep.derived_dims = s.derived_dims;
    rep.lower_central_dims = s.lower_central_dims;
    rep.center_dim = s.center_dim;
    rep.side_conditions = sc.side_conditions();

    int derived_dim = s.derived_dims.size() > 1 ? s.derived_dims[1] : 0;
    if (derived_dim == 3) {
        rep.verdict = AlgebraReport::Verdict::SL2;
        auto basis = detail::sl2_adapted_basis(sc);
        if (basis)
            rep.adapted_basis = *basis;
        else
            rep.notes = "no rational adapted basis found";
        return rep;
    }
    if (derived_dim == 0) {
        rep.verdict = AlgebraReport::Verdict::Abelian;
        rep.m_class = MClass{MClass::Tag::M1_zero, std::nullopt, std::nullopt};
        return rep;
    }

    // solvable: locate a 2-dimensional Abelian ideal containing the derived algebra
    CoeffMat derived = detail::bracket_span(sc, detail::full_space(3), detail::full_space(3));
    CoeffMat ideal;
    if (derived.size() == 2) {
        CoeffVec inner = sc.apply(derived[0], derived[1]);
        bool abelian = true;
        for (const Coeff& v : inner) abelian = abelian && v.is_zero();
        if (!abelian) {
            rep.verdict = AlgebraReport::Verdict::Unclassified;
            rep.notes = "derived algebra of dimension 2 is not Abelian";
            return rep;
        }
        ideal = derived;
    } else { // derived_dim == 1: extend by a centralizer element
        const CoeffVec& d = derived[0];
        CoeffMat eqs;
        for (int k = 0; k < 3; ++k) {
            CoeffVec row(3, Coeff(Rational(0)));
            for (int i = 0; i < 3; ++i) {
                CoeffVec ei(3, Coeff(Rational(0)));
                ei[i] = Coeff(Rational(1));
                row[i] = sc.apply(d, ei)[k];
            }
            eqs.push_back(std::move(row));
        }
        CoeffMat cent = kernel_basis(eqs);
        CoeffMat probe = {d};
        for (const CoeffVec& x : cent) {
            CoeffMat trial = probe;
            trial.push_back(x);
            if (row_reduce(trial).rank() == 2) {
                ideal = {d, x};
                break;
            }
        }
        if (ideal.empty()) {
            rep.verdict = AlgebraReport::Verdict::Unclassified;
            rep.notes = "no 2-dimensional Abelian ideal certified";
            return rep;
        }
    }

    // complete to a basis with a third direction
    CoeffVec a3;
    for (int i = 0; i < 3; ++i) {
        CoeffVec e(3, Coeff(Rational(0)));
        e[i] = Coeff(Rational(1));
        CoeffMat trial = ideal;
        trial.push_back(e);
        if (row_reduce(trial).rank() == 3) {
            a3 = e;
            break;
        }
    }
    if (a3.empty()) {
        rep.verdict = AlgebraReport::Verdict::Unclassified;
        rep.notes = "could not complete the ideal to a basis";
        return rep;
    }

    // M from [A1, A3] = a A1 + b A2, [A2, A3] = c A1 + d A2
    CoeffMat cols = transpose(ideal);
    auto in_ideal = [&](const CoeffVec& v) -> std::optional<std::pair<Coeff, Coeff>> {
        SolveResult r = solve_exact(cols, v);
        if (!r.consistent) return std::nullopt;
        return std::make_pair(r.x[0], r.x[1]);
    };
    auto row1 = in_ideal(sc.apply(ideal[0], a3));
    auto row2 = in_ideal(sc.apply(ideal[1], a3));
    if (!row1 || !row2) {
        rep.verdict = AlgebraReport::Verdict::Unclassified;
        rep.notes = "action of the complement does not stabilize the ideal";
        return rep;
    }
    Mat2 m{{{row1->first, row1->second}, {row2->first, row2->second}}};
    rep.verdict = AlgebraReport::Verdict::Solvable;
    rep.m_matrix = m;
    rep.m_class = classify_M(m);
    rep.adapted_basis = std::array<CoeffVec, 3>{ideal[0], ideal[1], a3};
    return rep;
}

// Convenience entry point over explicit elements.
inline AlgebraReport analyze_elements(const std::vector<LieElement>& basis) {
    AlgebraReport rep;
    rep.dimension = static_cast<int>(basis.size());
    StructureConstants sc = StructureConstants::from_elements(basis);
    if (rep.dimension == 3) return classify_dim3(sc);
    SeriesResult s = series(sc);
    rep.derived_dims = s.derived_dims;
    rep.lower_central_dims = s.lower_central_dims;
    rep.center_dim = s.center_dim;
    rep.side_conditions = sc.side_conditions();
    if (rep.dimension == 2) {
        Dim2Class c = classify_dim2(sc);
        rep.verdict = c.abelian ? AlgebraReport::Verdict::Abelian
                                : AlgebraReport::Verdict::NonAbelian2;
        return rep;
    }
    if (rep.dimension == 1) {
        rep.verdict = AlgebraReport::Verdict::Abelian;
        return rep;
    }
    rep.verdict = s.solvable ? AlgebraReport::Verdict::Solvable
                             : AlgebraReport::Verdict::Unclassified;
    return rep;
}

} // namespace cnls
