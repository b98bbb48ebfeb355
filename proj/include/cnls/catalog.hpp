#pragma once

#include <sstream>

#include "cnls/catalog_data.hpp"
#include "cnls/report.hpp"
#include "cnls/structure.hpp"

namespace cnls {

// --- catalog records ---------------------------------------------------------

struct CatalogClaim {
    enum class Type { Dim1, Abelian, NonAbelian2, SL2, Solvable } type = Type::Dim1;
    std::optional<MClass::Tag> m_tag;
    std::string m_param; // claimed diagonal/rotation parameter, an expression in the entry params

    std::string render() const {
        switch (type) {
            case Type::Dim1: return "dim1";
            case Type::Abelian: return "abelian";
            case Type::NonAbelian2: return "nonabelian2";
            case Type::SL2: return "sl2";
            case Type::Solvable: break;
        }
        std::string s = "solvable ";
        switch (*m_tag) {
            case MClass::Tag::M1_zero: s += "M1"; break;
            case MClass::Tag::M2_rank1_diag: s += "M2"; break;
            case MClass::Tag::M3_nilpotent: s += "M3"; break;
            case MClass::Tag::M4_diag: s += "M4"; break;
            case MClass::Tag::M5_complex: s += "M5"; break;
            case MClass::Tag::M6_jordan: s += "M6"; break;
        }
        if (!m_param.empty()) s += " " + m_param;
        return s;
    }
};

struct CatalogEntry {
    std::string id;
    std::vector<std::string> generator_text;
    std::vector<std::string> constraint_text;
    CatalogClaim claim;
    std::string note;

    int dimension() const { return static_cast<int>(generator_text.size()); }

    std::vector<LieElement> generators() const {
        std::vector<LieElement> out;
        for (const std::string& g : generator_text) out.push_back(parse_lie_element(g));
        return out;
    }
    std::vector<FuncExpr> constraints() const {
        std::vector<FuncExpr> out;
        for (const std::string& c : constraint_text) out.push_back(parse_expr(c));
        return out;
    }

    std::string render() const {
        std::string out = "id: " + id + "\n";
        for (const std::string& g : generator_text) out += "gen: " + g + "\n";
        for (const std::string& c : constraint_text) out += "constraint: " + c + "\n";
        out += "claim: " + claim.render() + "\n";
        if (!note.empty()) out += "note: " + note + "\n";
        return out;
    }
};

inline CatalogClaim parse_claim(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    CatalogClaim c;
    if (head == "dim1") {
        c.type = CatalogClaim::Type::Dim1;
    } else if (head == "abelian") {
        c.type = CatalogClaim::Type::Abelian;
    } else if (head == "nonabelian2") {
        c.type = CatalogClaim::Type::NonAbelian2;
    } else if (head == "sl2") {
        c.type = CatalogClaim::Type::SL2;
    } else if (head == "solvable") {
        c.type = CatalogClaim::Type::Solvable;
        std::string m;
        is >> m;
        if (m == "M1") c.m_tag = MClass::Tag::M1_zero;
        else if (m == "M2") c.m_tag = MClass::Tag::M2_rank1_diag;
        else if (m == "M3") c.m_tag = MClass::Tag::M3_nilpotent;
        else if (m == "M4") c.m_tag = MClass::Tag::M4_diag;
        else if (m == "M5") c.m_tag = MClass::Tag::M5_complex;
        else if (m == "M6") c.m_tag = MClass::Tag::M6_jordan;
        else throw SyntaxError("unknown action-matrix tag '" + m + "'", 0);
        std::string rest;
        std::getline(is, rest);
        std::size_t a = rest.find_first_not_of(" \t");
        if (a != std::string::npos) c.m_param = rest.substr(a);
    } else {
        throw SyntaxError("unknown claim '" + head + "'", 0);
    }
    return c;
}

// Parse the external tabular format: records separated by blank lines.
inline std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> out;
    CatalogEntry cur;
    bool open = false;
    std::istringstream is(text);
    std::string line;
    auto flush = [&] {
        if (open) {
            if (cur.id.empty()) throw SyntaxError("catalog record without id", 0);
            out.push_back(cur);
            cur = CatalogEntry{};
            open = false;
        }
    };
    while (std::getline(is, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) {
            flush();
            continue;
        }
        if (line[a] == '#') continue;
        std::size_t colon = line.find(':', a);
        if (colon == std::string::npos) throw SyntaxError("catalog line without a field tag", 0);
        std::string tag = line.substr(a, colon - a);
        std::string value = line.substr(colon + 1);
        std::size_t v = value.find_first_not_of(" \t");
        value = v == std::string::npos ? "" : value.substr(v, value.find_last_not_of(" \t\r") - v + 1);
        open = true;
        if (tag == "id") cur.id = value;
        else if (tag == "gen") cur.generator_text.push_back(value);
        else if (tag == "constraint") cur.constraint_text.push_back(value);
        else if (tag == "claim") cur.claim = parse_claim(value);
        else if (tag == "note") cur.note = value;
        else throw SyntaxError("unknown catalog field '" + tag + "'", 0);
    }
    flush();
    return out;
}

inline const std::vector<CatalogEntry>& list_entries() {
    static const std::vector<CatalogEntry> entries = parse_catalog(builtin_catalog_text());
    return entries;
}

inline const CatalogEntry& find_entry(const std::string& id) {
    for (const CatalogEntry& e : list_entries())
        if (e.id == id) return e;
    throw Error("no catalog entry with id " + id);
}

// --- samples -------------------------------------------------------------------

struct SampleAssignment {
    std::string label;
    std::vector<std::pair<std::string, std::string>> funcs;  // slot name -> expression
    std::vector<std::pair<std::string, Rational>> params;    // symbol -> exact value

    std::map<std::string, FuncExpr> func_map() const {
        std::map<std::string, FuncExpr> out;
        for (auto& [n, e] : funcs) out[n] = parse_expr(e);
        return out;
    }
    std::map<int, Coeff> param_map() const {
        std::map<int, Coeff> out;
        for (auto& [n, v] : params) out[SymbolTable::instance().param(n)] = Coeff(v);
        return out;
    }
};

// --- constraint checking ----------------------------------------------------------

struct ConstraintCheck {
    bool ok = true;
    std::vector<std::string> residuals; // rendered nonzero residuals
};

inline ConstraintCheck check_constraints(const CatalogEntry& entry, const SampleAssignment& sample) {
    ConstraintCheck out;
    auto funcs = sample.func_map();
    auto params = sample.param_map();
    for (const FuncExpr& c : entry.constraints()) {
        FuncExpr r = substitute_ufuncs(c, funcs).bind_params(params);
        if (!r.is_zero()) {
            out.ok = false;
            out.residuals.push_back(render(r));
        }
    }
    return out;
}

// Sound (incomplete) real-unsatisfiability test for a bound constraint: a
// polynomial with all-even exponents, same-sign coefficients and a nonzero
// constant term is bounded away from zero.
inline bool constraint_unsatisfiable_over_reals(const FuncExpr& e) {
    if (!e.is_constant()) return false;
    Coeff c = e.constant_value();
    const Poly& num = c.num();
    if (num.is_zero()) return false;
    bool has_const = false;
    int sign = 0;
    for (auto& [m, coeff] : num.terms()) {
        for (auto& [v, exp] : m.factors)
            if (exp % 2 != 0) return false;
        if (m.is_one()) has_const = true;
        int s = coeff > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) return false;
    }
    return has_const;
}

// --- entry verification ------------------------------------------------------------

inline std::optional<Mat2> claimed_m_matrix(const CatalogClaim& claim,
                                            const std::map<int, Coeff>& params) {
    if (claim.type != CatalogClaim::Type::Solvable) return std::nullopt;
    Coeff zero{Rational(0)}, one{Rational(1)};
    Coeff alpha = zero;
    if (!claim.m_param.empty()) {
        FuncExpr e = parse_expr(claim.m_param).bind_params(params);
        if (!e.is_constant()) throw Error("claimed action parameter is not constant");
        alpha = e.constant_value();
    }
    switch (*claim.m_tag) {
        case MClass::Tag::M1_zero: return Mat2{{{zero, zero}, {zero, zero}}};
        case MClass::Tag::M2_rank1_diag: return Mat2{{{one, zero}, {zero, zero}}};
        case MClass::Tag::M3_nilpotent: return Mat2{{{zero, zero}, {one, zero}}};
        case MClass::Tag::M4_diag: return Mat2{{{one, zero}, {zero, alpha}}};
        case MClass::Tag::M5_complex: return Mat2{{{alpha, one}, {-one, alpha}}};
        case MClass::Tag::M6_jordan: return Mat2{{{one, zero}, {one, one}}};
    }
    return std::nullopt;
}

struct EntryVerification {
    std::string entry_id;
    std::string sample_label;
    int expected_dim = 0;
    bool constraints_ok = false;
    std::vector<std::string> constraint_residuals;
    int rank = 0;
    bool independent = false;
    bool closed = false;
    std::string closure_residual;
    AlgebraReport analysis;
    int killing_rank = -1;
    enum class Match { Match, Mismatch, NotComparable } claim_match = Match::NotComparable;
    std::string claim_detail;

    bool structure_ok() const { return constraints_ok && independent && closed; }

    std::string verdict_string() const {
        switch (analysis.verdict) {
            case AlgebraReport::Verdict::Abelian: return "abelian";
            case AlgebraReport::Verdict::NonAbelian2: return "nonabelian2";
            case AlgebraReport::Verdict::Solvable:
                return analysis.m_class ? "solvable " + analysis.m_class->render() : "solvable";
            case AlgebraReport::Verdict::SL2: return "sl2";
            case AlgebraReport::Verdict::Unclassified: return "unclassified";
        }
        return "?";
    }

    nlohmann::ordered_json to_tree() const {
        nlohmann::ordered_json j;
        j["entry"] = entry_id;
        j["sample"] = sample_label;
        j["dimension"] = expected_dim;
        j["constraints_ok"] = constraints_ok;
        if (!constraint_residuals.empty()) j["constraint_residuals"] = constraint_residuals;
        j["rank"] = rank;
        j["closed"] = closed;
        if (!closure_residual.empty()) j["closure_residual"] = closure_residual;
        j["verdict"] = verdict_string();
        if (analysis.m_class) j["m_class"] = analysis.m_class->render();
        j["claim_match"] = claim_match == Match::Match
                               ? "match"
                               : (claim_match == Match::Mismatch ? "mismatch" : "not-comparable");
        if (!claim_detail.empty()) j["claim_detail"] = claim_detail;
        if (!analysis.side_conditions.empty()) j["side_conditions"] = analysis.side_conditions;
        if (!analysis.notes.empty()) j["notes"] = analysis.notes;
        return j;
    }
};

inline EntryVerification verify_entry(const CatalogEntry& entry, const SampleAssignment& sample) {
    EntryVerification out;
    out.entry_id = entry.id;
    out.sample_label = sample.label;
    out.expected_dim = entry.dimension();

    ConstraintCheck cc = check_constraints(entry, sample);
    out.constraints_ok = cc.ok;
    out.constraint_residuals = cc.residuals;

    auto funcs = sample.func_map();
    auto params = sample.param_map();
    std::vector<LieElement> gens;
    for (const LieElement& g : entry.generators())
        gens.push_back(g.substitute_ufuncs(funcs).bind_params(params));

    RankResult rr = cnls::rank(gens);
    out.rank = rr.rank;
    out.independent = rr.rank == out.expected_dim;
    out.analysis.side_conditions = rr.side_conditions;
    if (!out.independent) {
        out.claim_match = EntryVerification::Match::Mismatch;
        out.claim_detail = "generators dependent (rank " + std::to_string(rr.rank) + ")";
        return out;
    }

    StructureConstants sc;
    try {
        sc = StructureConstants::from_elements(gens, /*check_independent=*/false);
        out.closed = true;
    } catch (const NotClosed& e) {
        out.closed = false;
        out.closure_residual = render_lie_element(e.residual);
        out.claim_match = EntryVerification::Match::Mismatch;
        out.claim_detail = "span not closed under the bracket";
        return out;
    }
    out.killing_rank = matrix_rank(killing_form(sc));

    try {
        if (out.expected_dim == 3) {
            out.analysis = classify_dim3(sc);
        } else {
            SeriesResult s = series(sc);
            out.analysis.dimension = out.expected_dim;
            out.analysis.derived_dims = s.derived_dims;
            out.analysis.lower_central_dims = s.lower_central_dims;
            out.analysis.center_dim = s.center_dim;
            if (out.expected_dim == 2) {
                Dim2Class c2 = classify_dim2(sc);
                out.analysis.verdict = c2.abelian ? AlgebraReport::Verdict::Abelian
                                                  : AlgebraReport::Verdict::NonAbelian2;
            } else {
                out.analysis.verdict = AlgebraReport::Verdict::Abelian;
            }
        }
    } catch (const UndecidableSign& e) {
        out.claim_match = EntryVerification::Match::NotComparable;
        out.claim_detail = e.what();
        return out;
    }
    for (const std::string& s : sc.side_conditions()) out.analysis.side_conditions.push_back(s);

    // compare with the claimed structure
    switch (entry.claim.type) {
        case CatalogClaim::Type::Dim1:
            out.claim_match = out.expected_dim == 1 ? EntryVerification::Match::Match
                                                    : EntryVerification::Match::Mismatch;
            break;
        case CatalogClaim::Type::Abelian:
            out.claim_match = out.analysis.verdict == AlgebraReport::Verdict::Abelian
                                  ? EntryVerification::Match::Match
                                  : EntryVerification::Match::Mismatch;
            break;
        case CatalogClaim::Type::NonAbelian2:
            out.claim_match = out.analysis.verdict == AlgebraReport::Verdict::NonAbelian2
                                  ? EntryVerification::Match::Match
                                  : EntryVerification::Match::Mismatch;
            break;
        case CatalogClaim::Type::SL2:
            out.claim_match = out.analysis.verdict == AlgebraReport::Verdict::SL2
                                  ? EntryVerification::Match::Match
                                  : EntryVerification::Match::Mismatch;
            break;
        case CatalogClaim::Type::Solvable: {
            if (out.analysis.verdict != AlgebraReport::Verdict::Solvable || !out.analysis.m_class) {
                out.claim_match = EntryVerification::Match::Mismatch;
                out.claim_detail = "computed verdict " + out.verdict_string();
                break;
            }
            try {
                auto want = claimed_m_matrix(entry.claim, params);
                MClass want_class = classify_M(*want);
                if (want_class == *out.analysis.m_class) {
                    out.claim_match = EntryVerification::Match::Match;
                } else {
                    out.claim_match = EntryVerification::Match::Mismatch;
                    out.claim_detail = "claimed " + want_class.render() + ", computed " +
                                       out.analysis.m_class->render();
                }
            } catch (const UndecidableSign& e) {
                out.claim_match = EntryVerification::Match::NotComparable;
                out.claim_detail = e.what();
            }
            break;
        }
    }
    if (out.claim_match == EntryVerification::Match::Mismatch && out.claim_detail.empty())
        out.claim_detail = "computed verdict " + out.verdict_string();
    return out;
}

// --- default sampling recipes -------------------------------------------------------

namespace detail {

struct FB {
    const char* name;
    const char* expr;
};
struct PB {
    const char* name;
    long num;
    long den = 1;
};

inline SampleAssignment mk(const char* label, std::initializer_list<FB> fs,
                           std::initializer_list<PB> ps) {
    SampleAssignment out;
    out.label = label;
    for (const FB& f : fs) out.funcs.emplace_back(f.name, f.expr);
    bool has_r = false;
    for (const PB& p : ps) {
        out.params.emplace_back(p.name, Rational(p.num, p.den));
        if (std::string(p.name) == "r") has_r = true;
    }
    if (!has_r) out.params.emplace_back("r", Rational(1));
    return out;
}

} // namespace detail

// Three samples per entry: where the entry has free function slots they are
// filled with a polynomial, an exponential, and a constraint-solved partner;
// parameter slots vary across samples and the physical constants run over
// (p,q) = (1,1), (1,4), (4,1) with eps bound consistently to q/p.
inline std::vector<SampleAssignment> default_samples(const std::string& id) {
    using detail::FB;
    using detail::PB;
    auto mk = detail::mk;
    const PB S1p[] = {{"p", 1}, {"q", 1}, {"eps", 1}};
    auto base = [&](const char* label, std::initializer_list<FB> fs, std::initializer_list<PB> extra,
                    long pp, long qq) {
        SampleAssignment s = mk(label, fs, extra);
        s.params.emplace_back("p", Rational(pp));
        s.params.emplace_back("q", Rational(qq));
        s.params.emplace_back("eps", Rational(qq, pp));
        return s;
    };
    (void)S1p;

    if (id == "L_{1,1}" || id == "L_{1,2}" || id == "L_{2,2}" || id == "L_{2,3}" ||
        id == "L_{2,9}" || id == "L_{2,10}" || id == "L_{2,12}" || id == "L_{3,4}" ||
        id == "L_{3,5}" || id == "L_{3,7}" || id == "L_{3,10}" || id == "L_{3,16}" ||
        id == "L_{3,24}" || id == "L_{3,28}" || id == "L_{3,29}" || id == "L_{3,32}" ||
        id == "L_s") {
        std::vector<SampleAssignment> out;
        out.push_back(base("pq11", {}, {}, 1, 1));
        out.push_back(base("pq14", {}, {}, 1, 4));
        out.push_back(base("pq41", {}, {}, 4, 1));
        if (id == "L_{3,24}" || id == "L_{3,28}") {
            // these carry a spare beta (and alpha) constant
        }
        return out;
    }
    if (id == "L_{1,3}")
        return {base("poly", {{"phi", "t^2"}}, {}, 1, 1),
                base("exp", {{"phi", "exp(-t)"}}, {}, 1, 4),
                base("zero", {{"phi", "0"}}, {}, 4, 1)};
    if (id == "L_{1,4}")
        return {base("const", {{"psi", "1"}}, {}, 1, 1),
                base("poly", {{"psi", "t^2"}}, {}, 1, 4),
                base("exp", {{"psi", "exp(-t)"}}, {}, 4, 1)};
    if (id == "L_{2,1}")
        return {base("a0", {}, {{"alpha", 0}}, 1, 1), base("a2", {}, {{"alpha", 2}}, 1, 4),
                base("a-13", {}, {{"alpha", -1, 3}}, 4, 1)};
    if (id == "L_{2,4}")
        return {base("poly", {{"psi", "t^2"}}, {}, 1, 1),
                base("exp", {{"psi", "exp(-t)"}}, {}, 1, 4),
                base("affine", {{"psi", "1 + t"}}, {}, 4, 1)};
    if (id == "L_{2,5}")
        return {base("poly", {{"omega", "t^2"}}, {}, 1, 1),
                base("exp", {{"omega", "exp(-t)"}}, {}, 1, 4),
                base("trig", {{"omega", "cos(t)"}}, {}, 4, 1)};
    if (id == "L_{2,6}")
        return {base("linear", {{"phi", "t"}, {"psi", "1"}, {"Phi", "-eps*t"}}, {}, 1, 1),
                base("exp", {{"phi", "t^2"}, {"psi", "exp(-t)"},
                             {"Phi", "eps*(t^2 + 4*t + 4)*exp(-t)"}}, {}, 1, 4),
                base("swap", {{"phi", "1"}, {"psi", "t"}, {"Phi", "eps*t"}}, {}, 4, 1)};
    if (id == "L_{2,7}")
        return {base("poly", {{"phi", "t"}, {"psi", "t^2"}}, {}, 1, 1),
                base("exp", {{"phi", "exp(-t)"}, {"psi", "1"}}, {}, 1, 4),
                base("trig", {{"phi", "t^2"}, {"psi", "cos(t)"}}, {}, 4, 1)};
    if (id == "L_{2,8}")
        return {base("poly", {{"phi", "1"}, {"psi", "t"}}, {}, 1, 1),
                base("exp", {{"phi", "exp(-t)"}, {"psi", "1"}}, {}, 1, 4),
                base("mixed", {{"phi", "t"}, {"psi", "t^3"}}, {}, 4, 1)};
    if (id == "L_{2,11}")
        return {base("a0", {}, {{"alpha", 0}}, 1, 1), base("a1", {}, {{"alpha", 1}}, 1, 4),
                base("a-32", {}, {{"alpha", -3, 2}}, 4, 1)};

    if (id == "L0_{3,1}")
        return {base("s1", {}, {{"alpha", 2}, {"beta", 1}, {"gamma", 3}, {"mu", 5}}, 1, 1),
                base("s2", {}, {{"alpha", 0}, {"beta", 1}, {"gamma", 0}, {"mu", 1}}, 1, 4),
                base("s3", {}, {{"alpha", -1}, {"beta", 2}, {"gamma", 3}, {"mu", 0}}, 4, 1)};
    if (id == "L0_{3,2}" || id == "L0_{3,3}")
        return {base("s1", {}, {{"alpha", 1}, {"beta", 0}}, 1, 1),
                base("s2", {}, {{"alpha", 0}, {"beta", 1}}, 1, 4),
                base("s3", {}, {{"alpha", 2}, {"beta", -3}}, 4, 1)};
    if (id == "L0_{3,4}")
        return {base("s1", {{"psi", "t"}, {"omega", "t^2"}}, {}, 1, 1),
                base("s2", {{"psi", "exp(-t)"}, {"omega", "1"}}, {}, 1, 4),
                base("s3", {{"psi", "t^2"}, {"omega", "cos(t)"}}, {}, 4, 1)};
    if (id == "L0_{3,5}")
        return {base("s1", {{"phi", "t"}, {"psi", "1"}, {"Phi", "-eps*t"},
                            {"f", "t + 1"}, {"g", "-eps*t + 1"}, {"k", "t^2"}}, {}, 1, 1),
                base("s2", {{"phi", "t"}, {"psi", "1"}, {"Phi", "-eps*t"},
                            {"f", "t + 1"}, {"g", "-eps*t + 1"}, {"k", "exp(-t)"}}, {}, 1, 4),
                base("s3", {{"phi", "t"}, {"psi", "1"}, {"Phi", "-eps*t"},
                            {"f", "2*t + 1"}, {"g", "-eps*t + 2"}, {"k", "t"}}, {}, 4, 1)};
    if (id == "L0_{3,6}")
        return {base("b0", {}, {{"beta", 0}}, 1, 1), base("b1", {}, {{"beta", 1}}, 1, 4),
                base("b-2", {}, {{"beta", -2}}, 4, 1)};
    if (id == "L0_{3,7}")
        return {base("s1", {{"phi", "exp(-t)"}, {"psi", "t"}, {"f", "t^2"}, {"g", "eps*t^3/3"}},
                     {}, 1, 1),
                base("s2", {{"phi", "t"}, {"psi", "1"}, {"f", "exp(-t)"}, {"g", "-eps*exp(-t)"}},
                     {}, 1, 4),
                base("s3", {{"phi", "1"}, {"psi", "t^2"}, {"f", "t"}, {"g", "-eps*t^3/3"}},
                     {}, 4, 1)};
    if (id == "L0_{3,8}")
        return {base("s1", {{"phi", "1"}, {"psi", "t"}, {"f", "t^2"}, {"g", "0"}}, {}, 1, 1),
                base("s2", {{"phi", "exp(-t)"}, {"psi", "1"}, {"f", "t"}, {"g", "t"}}, {}, 1, 4),
                base("s3", {{"phi", "t"}, {"psi", "t^3"}, {"f", "0"}, {"g", "exp(-t)"}}, {}, 4, 1)};

    if (id == "L_{3,12}")
        return {base("b0", {}, {{"beta", 0}}, 1, 1), base("b1", {}, {{"beta", 1}}, 1, 4),
                base("b1b", {}, {{"beta", 1}}, 4, 1)};
    if (id == "L_{3,13}")
        return {base("g-poly", {{"g", "t^2"}}, {{"beta", 1}}, 1, 1),
                base("g-exp", {{"g", "exp(-t)"}}, {{"beta", 1, 2}}, 1, 4),
                base("g-lin", {{"g", "t"}}, {{"beta", 2}}, 4, 1)};
    if (id == "L_{3,23}")
        return {base("s1", {}, {{"alpha", 0}, {"beta", 1}}, 1, 1),
                base("s2", {}, {{"alpha", 2}, {"beta", 0}}, 1, 4),
                base("s3", {}, {{"alpha", -1}, {"beta", 3}}, 4, 1)};

    if (id == "L_{3,2}")
        return {base("s1", {}, {{"alpha", 1}, {"beta", 2}}, 1, 1),
                base("s2", {}, {{"alpha", 2}, {"beta", 1}}, 1, 4),
                base("s3", {}, {{"alpha", -1, 2}, {"beta", -1}}, 4, 1)};
    if (id == "L_{3,11}")
        return {base("s1", {{"omega", "exp(-t)"}, {"f", "2*p*exp(-t)"}, {"psi", "t^2"}},
                     {{"alpha", 1}}, 1, 1),
                base("s2", {{"omega", "t"}, {"f", "-4*p*t^2"}, {"psi", "exp(-t)"}},
                     {{"alpha", 2}}, 1, 4),
                base("s3", {{"omega", "cos(t)"}, {"f", "-p/2*sin(t)"}, {"psi", "t"}},
                     {{"alpha", 1, 2}}, 4, 1)};
    if (id == "L_{3,19}")
        return {base("s1", {}, {{"beta", 1}, {"nu", 3}}, 1, 1),
                base("s2", {}, {{"beta", 1, 2}, {"nu", 0}}, 1, 4),
                base("s3", {}, {{"beta", 2}, {"nu", -1}}, 4, 1)};
    if (id == "L_{3,20}")
        return {base("g-poly", {{"g", "t^2"}}, {{"beta", 1}}, 1, 1),
                base("g-exp", {{"g", "exp(-t)"}}, {{"beta", 1, 2}}, 1, 4),
                base("g-lin", {{"g", "t"}}, {{"beta", 2}}, 4, 1)};
    if (id == "L_{3,25}")
        return {base("text-variant", {{"phi", "exp(-t)"}, {"psi", "t"}, {"f", "t^2"},
                                      {"g", "-2*q*exp(-t) + eps*t^3/3"}}, {{"alpha", 1}}, 1, 1),
                base("alpha2", {{"phi", "exp(-t)"}, {"psi", "t"}, {"f", "t^2"},
                                {"g", "-4*q*exp(-t) + eps*t^3/3"}}, {{"alpha", 2}}, 1, 4),
                base("alpha-1", {{"phi", "t"}, {"psi", "1"}, {"f", "exp(-t)"},
                                 {"g", "-q*t^2 - eps*exp(-t)"}}, {{"alpha", -1}}, 4, 1)};
    if (id == "L_{3,26}")
        return {base("s1", {{"phi", "exp(-t)"}, {"g", "-2*q*exp(-t)"}, {"k", "t"}}, {}, 1, 1),
                base("s2", {{"phi", "t"}, {"g", "q*t^2"}, {"k", "exp(-t)"}}, {}, 1, 4),
                base("s3", {{"phi", "1 + t"}, {"g", "2*q*t + q*t^2"}, {"k", "t^2"}}, {}, 4, 1)};

    if (id == "L_{3,1}")
        return {base("a0", {}, {{"alpha", 0}}, 1, 1), base("a1", {}, {{"alpha", 1}}, 1, 4),
                base("a-2", {}, {{"alpha", -2}}, 4, 1)};
    if (id == "L_{3,3}")
        return {base("a0", {}, {{"alpha", 0}}, 1, 1), base("a2", {}, {{"alpha", 2}}, 1, 4),
                base("a-1", {}, {{"alpha", -1}}, 4, 1)};
    if (id == "L_{3,6}")
        return {base("a0", {}, {{"alpha", 0}}, 1, 1), base("a1", {}, {{"alpha", 1}}, 1, 4),
                base("a-12", {}, {{"alpha", -1, 2}}, 4, 1)};
    if (id == "L_{3,8}")
        return {base("nu1", {}, {{"nu", 1}}, 1, 1), base("nu-1", {}, {{"nu", -1}}, 1, 4),
                base("nu14", {}, {{"nu", 1, 4}}, 4, 1)};
    if (id == "L_{3,9}")
        return {base("a0", {}, {{"alpha", 0}}, 1, 1), base("a1", {}, {{"alpha", 1}}, 1, 4),
                base("a-12", {}, {{"alpha", -1, 2}}, 4, 1)};
    if (id == "L_{3,14}")
        return {base("s1", {}, {{"a", 3}, {"beta", 0}}, 1, 1),
                base("s2", {}, {{"a", -1}, {"beta", 1}}, 1, 4),
                base("s3", {}, {{"a", 0}, {"beta", 1}}, 4, 1)};
    if (id == "L_{3,15}")
        return {base("s1", {{"g", "t^2"}}, {{"a", 3}, {"beta", 1}}, 1, 1),
                base("s2", {{"g", "exp(-t)"}}, {{"a", -1}, {"beta", 1, 2}}, 1, 4),
                base("s3", {{"g", "t"}}, {{"a", 2}, {"beta", 2}}, 4, 1)};
    if (id == "L_{3,27}")
        return {base("nu1", {}, {{"beta", 0}, {"nu", 1}}, 1, 1),
                base("nu12", {}, {{"beta", 1}, {"nu", 1, 2}}, 1, 4),
                base("nu-1", {}, {{"beta", -2}, {"nu", -1}}, 4, 1)};
    if (id == "L_{3,30}")
        return {base("d2", {}, {{"d", 2}}, 1, 1), base("d3", {}, {{"d", 3}}, 1, 4),
                base("d-1", {}, {{"d", -1}}, 4, 1)};

    if (id == "L_{3,17}")
        return {base("s1",
                     {{"phi", "cos(t)"}, {"psi", "sin(t)"}, {"Phi", "cos(t)"},
                      {"Psi", "-sin(t)"}, {"f", "cos(t) + 2*sin(t)"}, {"g", "2*cos(t) - sin(t)"}},
                     {{"a", 0}, {"rho", 1}, {"beta", 0}, {"delta", 1}, {"sigma", 2}}, 1, 1),
                base("s2",
                     {{"phi", "exp(-t)*cos(t)"}, {"psi", "exp(-t)*sin(t)"},
                      {"Phi", "exp(-t)*cos(t)"}, {"Psi", "-exp(-t)*sin(t)"}, {"f", "0"}, {"g", "0"}},
                     {{"a", 1}, {"rho", 1}, {"beta", 0}, {"delta", 0}, {"sigma", 0}}, 1, 1),
                base("s3",
                     {{"phi", "cos(t)"}, {"psi", "sin(t)"}, {"Phi", "2*cos(t) + sin(t)"},
                      {"Psi", "cos(t) - 2*sin(t)"}, {"f", "2*cos(t)"}, {"g", "2*cos(t) - 4*sin(t)"}},
                     {{"a", 0}, {"rho", 2}, {"beta", 1}, {"delta", 1}, {"sigma", 1}}, 1, 5)};
    if (id == "L_{3,18}")
        return {base("s1",
                     {{"phi", "cos(t)"}, {"psi", "sin(t)"}, {"Phi", "sin(t)"}, {"Psi", "cos(t)"},
                      {"f", "t^2"}, {"g", "t^2"}},
                     {{"a", 0}, {"beta", 1}}, 1, 1),
                base("s2",
                     {{"phi", "exp(-t)*cos(t)"}, {"psi", "exp(-t)*sin(t)"},
                      {"Phi", "2*exp(-t)*sin(t)"}, {"Psi", "2*exp(-t)*cos(t)"}, {"f", "exp(-t)"},
                      {"g", "2*exp(-t)"}},
                     {{"a", 1}, {"beta", 2}}, 1, 4),
                base("s3",
                     {{"phi", "cos(t)"}, {"psi", "sin(t)"}, {"Phi", "1/2*sin(t)"},
                      {"Psi", "1/2*cos(t)"}, {"f", "t"}, {"g", "t/2"}},
                     {{"a", 0}, {"beta", 1, 2}}, 4, 1)};
    if (id == "L_{3,31}")
        return {base("a0", {}, {{"a", 0}}, 1, 1), base("a1", {}, {{"a", 1}}, 1, 4),
                base("a2", {}, {{"a", 2}}, 4, 1)};

    if (id == "L_{3,21}")
        return {base("s1", {}, {{"beta", 1}, {"nu", 2}, {"sigma", -1}}, 1, 1),
                base("s2", {}, {{"beta", 1, 2}, {"nu", 0}, {"sigma", 1}}, 1, 4),
                base("s3", {}, {{"beta", 2}, {"nu", 1}, {"sigma", 0}}, 4, 1)};
    if (id == "L_{3,22}")
        return {base("g-poly", {{"g", "t^2"}}, {{"beta", 1}}, 1, 1),
                base("g-exp", {{"g", "exp(-t)"}}, {{"beta", 1, 2}}, 1, 4),
                base("g-lin", {{"g", "t"}}, {{"beta", 2}}, 4, 1)};

    throw Error("no sampling recipe for catalog entry " + id);
}

// --- whole-catalog sweeps and distinguishers -----------------------------------------

struct CatalogSweep {
    std::vector<EntryVerification> results;
    std::vector<std::string> mismatches; // explicit list of paper-vs-computed deviations

    bool structure_all_ok() const {
        for (const EntryVerification& v : results)
            if (!v.structure_ok()) return false;
        return true;
    }
};

inline CatalogSweep sweep_catalog(const std::vector<CatalogEntry>& entries) {
    CatalogSweep out;
    for (const CatalogEntry& e : entries)
        for (const SampleAssignment& s : default_samples(e.id)) {
            EntryVerification v = verify_entry(e, s);
            if (v.claim_match == EntryVerification::Match::Mismatch)
                out.mismatches.push_back(e.id + " [" + s.label + "]: " + v.claim_detail);
            out.results.push_back(std::move(v));
        }
    return out;
}

// Invariant vector used to separate entries; function-slot choices inside one
// family do not move it.
struct InvariantVector {
    int dim = 0;
    std::vector<int> derived;
    int center = 0;
    std::string verdict;
    int killing = -1;

    bool operator==(const InvariantVector& o) const {
        return dim == o.dim && derived == o.derived && center == o.center &&
               verdict == o.verdict && killing == o.killing;
    }
    std::string render() const {
        std::string s = "dim " + std::to_string(dim) + "; derived";
        for (int d : derived) s += " " + std::to_string(d);
        s += "; center " + std::to_string(center) + "; " + verdict +
             "; killing rank " + std::to_string(killing);
        return s;
    }
};

struct DistinguishReport {
    std::vector<std::pair<std::string, InvariantVector>> rows; // "entry [sample]" -> invariants
    std::vector<std::pair<std::string, std::string>> separated;
    std::vector<std::pair<std::string, std::string>> indistinguishable;
};

inline InvariantVector invariant_vector(const EntryVerification& v) {
    InvariantVector out;
    out.dim = v.expected_dim;
    out.derived = v.analysis.derived_dims;
    out.center = v.analysis.center_dim;
    out.verdict = v.verdict_string();
    out.killing = v.killing_rank;
    return out;
}

inline DistinguishReport distinguish(const std::vector<EntryVerification>& results) {
    DistinguishReport rep;
    for (const EntryVerification& v : results)
        rep.rows.emplace_back(v.entry_id + " [" + v.sample_label + "]", invariant_vector(v));
    for (std::size_t i = 0; i < results.size(); ++i)
        for (std::size_t j = i + 1; j < results.size(); ++j) {
            if (results[i].entry_id == results[j].entry_id) continue;
            if (results[i].expected_dim != results[j].expected_dim) continue;
            bool same = invariant_vector(results[i]) == invariant_vector(results[j]);
            auto pair = std::make_pair(rep.rows[i].first, rep.rows[j].first);
            (same ? rep.indistinguishable : rep.separated).push_back(pair);
        }
    return rep;
}

// Entries whose existence constraint eps*beta^2 = 1 has no real solution once
// eps is bound to a negative value.
inline SuiteReport remark2_report(const Rational& eps_value = Rational(-1)) {
    SuiteReport rep;
    rep.suite = "remark2";
    int eps = SymbolTable::instance().eps();
    for (const char* id : {"L_{3,13}", "L_{3,15}", "L_{3,19}", "L_{3,20}", "L_{3,21}", "L_{3,22}"}) {
        const CatalogEntry& e = find_entry(id);
        bool found_unsat = false;
        for (const FuncExpr& c : e.constraints()) {
            FuncExpr bound = c.bind_params({{eps, Coeff(eps_value)}});
            if (constraint_unsatisfiable_over_reals(bound)) found_unsat = true;
        }
        rep.add(std::string(id) + " constraint unsatisfiable over the reals at eps = " +
                    to_string(eps_value),
                found_unsat);
    }
    return rep;
}

} // namespace cnls
