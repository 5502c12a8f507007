#pragma once

// Command-line surface.  Parses argv, dispatches to the computation
// modules, and wraps every result in a stable output envelope
// {command, version, format, payload, elapsed_ms}.  JSON payloads are
// byte-identical across identical invocations; text output is rendered
// from the JSON payload, never the other way around.
//
// Exit codes: 0 success, 1 computational hard error or failed fixture
// check, 2 usage error / malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "grassbwb/bwb.hpp"
#include "grassbwb/charring.hpp"
#include "grassbwb/common.hpp"
#include "grassbwb/deglocus.hpp"
#include "grassbwb/exactness.hpp"
#include "grassbwb/expr.hpp"
#include "grassbwb/fixtures.hpp"
#include "grassbwb/json_io.hpp"
#include "grassbwb/pipeline.hpp"
#include "grassbwb/render.hpp"
#include "grassbwb/schubert.hpp"
#include "grassbwb/weights.hpp"

namespace grassbwb::cli {

namespace detail {

using nlohmann::json;

inline Weight jweight(const json& arr) {
    Weight w;
    for (const auto& v : arr) w.push_back(v.get<int>());
    return w;
}

/// Fold one more determinant twist into the customary block.
inline HomogeneousBundle with_extra_twist(const HomogeneousBundle& b, int t) {
    if (t == 0) return b;
    if (!(b.quot_part == CharElement::trivial(b.n - b.k)))
        return HomogeneousBundle(b.k, b.n, b.sub_part,
                                 twist_by_determinant(b.quot_part, -t));
    return HomogeneousBundle(b.k, b.n, twist_by_determinant(b.sub_part, t),
                             b.quot_part);
}

inline json decompose_payload(const std::string& expr_text, const HomogeneousBundle& b) {
    struct Term {
        Weight wp, wq;
        i64 mult;
    };
    std::vector<Term> terms;
    for (const auto& [wp, mp] : b.sub_part.terms())
        for (const auto& [wq, mq] : b.quot_part.terms())
            terms.push_back({wp, wq, mp * mq});
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& z) {
        if (a.wp != z.wp) return a.wp > z.wp;
        return a.wq > z.wq;
    });

    json arr = json::array();
    i64 rank = 0;
    for (const auto& t : terms) {
        const i64 dim = weyl_dimension(t.wp) * weyl_dimension(t.wq);
        rank += t.mult * dim;
        arr.push_back(json{{"dim", dim},
                           {"mult", t.mult},
                           {"w_doubleprime", weight_to_json(t.wq)},
                           {"w_prime", weight_to_json(t.wp)}});
    }
    return json{{"bundle", expr_text},
                {"k", b.k},
                {"n", b.n},
                {"rank", rank},
                {"terms", arr}};
}

inline E1Page page_from_json(const json& j) {
    if (!j.is_object())
        throw std::invalid_argument("page must be a JSON object with an \"entries\" array");
    E1Page page;
    if (j.contains("max_total_degree"))
        page.max_total_degree = j.at("max_total_degree").get<int>();
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("page entries must be [p, q, dim] triples");
        page.set(e[0].get<int>(), e[1].get<int>(), e[2].get<i64>());
    }
    return page;
}

/// Column object {"degree": dim-or-null, ...}; absent degrees are known 0.
inline std::vector<std::optional<i64>> column_from_json(const json& j, int len) {
    if (!j.is_object())
        throw std::invalid_argument("a column must be a JSON object mapping degree to dim or null");
    std::vector<std::optional<i64>> col(static_cast<std::size_t>(len) + 1,
                                        std::optional<i64>(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        int deg = 0;
        try {
            std::size_t used = 0;
            deg = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("column keys must be integer degrees, got \"" +
                                        it.key() + "\"");
        }
        if (deg < 0 || deg > len)
            throw std::invalid_argument("column degree " + std::to_string(deg) +
                                        " outside [0, " + std::to_string(len) + "]");
        col[static_cast<std::size_t>(deg)] =
            it.value().is_null() ? std::optional<i64>() : std::optional<i64>(it.value().get<i64>());
    }
    return col;
}

// ---------------------------------------------------------------------------
// Text renderings, all derived from the JSON payload.

inline std::string text_bwb(const json& p) {
    std::ostringstream os;
    os << "bundle: " << p.at("bundle").get<std::string>() << " on G("
       << p.at("k").get<int>() << "," << p.at("n").get<int>() << ")\n";
    std::vector<std::vector<std::string>> rows{{"w'", "w''", "w+rho", "l(w)", "mult", "dim"}};
    for (const auto& s : p.at("summands"))
        rows.push_back({weight_str(jweight(s.at("w_prime"))),
                        weight_str(jweight(s.at("w_doubleprime"))),
                        weight_str(jweight(s.at("sum_weight"))),
                        std::to_string(s.at("degree").get<int>()),
                        std::to_string(s.at("mult").get<i64>()),
                        std::to_string(s.at("dimension").get<i64>())});
    os << grassbwb::detail::aligned_rows(rows);
    const json& coh = p.at("cohomology");
    if (coh.empty()) {
        os << "cohomology: all groups vanish\n";
    } else {
        os << "cohomology:\n";
        for (const auto& kv : coh)
            os << "  H^" << kv[0].get<int>() << " = C^" << kv[1].get<i64>() << "\n";
    }
    return os.str();
}

inline std::string text_decompose(const json& p) {
    std::ostringstream os;
    os << "bundle: " << p.at("bundle").get<std::string>() << " on G("
       << p.at("k").get<int>() << "," << p.at("n").get<int>() << ")\n";
    std::vector<std::vector<std::string>> rows{{"w'", "w''", "mult", "dim"}};
    for (const auto& t : p.at("terms"))
        rows.push_back({weight_str(jweight(t.at("w_prime"))),
                        weight_str(jweight(t.at("w_doubleprime"))),
                        std::to_string(t.at("mult").get<i64>()),
                        std::to_string(t.at("dim").get<i64>())});
    os << grassbwb::detail::aligned_rows(rows);
    os << "rank: " << p.at("rank").get<i64>() << "\n";
    return os.str();
}

inline std::string text_integrate(const json& p) {
    std::ostringstream os;
    os << "expr: " << p.at("expr").get<std::string>() << "\n"
       << "integral = " << p.at("value").get<i64>() << "\n";
    return os.str();
}

inline std::string text_expand(const json& p) {
    std::ostringstream os;
    os << "expr: " << p.at("expr").get<std::string>() << "\n"
       << "class = " << p.at("sigma").get<std::string>() << "\n";
    return os.str();
}

inline std::string text_invariants(const json& p) {
    std::vector<std::vector<std::string>> rows;
    for (auto it = p.begin(); it != p.end(); ++it)
        rows.push_back({it.key(), std::to_string(it.value().get<i64>())});
    return grassbwb::detail::aligned_rows(rows);
}

inline std::string text_abut(const json& p) {
    std::ostringstream os;
    os << "E1 entries (p, q, dim):\n";
    for (const auto& e : p.at("entries"))
        os << "  (" << e[0].get<int>() << ", " << e[1].get<int>() << ") = "
           << e[2].get<i64>() << "\n";
    const json& a = p.at("abutment");
    if (a.at("forced").get<bool>()) {
        os << "abutment: forced\n";
        const json& coh = a.at("cohomology");
        if (coh.empty()) os << "  all groups vanish\n";
        for (const auto& kv : coh)
            os << "  H^" << kv[0].get<int>() << " = C^" << kv[1].get<i64>() << "\n";
    } else {
        os << "abutment: ambiguous; undetermined ranks:\n";
        for (const auto& u : a.at("undetermined"))
            os << "  " << u.get<std::string>() << "\n";
    }
    return os.str();
}

inline std::string les_entry_str(const json& e) {
    if (e.at("forced").get<bool>()) return std::to_string(e.at("value").get<i64>());
    std::string s = "[" + std::to_string(e.at("lo").get<i64>()) + ", ";
    s += e.at("hi").is_null() ? "inf)" : std::to_string(e.at("hi").get<i64>()) + "]";
    return s;
}

inline std::string text_les(const json& p) {
    std::ostringstream os;
    const auto len = p.at("a").size();
    std::vector<std::vector<std::string>> rows{{"deg", "a", "b", "c"}};
    for (std::size_t d = 0; d < len; ++d)
        rows.push_back({std::to_string(d), les_entry_str(p.at("a")[d]),
                        les_entry_str(p.at("b")[d]), les_entry_str(p.at("c")[d])});
    os << grassbwb::detail::aligned_rows(rows);
    if (p.at("all_forced").get<bool>()) {
        os << "all entries forced by exactness\n";
    } else {
        os << "unresolved:\n";
        for (const auto& u : p.at("unresolved")) os << "  " << u.get<std::string>() << "\n";
    }
    return os.str();
}

inline std::string text_report(const json& p) {
    std::ostringstream os;
    const json& h = p.at("hodge");
    os << "invariants of the surface of second-type lines on a general cubic fourfold\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"irregularity q", std::to_string(h.at("q").get<i64>())});
    rows.push_back({"geometric genus p_g", std::to_string(h.at("p_g").get<i64>())});
    rows.push_back({"h^{1,1}", std::to_string(h.at("h11").get<i64>())});
    rows.push_back({"Betti b_0..b_4",
                    std::to_string(h.at("b0").get<i64>()) + ", " +
                        std::to_string(h.at("b1").get<i64>()) + ", " +
                        std::to_string(h.at("b2").get<i64>()) + ", " +
                        std::to_string(h.at("b3").get<i64>()) + ", " +
                        std::to_string(h.at("b4").get<i64>())});
    rows.push_back({"chi_top", std::to_string(h.at("chi_top").get<i64>())});
    rows.push_back({"chi(O_S)", std::to_string(h.at("chi_O").get<i64>())});
    rows.push_back({"K_S^2", std::to_string(h.at("K_S_sq").get<i64>())});
    os << grassbwb::detail::aligned_rows(rows);

    const json& tw = h.at("torsion_witness");
    os << "torsion witness:\n"
       << "  h^3(F, I_S(3H)) = " << tw.at("h3_IS3H").get<i64>() << "\n"
       << "  h^2(F, O_F(3H)) = " << tw.at("h2_OF3H").get<i64>() << "\n"
       << "  expected h^2(S, K_S) = " << tw.at("h2_KS_expected").get<i64>() << "\n"
       << "  torsion in Pic(S): "
       << (tw.at("torsion").get<bool>() ? "present" : "absent") << "\n";
    if (!tw.at("order_note").get<std::string>().empty())
        os << "  note: " << tw.at("order_note").get<std::string>() << "\n";

    os << "declared inputs:\n";
    for (const auto& s : h.at("declared_inputs"))
        os << "  - " << s.get<std::string>() << "\n";

    os << "surface intersection numbers:\n" << text_invariants(p.at("surface"));
    if (p.contains("check")) {
        const json& c = p.at("check");
        os << "fixture checks:\n";
        for (const auto& chk : c.at("checks")) {
            if (chk.at("pass").get<bool>()) {
                os << "  ok   " << chk.at("name").get<std::string>() << "\n";
            } else {
                os << "  FAIL " << chk.at("name").get<std::string>() << "\n"
                   << "    expected: " << chk.at("expected").get<std::string>() << "\n"
                   << "    actual:   " << chk.at("actual").get<std::string>() << "\n";
            }
        }
        os << "checks passed: " << c.at("passed").get<i64>() << " of "
           << c.at("total").get<i64>() << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Fixture verification for `reproduce paper --check`.

inline std::pair<json, bool> run_paper_checks() {
    struct Check {
        std::string name;
        bool pass;
        std::string expected, actual;
    };
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string expected, std::string actual) {
        checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
    };
    auto eq_i64 = [&](const std::string& name, i64 expected, i64 actual) {
        add(name, expected == actual, std::to_string(expected), std::to_string(actual));
    };
    auto eq_class = [&](const std::string& name, const SchubertElement& expected,
                        const SchubertElement& actual) {
        add(name, expected == actual, schubert_str(expected), schubert_str(actual));
    };
    auto eq_text = [&](const std::string& name, const std::string& expected,
                       const std::string& actual) {
        add(name, expected == actual, expected, actual);
    };

    // Top Chern class of Sym^3 U*, both displayed forms.
    eq_class("classF quadratic form", parse_class(fixtures::kClassFQuadraticForm),
             class_of_F());
    eq_class("classF sigma basis", parse_class(fixtures::kClassFBasisForm), class_of_F());

    // Headline intersection numbers on G(2,6).
    eq_i64("degree of G(2,6)", 14, integrate(power(sigma(2, 6, {1}), 8)));
    eq_i64("integral s2^2 classF", 45, integrate(parse_class("s2^2 * classF")));
    eq_i64("degree of F", 108, integrate(parse_class("s1^4 * classF")));

    // The four Koszul-factor families: aggregated cohomology per power.
    struct FamilyFixture {
        std::string name;
        std::function<HomogeneousBundle(int)> fam;
        std::map<int, std::map<int, i64>> nonzero;  // p -> degree -> dim
    };
    const std::vector<FamilyFixture> fams = {
        {"cohomology family Sym^2 U (H)", koszul_sym2u(1), {{2, {{4, 36}}}}},
        {"cohomology family Q* (H)", koszul_qdual(1), {{0, {{0, 20}}}, {3, {{5, 1}}}}},
        {"cohomology family Sym^2 U (-2H)",
         koszul_sym2u(-2),
         {{3, {{8, 126}}}, {4, {{8, 1134}}}}},
        {"cohomology family Q* (-2H)", koszul_qdual(-2), {{1, {{5, 1}}}, {4, {{8, 560}}}}},
    };
    for (const auto& ff : fams) {
        json expected = json::array(), actual = json::array();
        bool pass = true;
        for (int p = 0; p <= 4; ++p) {
            const BwbResult r = bwb_bundle(ff.fam(p));
            const auto it = ff.nonzero.find(p);
            const std::map<int, i64> want =
                it == ff.nonzero.end() ? std::map<int, i64>{} : it->second;
            expected.push_back(degree_map_to_json(want));
            actual.push_back(degree_map_to_json(r.aggregated));
            if (r.aggregated != want) pass = false;
        }
        add(ff.name, pass, expected.dump(), actual.dump());
    }

    // Weyl dimensions of the cited dominant weights.
    for (const auto& [w, dim] : fixtures::cited_weyl_dimensions())
        eq_i64("weyl dim " + weight_str(w), dim, weyl_dimension(w));

    // Segre coefficients of Q^vee - Sym^2 U.
    const SegreTable seg = SegreTable::standard();
    for (std::size_t i = 0; i < fixtures::kSegreDisplayed.size(); ++i)
        eq_class("segre coefficient s" + std::to_string(i),
                 parse_class(fixtures::kSegreDisplayed[i]), seg.at(static_cast<int>(i)));

    // Surface intersection numbers.
    const SurfaceInvariants v = surface_invariants();
    eq_i64("H_S^2", 315, v.HS_sq);
    eq_i64("c2(C)", 495, v.c2_C);
    eq_i64("c1^2(C)", -180, v.c1sq_C);
    eq_i64("c1^2(K)", 315, v.c1sq_K);
    eq_i64("c1(K).c1(C)", -315, v.c1K_c1C);
    eq_i64("c2(N)", 1125, v.c2_N);
    eq_i64("K_S^2", 2835, v.KS_sq);
    eq_i64("c2(T_S)", 2565, v.c2_TS);
    eq_i64("chi(O_S)", 450, v.chi_O);

    // E1 pages and forced abutments of the five Koszul complexes.
    struct AbutFixture {
        std::string name;
        std::function<HomogeneousBundle(int)> fam;
        std::map<std::pair<int, int>, i64> page;
        std::map<int, i64> coh;
    };
    const std::vector<AbutFixture> abuts = {
        {"Sym^2 U (-2H)", koszul_sym2u(-2), {{{-4, 8}, 1134}, {{-3, 8}, 126}}, {{4, 1008}}},
        {"Q* (-2H)", koszul_qdual(-2), {{{-4, 8}, 560}, {{-1, 5}, 1}}, {{4, 561}}},
        {"Sym^2 U (H)", koszul_sym2u(1), {{{-2, 4}, 36}}, {{2, 36}}},
        {"Q* (H)", koszul_qdual(1), {{{0, 0}, 20}, {{-3, 5}, 1}}, {{0, 20}, {2, 1}}},
        {"O (3H)",
         koszul_structure(3),
         {{{0, 0}, 490}, {{-1, 0}, 56}, {{-2, 0}, 1}},
         {{0, 435}}},
    };
    auto entries_str = [](const std::map<std::pair<int, int>, i64>& m) {
        json a = json::array();
        for (const auto& [pq, dim] : m)
            a.push_back(json::array({pq.first, pq.second, dim}));
        return a.dump();
    };
    for (const auto& af : abuts) {
        const E1Page page = assemble_e1(af.fam);
        add("E1 page " + af.name, page.entries == af.page, entries_str(af.page),
            entries_str(page.entries));
        const AbutmentResult res = solve_abutment(page);
        add("abutment " + af.name, res.forced && res.cohomology == af.coh,
            degree_map_to_json(af.coh).dump(), abutment_to_json(res).dump());
    }

    // Proof-style weight tables and the nonzero-group summary.
    const RenderedFamily rf1 = make_family("Sym^2 U", 1, koszul_sym2u(1));
    const RenderedFamily rf2 = make_family("Q*", 1, koszul_qdual(1));
    const RenderedFamily rf3 = make_family("Sym^2 U", -2, koszul_sym2u(-2));
    const RenderedFamily rf4 = make_family("Q*", -2, koszul_qdual(-2));
    eq_text("weight table Sym^2 U (H)", fixtures::kTableSym2uH, render_proof_table(rf1));
    eq_text("weight table Q* (H)", fixtures::kTableQdualH, render_proof_table(rf2));
    eq_text("weight table Sym^2 U (-2H)", fixtures::kTableSym2uM2H,
            render_proof_table(rf3));
    eq_text("weight table Q* (-2H)", fixtures::kTableQdualM2H, render_proof_table(rf4));
    eq_text("nonzero summary", fixtures::kNonzeroSummary,
            render_nonzero_summary({rf1, rf2, rf3, rf4}));

    // Hodge numbers, Betti numbers, torsion witness.
    const HodgeReport rep = hodge_numbers();
    eq_i64("irregularity q", 0, rep.q);
    eq_i64("geometric genus p_g", 449, rep.p_g);
    eq_i64("h^{1,1}", 1665, rep.h11);
    eq_i64("b_2", 2563, rep.b2);
    eq_i64("chi_top", 2565, rep.chi_top);
    eq_i64("torsion witness h^3(I_S(3H))", 0, rep.torsion_witness.h3_IS3H);
    eq_i64("torsion witness expected h^2(K_S)", 1, rep.torsion_witness.h2_KS_expected);
    add("torsion witness present", rep.torsion_witness.torsion, "true",
        rep.torsion_witness.torsion ? "true" : "false");

    json arr = json::array();
    i64 passed = 0;
    for (const auto& c : checks) {
        if (c.pass) ++passed;
        arr.push_back(json{{"actual", c.actual},
                           {"expected", c.expected},
                           {"name", c.name},
                           {"pass", c.pass}});
    }
    const bool all = passed == static_cast<i64>(checks.size());
    return {json{{"all_passed", all},
                 {"checks", arr},
                 {"passed", passed},
                 {"total", static_cast<i64>(checks.size())}},
            all};
}

}  // namespace detail

/// Entry point used by both the binary and the tests; `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    using detail::json;

    CLI::App app{"exact cohomology, Schubert calculus, and degeneracy-locus "
                 "invariants for homogeneous bundles on Grassmannians",
                 "grassbwb"};
    app.require_subcommand(1);
    app.footer(
        "bundle grammar:  U | Q | O | H(t) | dual(e) | sym(m,e) | wedge(p,e) | e * e\n"
        "  U, Q: tautological sub/quotient bundle; O: structure sheaf; H(t): twist by O(t)\n"
        "class grammar:   s1 | s[a,b] | classF | classS | integers, with +, -, *, ^\n"
        "examples:\n"
        "  grassbwb bwb --k 2 --n 6 --bundle \"wedge(2,sym(3,U)) * sym(2,U) * H(1)\"\n"
        "  grassbwb schubert integrate \"s1^4 * classF\"\n"
        "  grassbwb exactness les --a '{\"2\":36}' --b '{\"0\":20,\"2\":1}'\n"
        "  grassbwb reproduce paper --check");

    std::string format = "text";
    int k = 2, n = 6, twist = 0;
    std::string bundle_expr, class_expr, page_text, col_a, col_b, col_c;
    int les_len = 4;
    bool check = false;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    CLI::App* sub_bwb = app.add_subcommand(
        "bwb", "all cohomology groups of a homogeneous bundle");
    sub_bwb->add_option("--k", k, "rank of the tautological subbundle")
        ->capture_default_str();
    sub_bwb->add_option("--n", n, "dimension of the ambient space")
        ->capture_default_str();
    sub_bwb->add_option("--twist", twist, "extra twist by O(t)")->capture_default_str();
    sub_bwb->add_option("--bundle", bundle_expr, "bundle expression")->required();
    add_format(sub_bwb);

    CLI::App* sub_dec = app.add_subcommand(
        "decompose", "irreducible block decomposition of a bundle expression");
    sub_dec->add_option("--k", k, "rank of the tautological subbundle")
        ->capture_default_str();
    sub_dec->add_option("--n", n, "dimension of the ambient space")
        ->capture_default_str();
    sub_dec->add_option("--twist", twist, "extra twist by O(t)")->capture_default_str();
    sub_dec->add_option("--bundle", bundle_expr, "bundle expression")->required();
    add_format(sub_dec);

    CLI::App* sub_sch =
        app.add_subcommand("schubert", "Schubert-basis computations on G(2,6)");
    sub_sch->require_subcommand(1);
    CLI::App* sch_int =
        sub_sch->add_subcommand("integrate", "integrate a class over G(2,6)");
    sch_int->add_option("expr", class_expr, "class expression")->required();
    add_format(sch_int);
    CLI::App* sch_exp =
        sub_sch->add_subcommand("expand", "expand a class in the sigma basis");
    sch_exp->add_option("expr", class_expr, "class expression")->required();
    add_format(sch_exp);

    CLI::App* sub_deg = app.add_subcommand(
        "deglocus", "invariants of the rank-2 degeneracy surface");
    sub_deg->require_subcommand(1);
    CLI::App* deg_inv = sub_deg->add_subcommand(
        "invariants", "intersection numbers of the degeneracy surface");
    add_format(deg_inv);

    CLI::App* sub_ex = app.add_subcommand(
        "exactness", "spectral-sequence abutments and long exact sequences");
    sub_ex->require_subcommand(1);
    CLI::App* ex_abut = sub_ex->add_subcommand(
        "abut", "forced abutment of a second-quadrant E1 page");
    ex_abut
        ->add_option("--page", page_text,
                     "JSON page {\"entries\": [[p,q,dim],...], \"max_total_degree\": d}")
        ->required();
    add_format(ex_abut);
    CLI::App* ex_les = sub_ex->add_subcommand(
        "les", "solve a three-column long exact sequence; give exactly two of "
               "--a/--b/--c, each a JSON object degree->dim (null = unknown)");
    ex_les->add_option("--a", col_a, "first column");
    ex_les->add_option("--b", col_b, "second column");
    ex_les->add_option("--c", col_c, "third column");
    ex_les->add_option("--len", les_len, "top degree of each column")
        ->capture_default_str();
    add_format(ex_les);

    CLI::App* sub_rep = app.add_subcommand(
        "reproduce", "end-to-end reports with embedded fixture verification");
    sub_rep->require_subcommand(1);
    CLI::App* rep_paper = sub_rep->add_subcommand(
        "paper", "full invariant report for the second-type-line surface");
    rep_paper->add_flag("--check", check,
                        "verify every embedded fixture; nonzero exit on mismatch");
    add_format(rep_paper);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << "run with --help for usage\n";
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::string command;
    json payload;
    std::string text;
    int exit_code = 0;

    try {
        if (sub_bwb->parsed()) {
            command = "bwb";
            const HomogeneousBundle b =
                detail::with_extra_twist(parse_bundle(bundle_expr, k, n), twist);
            payload = bwb_to_json(bwb_bundle(b));
            payload["bundle"] = bundle_expr;
            payload["twist"] = twist;
            text = detail::text_bwb(payload);
        } else if (sub_dec->parsed()) {
            command = "decompose";
            const HomogeneousBundle b =
                detail::with_extra_twist(parse_bundle(bundle_expr, k, n), twist);
            payload = detail::decompose_payload(bundle_expr, b);
            payload["twist"] = twist;
            text = detail::text_decompose(payload);
        } else if (sch_int->parsed()) {
            command = "schubert integrate";
            payload = json{{"expr", class_expr},
                           {"k", 2},
                           {"n", 6},
                           {"value", integrate(parse_class(class_expr))}};
            text = detail::text_integrate(payload);
        } else if (sch_exp->parsed()) {
            command = "schubert expand";
            payload = schubert_to_json(parse_class(class_expr));
            payload["expr"] = class_expr;
            text = detail::text_expand(payload);
        } else if (deg_inv->parsed()) {
            command = "deglocus invariants";
            payload = invariants_to_json(surface_invariants());
            text = detail::text_invariants(payload);
        } else if (ex_abut->parsed()) {
            command = "exactness abut";
            const E1Page page = detail::page_from_json(json::parse(page_text));
            json entries = json::array();
            for (const auto& [pq, dim] : page.entries)
                entries.push_back(json::array({pq.first, pq.second, dim}));
            payload = json{{"abutment", abutment_to_json(solve_abutment(page))},
                           {"entries", entries},
                           {"max_total_degree", page.max_total_degree}};
            text = detail::text_abut(payload);
        } else if (ex_les->parsed()) {
            command = "exactness les";
            const int given = (ex_les->count("--a") ? 1 : 0) +
                              (ex_les->count("--b") ? 1 : 0) +
                              (ex_les->count("--c") ? 1 : 0);
            if (given != 2)
                throw std::invalid_argument(
                    "exactness les: give exactly two of --a/--b/--c; the "
                    "omitted column is solved for");
            auto col = [&](const std::string& text_col, bool present) {
                return present ? detail::column_from_json(json::parse(text_col), les_len)
                               : unknown_column(les_len);
            };
            const LesResult res = les_solve(col(col_a, ex_les->count("--a") > 0),
                                            col(col_b, ex_les->count("--b") > 0),
                                            col(col_c, ex_les->count("--c") > 0),
                                            les_len);
            payload = les_to_json(res);
            payload["length"] = les_len;
            payload["solved"] = !ex_les->count("--a") ? "a"
                                : !ex_les->count("--b") ? "b"
                                                        : "c";
            text = detail::text_les(payload);
        } else if (rep_paper->parsed()) {
            command = "reproduce paper";
            payload = json{{"hodge", report_to_json(hodge_numbers())},
                           {"surface", invariants_to_json(surface_invariants())}};
            if (check) {
                auto [check_json, all_pass] = detail::run_paper_checks();
                payload["check"] = std::move(check_json);
                if (!all_pass) exit_code = 1;
            }
            text = detail::text_report(payload);
        }
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const hard_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    const i64 elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    if (format == "json") {
        out << envelope_json(command, format, std::move(payload), elapsed).dump(2)
            << "\n";
    } else {
        out << "command: " << command << "\n"
            << "version: " << kVersion << "\n"
            << text << "elapsed_ms: " << elapsed << "\n";
    }
    return exit_code;
}

}  // namespace grassbwb::cli
