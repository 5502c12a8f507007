// Acceptance gate: one line per criterion, PASS or FAIL, exact integer
// comparisons throughout; exit status is nonzero when any criterion fails.

#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "grassbwb/charring.hpp"
#include "grassbwb/chern.hpp"
#include "grassbwb/deglocus.hpp"
#include "grassbwb/exactness.hpp"
#include "grassbwb/expr.hpp"
#include "grassbwb/fixtures.hpp"
#include "grassbwb/pipeline.hpp"
#include "grassbwb/render.hpp"
#include "grassbwb/schubert.hpp"

using namespace grassbwb;

namespace {

int weight_of(const Weight& lam) {
    int total = 0;
    for (int part : lam) total += part;
    return total;
}

// 1. The class of the line locus F expands correctly in both forms.
bool quartic_class() {
    return class_of_F() == parse_class(fixtures::kClassFQuadraticForm) &&
           class_of_F() == parse_class(fixtures::kClassFBasisForm);
}

// 2. Seven nonzero groups, vanishing everywhere else, across the four
// Koszul families.
bool seven_groups() {
    struct Family {
        std::function<HomogeneousBundle(int)> fam;
        std::map<int, std::map<int, i64>> nonzero;  // p -> degree -> dim
    };
    const std::vector<Family> families = {
        {koszul_sym2u(1), {{2, {{4, 36}}}}},
        {koszul_qdual(1), {{0, {{0, 20}}}, {3, {{5, 1}}}}},
        {koszul_sym2u(-2), {{3, {{8, 126}}}, {4, {{8, 1134}}}}},
        {koszul_qdual(-2), {{1, {{5, 1}}}, {4, {{8, 560}}}}},
    };
    for (const auto& f : families)
        for (int p = 0; p <= 4; ++p) {
            const auto it = f.nonzero.find(p);
            const std::map<int, i64> want =
                it == f.nonzero.end() ? std::map<int, i64>{} : it->second;
            if (bwb_bundle(f.fam(p)).aggregated != want) return false;
        }
    return true;
}

// 3. The rendered weight tables and the nonzero summary match the frozen
// fixture strings byte for byte, non-regular rows included.
bool weight_tables() {
    const RenderedFamily rf1 = make_family("Sym^2 U", 1, koszul_sym2u(1));
    const RenderedFamily rf2 = make_family("Q*", 1, koszul_qdual(1));
    const RenderedFamily rf3 = make_family("Sym^2 U", -2, koszul_sym2u(-2));
    const RenderedFamily rf4 = make_family("Q*", -2, koszul_qdual(-2));
    return render_proof_table(rf1) == fixtures::kTableSym2uH &&
           render_proof_table(rf2) == fixtures::kTableQdualH &&
           render_proof_table(rf3) == fixtures::kTableSym2uM2H &&
           render_proof_table(rf4) == fixtures::kTableQdualM2H &&
           render_nonzero_summary({rf1, rf2, rf3, rf4}) == fixtures::kNonzeroSummary;
}

// 4. Weyl dimensions of the seven cited dominant weights.
bool weyl_dims() {
    for (const auto& [w, dim] : fixtures::cited_weyl_dimensions())
        if (weyl_dimension(w) != dim) return false;
    return true;
}

// 5. All six displayed Segre coefficients of Q^vee - Sym^2 U.
bool segre_coefficients() {
    const SegreTable seg = SegreTable::standard();
    for (std::size_t i = 0; i < fixtures::kSegreDisplayed.size(); ++i)
        if (seg.at(static_cast<int>(i)) != parse_class(fixtures::kSegreDisplayed[i]))
            return false;
    return true;
}

// 6. The nine intersection numbers of the degeneracy surface.
bool intersection_numbers() {
    const SurfaceInvariants v = surface_invariants();
    return v.c2_C == 495 && v.c1sq_C == -180 && v.c1sq_K == 315 &&
           v.HS_sq == 315 && v.c1K_c1C == -315 && v.c2_N == 1125 &&
           v.c2_TS == 2565 && v.KS_sq == 2835 && v.chi_O == 450;
}

// 7. Forced spectral abutments for the twist -2 and twist 1 pages.
bool forced_abutments() {
    const std::vector<std::pair<std::function<HomogeneousBundle(int)>, std::map<int, i64>>>
        cases = {
            {koszul_sym2u(-2), {{4, 1008}}},
            {koszul_qdual(-2), {{4, 561}}},
            {koszul_sym2u(1), {{2, 36}}},
            {koszul_qdual(1), {{0, 20}, {2, 1}}},
        };
    for (const auto& [fam, want] : cases) {
        const AbutmentResult res = solve_abutment(assemble_e1(fam));
        if (!res.forced || res.cohomology != want) return false;
    }
    return true;
}

// 8. The headline invariants and the torsion witness.
bool hodge_and_torsion() {
    const HodgeReport rep = hodge_numbers();
    return rep.q == 0 && rep.p_g == 449 && rep.h11 == 1665 && rep.b2 == 2563 &&
           rep.chi_top == 2565 && rep.torsion_witness.h3_IS3H == 0 &&
           rep.torsion_witness.h2_KS_expected == 1 && rep.torsion_witness.torsion;
}

// 9. Property suites: Poincare duality, LR kernel vs monomial oracle,
// algebraic vs geometric Euler characteristics, Serre mirror, Noether
// divisibility.
bool property_suites() {
    // Poincare duality over the whole 2x4 box.
    const auto basis = box_partitions(2, 6);
    for (const auto& lam : basis)
        for (const auto& mu : basis) {
            if (weight_of(lam) + weight_of(mu) != 8) continue;
            const i64 expect = (mu == box_complement(2, 6, lam)) ? 1 : 0;
            if (integrate(product(sigma(2, 6, lam), sigma(2, 6, mu))) != expect)
                return false;
        }

    // LR kernel vs the monomial-expansion oracle on all box partitions,
    // and agreement with the Schubert product after box truncation.
    auto pad2 = [](Weight lam) {
        lam.resize(2, 0);
        return lam;
    };
    auto truncate_to_box = [](const CharElement& x) {
        SchubertElement out(2, 6);
        for (const auto& [w, c] : x.terms())
            if (w[0] <= 4) out.add(w, c);
        return out;
    };
    for (const auto& lam : basis)
        for (const auto& mu : basis) {
            const CharElement a = CharElement::irreducible(2, pad2(lam));
            const CharElement b = CharElement::irreducible(2, pad2(mu));
            const CharElement lr = multiply(a, b);
            if (lr != multiply_via_monomials(a, b)) return false;
            if (truncate_to_box(lr) != product(sigma(2, 6, lam), sigma(2, 6, mu)))
                return false;
        }

    // Alternating BWB sums against Chern-character Euler characteristics
    // for every bundle in the four Koszul families.
    for (int t : {1, -2})
        for (const auto& fam : {koszul_sym2u(t), koszul_qdual(t)})
            for (int p = 0; p <= 4; ++p) {
                const HomogeneousBundle b = fam(p);
                if (euler_characteristic(b) != bwb_euler(bwb_bundle(b))) return false;
            }

    // Serre mirror: H^i(E) and H^{8-i}(E^v (x) O(-6H)) agree.
    auto mirror = [](const HomogeneousBundle& e) {
        return HomogeneousBundle{2, 6, twist_by_determinant(dual(e.sub_part), -6),
                                 dual(e.quot_part)};
    };
    const std::vector<HomogeneousBundle> samples = {
        koszul_qdual(1)(3), koszul_sym2u(1)(2), koszul_qdual(-2)(4)};
    for (const auto& e : samples) {
        const auto direct = bwb_bundle(e);
        const auto flipped = bwb_bundle(mirror(e));
        std::map<int, i64> reflected;
        for (const auto& [deg, dim] : flipped.aggregated) reflected[8 - deg] = dim;
        if (direct.aggregated != reflected) return false;
    }

    // Noether divisibility inside the surface report.
    const SurfaceInvariants v = surface_invariants();
    return (v.KS_sq + v.chi_top) % 12 == 0 && (v.KS_sq + v.chi_top) / 12 == v.chi_O;
}

}  // namespace

int main() {
    struct Criterion {
        int num;
        const char* label;
        bool (*fn)();
    };
    const Criterion criteria[] = {
        {1, "line-locus class expands to 27*s2^2 - 9*s1*s3 - 18*s4", quartic_class},
        {2, "seven nonzero cohomology groups, vanishing elsewhere, in the four "
            "Koszul families", seven_groups},
        {3, "weight tables and nonzero summary match the frozen renderings",
         weight_tables},
        {4, "Weyl dimensions 35, 1, 56, 70, 1134, 560, 20 for the cited weights",
         weyl_dims},
        {5, "six Segre coefficients of Q^vee - Sym^2 U", segre_coefficients},
        {6, "nine intersection numbers of the degeneracy surface",
         intersection_numbers},
        {7, "forced spectral abutments for twists -2 and 1", forced_abutments},
        {8, "q=0, p_g=449, h11=1665, b2=2563, chi_top=2565, torsion=(0,1,true)",
         hodge_and_torsion},
        {9, "property suites: duality, LR oracle, Euler characteristics, Serre "
            "mirror, Noether", property_suites},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.num << ": "
                  << c.label << note << "\n";
    }
    return failures == 0 ? 0 : 1;
}
