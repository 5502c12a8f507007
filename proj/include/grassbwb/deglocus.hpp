#pragma once

// Determinantal invariants of the rank-degeneracy surface S inside the Fano
// fourfold F: S is the locus where the symmetrized differential
// f: Sym^2 U_F -> Q_F^dual drops rank by 2.  Its numerical invariants come
// from Schur determinants in the Segre classes s_i(Q^dual - Sym^2 U),
// evaluated against [F], then chained through the kernel/cokernel sheaves
// K and C of f (0 -> K -> Sym^2 U_S -> Q_S^dual -> C -> 0) and the normal
// bundle N = K^dual (x) C.

#include <algorithm>
#include <string>
#include <vector>

#include "grassbwb/chern.hpp"
#include "grassbwb/common.hpp"
#include "grassbwb/schubert.hpp"

namespace grassbwb {

/// Coefficients s_0..s_top of the Segre series of a bundle difference.
struct SegreTable {
    std::vector<SchubertElement> s;

    explicit SegreTable(std::vector<SchubertElement> table) : s(std::move(table)) {
        if (s.empty()) throw std::invalid_argument("SegreTable: empty");
        SchubertElement one(s[0].k, s[0].n);
        one.add(Weight{}, 1);
        if (!(s[0] == one))
            throw std::invalid_argument("SegreTable: s[0] must be the identity class");
    }

    /// The table for the degeneracy-locus difference Q^dual - Sym^2 U.
    static SegreTable standard() {
        const auto e = RootBundle::from_blocks(2, 6, CharElement::trivial(2),
                                               CharElement::irreducible(4, {1, 0, 0, 0}));
        const auto f = RootBundle::from_blocks(2, 6, CharElement::irreducible(2, {0, -2}),
                                               CharElement::trivial(4));
        return SegreTable(segre_difference(e, f));
    }

    /// s_i, with s_0 = 1 and indices outside the table equal to zero.
    SchubertElement at(int i) const {
        if (i < 0 || i >= static_cast<int>(s.size())) return SchubertElement(s[0].k, s[0].n);
        return s[static_cast<std::size_t>(i)];
    }
};

/// Harris-Tu determinant s_I = det[(s_{i_p - p + q})_{1<=p,q<=len}] for an
/// arbitrary nonnegative index sequence I.
inline SchubertElement schur_determinant(const std::vector<int>& index_seq,
                                         const SegreTable& seg) {
    const int m = static_cast<int>(index_seq.size());
    const int k = seg.s[0].k, n = seg.s[0].n;
    if (m == 0) {
        SchubertElement one(k, n);
        one.add(Weight{}, 1);
        return one;
    }
    for (int v : index_seq)
        if (v < 0) throw std::invalid_argument("schur_determinant: negative index");

    // Permutation expansion; the matrices here are at most 4x4.
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    SchubertElement det(k, n);
    do {
        int sign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    sign = -sign;
        SchubertElement term(k, n);
        term.add(Weight{}, sign);
        for (int p = 0; p < m; ++p) {
            const int q = perm[static_cast<std::size_t>(p)];
            const int idx = index_seq[static_cast<std::size_t>(p)] - (p + 1) + (q + 1);
            if (idx < 0) {
                term = SchubertElement(k, n);
                break;
            }
            term = product(term, seg.at(idx));
        }
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Pair a codimension-4 class against the fundamental class of the Fano
/// scheme: integral over G(2,6) of c * [F].
inline i64 intersection_number(const SchubertElement& c) {
    if (c.k != 2 || c.n != 6)
        throw std::invalid_argument("intersection_number: class must live on G(2,6)");
    for (const auto& [lam, coeff] : c.terms) {
        int d = 0;
        for (int part : lam) d += part;
        if (d != 4)
            throw std::invalid_argument("intersection_number: class must be pure codimension 4");
    }
    return integrate(product(c, class_of_F()));
}

/// Numerical invariants of the degeneracy surface.
struct SurfaceInvariants {
    i64 HS_sq = 0;     // hyperplane section squared on S
    i64 c2_C = 0;      // c2 of the cokernel sheaf C
    i64 c1sq_C = 0;    // c1(C)^2 via the displayed monomial route s1 s3 - s4
    i64 c1sq_K = 0;    // c1(K)^2
    i64 c1K_c1C = 0;   // c1(K) c1(C)
    i64 c2_N = 0;      // c2 of the normal bundle N = K^dual (x) C
    i64 KS_sq = 0;     // K_S^2
    i64 c2_TS = 0;     // c2(T_S) = topological Euler characteristic
    i64 chi_O = 0;     // holomorphic Euler characteristic, via Noether
    i64 chi_top = 0;   // = c2_TS
};

/// The self-intersection of the hyperplane section of S:
/// integral of sigma_1^2 * [S] * [F] with [S] = 5 sigma_2.
inline i64 hyperplane_square_on_S() {
    const auto s1 = sigma(2, 6, Weight{1});
    return integrate(product(product(power(s1, 2), class_of_S()), class_of_F()));
}

/// c2 of the (virtual) tangent bundle of F, restricted to S and integrated.
inline i64 c2_tangent_F_on_S() {
    const auto tg = RootBundle::tangent(2, 6);
    const auto sym3_dual = RootBundle::from_blocks(2, 6, CharElement::irreducible(2, {3, 0}),
                                                   CharElement::trivial(4));
    const auto c2_tf = chern_difference(tg, sym3_dual)[2];
    return integrate(product(product(c2_tf, class_of_S()), class_of_F()));
}

/// Assemble every invariant of S from the Harris-Tu data.
///
/// The linear relations behind the K/C entries: the four-term exact sequence
/// gives c1(K) - c1(C) = c1(Sym^2 U) - c1(Q^dual) = -2 H_S, and
/// c1(K_S) = c1(N) = -2 c1(K) + c1(C) = 3 H_S (K_F is trivial); together
/// these pin c1(K) = -H_S and c1(C) = +H_S on the nose.
inline SurfaceInvariants surface_invariants() {
    const SegreTable seg = SegreTable::standard();
    SurfaceInvariants inv;

    inv.HS_sq = hyperplane_square_on_S();
    inv.c2_C = intersection_number(schur_determinant({2, 2}, seg));
    // The displayed monomial form s1 s3 - s4 (the determinant for index (3,1)).
    inv.c1sq_C = intersection_number(
        product(seg.at(1), seg.at(3)) - seg.at(4));
    inv.c1sq_K = intersection_number(schur_determinant({1, 1, 2}, seg) +
                                     schur_determinant({1, 1, 1, 1}, seg));
    // c1(K) = -H_S and c1(C) = +H_S, so c1(K)c1(C) = -H_S^2.
    inv.c1K_c1C = -inv.HS_sq;
    // c2(N) = c2(K^dual (x) C) = c2(C) - c1(K)c1(C) + c1(K)^2.
    inv.c2_N = inv.c2_C - inv.c1K_c1C + inv.c1sq_K;
    // c1(K_S) = 3 H_S.
    inv.KS_sq = 9 * inv.HS_sq;
    // c2(T_S) = c2(T_F)|_S - c2(N) - c1(T_S) c1(N), with
    // c1(T_S) = -3 H_S and c1(N) = 3 H_S.
    inv.c2_TS = c2_tangent_F_on_S() - inv.c2_N + 9 * inv.HS_sq;
    inv.chi_top = inv.c2_TS;
    // Noether: chi(O_S) = (K_S^2 + c2(T_S)) / 12, exactly.
    const i64 noether_sum = inv.KS_sq + inv.c2_TS;
    if (noether_sum % 12 != 0)
        throw hard_error("surface_invariants: Noether sum not divisible by 12");
    inv.chi_O = noether_sum / 12;
    return inv;
}

/// The symbolic identity N = K^dual (x) C that surface_invariants relies on,
/// with its numerical consequences.
struct NormalBundleIdentity {
    int rank = 2;                 // codimension of S in F
    int c1_coeff_K = -2;          // c1(N) = -2 c1(K) + c1(C)
    int c1_coeff_C = 1;
    std::string c1_formula = "c1(N) = -2*c1(K) + c1(C)";
    std::string c2_formula = "c2(N) = c2(C) - c1(K)*c1(C) + c1(K)^2";
    i64 c2_value = 0;             // the evaluated right-hand side
};

inline NormalBundleIdentity normal_bundle_class() {
    const SurfaceInvariants inv = surface_invariants();
    NormalBundleIdentity id;
    id.c2_value = inv.c2_C - inv.c1K_c1C + inv.c1sq_K;
    return id;
}

}  // namespace grassbwb
