#pragma once

// The GL(k) character ring in the Schur basis Sigma_lambda, together with a
// Laurent-monomial mirror of every element.  The two representations give two
// independent multiplication routes (Littlewood-Richardson kernel vs monomial
// convolution); tests hold them against each other.
//
// Weights may be negative: Sigma_{lambda+(c,...,c)} = Sigma_lambda (x) det^c,
// so everything reduces to partitions after a uniform shift.

#include <map>
#include <utility>
#include <vector>

#include "grassbwb/common.hpp"
#include "grassbwb/weights.hpp"

namespace grassbwb {

// ---------------------------------------------------------------------------
// Laurent polynomials in k character variables (exponent vector -> coeff).
// std::map keys compare lexicographically, which the Schur peeling below
// relies on: rbegin() is the lex-maximal monomial.
// ---------------------------------------------------------------------------

using Exponents = std::vector<int>;
using LaurentPoly = std::map<Exponents, i64>;

inline void laurent_add(LaurentPoly& p, const Exponents& e, i64 c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else if ((it->second += c) == 0) {
        p.erase(it);
    }
}

/// p += q * x^e * scale
inline void laurent_add_shifted(LaurentPoly& p, const LaurentPoly& q,
                                const Exponents& e, i64 scale) {
    for (const auto& [qe, qc] : q) {
        Exponents se(qe.size());
        for (std::size_t i = 0; i < qe.size(); ++i) se[i] = qe[i] + e[i];
        laurent_add(p, se, qc * scale);
    }
}

inline LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ae, ac] : a) laurent_add_shifted(out, b, ae, ac);
    return out;
}

// ---------------------------------------------------------------------------
// CharElement: finite Z-linear combination of irreducible characters.
// ---------------------------------------------------------------------------

class CharElement {
public:
    explicit CharElement(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("CharElement: rank must be positive");
    }

    /// Single irreducible Sigma_w with multiplicity.
    static CharElement irreducible(int rank, const Weight& w, i64 mult = 1) {
        CharElement x(rank);
        x.add(w, mult);
        return x;
    }

    /// The trivial character Sigma_{(0,...,0)}.
    static CharElement trivial(int rank) {
        return irreducible(rank, Weight(static_cast<std::size_t>(rank), 0));
    }

    int rank() const { return rank_; }
    const std::map<Weight, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when all multiplicities are nonnegative (a genuine character).
    bool is_genuine() const {
        for (const auto& [w, m] : terms_)
            if (m < 0) return false;
        return true;
    }

    void add(const Weight& w, i64 mult) {
        if (static_cast<int>(w.size()) != rank_)
            throw std::invalid_argument("CharElement: weight length != rank");
        if (!is_dominant(w))
            throw std::invalid_argument("CharElement: weight is not dominant");
        if (mult == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, mult);
        } else if ((it->second += mult) == 0) {
            terms_.erase(it);
        }
    }

    CharElement& operator+=(const CharElement& o) {
        if (o.rank_ != rank_) throw std::invalid_argument("CharElement: rank mismatch");
        for (const auto& [w, m] : o.terms_) add(w, m);
        return *this;
    }

    friend bool operator==(const CharElement& a, const CharElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

private:
    int rank_;
    std::map<Weight, i64> terms_;
};

/// Total dimension: the character evaluated at x_i = 1.
inline i64 char_dimension(const CharElement& x) {
    i64 d = 0;
    for (const auto& [w, m] : x.terms()) d += m * weyl_dimension(w);
    return d;
}

/// Shift every weight by (t,...,t): tensoring with det^t.
inline CharElement twist_by_determinant(const CharElement& x, int t) {
    CharElement out(x.rank());
    for (const auto& [w, m] : x.terms()) out.add(shifted(w, t), m);
    return out;
}

/// Dual character: each Sigma_lambda becomes Sigma of the negated reversal.
inline CharElement dual(const CharElement& x) {
    CharElement out(x.rank());
    for (const auto& [w, m] : x.terms()) out.add(dual_weight(w), m);
    return out;
}

// ---------------------------------------------------------------------------
// MonomialCharacter: the Laurent-polynomial form of a character.
// ---------------------------------------------------------------------------

struct MonomialCharacter {
    int rank = 0;
    LaurentPoly coeffs;
};

namespace detail {

/// Enumerate semistandard tableaux of partition shape (entries 1..k) and add
/// scale * x^{content} for each.  `lambda` is a genuine partition.
inline void ssyt_expand(const Weight& lambda, int k, i64 scale, LaurentPoly& out) {
    std::vector<std::vector<int>> tab;
    for (int part : lambda)
        if (part > 0) tab.emplace_back(static_cast<std::size_t>(part), 0);
    if (tab.empty()) {
        laurent_add(out, Exponents(static_cast<std::size_t>(k), 0), scale);
        return;
    }
    Exponents content(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == tab.size()) {
            laurent_add(out, content, scale);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == tab[r].size()) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);                    // row weak
        if (r > 0 && c < tab[r - 1].size()) lo = std::max(lo, tab[r - 1][c] + 1);  // col strict
        for (int v = lo; v <= k; ++v) {
            tab[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, nr, nc);
            --content[static_cast<std::size_t>(v - 1)];
        }
        tab[r][c] = 0;
    };
    rec(rec, 0, 0);
}

}  // namespace detail

/// Expand into the Laurent-polynomial character (Weyl character expansion,
/// realized as semistandard-tableau enumeration after a determinant shift).
inline MonomialCharacter schur_to_monomials(const CharElement& x) {
    MonomialCharacter m;
    m.rank = x.rank();
    for (const auto& [w, mult] : x.terms()) {
        const int shift = w.back() < 0 ? w.back() : 0;
        LaurentPoly part;
        detail::ssyt_expand(shifted(w, -shift), x.rank(), mult, part);
        for (const auto& [e, c] : part)
            laurent_add(m.coeffs, shifted(e, shift), c);
    }
    return m;
}

/// Invert schur_to_monomials by greedy highest-weight peeling: the lex-maximal
/// exponent vector of a symmetric Laurent polynomial is dominant and is the
/// highest weight of a summand; subtract its full expansion and repeat.  A
/// non-dominant maximum exposes an asymmetric input.
inline CharElement monomials_to_schur(const MonomialCharacter& m) {
    CharElement out(m.rank);
    LaurentPoly work = m.coeffs;
    // The lex maximum strictly decreases each round, so symmetric input
    // terminates; the cap only trips on (rejected) garbage.
    for (int guard = 0; !work.empty(); ++guard) {
        if (guard > 2'000'000)
            throw std::invalid_argument("monomials_to_schur: input is not symmetric");
        const auto top = *work.rbegin();
        if (!is_dominant(top.first))
            throw std::invalid_argument("monomials_to_schur: input is not symmetric");
        out.add(top.first, top.second);
        const int shift = top.first.back() < 0 ? top.first.back() : 0;
        LaurentPoly expanded;
        detail::ssyt_expand(shifted(top.first, -shift), m.rank, -top.second, expanded);
        for (const auto& [e, c] : expanded)
            laurent_add(work, shifted(e, shift), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson kernel.
// ---------------------------------------------------------------------------

namespace detail {

/// Count Littlewood-Richardson skew tableaux of shape nu/lambda and content
/// mu: semistandard, with the right-to-left top-to-bottom reading word a
/// lattice word.  nu, lambda, mu are partitions; lambda may be shorter.
inline i64 lr_fillings(const Weight& nu, const Weight& lambda, const Weight& mu) {
    std::vector<std::vector<int>> tab(nu.size());
    for (std::size_t r = 0; r < nu.size(); ++r)
        tab[r].assign(static_cast<std::size_t>(nu[r]), 0);

    struct Cell { std::size_t r, c; };
    std::vector<Cell> order;  // reading order
    for (std::size_t r = 0; r < nu.size(); ++r) {
        int lam = r < lambda.size() ? lambda[r] : 0;
        for (int c = nu[r] - 1; c >= lam; --c)
            order.push_back({r, static_cast<std::size_t>(c)});
    }

    std::vector<int> used(mu.size(), 0);
    i64 count = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) { ++count; return; }
        auto [r, c] = order[idx];
        int lo = 1, hi = static_cast<int>(mu.size());
        if (c + 1 < tab[r].size() && tab[r][c + 1] != 0)
            hi = std::min(hi, tab[r][c + 1]);          // row weakly increasing
        if (r > 0 && c < tab[r - 1].size() && tab[r - 1][c] != 0)
            lo = std::max(lo, tab[r - 1][c] + 1);      // column strictly increasing
        for (int v = lo; v <= hi; ++v) {
            std::size_t vi = static_cast<std::size_t>(v - 1);
            if (used[vi] == mu[vi]) continue;                    // content budget
            if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;  // lattice condition
            ++used[vi];
            tab[r][c] = v;
            self(self, idx + 1);
            tab[r][c] = 0;
            --used[vi];
        }
    };
    rec(rec, 0);
    return count;
}

inline Weight trim_partition(Weight w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

}  // namespace detail

/// All Littlewood-Richardson coefficients c^nu_{lambda,mu} for nu of at most
/// max_rows rows.  Inputs are partitions (nonnegative, non-increasing); the
/// returned keys are trimmed partitions.
inline std::map<Weight, i64> lr_expand(const Weight& lambda_in, const Weight& mu_in,
                                       int max_rows) {
    const Weight lambda = detail::trim_partition(lambda_in);
    const Weight mu = detail::trim_partition(mu_in);
    for (const Weight* p : {&lambda, &mu})
        if (!is_dominant(*p) || (!p->empty() && p->back() < 0))
            throw std::invalid_argument("lr_expand: inputs must be partitions");

    std::map<Weight, i64> out;
    if (static_cast<int>(lambda.size()) > max_rows) return out;
    int skew_cells = 0;
    for (int v : mu) skew_cells += v;

    // DFS over candidate shapes nu containing lambda with |nu/lambda| = |mu|.
    const int width = (lambda.empty() ? 0 : lambda[0]) + (mu.empty() ? 0 : mu[0]);
    Weight nu;
    auto rec = [&](auto&& self, std::size_t row, int remaining, int prev) -> void {
        if (remaining == 0 && row >= lambda.size()) {
            i64 c = detail::lr_fillings(nu, lambda, mu);
            if (c != 0) out[nu] += c;
            return;  // further rows would add cells with none remaining
        }
        if (row >= static_cast<std::size_t>(max_rows)) return;
        const int lam = row < lambda.size() ? lambda[row] : 0;
        const int hi = std::min(prev, lam + remaining);
        for (int part = hi; part >= std::max(lam, 1); --part) {
            if (part - lam > remaining) continue;
            nu.push_back(part);
            self(self, row + 1, remaining - (part - lam), part);
            nu.pop_back();
        }
    };
    if (skew_cells == 0 && lambda.empty()) {
        out[Weight{}] = 1;
        return out;
    }
    rec(rec, 0, skew_cells, width);
    return out;
}

/// Littlewood-Richardson product of characters: shift both factors to
/// partitions (determinant twists), run the LR kernel, shift back.
inline CharElement multiply(const CharElement& x, const CharElement& y) {
    if (x.rank() != y.rank())
        throw std::invalid_argument("multiply: rank mismatch");
    const int k = x.rank();
    CharElement out(k);
    for (const auto& [wx, mx] : x.terms()) {
        const int sx = wx.back();
        for (const auto& [wy, my] : y.terms()) {
            const int sy = wy.back();
            auto prods = lr_expand(shifted(wx, -sx), shifted(wy, -sy), k);
            for (const auto& [nu, c] : prods) {
                Weight full(static_cast<std::size_t>(k), 0);
                std::copy(nu.begin(), nu.end(), full.begin());
                out.add(shifted(full, sx + sy), c * mx * my);
            }
        }
    }
    return out;
}

/// Independent multiplication oracle: expand both factors to Laurent
/// polynomials, convolve, and peel back to the Schur basis.
inline CharElement multiply_via_monomials(const CharElement& x, const CharElement& y) {
    if (x.rank() != y.rank())
        throw std::invalid_argument("multiply_via_monomials: rank mismatch");
    MonomialCharacter m;
    m.rank = x.rank();
    m.coeffs = laurent_mul(schur_to_monomials(x).coeffs, schur_to_monomials(y).coeffs);
    return monomials_to_schur(m);
}

namespace detail {

/// Weight multiset of a genuine character, as (exponent vector, multiplicity)
/// pairs with multiplicities from the monomial expansion.
inline std::vector<std::pair<Exponents, i64>> weight_multiset(const CharElement& x) {
    if (!x.is_genuine())
        throw std::invalid_argument("plethysm requires a genuine character");
    std::vector<std::pair<Exponents, i64>> ws;
    for (const auto& [e, c] : schur_to_monomials(x).coeffs) ws.emplace_back(e, c);
    return ws;
}

}  // namespace detail

/// Character of the p-th exterior power: the elementary symmetric polynomial
/// e_p evaluated on the weight multiset, peeled back to the Schur basis.
inline CharElement exterior_power(int p, const CharElement& x) {
    if (p < 0) throw std::invalid_argument("exterior_power: p must be >= 0");
    const auto ws = detail::weight_multiset(x);
    const std::size_t k = static_cast<std::size_t>(x.rank());
    // dp[j] accumulates e_j; each copy of a weight may be used at most once.
    std::vector<LaurentPoly> dp(static_cast<std::size_t>(p) + 1);
    dp[0][Exponents(k, 0)] = 1;
    for (const auto& [w, mult] : ws)
        for (i64 copy = 0; copy < mult; ++copy)
            for (int j = p; j >= 1; --j)
                laurent_add_shifted(dp[static_cast<std::size_t>(j)],
                                    dp[static_cast<std::size_t>(j) - 1], w, 1);
    MonomialCharacter m;
    m.rank = x.rank();
    m.coeffs = dp[static_cast<std::size_t>(p)];
    return monomials_to_schur(m);
}

/// Character of the m-th symmetric power: the complete homogeneous polynomial
/// h_m on the weight multiset.
inline CharElement symmetric_power(int m, const CharElement& x) {
    if (m < 0) throw std::invalid_argument("symmetric_power: m must be >= 0");
    const auto ws = detail::weight_multiset(x);
    const std::size_t k = static_cast<std::size_t>(x.rank());
    // dp[j] accumulates h_j; ascending j lets each copy repeat freely.
    std::vector<LaurentPoly> dp(static_cast<std::size_t>(m) + 1);
    dp[0][Exponents(k, 0)] = 1;
    for (const auto& [w, mult] : ws)
        for (i64 copy = 0; copy < mult; ++copy)
            for (int j = 1; j <= m; ++j)
                laurent_add_shifted(dp[static_cast<std::size_t>(j)],
                                    dp[static_cast<std::size_t>(j) - 1], w, 1);
    MonomialCharacter mc;
    mc.rank = x.rank();
    mc.coeffs = dp[static_cast<std::size_t>(m)];
    return monomials_to_schur(mc);
}

}  // namespace grassbwb
