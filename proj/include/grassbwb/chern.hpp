#pragma once

// Splitting-principle calculus over the Schubert ring.  A RootBundle carries
// the Chern roots of a homogeneous bundle as integer linear forms in the k
// formal roots of U, the n-k formal roots of Q, and the hyperplane class h.
// Symmetric polynomials in the roots are reduced block-by-block to elementary
// symmetric polynomials (lex-leading-term peeling) and then mapped into the
// ring by e_i(U-roots) -> c_i(U) = (-1)^i sigma_{1^i} and
// e_j(Q-roots) -> c_j(Q) = sigma_j.
//
// The same machinery computes Chern characters and the Todd class of the
// tangent bundle, giving a Hirzebruch-Riemann-Roch Euler characteristic that
// is independent of the Borel-Weil-Bott route and so usable as an oracle
// against it.  All series arithmetic is exact-rational; a non-integer where
// an integer is demanded is a hard error, never a rounding.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "grassbwb/bwb.hpp"
#include "grassbwb/charring.hpp"
#include "grassbwb/common.hpp"
#include "grassbwb/schubert.hpp"
#include "grassbwb/weights.hpp"

namespace grassbwb {

namespace detail {

// Multivariate polynomials; exponent keys compare lexicographically, so
// rbegin() is the lex-leading monomial.  Root powers stay in integer
// arithmetic; only series accumulation and reduction use exact rationals.
template <class C>
using PolyT = std::map<std::vector<int>, C>;
using Poly = PolyT<Rational>;
using IPoly = PolyT<i64>;

template <class C>
void poly_add(PolyT<C>& p, const std::vector<int>& e, const C& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else if ((it->second += c) == 0) {
        p.erase(it);
    }
}

inline int poly_exponent_degree(const std::vector<int>& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// a * b, dropping monomials of total degree beyond `max_degree`
/// (max_degree < 0 means no truncation).
template <class C>
PolyT<C> poly_mul(const PolyT<C>& a, const PolyT<C>& b, int max_degree = -1) {
    PolyT<C> out;
    for (const auto& [ae, ac] : a) {
        const int adeg = poly_exponent_degree(ae);
        for (const auto& [be, bc] : b) {
            if (max_degree >= 0 && adeg + poly_exponent_degree(be) > max_degree) continue;
            std::vector<int> e(ae.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ae[i] + be[i];
            poly_add(out, e, static_cast<C>(ac * bc));
        }
    }
    return out;
}

template <class C = Rational>
PolyT<C> poly_one(int vars) {
    PolyT<C> p;
    p.emplace(std::vector<int>(static_cast<std::size_t>(vars), 0), C(1));
    return p;
}

/// Elementary symmetric polynomial e_d of the variable block
/// [first, first+count) inside a ring with `vars` variables total.
inline IPoly elementary_block(int vars, int first, int count, int d) {
    IPoly out;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            for (int v : chosen) e[static_cast<std::size_t>(v)] = 1;
            poly_add(out, e, i64(1));
            return;
        }
        for (int v = start; v <= first + count - left; ++v) {
            chosen.push_back(v);
            self(self, v + 1, left - 1);
            chosen.pop_back();
        }
    };
    if (d < 0 || d > count) return out;
    rec(rec, first, d);
    return out;
}

}  // namespace detail

/// Chern-root carrier: each weight is an integer vector of length k+(n-k)+1,
/// the final slot holding the coefficient of the hyperplane class h.
struct RootBundle {
    int k = 0;
    int n = 0;
    std::vector<std::pair<std::vector<int>, i64>> weights;  // (vector, multiplicity)

    RootBundle(int k_, int n_) : k(k_), n(n_) {
        if (k < 1 || n <= k) throw std::invalid_argument("RootBundle: need 1 <= k < n");
    }

    i64 rank() const {
        i64 r = 0;
        for (const auto& [w, m] : weights) r += m;
        return r;
    }

    void add_weight(const std::vector<int>& w, i64 mult = 1) {
        if (static_cast<int>(w.size()) != n + 1)
            throw std::invalid_argument("RootBundle: weight length must be n+1");
        if (mult <= 0) throw std::invalid_argument("RootBundle: multiplicity must be positive");
        weights.emplace_back(w, mult);
    }

    /// Roots of Sigma_{sub}U* (x) Sigma_{quot}Q* (x) O(twist * h): monomial
    /// exponents of the block characters, negated (U* and Q* carry the duals
    /// of the formal roots), with the twist in the h slot.
    static RootBundle from_blocks(int k, int n, const CharElement& sub,
                                  const CharElement& quot, int twist = 0) {
        if (sub.rank() != k || quot.rank() != n - k)
            throw std::invalid_argument("RootBundle: block ranks must be k and n-k");
        if (!sub.is_genuine() || !quot.is_genuine())
            throw std::invalid_argument("RootBundle: blocks must be genuine characters");
        RootBundle out(k, n);
        const auto ms = schur_to_monomials(sub).coeffs;
        const auto mq = schur_to_monomials(quot).coeffs;
        for (const auto& [a, ma] : ms)
            for (const auto& [b, mb] : mq) {
                std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
                for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)];
                for (int j = 0; j < n - k; ++j)
                    w[static_cast<std::size_t>(k + j)] = -b[static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(n)] = twist;
                out.add_weight(w, ma * mb);
            }
        return out;
    }

    static RootBundle from_bundle(const HomogeneousBundle& b) {
        return from_blocks(b.k, b.n, b.sub_part, b.quot_part, 0);
    }

    /// The tangent bundle Hom(U, Q): roots q_j - u_i.
    static RootBundle tangent(int k, int n) {
        RootBundle out(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n - k; ++j) {
                std::vector<int> w(static_cast<std::size_t>(n + 1), 0);
                w[static_cast<std::size_t>(i)] = -1;
                w[static_cast<std::size_t>(k + j)] = 1;
                out.add_weight(w);
            }
        return out;
    }

    /// The multiset must be invariant under permuting the U-slots and,
    /// separately, the Q-slots (adjacent transpositions generate).
    bool block_symmetric() const {
        auto canon = [&](std::vector<std::pair<std::vector<int>, i64>> ws) {
            std::map<std::vector<int>, i64> m;
            for (auto& [w, c] : ws) m[w] += c;
            return m;
        };
        const auto base = canon(weights);
        auto swapped = [&](int a, int b) {
            auto ws = weights;
            for (auto& [w, c] : ws) std::swap(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]);
            return canon(ws);
        };
        for (int i = 0; i + 1 < k; ++i)
            if (swapped(i, i + 1) != base) return false;
        for (int j = k; j + 1 < n; ++j)
            if (swapped(j, j + 1) != base) return false;
        return true;
    }
};

namespace detail {

/// Linear form of one Chern root in the (u, q) polynomial ring, with the
/// h slot folded into the U block as h = -(u_1 + ... + u_k).
inline IPoly root_form(const RootBundle& b, const std::vector<int>& w) {
    IPoly out;
    const int vars = b.n;
    const int t = w[static_cast<std::size_t>(b.n)];
    for (int i = 0; i < b.k; ++i) {
        const i64 c = w[static_cast<std::size_t>(i)] - t;
        if (c == 0) continue;
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        poly_add(out, e, c);
    }
    for (int j = b.k; j < b.n; ++j) {
        const i64 c = w[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(j)] = 1;
        poly_add(out, e, c);
    }
    return out;
}

/// Reduce a block-symmetric polynomial to the Schubert basis by peeling
/// lex-leading terms against elementary-symmetric products.
inline SchubertRational reduce_to_schubert(Poly p, int k, int n) {
    SchubertRational out(k, n);
    Poly work = std::move(p);
    while (!work.empty()) {
        const auto [lead, coeff] = *work.rbegin();
        // Per-block exponents must be non-increasing for symmetric input.
        for (int i = 0; i + 1 < k; ++i)
            if (lead[static_cast<std::size_t>(i)] < lead[static_cast<std::size_t>(i + 1)])
                throw std::invalid_argument("reduce_to_schubert: polynomial not block-symmetric");
        for (int j = k; j + 1 < n; ++j)
            if (lead[static_cast<std::size_t>(j)] < lead[static_cast<std::size_t>(j + 1)])
                throw std::invalid_argument("reduce_to_schubert: polynomial not block-symmetric");

        // The e-product with this leading monomial, in poly and sigma form.
        IPoly prod = poly_one<i64>(n);
        SchubertRational sig(k, n);
        sig.add(Weight{}, 1);
        for (int i = 0; i < k; ++i) {
            const int next = i + 1 < k ? lead[static_cast<std::size_t>(i + 1)] : 0;
            const int reps = lead[static_cast<std::size_t>(i)] - next;
            for (int r = 0; r < reps; ++r) {
                prod = poly_mul(prod, elementary_block(n, 0, k, i + 1));
                // e_{i+1}(u) = (-1)^{i+1} sigma_{1^{i+1}}
                SchubertRational col(k, n);
                col.add(Weight(static_cast<std::size_t>(i + 1), 1),
                        (i + 1) % 2 == 0 ? Rational(1) : Rational(-1));
                sig = product(sig, col);
            }
        }
        for (int j = 0; j < n - k; ++j) {
            const int next = j + 1 < n - k ? lead[static_cast<std::size_t>(k + j + 1)] : 0;
            const int reps = lead[static_cast<std::size_t>(k + j)] - next;
            for (int r = 0; r < reps; ++r) {
                prod = poly_mul(prod, elementary_block(n, k, n - k, j + 1));
                sig = product(sig, sigma<Rational>(k, n, Weight{j + 1}));
            }
        }
        for (const auto& [e, c] : prod)
            poly_add(work, e, static_cast<Rational>(Rational(0) - coeff * c));
        for (const auto& [lam, c] : sig.terms) out.add(lam, coeff * c);
    }
    return out;
}

}  // namespace detail

/// Chern classes c_0 .. c_rank as integral Schubert classes (classes beyond
/// the ring's top degree are identically zero there).
inline std::vector<SchubertElement> chern_classes(const RootBundle& b) {
    if (!b.block_symmetric())
        throw std::invalid_argument("chern_classes: weight multiset is not block-symmetric");
    const int top = b.k * (b.n - b.k);
    detail::IPoly total = detail::poly_one<i64>(b.n);
    for (const auto& [w, mult] : b.weights) {
        detail::IPoly factor = detail::poly_one<i64>(b.n);
        for (const auto& [e, c] : detail::root_form(b, w)) detail::poly_add(factor, e, c);
        for (i64 copy = 0; copy < mult; ++copy)
            total = detail::poly_mul(total, factor, top);
    }
    detail::Poly rational_total;
    for (const auto& [e, c] : total) rational_total.emplace(e, Rational(c));
    const SchubertRational reduced =
        detail::reduce_to_schubert(std::move(rational_total), b.k, b.n);
    std::vector<SchubertElement> out;
    const i64 rank = b.rank();
    for (i64 i = 0; i <= rank; ++i)
        out.push_back(to_integral(reduced.graded_piece(static_cast<int>(i))));
    return out;
}

/// Segre classes: coefficients of the inverse Chern series, out to the top
/// degree of the ring.
inline std::vector<SchubertElement> segre_classes(const RootBundle& b) {
    const auto c = chern_classes(b);
    const int top = b.k * (b.n - b.k);
    std::vector<SchubertElement> s;
    SchubertElement one(b.k, b.n);
    one.add(Weight{}, 1);
    s.push_back(one);
    for (int d = 1; d <= top; ++d) {
        SchubertElement acc(b.k, b.n);
        for (int j = 1; j <= d && j < static_cast<int>(c.size()); ++j)
            acc = acc + product(c[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(d - j)]);
        s.push_back(scale(acc, i64(-1)));
    }
    return s;
}

/// Coefficients of s_t(E - F) := s_t(E) * c_t(F), out to the top degree.
inline std::vector<SchubertElement> segre_difference(const RootBundle& e, const RootBundle& f) {
    if (e.k != f.k || e.n != f.n)
        throw std::invalid_argument("segre_difference: grassmannian mismatch");
    const auto se = segre_classes(e);
    const auto cf = chern_classes(f);
    const int top = e.k * (e.n - e.k);
    std::vector<SchubertElement> out;
    for (int d = 0; d <= top; ++d) {
        SchubertElement acc(e.k, e.n);
        for (int j = 0; j <= d; ++j) {
            if (j >= static_cast<int>(cf.size())) break;
            acc = acc + product(se[static_cast<std::size_t>(d - j)], cf[static_cast<std::size_t>(j)]);
        }
        out.push_back(acc);
    }
    return out;
}

/// Coefficients of c_t(E - F) := c_t(E) * s_t(F), out to the top degree.
inline std::vector<SchubertElement> chern_difference(const RootBundle& e, const RootBundle& f) {
    if (e.k != f.k || e.n != f.n)
        throw std::invalid_argument("chern_difference: grassmannian mismatch");
    const auto ce = chern_classes(e);
    const auto sf = segre_classes(f);
    const int top = e.k * (e.n - e.k);
    std::vector<SchubertElement> out;
    for (int d = 0; d <= top; ++d) {
        SchubertElement acc(e.k, e.n);
        for (int j = 0; j <= d; ++j) {
            if (j >= static_cast<int>(ce.size())) break;
            acc = acc + product(ce[static_cast<std::size_t>(j)], sf[static_cast<std::size_t>(d - j)]);
        }
        out.push_back(acc);
    }
    return out;
}

/// The fundamental class of the Fano scheme of lines on a cubic fourfold:
/// the top Chern class of Sym^3 U* on G(2,6).
inline SchubertElement class_of_F() {
    const auto sym3 = CharElement::irreducible(2, {3, 0});
    const auto rb = RootBundle::from_blocks(2, 6, sym3, CharElement::trivial(4));
    return chern_classes(rb)[4];
}

namespace detail {

/// Chern character of a root bundle, truncated at the ring's top degree.
inline SchubertRational chern_character(const RootBundle& b) {
    const int top = b.k * (b.n - b.k);
    Poly total;
    Rational factorial = 1;
    std::vector<Rational> inv_fact(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) {
        if (m > 0) factorial *= m;
        inv_fact[static_cast<std::size_t>(m)] = Rational(1) / factorial;
    }
    for (const auto& [w, mult] : b.weights) {
        const IPoly x = root_form(b, w);
        IPoly pow = poly_one<i64>(b.n);
        for (int m = 0; m <= top; ++m) {
            if (m > 0) pow = poly_mul(pow, x, top);
            for (const auto& [e, c] : pow)
                poly_add(total, e,
                         static_cast<Rational>(inv_fact[static_cast<std::size_t>(m)] * c * mult));
        }
    }
    return reduce_to_schubert(std::move(total), b.k, b.n);
}

/// Todd class of the tangent bundle, cached per (k, n).
inline const SchubertRational& todd_tangent(int k, int n) {
    static std::map<std::pair<int, int>, SchubertRational> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find({k, n});
    if (it != cache.end()) return it->second;

    const int top = k * (n - k);
    // Univariate series: x / (1 - e^{-x}) = 1 / sum_m (-x)^m / (m+1)!
    std::vector<Rational> denom(static_cast<std::size_t>(top) + 1);
    Rational fact = 1;
    for (int m = 0; m <= top; ++m) {
        fact *= m + 1;
        denom[static_cast<std::size_t>(m)] = Rational((m % 2 == 0) ? 1 : -1) / fact;
    }
    std::vector<Rational> td_series(static_cast<std::size_t>(top) + 1);
    td_series[0] = 1;
    for (int m = 1; m <= top; ++m) {
        Rational acc = 0;
        for (int j = 1; j <= m; ++j)
            acc += denom[static_cast<std::size_t>(j)] * td_series[static_cast<std::size_t>(m - j)];
        td_series[static_cast<std::size_t>(m)] = -acc;
    }

    const RootBundle tg = RootBundle::tangent(k, n);
    Poly total = poly_one(n);
    for (const auto& [w, mult] : tg.weights) {
        const IPoly x = root_form(tg, w);
        Poly factor;
        IPoly pow = poly_one<i64>(n);
        for (int m = 0; m <= top; ++m) {
            if (m > 0) pow = poly_mul(pow, x, top);
            for (const auto& [e, c] : pow)
                poly_add(factor, e,
                         static_cast<Rational>(td_series[static_cast<std::size_t>(m)] * c));
        }
        for (i64 copy = 0; copy < mult; ++copy) total = poly_mul(total, factor, top);
    }
    auto [ins, ok] = cache.emplace(std::make_pair(k, n),
                                   reduce_to_schubert(std::move(total), k, n));
    return ins->second;
}

}  // namespace detail

/// Hirzebruch-Riemann-Roch: chi(E) = integral of ch(E) * td(T).  Computed
/// entirely in intersection theory, so it is independent of the
/// Borel-Weil-Bott route and serves as a consistency oracle for it.
inline i64 euler_characteristic(const HomogeneousBundle& b) {
    const SchubertRational ch = detail::chern_character(RootBundle::from_bundle(b));
    const SchubertRational td = detail::todd_tangent(b.k, b.n);
    const Rational chi = integrate(product(ch, td));
    if (boost::multiprecision::denominator(chi) != 1)
        throw hard_error("euler_characteristic: non-integer result (reduction bug)");
    const auto num = boost::multiprecision::numerator(chi);
    if (num > std::numeric_limits<i64>::max() || num < std::numeric_limits<i64>::min())
        throw hard_error("euler_characteristic: result exceeds 64-bit range");
    return static_cast<i64>(num);
}

}  // namespace grassbwb
