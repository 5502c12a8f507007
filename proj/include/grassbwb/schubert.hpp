#pragma once

// The integral cohomology ring of G(k,n) in the Schubert basis: classes are
// integer (or exact-rational) combinations of sigma_lambda for partitions
// lambda inside the k x (n-k) box.  Products use the Littlewood-Richardson
// kernel and drop every shape that overflows the box, which realizes the
// defining ideal; integration reads off the coefficient of the point class.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grassbwb/charring.hpp"
#include "grassbwb/common.hpp"
#include "grassbwb/weights.hpp"

namespace grassbwb {

using Rational = boost::multiprecision::cpp_rational;

/// Formal sum of Schubert classes; keys are trimmed partitions (no trailing
/// zeros) fitting the k x (n-k) box.
template <class Coeff>
struct BasicSchubert {
    int k = 0;
    int n = 0;
    std::map<Weight, Coeff> terms;

    BasicSchubert(int k_, int n_) : k(k_), n(n_) {
        if (k < 1 || n <= k)
            throw std::invalid_argument("BasicSchubert: need 1 <= k < n");
    }

    void add(const Weight& partition, const Coeff& c) {
        Weight key = detail::trim_partition(partition);
        if (!is_dominant(key) || (!key.empty() && key.back() < 0))
            throw std::invalid_argument("Schubert class: key must be a partition");
        if (static_cast<int>(key.size()) > k || (!key.empty() && key[0] > n - k))
            throw std::invalid_argument("Schubert class: partition outside the box");
        if (c == 0) return;
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), c);
        } else if ((it->second += c) == 0) {
            terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    /// The piece of total codimension d.
    BasicSchubert graded_piece(int d) const {
        BasicSchubert out(k, n);
        for (const auto& [lam, c] : terms) {
            int total = 0;
            for (int part : lam) total += part;
            if (total == d) out.add(lam, c);
        }
        return out;
    }

    friend bool operator==(const BasicSchubert& a, const BasicSchubert& b) {
        return a.k == b.k && a.n == b.n && a.terms == b.terms;
    }
};

using SchubertElement = BasicSchubert<i64>;
using SchubertRational = BasicSchubert<Rational>;

namespace detail {

/// Memoized box-free LR expansions keyed by the (already trimmed) factor
/// shapes; rows are capped at max_rows.  Shared read-only after first use.
inline const std::map<Weight, i64>& lr_cached(const Weight& lambda, const Weight& mu,
                                              int max_rows) {
    static std::map<std::tuple<Weight, Weight, int>, std::map<Weight, i64>> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    auto key = std::make_tuple(lambda, mu, max_rows);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, lr_expand(lambda, mu, max_rows)).first;
    return it->second;
}

}  // namespace detail

template <class Coeff>
BasicSchubert<Coeff> operator+(const BasicSchubert<Coeff>& a, const BasicSchubert<Coeff>& b) {
    if (a.k != b.k || a.n != b.n)
        throw std::invalid_argument("Schubert sum: grassmannian mismatch");
    BasicSchubert<Coeff> out = a;
    for (const auto& [lam, c] : b.terms) out.add(lam, c);
    return out;
}

template <class Coeff>
BasicSchubert<Coeff> operator-(const BasicSchubert<Coeff>& a, const BasicSchubert<Coeff>& b) {
    if (a.k != b.k || a.n != b.n)
        throw std::invalid_argument("Schubert difference: grassmannian mismatch");
    BasicSchubert<Coeff> out = a;
    for (const auto& [lam, c] : b.terms) out.add(lam, Coeff(0) - c);
    return out;
}

template <class Coeff>
BasicSchubert<Coeff> scale(const BasicSchubert<Coeff>& a, const Coeff& s) {
    BasicSchubert<Coeff> out(a.k, a.n);
    for (const auto& [lam, c] : a.terms) out.add(lam, c * s);
    return out;
}

/// Littlewood-Richardson product truncated to the box.
template <class Coeff>
BasicSchubert<Coeff> product(const BasicSchubert<Coeff>& a, const BasicSchubert<Coeff>& b) {
    if (a.k != b.k || a.n != b.n)
        throw std::invalid_argument("Schubert product: grassmannian mismatch");
    BasicSchubert<Coeff> out(a.k, a.n);
    for (const auto& [lam, ca] : a.terms)
        for (const auto& [mu, cb] : b.terms)
            for (const auto& [nu, m] : detail::lr_cached(lam, mu, a.k)) {
                if (!nu.empty() && nu[0] > a.n - a.k) continue;  // leaves the box
                out.add(nu, ca * cb * Coeff(m));
            }
    return out;
}

template <class Coeff>
BasicSchubert<Coeff> operator*(const BasicSchubert<Coeff>& a, const BasicSchubert<Coeff>& b) {
    return product(a, b);
}

template <class Coeff>
BasicSchubert<Coeff> power(const BasicSchubert<Coeff>& a, int e) {
    if (e < 0) throw std::invalid_argument("Schubert power: negative exponent");
    BasicSchubert<Coeff> out(a.k, a.n);
    out.add(Weight{}, Coeff(1));
    for (int i = 0; i < e; ++i) out = product(out, a);
    return out;
}

/// A single sigma_lambda.
template <class Coeff = i64>
BasicSchubert<Coeff> sigma(int k, int n, const Weight& lambda, Coeff c = Coeff(1)) {
    BasicSchubert<Coeff> out(k, n);
    out.add(lambda, c);
    return out;
}

/// Degree map: the coefficient of the point class sigma_{(n-k)^k};
/// lower-codimension terms integrate to zero.
template <class Coeff>
Coeff integrate(const BasicSchubert<Coeff>& a) {
    const Weight point(static_cast<std::size_t>(a.k), a.n - a.k);
    auto it = a.terms.find(point);
    return it == a.terms.end() ? Coeff(0) : it->second;
}

/// All partitions inside the k x (n-k) box, the ring's additive basis.
inline std::vector<Weight> box_partitions(int k, int n) {
    std::vector<Weight> out;
    Weight cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        out.push_back(detail::trim_partition(cur));
        if (row == k) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, n - k);
    return out;
}

/// The complementary partition: reverse of (n-k) - lambda_i over k rows.
inline Weight box_complement(int k, int n, const Weight& lambda) {
    Weight full(static_cast<std::size_t>(k), 0);
    std::copy(lambda.begin(), lambda.end(), full.begin());
    Weight comp(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) comp[static_cast<std::size_t>(i)] =
        (n - k) - full[static_cast<std::size_t>(k - 1 - i)];
    return detail::trim_partition(comp);
}

/// The class of the surface of second-type lines inside the Fano scheme:
/// five times the second special Schubert class, to be paired against the
/// fundamental class of the Fano scheme by callers.
inline SchubertElement class_of_S() { return sigma(2, 6, {2}, i64(5)); }

/// Exactness check for a rational element expected to be integral.
inline SchubertElement to_integral(const SchubertRational& a) {
    SchubertElement out(a.k, a.n);
    for (const auto& [lam, c] : a.terms) {
        if (boost::multiprecision::denominator(c) != 1)
            throw hard_error("to_integral: non-integer Schubert coefficient");
        auto num = boost::multiprecision::numerator(c);
        if (num > std::numeric_limits<i64>::max() || num < std::numeric_limits<i64>::min())
            throw hard_error("to_integral: coefficient exceeds 64-bit range");
        out.add(lam, static_cast<i64>(num));
    }
    return out;
}

inline SchubertRational to_rational(const SchubertElement& a) {
    SchubertRational out(a.k, a.n);
    for (const auto& [lam, c] : a.terms) out.add(lam, Rational(c));
    return out;
}

}  // namespace grassbwb
