#pragma once

// Integer weight vectors: the combinatorial substrate for Bott's algorithm.
// A weight is a plain sequence of integers; "dominant" means non-increasing.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <vector>

#include "grassbwb/common.hpp"

namespace grassbwb {

using Weight = std::vector<int>;

/// The staircase weight (n, n-1, ..., 1).
inline Weight rho(int n) {
    if (n < 1) throw std::invalid_argument("rho: n must be positive");
    Weight r(static_cast<std::size_t>(n));
    std::iota(r.rbegin(), r.rend(), 1);
    return r;
}

inline bool is_dominant(const Weight& w) {
    return std::is_sorted(w.rbegin(), w.rend());
}

inline Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight sizes differ");
    Weight s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight sizes differ");
    Weight s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
    return s;
}

/// Shift every entry by the same constant (a determinant twist).
inline Weight shifted(Weight w, int c) {
    for (int& e : w) e += c;
    return w;
}

/// Negate-and-reverse: the dominant weight of the dual representation.
/// This is also the single boundary between U-weights and the U*-convention.
inline Weight dual_weight(Weight w) {
    std::reverse(w.begin(), w.end());
    for (int& e : w) e = -e;
    return w;
}

/// Outcome of sorting a weight into strictly decreasing order.  `regular` is
/// false exactly when two entries coincide (all cohomology then vanishes and
/// the other fields are meaningless); otherwise `sorted` is the decreasing
/// rearrangement and `length` the inversion count of the input, i.e. the
/// number of adjacent transpositions a minimal sorting word uses.
struct SortOutcome {
    bool regular = false;
    Weight sorted;
    int length = 0;
};

inline SortOutcome sort_regular(const Weight& w) {
    SortOutcome out;
    out.sorted = w;
    std::sort(out.sorted.begin(), out.sorted.end(), std::greater<int>());
    for (std::size_t i = 0; i + 1 < out.sorted.size(); ++i)
        if (out.sorted[i] == out.sorted[i + 1]) return out;  // regular=false
    out.regular = true;
    // Inversions for a decreasing target: pairs i<j with w[i] < w[j].
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] < w[j]) ++out.length;
    return out;
}

/// dim of the irreducible GL(n) representation with highest weight lambda,
/// by the Weyl dimension formula prod_{i<j} (l_i - l_j + j - i)/(j - i).
/// Exact throughout: numerator and denominator are accumulated as big
/// integers and divide exactly only as a whole (per-column divisibility can
/// fail, e.g. lambda=(3,2,0)).  Entries may be negative; a uniform shift is
/// a determinant twist and does not change the dimension.
inline i64 weyl_dimension(const Weight& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("weyl_dimension: empty weight");
    if (!is_dominant(lambda))
        throw std::invalid_argument("weyl_dimension: weight is not dominant");
    const int n = static_cast<int>(lambda.size());
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + j - i;
            den *= j - i;
        }
    boost::multiprecision::cpp_int q = num / den;
    if (q * den != num)
        throw hard_error("weyl_dimension: non-exact division (formula misuse)");
    if (q > std::numeric_limits<i64>::max())
        throw hard_error("weyl_dimension: result exceeds 64-bit range");
    return static_cast<i64>(q);
}

}  // namespace grassbwb
