#pragma once

// Homological bookkeeping for the Koszul resolution
//   0 -> wedge^4 Sym^3 U -> ... -> Sym^3 U -> O_G -> O_F -> 0
// tensored with a base bundle: assemble second-quadrant E_1 pages from
// cohomology batches, then determine the abutment H^*(F, base) when the
// differentials' ranks are forced by nothing more than vanishing outside
// 0 <= total degree <= dim F.  A companion solver fills in the third column
// of a long exact sequence from two (possibly partially known) columns.
//
// Both solvers enumerate/propagate exactly; an answer is reported as Forced
// only when every feasible configuration agrees, and an empty feasible set
// is a hard error (the page or the columns were wrong, and no amount of
// interpretation fixes that).

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grassbwb/bwb.hpp"
#include "grassbwb/common.hpp"

namespace grassbwb {

/// Sparse second-quadrant E_1 page: keys are (p, q) with p <= 0 <= q and
/// positive dimensions; the abutment vanishes outside [0, max_total_degree].
struct E1Page {
    std::map<std::pair<int, int>, i64> entries;
    int max_total_degree = 4;

    void set(int p, int q, i64 dim) {
        if (p > 0 || q < 0)
            throw std::invalid_argument("E1Page: need p <= 0 and q >= 0");
        if (dim <= 0) throw std::invalid_argument("E1Page: dimensions must be positive");
        entries[{p, q}] = dim;
    }
};

/// Result of the abutment solve: either every H^m is pinned, or the page
/// admits several rank configurations with different outcomes.
struct AbutmentResult {
    bool forced = false;
    std::map<int, i64> cohomology;            // valid when forced
    std::vector<std::string> undetermined;    // rank parameters that vary
};

/// Build the page for a Koszul family: column -p holds the aggregated
/// cohomology of family(p), p = 0..koszul_length.
inline E1Page assemble_e1(const std::function<HomogeneousBundle(int)>& family,
                          int koszul_length = 4, int max_total_degree = 4) {
    E1Page page;
    page.max_total_degree = max_total_degree;
    for (int p = 0; p <= koszul_length; ++p) {
        const BwbResult r = bwb_bundle(family(p));
        for (const auto& [q, dim] : r.aggregated)
            if (dim != 0) page.set(-p, q, dim);
    }
    return page;
}

/// The two bundle families of the surface construction:
/// wedge^p Sym^3 U (x) Sym^2 U (tH)  and  wedge^p Sym^3 U (x) Q^dual (tH).
inline std::function<HomogeneousBundle(int)> koszul_sym2u(int t) {
    return [t](int p) {
        const auto sym3U = CharElement::irreducible(2, {0, -3});
        const auto sym2U = CharElement::irreducible(2, {0, -2});
        return HomogeneousBundle{
            2, 6, twist_by_determinant(multiply(exterior_power(p, sym3U), sym2U), t),
            CharElement::trivial(4)};
    };
}

inline std::function<HomogeneousBundle(int)> koszul_qdual(int t) {
    return [t](int p) {
        const auto sym3U = CharElement::irreducible(2, {0, -3});
        const auto qstar = CharElement::irreducible(4, {1, 0, 0, 0});
        return HomogeneousBundle{2, 6, exterior_power(p, sym3U),
                                 twist_by_determinant(qstar, -t)};
    };
}

/// The Koszul family for the twisted structure sheaf O_F(tH) itself.
inline std::function<HomogeneousBundle(int)> koszul_structure(int t) {
    return [t](int p) {
        const auto sym3U = CharElement::irreducible(2, {0, -3});
        return HomogeneousBundle{2, 6,
                                 twist_by_determinant(exterior_power(p, sym3U), t),
                                 CharElement::trivial(4)};
    };
}

namespace detail {

struct Differential {
    std::pair<int, int> src, dst;
    i64 max_rank;
};

inline std::string differential_name(int r, const Differential& d) {
    std::ostringstream os;
    os << "rank d_" << r << "(" << d.src.first << "," << d.src.second << ")->("
       << d.dst.first << "," << d.dst.second << ")";
    return os.str();
}

}  // namespace detail

/// Solve for the abutment of a bounded second-quadrant page by exhausting
/// all consistent differential ranks across pages r = 1..max column span.
/// Vanishing for total degree outside [0, max_total_degree] is the only
/// geometric input.
inline AbutmentResult solve_abutment(const E1Page& page) {
    // Width of the p-range bounds the last page with possible differentials.
    int min_p = 0;
    for (const auto& [pq, dim] : page.entries) min_p = std::min(min_p, pq.first);
    const int last_page = -min_p;

    using Cells = std::map<std::pair<int, int>, i64>;
    struct Solution {
        std::map<int, i64> abutment;
        std::map<std::string, i64> ranks;  // differential name -> chosen rank
    };
    std::vector<Solution> found;
    std::map<std::string, i64> rank_choice;
    i64 budget = 4'000'000;  // enumeration guard; pages here are tiny

    auto finish = [&](const Cells& cells) {
        Solution sol;
        sol.ranks = rank_choice;
        for (const auto& [pq, dim] : cells) {
            if (dim == 0) continue;
            const int total = pq.first + pq.second;
            if (total < 0 || total > page.max_total_degree) return;  // infeasible leaf
            sol.abutment[total] += dim;
        }
        found.push_back(std::move(sol));
    };

    auto advance = [&](auto&& self, const Cells& cells, int r) -> void {
        if (--budget <= 0) throw hard_error("solve_abutment: enumeration budget exceeded");
        if (r > last_page) {
            finish(cells);
            return;
        }
        // Differentials on page r between currently nonzero cells.  Map
        // iteration orders sources by ascending p, so for any shared cell the
        // incoming differential is applied before the outgoing one; the
        // running subtraction then enforces rank_in + rank_out <= dim
        // (the image of d_in lies in the kernel of d_out).
        std::vector<detail::Differential> diffs;
        for (const auto& [pq, dim] : cells) {
            if (dim == 0) continue;
            const std::pair<int, int> dst{pq.first + r, pq.second - r + 1};
            auto it = cells.find(dst);
            if (it == cells.end() || it->second == 0) continue;
            diffs.push_back({pq, dst, std::min(dim, it->second)});
        }

        // Enumerate joint rank assignments for this page.
        auto assign = [&](auto&& inner, std::size_t idx, const Cells& work) -> void {
            if (idx == diffs.size()) {
                self(self, work, r + 1);
                return;
            }
            const auto& d = diffs[idx];
            const std::string name = detail::differential_name(r, d);
            for (i64 rank = 0; rank <= d.max_rank; ++rank) {
                if (work.at(d.src) < rank || work.at(d.dst) < rank) break;
                Cells next = work;
                next[d.src] -= rank;
                next[d.dst] -= rank;
                rank_choice[name] = rank;
                inner(inner, idx + 1, next);
            }
            rank_choice.erase(name);
        };
        assign(assign, 0, cells);
    };

    advance(advance, page.entries, 1);

    if (found.empty())
        throw hard_error("solve_abutment: no consistent differential ranks (wrong page)");

    AbutmentResult out;
    std::set<std::map<int, i64>> distinct;
    for (const auto& sol : found) distinct.insert(sol.abutment);
    if (distinct.size() == 1) {
        out.forced = true;
        out.cohomology = *distinct.begin();
        return out;
    }
    // Name the rank parameters that vary across feasible solutions.  A
    // differential absent from a branch (its source or target already died)
    // counts as rank 0 there.
    std::set<std::string> names;
    for (const auto& sol : found)
        for (const auto& [name, rank] : sol.ranks) names.insert(name);
    for (const auto& name : names) {
        std::set<i64> values;
        for (const auto& sol : found) {
            auto it = sol.ranks.find(name);
            values.insert(it == sol.ranks.end() ? 0 : it->second);
        }
        if (values.size() > 1) out.undetermined.push_back(name);
    }
    if (out.undetermined.empty()) out.undetermined.push_back("(varying rank set)");
    return out;
}

/// Euler consistency of a forced abutment against its page.
inline bool euler_consistent(const E1Page& page, const AbutmentResult& res) {
    if (!res.forced) return false;
    i64 lhs = 0, rhs = 0;
    for (const auto& [pq, dim] : page.entries)
        lhs += ((pq.first + pq.second) % 2 == 0 ? dim : -dim);
    for (const auto& [deg, dim] : res.cohomology) rhs += (deg % 2 == 0 ? dim : -dim);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Long exact sequence solver.
// ---------------------------------------------------------------------------

/// One resolved position of a long-exact-sequence column: either pinned to
/// `value`, or any integer in [lo, hi] (hi absent = unbounded above).
struct LesEntry {
    bool forced = false;
    i64 value = 0;
    i64 lo = 0;
    std::optional<i64> hi;
};

struct LesResult {
    std::vector<LesEntry> a, b, c;  // degrees 0..length_bound
    bool all_forced = false;
    std::vector<std::string> unresolved;  // human description of open entries
};

/// Dimensions of H^i for the three columns of 0 -> A -> B -> C -> 0 on a
/// space with cohomology supported in degrees 0..length_bound.  Unknown
/// entries are nullopt; the solver propagates exactness rank chains through
/// the sequence and pins every entry it can.  Inconsistent known data
/// (including a violated Euler alternating sum) is a hard error.
inline LesResult les_solve(const std::vector<std::optional<i64>>& a,
                           const std::vector<std::optional<i64>>& b,
                           const std::vector<std::optional<i64>>& c,
                           int length_bound) {
    const std::size_t len = static_cast<std::size_t>(length_bound) + 1;
    if (a.size() != len || b.size() != len || c.size() != len)
        throw std::invalid_argument("les_solve: columns must have length_bound+1 entries");
    for (const auto* col : {&a, &b, &c})
        for (const auto& v : *col)
            if (v && *v < 0) throw std::invalid_argument("les_solve: negative dimension");

    // Flatten to the exact sequence X_0 -> X_1 -> ... with
    // X_{3i}=A^i, X_{3i+1}=B^i, X_{3i+2}=C^i.  With r_j the rank of the map
    // into X_j, exactness says dim X_j = r_j + r_{j+1}; r_0 = r_{3len} = 0.
    const std::size_t total = 3 * len;
    std::vector<std::optional<i64>> dims(total);
    for (std::size_t i = 0; i < len; ++i) {
        dims[3 * i] = a[i];
        dims[3 * i + 1] = b[i];
        dims[3 * i + 2] = c[i];
    }

    // Each r_j is an affine function sign * v + off of its segment's
    // parameter v; segments are delimited by unknown dims.  Parameter 0 is
    // the constant zero (so segment 0 is fully determined).
    struct Affine {
        std::size_t param;
        int sign;
        i64 off;
    };
    std::vector<Affine> rs(total + 1);
    struct ParamRange {
        i64 lo = 0;
        std::optional<i64> hi;
        void bound_below(i64 v) { lo = std::max(lo, v); }
        void bound_above(i64 v) { hi = hi ? std::min(*hi, v) : v; }
        bool empty() const { return hi && *hi < lo; }
        bool pinned() const { return hi && *hi == lo; }
    };
    std::vector<ParamRange> params(1);
    params[0].bound_above(0);  // the zero parameter

    rs[0] = {0, 1, 0};
    for (std::size_t j = 0; j < total; ++j) {
        const Affine cur = rs[j];
        // r_j >= 0 constrains the segment parameter.
        if (cur.sign > 0) params[cur.param].bound_below(-cur.off);
        else params[cur.param].bound_above(cur.off);
        if (dims[j]) {
            // r_{j+1} = dim - r_j.
            rs[j + 1] = {cur.param, -cur.sign, *dims[j] - cur.off};
        } else {
            params.emplace_back();
            rs[j + 1] = {params.size() - 1, 1, 0};
        }
    }
    // Final boundary: r_{3len} = 0 pins the last segment's parameter.
    {
        const Affine last = rs[total];
        // sign * v + off = 0  =>  v = -off/sign.
        const i64 v = last.sign > 0 ? -last.off : last.off;
        params[last.param].bound_below(v);
        params[last.param].bound_above(v);
    }
    for (const auto& pr : params)
        if (pr.empty())
            throw hard_error("les_solve: inconsistent columns (no feasible rank chain)");

    auto eval = [&](const Affine& f) {
        LesEntry e;
        const ParamRange& pr = params[f.param];
        if (pr.pinned()) {
            e.forced = true;
            e.value = f.sign * pr.lo + f.off;
            e.lo = e.value;
            e.hi = e.value;
        } else if (f.sign > 0) {
            e.lo = pr.lo + f.off;
            if (pr.hi) e.hi = *pr.hi + f.off;
        } else {
            e.lo = pr.hi ? f.off - *pr.hi : 0;  // unbounded param still keeps r >= 0
            e.hi = f.off - pr.lo;
        }
        return e;
    };

    LesResult res;
    res.all_forced = true;
    res.a.resize(len);
    res.b.resize(len);
    res.c.resize(len);
    auto store = [&](std::size_t j, LesEntry e) {
        const std::size_t deg = j / 3;
        LesEntry* slot = nullptr;
        const char* name = nullptr;
        switch (j % 3) {
            case 0: slot = &res.a[deg]; name = "A"; break;
            case 1: slot = &res.b[deg]; name = "B"; break;
            default: slot = &res.c[deg]; name = "C"; break;
        }
        *slot = e;
        if (!e.forced) {
            res.all_forced = false;
            std::ostringstream os;
            os << "h^" << deg << "(" << name << ") in [" << e.lo << ", ";
            if (e.hi) os << *e.hi;
            else os << "inf";
            os << "]";
            res.unresolved.push_back(os.str());
        }
    };
    for (std::size_t j = 0; j < total; ++j) {
        if (dims[j]) {
            LesEntry e;
            e.forced = true;
            e.value = *dims[j];
            e.lo = e.value;
            e.hi = e.value;
            store(j, e);
            continue;
        }
        // dim X_j = r_j + r_{j+1}; the two ranks belong to adjacent segments.
        const LesEntry in = eval(rs[j]);
        const LesEntry out_rank = eval(rs[j + 1]);
        LesEntry e;
        if (in.forced && out_rank.forced) {
            e.forced = true;
            e.value = in.value + out_rank.value;
            e.lo = e.value;
            e.hi = e.value;
        } else {
            e.lo = in.lo + out_rank.lo;
            if (in.hi && out_rank.hi) e.hi = *in.hi + *out_rank.hi;
        }
        store(j, e);
    }
    return res;
}

/// Convenience: a dense optional column from a sparse degree -> dim map;
/// absent degrees are known zeros.
inline std::vector<std::optional<i64>> known_column(const std::map<int, i64>& sparse,
                                                    int length_bound) {
    std::vector<std::optional<i64>> col(static_cast<std::size_t>(length_bound) + 1,
                                        std::optional<i64>(0));
    for (const auto& [deg, dim] : sparse) {
        if (deg < 0 || deg > length_bound)
            throw std::invalid_argument("known_column: degree out of range");
        col[static_cast<std::size_t>(deg)] = dim;
    }
    return col;
}

/// Convenience: an all-unknown column.
inline std::vector<std::optional<i64>> unknown_column(int length_bound) {
    return std::vector<std::optional<i64>>(static_cast<std::size_t>(length_bound) + 1,
                                           std::nullopt);
}

}  // namespace grassbwb
