#pragma once

// Borel-Weil-Bott on the Grassmannian G(k,n): the cohomology of an
// irreducible homogeneous bundle Sigma_{w'}U* (x) Sigma_{w''}Q* sits in a
// single degree.  Form w = (w'|w''), add the staircase rho(n); a repeated
// entry kills all cohomology, otherwise the inversion count is the degree
// and sort(w+rho)-rho is the highest weight of the resulting GL(n)-module.
//
// Batch evaluation decomposes a product character and fans the irreducible
// summands out to workers; aggregation is by summand index, so the result
// never depends on completion order.

#include <atomic>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "grassbwb/charring.hpp"
#include "grassbwb/common.hpp"
#include "grassbwb/weights.hpp"

namespace grassbwb {

struct HomogeneousBundle {
    int k = 0;
    int n = 0;
    CharElement sub_part;   // rank k   (weights on U*)
    CharElement quot_part;  // rank n-k (weights on Q*)

    HomogeneousBundle(int k_, int n_, CharElement sub, CharElement quot)
        : k(k_), n(n_), sub_part(std::move(sub)), quot_part(std::move(quot)) {
        if (k < 1 || n <= k)
            throw std::invalid_argument("HomogeneousBundle: need 1 <= k < n");
        if (sub_part.rank() != k || quot_part.rank() != n - k)
            throw std::invalid_argument("HomogeneousBundle: block ranks must be k and n-k");
    }
};

/// One irreducible summand, with enough provenance to re-render the
/// intermediate tables (w+rho and the degree, -1 when nothing survives).
struct BwbSummand {
    Weight w_prime;
    Weight w_doubleprime;
    i64 multiplicity = 1;   // multiplicity of the summand in the bundle
    Weight sum_weight;      // w + rho, before sorting
    bool vanishes = true;
    int degree = -1;        // inversion count; -1 when non-regular
    Weight dominant_weight; // sort(w+rho) - rho, empty when non-regular
    i64 dimension = 0;      // dim of one copy of the resulting module
};

struct BwbResult {
    int k = 0;
    int n = 0;
    std::vector<BwbSummand> summands;
    std::map<int, i64> aggregated;  // degree -> total dimension (mult-weighted)
};

/// Cohomology of the single irreducible Sigma_{w'}U* (x) Sigma_{w''}Q*.
inline BwbSummand bwb_irreducible(int k, int n, const Weight& w_prime,
                                  const Weight& w_doubleprime) {
    if (k < 1 || n <= k)
        throw std::invalid_argument("bwb_irreducible: need 1 <= k < n");
    if (static_cast<int>(w_prime.size()) != k ||
        static_cast<int>(w_doubleprime.size()) != n - k)
        throw std::invalid_argument("bwb_irreducible: weight lengths must be k and n-k");
    if (!is_dominant(w_prime) || !is_dominant(w_doubleprime))
        throw std::invalid_argument("bwb_irreducible: block weights must be non-increasing");

    BwbSummand s;
    s.w_prime = w_prime;
    s.w_doubleprime = w_doubleprime;
    Weight w = w_prime;
    w.insert(w.end(), w_doubleprime.begin(), w_doubleprime.end());
    s.sum_weight = w + rho(n);
    const SortOutcome sorted = sort_regular(s.sum_weight);
    if (!sorted.regular) return s;  // vanishes
    s.vanishes = false;
    s.degree = sorted.length;
    s.dominant_weight = sorted.sorted - rho(n);
    s.dimension = weyl_dimension(s.dominant_weight);
    return s;
}

namespace detail {

inline int worker_count(std::size_t tasks) {
    int cap = static_cast<int>(std::thread::hardware_concurrency());
    if (cap < 1) cap = 1;
    if (const char* env = std::getenv("GRASSBWB_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested >= 1) cap = requested;
        } catch (const std::exception&) {
            // Unparseable values fall back to the hardware default.
        }
    }
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(cap), tasks));
}

}  // namespace detail

/// Full cohomology of a (possibly reducible) homogeneous bundle: apply BWB to
/// every pair of irreducible block summands, then aggregate per degree.
inline BwbResult bwb_bundle(const HomogeneousBundle& b) {
    BwbResult out;
    out.k = b.k;
    out.n = b.n;

    struct Task {
        Weight wp, wq;
        i64 mult;
    };
    std::vector<Task> tasks;
    for (const auto& [wp, mp] : b.sub_part.terms())
        for (const auto& [wq, mq] : b.quot_part.terms())
            tasks.push_back({wp, wq, mp * mq});

    out.summands.resize(tasks.size());
    const int workers = detail::worker_count(tasks.size());
    auto run_range = [&](std::atomic<std::size_t>& next) {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            BwbSummand s = bwb_irreducible(b.k, b.n, tasks[i].wp, tasks[i].wq);
            s.multiplicity = tasks[i].mult;
            out.summands[i] = std::move(s);
        }
    };
    if (workers <= 1) {
        std::atomic<std::size_t> next{0};
        run_range(next);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back([&] { run_range(next); });
        for (auto& th : pool) th.join();
    }

    // Deterministic aggregation in summand order.
    for (const auto& s : out.summands) {
        if (s.vanishes) continue;
        auto [it, inserted] = out.aggregated.try_emplace(s.degree, 0);
        it->second += s.multiplicity * s.dimension;
    }
    return out;
}

/// Alternating sum over degrees: the holomorphic Euler characteristic.
inline i64 bwb_euler(const BwbResult& r) {
    i64 chi = 0;
    for (const auto& [deg, dim] : r.aggregated) chi += (deg % 2 == 0 ? dim : -dim);
    return chi;
}

}  // namespace grassbwb
