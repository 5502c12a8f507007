#pragma once

// Plain-text rendering: the per-power weight tables of the Koszul factors
// (columns p, w', w+rho, l(w), mult, with l(w) = -1 marking non-regular
// rows), the aggregated nonzero-cohomology summary, and Schubert classes
// in sigma notation.  All output is ASCII and byte-stable.

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "grassbwb/bwb.hpp"
#include "grassbwb/schubert.hpp"

namespace grassbwb {

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

/// " (H)", " (-2H)", "" for t = 1, -2, 0.
inline std::string twist_suffix(int t) {
    if (t == 0) return "";
    if (t == 1) return " (H)";
    if (t == -1) return " (-H)";
    return " (" + std::to_string(t) + "H)";
}

/// "Q* (H)", "Sym^3 U (x) Q* (-2H)", "wedge^2 Sym^3 U (x) Sym^2 U (H)".
inline std::string summand_label(const std::string& base, int p, int twist) {
    std::string s;
    if (p >= 2) s += "wedge^" + std::to_string(p) + " Sym^3 U (x) ";
    else if (p == 1) s += "Sym^3 U (x) ";
    return s + base + twist_suffix(twist);
}

/// One Koszul factor family wedge^p Sym^3 U (x) base(tH), p = 0..4,
/// evaluated through the cohomology engine.
struct RenderedFamily {
    std::string base_label;
    int twist = 0;
    std::vector<BwbResult> per_p;
};

inline RenderedFamily make_family(std::string base_label, int twist,
                                  const std::function<HomogeneousBundle(int)>& family,
                                  int koszul_length = 4) {
    RenderedFamily f{std::move(base_label), twist, {}};
    for (int p = 0; p <= koszul_length; ++p) f.per_p.push_back(bwb_bundle(family(p)));
    return f;
}

namespace detail {

inline std::string aligned_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

inline std::vector<const BwbSummand*> sorted_summands(const BwbResult& r) {
    std::vector<const BwbSummand*> out;
    for (const auto& s : r.summands) out.push_back(&s);
    std::sort(out.begin(), out.end(), [](const BwbSummand* a, const BwbSummand* b) {
        if (a->w_prime != b->w_prime) return a->w_prime > b->w_prime;
        return a->w_doubleprime > b->w_doubleprime;
    });
    return out;
}

}  // namespace detail

/// The weight table of one family, in the style of the worked proofs:
/// one row per distinct summand, descending by w', multiplicity column.
inline std::string render_proof_table(const RenderedFamily& f) {
    bool uniform = true;
    const Weight* wpp = nullptr;
    for (const auto& r : f.per_p)
        for (const auto& s : r.summands) {
            if (!wpp) wpp = &s.w_doubleprime;
            else if (*wpp != s.w_doubleprime) uniform = false;
        }

    std::string out = "wedge^p Sym^3 U (x) " + f.base_label + twist_suffix(f.twist) + "\n";
    if (wpp && uniform) out += "w'' = " + weight_str(*wpp) + " in every row\n";

    std::vector<std::vector<std::string>> rows;
    if (wpp && uniform) rows.push_back({"p", "w'", "w+rho", "l(w)", "mult"});
    else rows.push_back({"p", "w'", "w''", "w+rho", "l(w)", "mult"});
    for (std::size_t p = 0; p < f.per_p.size(); ++p)
        for (const BwbSummand* s : detail::sorted_summands(f.per_p[p])) {
            std::vector<std::string> row{std::to_string(p), weight_str(s->w_prime)};
            if (!(wpp && uniform)) row.push_back(weight_str(s->w_doubleprime));
            row.push_back(weight_str(s->sum_weight));
            row.push_back(std::to_string(s->degree));
            row.push_back(std::to_string(s->multiplicity));
            rows.push_back(std::move(row));
        }
    return out + detail::aligned_rows(rows);
}

/// Aggregated nonzero groups across several families, one line each:
/// "H^4(G(2,6), wedge^2 Sym^3 U (x) Sym^2 U (H)) = C^36".
inline std::string render_nonzero_summary(const std::vector<RenderedFamily>& families) {
    std::string out;
    for (const auto& f : families)
        for (std::size_t p = 0; p < f.per_p.size(); ++p)
            for (const auto& [deg, dim] : f.per_p[p].aggregated) {
                if (dim == 0) continue;
                out += "H^" + std::to_string(deg) + "(G(2," +
                       std::to_string(f.per_p[p].n) + "), " +
                       summand_label(f.base_label, static_cast<int>(p), f.twist) +
                       ") = C^" + std::to_string(dim) + "\n";
            }
    return out;
}

/// Schubert class in sigma notation: "18*s[3,1] + 27*s[2,2]", single-row
/// classes as "s2", the identity as "1", the zero class as "0".
inline std::string schubert_str(const SchubertElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lam, c] : x.terms) {
        const i64 mag = c < 0 ? -c : c;
        std::string basis;
        if (lam.empty()) basis = "1";
        else if (lam.size() == 1) basis = "s" + std::to_string(lam[0]);
        else {
            basis = "s[";
            for (std::size_t i = 0; i < lam.size(); ++i) {
                if (i) basis += ',';
                basis += std::to_string(lam[i]);
            }
            basis += "]";
        }
        std::string coeff;
        if (lam.empty()) coeff = std::to_string(mag);
        else if (mag != 1) coeff = std::to_string(mag) + "*";
        if (first) {
            out += (c < 0 ? "-" : "") + coeff + (lam.empty() ? "" : basis);
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + coeff + (lam.empty() ? "" : basis);
        }
    }
    return out;
}

}  // namespace grassbwb
