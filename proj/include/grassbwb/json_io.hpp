#pragma once

// JSON views of every result type the command line can emit, plus the
// output envelope.  Serialization uses sorted-key objects and
// integer-keyed maps as [key, value] pairs, so identical inputs always
// produce byte-identical payloads; the only varying envelope field
// (elapsed milliseconds) sits outside the payload.

#include <json.hpp>
#include <map>
#include <string>

#include "grassbwb/bwb.hpp"
#include "grassbwb/deglocus.hpp"
#include "grassbwb/exactness.hpp"
#include "grassbwb/pipeline.hpp"
#include "grassbwb/render.hpp"
#include "grassbwb/schubert.hpp"

namespace grassbwb {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

inline json weight_to_json(const Weight& w) {
    json a = json::array();
    for (int v : w) a.push_back(v);
    return a;
}

inline json degree_map_to_json(const std::map<int, i64>& m) {
    json a = json::array();
    for (const auto& [deg, dim] : m) a.push_back(json::array({deg, dim}));
    return a;
}

inline json bwb_to_json(const BwbResult& r) {
    json summands = json::array();
    for (const BwbSummand* s : detail::sorted_summands(r)) {
        summands.push_back(json{{"degree", s->degree},
                                {"dimension", s->dimension},
                                {"dominant_weight", weight_to_json(s->dominant_weight)},
                                {"mult", s->multiplicity},
                                {"sum_weight", weight_to_json(s->sum_weight)},
                                {"vanishes", s->vanishes},
                                {"w_doubleprime", weight_to_json(s->w_doubleprime)},
                                {"w_prime", weight_to_json(s->w_prime)}});
    }
    return json{{"cohomology", degree_map_to_json(r.aggregated)},
                {"k", r.k},
                {"n", r.n},
                {"summands", summands}};
}

inline json schubert_to_json(const SchubertElement& x) {
    json terms = json::array();
    for (const auto& [lam, c] : x.terms)
        terms.push_back(json::array({weight_to_json(lam), c}));
    return json{{"k", x.k}, {"n", x.n}, {"sigma", schubert_str(x)}, {"terms", terms}};
}

inline json invariants_to_json(const SurfaceInvariants& v) {
    return json{{"HS_sq", v.HS_sq},       {"KS_sq", v.KS_sq},
                {"c1K_c1C", v.c1K_c1C},   {"c1sq_C", v.c1sq_C},
                {"c1sq_K", v.c1sq_K},     {"c2_C", v.c2_C},
                {"c2_N", v.c2_N},         {"c2_TS", v.c2_TS},
                {"chi_O", v.chi_O},       {"chi_top", v.chi_top}};
}

inline json abutment_to_json(const AbutmentResult& r) {
    if (r.forced)
        return json{{"cohomology", degree_map_to_json(r.cohomology)}, {"forced", true}};
    return json{{"forced", false}, {"undetermined", r.undetermined}};
}

inline json les_entry_to_json(const LesEntry& e) {
    if (e.forced) return json{{"forced", true}, {"value", e.value}};
    return json{{"forced", false}, {"hi", e.hi ? json(*e.hi) : json()}, {"lo", e.lo}};
}

inline json les_to_json(const LesResult& r) {
    auto column = [](const std::vector<LesEntry>& col) {
        json a = json::array();
        for (const auto& e : col) a.push_back(les_entry_to_json(e));
        return a;
    };
    return json{{"a", column(r.a)},
                {"all_forced", r.all_forced},
                {"b", column(r.b)},
                {"c", column(r.c)},
                {"unresolved", r.unresolved}};
}

inline json torsion_to_json(const TorsionWitness& w) {
    return json{{"h2_KS_expected", w.h2_KS_expected},
                {"h2_OF3H", w.h2_OF3H},
                {"h3_IS3H", w.h3_IS3H},
                {"order_note", w.order_note},
                {"torsion", w.torsion}};
}

inline json report_to_json(const HodgeReport& r) {
    return json{{"b0", r.b0},
                {"b1", r.b1},
                {"b2", r.b2},
                {"b3", r.b3},
                {"b4", r.b4},
                {"chi_O", r.chi_O},
                {"chi_top", r.chi_top},
                {"declared_inputs", r.declared_inputs},
                {"h11", r.h11},
                {"K_S_sq", r.K_S_sq},
                {"p_g", r.p_g},
                {"q", r.q},
                {"torsion_witness", torsion_to_json(r.torsion_witness)}};
}

/// The envelope wrapping every command's output.
inline json envelope_json(const std::string& command, const std::string& format,
                          json payload, i64 elapsed_ms) {
    return json{{"command", command},
                {"elapsed_ms", elapsed_ms},
                {"format", format},
                {"payload", std::move(payload)},
                {"version", kVersion}};
}

}  // namespace grassbwb
