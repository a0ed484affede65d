#include "pdg/json_io.hpp"

namespace pdg {

using nlohmann::json;

json to_json(VertexSet s) { return json(s.to_vector()); }

json to_json(const WeightFunction& w) { return json(w.weights); }

json to_json(const PerfectionVerdict& v) {
    json j;
    j["perfect"] = v.perfect;
    if (!v.perfect) {
        j["witness"] = to_json(v.witness);
        j["witnessKind"] = v.witness_kind == CycleClass::odd_hole ? "odd_hole" : "odd_antihole";
    }
    return j;
}

namespace {

std::string division_kind_name(DivisionKind kind) {
    switch (kind) {
        case DivisionKind::perfect: return "perfect";
        case DivisionKind::h_perfect: return "h_perfect";
        case DivisionKind::two: return "two";
    }
    return "?";
}

std::string claim_name(CertificateClaim::Kind kind) {
    switch (kind) {
        case CertificateClaim::Kind::pd: return "PD";
        case CertificateClaim::Kind::h_weighted: return "H_WEIGHTED";
        case CertificateClaim::Kind::h2: return "H2PD";
        case CertificateClaim::Kind::pwd_bounded: return "PWD_BOUNDED";
        case CertificateClaim::Kind::two_div: return "2DIV";
        case CertificateClaim::Kind::mnpd: return "MNPD";
        case CertificateClaim::Kind::mn2d: return "MN2D";
    }
    return "?";
}

}  // namespace

json to_json(const Division& d) {
    json j;
    j["A"] = to_json(d.a);
    j["B"] = to_json(d.b);
    j["kind"] = division_kind_name(d.kind);
    if (d.h) j["h"] = to_json(*d.h);
    return j;
}

json to_json(const Certificate& c) {
    json j;
    j["subject"] = c.subject_graph6;
    json claim;
    claim["kind"] = claim_name(c.claim.kind);
    if (c.claim.h) claim["h"] = to_json(*c.claim.h);
    if (c.claim.weight_bound > 0) claim["weightBound"] = c.claim.weight_bound;
    j["claim"] = claim;
    j["verdict"] = c.verdict;
    json evidence;
    if (c.evidence.failing_subset) evidence["failingSubset"] = to_json(*c.evidence.failing_subset);
    if (c.evidence.failing_weights) evidence["failingWeights"] = to_json(*c.evidence.failing_weights);
    evidence["noDivisionOfWhole"] = c.evidence.no_division_of_whole;
    evidence["properSubsetsConfirmed"] = c.evidence.proper_subsets_confirmed;
    evidence["subsetsChecked"] = c.evidence.subsets_checked;
    j["evidence"] = evidence;
    j["assumptions"] = c.assumptions;
    j["exhaustiveBound"] = c.exhaustive_bound;
    j["wallTimeMs"] = c.wall_ms;
    return j;
}

json to_json(const TheoremReport& r) {
    json j;
    j["theoremId"] = std::string(theorem_id_name(r.id));
    j["universe"] = r.universe;
    j["checked"] = r.checked;
    j["vacuous"] = r.vacuous;
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
    }
    j["violations"] = violations;
    j["assumptions"] = r.assumptions;
    j["wallTimeMs"] = r.wall_time_ms;
    return j;
}

json to_json(const SuiteConfig& c) {
    json j;
    j["maxN"] = c.max_n;
    j["includeGroetzsch"] = c.include_groetzsch;
    j["corpusFiles"] = c.corpus_files;
    json names = json::array();
    for (TheoremId id : c.theorems) names.push_back(std::string(theorem_id_name(id)));
    j["theorems"] = names;
    j["jobs"] = c.jobs;
    j["weightBound"] = c.weight_bound;
    j["t2MaxN"] = c.t2_max_n;
    j["caps"] = {{"exhaustive", c.caps.exhaustive},
                 {"weighted", c.caps.weighted},
                 {"pwdBounded", c.caps.pwd_bounded}};
    j["outputPath"] = c.output_path;
    j["deterministicTiming"] = c.deterministic_timing;
    return j;
}

}  // namespace pdg
