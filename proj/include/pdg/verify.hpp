#pragma once

#include "pdg/divisibility.hpp"

namespace pdg {

enum class TheoremId {
    T5_MNPD_PROPS,
    T9_MN2D_PROPS,
    T3_HOMOG,
    T4_CUTSET,
    L6_TRIANGLEFREE,
    L11_CLAWFREE_ANTIHOLE,
    T10_4CRITICAL,
    CHROMATIC_BOUNDS,
    T2_EQUIVALENCE_EMPIRICAL,
};

std::string_view theorem_id_name(TheoremId id);
std::optional<TheoremId> theorem_id_from_name(std::string_view name);

struct Violation {
    std::string graph6;
    std::string detail;
};

struct TheoremReport {
    TheoremId id = TheoremId::T5_MNPD_PROPS;
    std::string universe;
    std::int64_t checked = 0;
    bool vacuous = false;
    std::vector<Violation> violations;
    std::vector<std::string> assumptions;
    std::int64_t wall_time_ms = 0;
};

/// Five structural facts every minimally nonperfectly divisible graph obeys:
/// no basin or simplicial set, the spread-neighborhood property, a maximum
/// clique through each vertex missing part of its neighborhood, the
/// neighborhood-size bound, and min degree >= omega + 1.
/// The subject must certify MNPD (a certificate is computed when absent).
TheoremReport check_mnpd_properties(const Graph& g, const Certificate* cert = nullptr,
                                    const DivisibilityCaps& caps = {});

/// Four analogous facts for minimally non-2-divisible graphs, with the
/// min degree >= 2*omega - 2 bound.
TheoremReport check_mn2d_properties(const Graph& g, const Certificate* cert = nullptr,
                                    const DivisibilityCaps& caps = {});

/// Structural census over a corpus: homogeneous sets of MNPD members that are
/// p2p4- or diamond-free, clique cutsets of 2p3- or claw-free (and
/// triangle-free) MNPD members, and long antiholes in non-neighborhoods of
/// claw-free MNPD members. Vacuous universes are reported as such.
std::vector<TheoremReport> check_structural_theorems(CorpusStream corpus,
                                                     const DivisibilityCaps& caps = {},
                                                     int jobs = 1);

/// Chromatic-bound census (2-divisible, perfectly divisible, and the
/// chi <= omega + 1 sufficiency) plus the triangle-free MNPD <=> 4-critical
/// equivalence.
std::vector<TheoremReport> check_chromatic_and_critical(CorpusStream corpus,
                                                        const DivisibilityCaps& caps = {},
                                                        int jobs = 1);

enum class OpenProblem { pd_vs_pwd, vertex_in_a };

struct HuntOptions {
    int weight_bound = 3;
    std::string artifact_dir = "counterexamples";
    int jobs = 1;
    DivisibilityCaps caps;
};

/// Counterexample hunters. Hits are persisted (graph6 + certificates) under
/// artifact_dir and reported as violations.
TheoremReport hunt_open_problems(CorpusStream corpus, OpenProblem problem,
                                 const HuntOptions& options = {});

struct SuiteConfig {
    int max_n = 7;
    bool include_groetzsch = true;
    std::vector<std::string> corpus_files;
    std::vector<TheoremId> theorems;  // empty selects all
    int jobs = 0;                     // 0: PDG_JOBS env or hardware count
    int weight_bound = 3;
    int t2_max_n = 6;                 // bound for the heavy equivalence legs
    DivisibilityCaps caps;
    std::string output_path = "report.json";
    bool deterministic_timing = false;  // zero all wall times for byte-compares
};

struct SuiteResult {
    std::vector<TheoremReport> reports;
    int exit_code = 0;  // 0 pass/vacuous, 1 violation, 2 configuration/capability
    std::string error;  // set when exit_code == 2
};

SuiteResult run_suite(const SuiteConfig& config);
std::string suite_report_json(const SuiteConfig& config, const std::vector<TheoremReport>& reports);

}  // namespace pdg
