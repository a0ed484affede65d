#include "pdg/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "pdg/json_io.hpp"
#include "pdg/subsets.hpp"

namespace pdg {

std::string_view theorem_id_name(TheoremId id) {
    switch (id) {
        case TheoremId::T5_MNPD_PROPS: return "T5_MNPD_PROPS";
        case TheoremId::T9_MN2D_PROPS: return "T9_MN2D_PROPS";
        case TheoremId::T3_HOMOG: return "T3_HOMOG";
        case TheoremId::T4_CUTSET: return "T4_CUTSET";
        case TheoremId::L6_TRIANGLEFREE: return "L6_TRIANGLEFREE";
        case TheoremId::L11_CLAWFREE_ANTIHOLE: return "L11_CLAWFREE_ANTIHOLE";
        case TheoremId::T10_4CRITICAL: return "T10_4CRITICAL";
        case TheoremId::CHROMATIC_BOUNDS: return "CHROMATIC_BOUNDS";
        case TheoremId::T2_EQUIVALENCE_EMPIRICAL: return "T2_EQUIVALENCE_EMPIRICAL";
    }
    return "?";
}

std::optional<TheoremId> theorem_id_from_name(std::string_view name) {
    for (TheoremId id :
         {TheoremId::T5_MNPD_PROPS, TheoremId::T9_MN2D_PROPS, TheoremId::T3_HOMOG,
          TheoremId::T4_CUTSET, TheoremId::L6_TRIANGLEFREE, TheoremId::L11_CLAWFREE_ANTIHOLE,
          TheoremId::T10_4CRITICAL, TheoremId::CHROMATIC_BOUNDS,
          TheoremId::T2_EQUIVALENCE_EMPIRICAL}) {
        if (theorem_id_name(id) == name) return id;
    }
    return {};
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<Graph> drain(CorpusStream& stream) {
    std::vector<Graph> out;
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
}

template <typename T, typename F>
std::vector<T> parallel_map(const std::vector<Graph>& graphs, int jobs, F&& f) {
    std::vector<T> out(graphs.size());
    if (jobs <= 1 || graphs.size() < 2) {
        for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = f(graphs[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(jobs, int(graphs.size()));
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= graphs.size()) return;
                out[i] = f(graphs[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

std::string g6_of(const Graph& g) { return emit_graph(g, GraphFormat::graph6); }

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

// Any odd antihole on >= 7 vertices inside `scope`?
std::optional<VertexSet> long_odd_antihole(const Graph& g, VertexSet scope) {
    if (scope.count() > kStructureBruteCap) {
        throw CapabilityError("antihole scan capped at " + std::to_string(kStructureBruteCap) +
                              " vertices");
    }
    std::optional<VertexSet> hit;
    for (int k = 7; k <= scope.count() && !hit; k += 2) {
        for_each_ksubset(scope, k, [&](VertexSet s) {
            if (classify_cycle_set(g, s) == CycleClass::odd_antihole) {
                hit = s;
                return true;
            }
            return false;
        });
    }
    return hit;
}

}  // namespace

TheoremReport check_mnpd_properties(const Graph& g, const Certificate* cert,
                                    const DivisibilityCaps& caps) {
    const auto start = Clock::now();
    Certificate own;
    if (!cert) {
        own = certify_minimal(g, MinimalityScheme::mnpd, caps);
        cert = &own;
    }
    if (cert->claim.kind != CertificateClaim::Kind::mnpd || !cert->verdict) {
        throw std::invalid_argument("subject is not certified MNPD");
    }

    TheoremReport report;
    report.id = TheoremId::T5_MNPD_PROPS;
    report.universe = "single subject " + g6_of(g);
    report.checked = 1;
    const std::string g6 = g6_of(g);
    const int omega = clique_number(g);
    const auto fail = [&](const std::string& detail) {
        report.violations.push_back({g6, detail});
    };

    // (1) no nonempty basin, no simplicial vertex
    for (const Basin& b : basins(g)) {
        fail("item 1: basin " + set_text(b.set));
        break;
    }
    if (const VertexSet simp = simplicial_vertices(g, g.vertices()); !simp.empty()) {
        fail("item 1: simplicial vertex " + std::to_string(simp.lowest()));
    }

    // (2) every neighborhood splits into a spread part and an omega-1 part
    for (int v = 0; v < g.n(); ++v) {
        const VertexSet nv = g.neighbors(v);
        bool found = false;
        for_each_submask(nv, [&](VertexSet y) {
            if (y.count() >= 2 && !is_clique(g, y) && clique_number(g, nv - y) == omega - 1) {
                found = true;
                return true;
            }
            return false;
        });
        if (!found) {
            fail("item 2: vertex " + std::to_string(v) + " has no qualifying neighborhood subset");
        }
    }

    // (3) a maximum clique through v missing part of N(v)
    for (int v = 0; v < g.n(); ++v) {
        const VertexSet nv = g.neighbors(v);
        bool found = false;
        for_each_ksubset(nv, omega - 1, [&](VertexSet rest) {
            const VertexSet k = rest.with(v);
            if (is_clique(g, k) && !nv.subset_of(k)) {
                found = true;
                return true;
            }
            return false;
        });
        if (!found) fail("item 3: no maximum clique through " + std::to_string(v) + " misses N(v)");
    }

    // (4) |N(X)| >= omega - omega(X) for every nonempty X
    {
        const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
        for_each_by_size(g.vertices(), 1, g.n(), [&](VertexSet x) {
            const int nx = neighborhood(g, x, NeighborhoodKind::open).count();
            if (nx < omega - cliq[x]) {
                fail("item 4: |N(X)| < omega - omega(X) at X = " + set_text(x));
                return true;
            }
            return false;
        });
    }

    // (5) min degree >= omega + 1
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < omega + 1) {
            fail("item 5: degree " + std::to_string(g.degree(v)) + " of vertex " +
                 std::to_string(v) + " is below omega + 1");
        }
    }

    report.wall_time_ms = ms_since(start);
    return report;
}

TheoremReport check_mn2d_properties(const Graph& g, const Certificate* cert,
                                    const DivisibilityCaps& caps) {
    const auto start = Clock::now();
    Certificate own;
    if (!cert) {
        own = certify_minimal(g, MinimalityScheme::mn2d, caps);
        cert = &own;
    }
    if (cert->claim.kind != CertificateClaim::Kind::mn2d || !cert->verdict) {
        throw std::invalid_argument("subject is not certified MN2D");
    }

    TheoremReport report;
    report.id = TheoremId::T9_MN2D_PROPS;
    report.universe = "single subject " + g6_of(g);
    report.checked = 1;
    const std::string g6 = g6_of(g);
    const int omega = clique_number(g);
    const auto fail = [&](const std::string& detail) {
        report.violations.push_back({g6, detail});
    };

    for (const Basin& b : basins(g)) {
        fail("item 1: basin " + set_text(b.set));
        break;
    }

    for (int v = 0; v < g.n(); ++v) {
        const VertexSet nv = g.neighbors(v);
        bool found = false;
        for_each_ksubset(nv, omega - 1, [&](VertexSet rest) {
            const VertexSet k = rest.with(v);
            if (is_clique(g, k) && !nv.subset_of(k)) {
                found = true;
                return true;
            }
            return false;
        });
        if (!found) fail("item 2: no maximum clique through " + std::to_string(v) + " misses N(v)");
    }

    {
        const SubsetTable cliq = subset_clique_table(g, nullptr, caps.exhaustive);
        for_each_by_size(g.vertices(), 1, g.n(), [&](VertexSet x) {
            const int nx = neighborhood(g, x, NeighborhoodKind::open).count();
            if (nx < omega - cliq[x]) {
                fail("item 3: |N(X)| < omega - omega(X) at X = " + set_text(x));
                return true;
            }
            return false;
        });
    }

    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 2 * omega - 2) {
            fail("item 4: degree " + std::to_string(g.degree(v)) + " of vertex " +
                 std::to_string(v) + " is below 2*omega - 2");
        }
    }

    report.wall_time_ms = ms_since(start);
    return report;
}

namespace {

struct StructFacts {
    std::string g6;
    bool skipped = false;
    std::string skip_reason;
    bool mnpd = false;
};

}  // namespace

std::vector<TheoremReport> check_structural_theorems(CorpusStream corpus,
                                                     const DivisibilityCaps& caps, int jobs) {
    const auto start = Clock::now();
    const std::vector<Graph> graphs = drain(corpus);

    const auto facts = parallel_map<StructFacts>(graphs, jobs, [&](const Graph& g) {
        StructFacts f;
        f.g6 = g6_of(g);
        try {
            f.mnpd = certify_minimal(g, MinimalityScheme::mnpd, caps).verdict;
        } catch (const CapabilityError& e) {
            f.skipped = true;
            f.skip_reason = e.what();
        }
        return f;
    });

    TheoremReport t3{TheoremId::T3_HOMOG, "", 0, false, {}, {}, 0};
    TheoremReport t4{TheoremId::T4_CUTSET, "", 0, false, {}, {}, 0};
    TheoremReport l6{TheoremId::L6_TRIANGLEFREE, "", 0, false, {}, {}, 0};
    TheoremReport l11{TheoremId::L11_CLAWFREE_ANTIHOLE, "", 0, false, {}, {}, 0};

    std::size_t mnpd_members = 0, skipped = 0;
    std::size_t t3_subjects = 0, t4_subjects = 0, l6_subjects = 0, l11_subjects = 0;

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (facts[i].skipped) {
            ++skipped;
            continue;
        }
        if (!facts[i].mnpd) continue;
        ++mnpd_members;
        const Graph& g = graphs[i];
        const std::string& g6 = facts[i].g6;

        const bool p2p4_free = induced_free(g, PatternName::p2_p4).free;
        const bool diamond_free = induced_free(g, PatternName::diamond).free;
        const bool two_p3_free = induced_free(g, PatternName::two_p3).free;
        const bool claw_free = induced_free(g, PatternName::claw).free;
        const bool tf = triangle_free(g);

        if (p2p4_free || diamond_free) {
            ++t3_subjects;
            const auto homog = homogeneous_sets(g, HomogeneousMode::any);
            if (!homog.empty()) {
                t3.violations.push_back(
                    {g6, std::string("homogeneous set ") + set_text(homog.front()) +
                             " in an MNPD graph that is " +
                             (p2p4_free ? "p2p4-free" : "diamond-free")});
            }
        }
        if (two_p3_free || claw_free) {
            ++t4_subjects;
            if (!is_connected(g)) {
                t4.violations.push_back({g6, "MNPD member is disconnected"});
            } else if (const auto cuts = clique_cutsets(g, CutsetMode::any); !cuts.empty()) {
                t4.violations.push_back(
                    {g6, std::string("clique cutset ") + set_text(cuts.front()) +
                             " in an MNPD graph that is " +
                             (two_p3_free ? "2p3-free" : "claw-free")});
            }
        }
        if (tf) {
            ++l6_subjects;
            if (!is_connected(g)) {
                l6.violations.push_back({g6, "MNPD member is disconnected"});
            } else if (const auto cuts = clique_cutsets(g, CutsetMode::any); !cuts.empty()) {
                l6.violations.push_back({g6, "clique cutset " + set_text(cuts.front()) +
                                                 " in a triangle-free MNPD graph"});
            }
        }
        if (claw_free) {
            ++l11_subjects;
            for (int v = 0; v < g.n(); ++v) {
                const VertexSet m = neighborhood(g, VertexSet::single(v), NeighborhoodKind::non);
                if (m.count() < 7) continue;
                if (const auto hole = long_odd_antihole(g, m)) {
                    l11.violations.push_back(
                        {g6, "odd antihole " + set_text(*hole) + " inside M(" + std::to_string(v) +
                                 ") of a claw-free MNPD graph"});
                }
            }
        }
    }

    const std::string base = "corpus of " + std::to_string(graphs.size()) + " graphs, " +
                             std::to_string(mnpd_members) + " MNPD members" +
                             (skipped ? ", " + std::to_string(skipped) + " skipped over caps" : "");
    const std::int64_t elapsed = ms_since(start);
    const auto finish = [&](TheoremReport& r, std::size_t subjects, const char* hypothesis) {
        r.universe = base + "; " + std::to_string(subjects) + " under the " + hypothesis + " hypothesis";
        r.checked = std::int64_t(graphs.size());
        r.vacuous = subjects == 0;
        r.wall_time_ms = elapsed;
    };
    finish(t3, t3_subjects, "p2p4-free or diamond-free");
    finish(t4, t4_subjects, "2p3-free or claw-free");
    finish(l6, l6_subjects, "triangle-free");
    finish(l11, l11_subjects, "claw-free");
    return {t3, t4, l6, l11};
}

namespace {

struct ChromaticFacts {
    std::string g6;
    bool skipped = false;
    std::string skip_reason;
    int omega = 0, chi = 0;
    bool pd = false, two_div = false, tf = false, mnpd = false, four_critical = false;
};

}  // namespace

std::vector<TheoremReport> check_chromatic_and_critical(CorpusStream corpus,
                                                        const DivisibilityCaps& caps, int jobs) {
    const auto start = Clock::now();
    const std::vector<Graph> graphs = drain(corpus);

    const auto facts = parallel_map<ChromaticFacts>(graphs, jobs, [&](const Graph& g) {
        ChromaticFacts f;
        f.g6 = g6_of(g);
        try {
            f.omega = clique_number(g);
            f.chi = chromatic_number(g);
            f.tf = triangle_free(g);
            f.pd = is_divisible(g, DivisibilityScheme::pd(), caps).verdict;
            f.two_div = is_divisible(g, DivisibilityScheme::two_div(), caps).verdict;
            if (f.tf) {
                f.mnpd = certify_minimal(g, MinimalityScheme::mnpd, caps).verdict;
                f.four_critical = is_k_critical(g, 4);
            }
        } catch (const CapabilityError& e) {
            f.skipped = true;
            f.skip_reason = e.what();
        }
        return f;
    });

    TheoremReport bounds{TheoremId::CHROMATIC_BOUNDS, "", 0, false, {}, {}, 0};
    TheoremReport t10{TheoremId::T10_4CRITICAL, "", 0, false, {}, {}, 0};
    t10.assumptions.push_back("4-critical means vertex-critical: chi(G)=4 and chi(G-v)<=3 for all v");

    std::size_t skipped = 0, tf_subjects = 0;
    for (const ChromaticFacts& f : facts) {
        if (f.skipped) {
            ++skipped;
            continue;
        }
        if (f.two_div && f.chi > (1 << (f.omega - 1))) {
            bounds.violations.push_back({f.g6, "2-divisible but chi > 2^(omega-1)"});
        }
        if (f.pd && f.chi > (f.omega + 1) * f.omega / 2) {
            bounds.violations.push_back({f.g6, "perfectly divisible but chi > C(omega+1,2)"});
        }
        if (f.chi <= f.omega + 1 && !f.pd) {
            bounds.violations.push_back({f.g6, "chi <= omega+1 but not perfectly divisible"});
        }
        if (f.tf) {
            ++tf_subjects;
            if (f.mnpd != f.four_critical) {
                t10.violations.push_back(
                    {f.g6, std::string("triangle-free: MNPD=") + (f.mnpd ? "true" : "false") +
                               " but 4-critical=" + (f.four_critical ? "true" : "false")});
            }
        }
    }

    const std::string base = "corpus of " + std::to_string(graphs.size()) + " graphs" +
                             (skipped ? ", " + std::to_string(skipped) + " skipped over caps" : "");
    bounds.universe = base;
    bounds.checked = std::int64_t(graphs.size());
    bounds.vacuous = graphs.empty();
    bounds.wall_time_ms = ms_since(start);
    t10.universe = base + "; " + std::to_string(tf_subjects) + " triangle-free";
    t10.checked = std::int64_t(graphs.size());
    t10.vacuous = tf_subjects == 0;
    t10.wall_time_ms = bounds.wall_time_ms;
    return {bounds, t10};
}

namespace {

struct HuntHit {
    std::string g6;
    std::string detail;
    std::vector<Certificate> certificates;
};

struct HuntFacts {
    std::string g6;
    bool skipped = false;
    std::string skip_reason;
    bool pd = false;
    std::vector<HuntHit> hits;
};

void persist_hits(const std::vector<HuntFacts>& facts, const std::string& dir) {
    namespace fs = std::filesystem;
    std::size_t index = 0;
    for (const HuntFacts& f : facts) {
        for (const HuntHit& hit : f.hits) {
            fs::create_directories(dir);
            const std::string stem = dir + "/hit_" + std::to_string(index);
            std::ofstream g6_out(stem + ".g6");
            g6_out << hit.g6 << '\n';
            nlohmann::json j;
            j["graph6"] = hit.g6;
            j["detail"] = hit.detail;
            nlohmann::json certs = nlohmann::json::array();
            for (const Certificate& c : hit.certificates) certs.push_back(to_json(c));
            j["certificates"] = certs;
            std::ofstream json_out(stem + ".json");
            json_out << j.dump(2) << '\n';
            ++index;
        }
    }
}

}  // namespace

TheoremReport hunt_open_problems(CorpusStream corpus, OpenProblem problem,
                                 const HuntOptions& options) {
    const auto start = Clock::now();
    const std::vector<Graph> graphs = drain(corpus);

    const auto facts = parallel_map<HuntFacts>(graphs, options.jobs, [&](const Graph& g) {
        HuntFacts f;
        f.g6 = g6_of(g);
        try {
            const Certificate pd = is_divisible(g, DivisibilityScheme::pd(), options.caps);
            f.pd = pd.verdict;
            if (!f.pd) return f;
            if (problem == OpenProblem::pd_vs_pwd) {
                Certificate h2 = is_divisible(g, DivisibilityScheme::h2(), options.caps);
                Certificate pwd =
                    is_divisible(g, DivisibilityScheme::pwd_bounded(options.weight_bound), options.caps);
                if (!h2.verdict || !pwd.verdict) {
                    HuntHit hit;
                    hit.g6 = f.g6;
                    hit.detail = std::string("perfectly divisible but ") +
                                 (!h2.verdict ? "not H2-perfectly divisible"
                                              : "not bounded-weight divisible");
                    hit.certificates = {pd, h2, pwd};
                    f.hits.push_back(std::move(hit));
                }
            } else {
                for (int v = 0; v < g.n(); ++v) {
                    if (!division_through_vertex(g, v, options.caps)) {
                        HuntHit hit;
                        hit.g6 = f.g6;
                        hit.detail =
                            "perfectly divisible but no perfect division places vertex " +
                            std::to_string(v) + " in A";
                        hit.certificates = {pd};
                        f.hits.push_back(std::move(hit));
                    }
                }
            }
        } catch (const CapabilityError& e) {
            f.skipped = true;
            f.skip_reason = e.what();
        }
        return f;
    });

    persist_hits(facts, options.artifact_dir);

    TheoremReport report;
    report.id = TheoremId::T2_EQUIVALENCE_EMPIRICAL;
    std::size_t pd_count = 0, skipped = 0;
    for (const HuntFacts& f : facts) {
        if (f.skipped) ++skipped;
        if (f.pd) ++pd_count;
        for (const HuntHit& hit : f.hits) report.violations.push_back({hit.g6, hit.detail});
    }
    report.universe = std::string("hunt ") +
                      (problem == OpenProblem::pd_vs_pwd ? "pd_vs_pwd" : "vertex_in_a") +
                      " over corpus of " + std::to_string(graphs.size()) + " graphs, " +
                      std::to_string(pd_count) + " perfectly divisible" +
                      (skipped ? ", " + std::to_string(skipped) + " skipped over caps" : "");
    report.checked = std::int64_t(graphs.size());
    report.vacuous = pd_count == 0;
    if (problem == OpenProblem::pd_vs_pwd) {
        report.assumptions.push_back("weight bound " + std::to_string(options.weight_bound));
    }
    if (!report.violations.empty()) {
        report.assumptions.push_back("counterexample artifacts persisted under " +
                                     options.artifact_dir);
    }
    report.wall_time_ms = ms_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

namespace {

int resolve_jobs(int configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("PDG_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(std::min(hw, 8u)) : 1;
}

TheoremReport t2_equivalence(const std::vector<Graph>& graphs, const SuiteConfig& config, int jobs) {
    const auto start = Clock::now();
    struct T2Facts {
        std::string g6;
        bool in_scope = false;
        bool pd = false, h2 = false, pwd = false;
        bool mnpd = false, owns_homog_2clique = false;
    };
    const auto facts = parallel_map<T2Facts>(graphs, jobs, [&](const Graph& g) {
        T2Facts f;
        f.g6 = g6_of(g);
        if (g.n() > config.t2_max_n) return f;
        f.in_scope = true;
        f.pd = is_divisible(g, DivisibilityScheme::pd(), config.caps).verdict;
        f.h2 = is_divisible(g, DivisibilityScheme::h2(), config.caps).verdict;
        f.pwd = is_divisible(g, DivisibilityScheme::pwd_bounded(config.weight_bound), config.caps)
                    .verdict;
        f.mnpd = certify_minimal(g, MinimalityScheme::mnpd, config.caps).verdict;
        if (f.mnpd) {
            f.owns_homog_2clique = !homogeneous_sets(g, HomogeneousMode::two_clique).empty();
        }
        return f;
    });

    TheoremReport report;
    report.id = TheoremId::T2_EQUIVALENCE_EMPIRICAL;
    std::size_t in_scope = 0;
    bool any_mnpd_with_2clique = false;
    bool any_pd_without_h2 = false;
    for (const T2Facts& f : facts) {
        if (!f.in_scope) continue;
        ++in_scope;
        if (f.pd != f.h2) {
            report.violations.push_back(
                {f.g6, std::string("PD=") + (f.pd ? "true" : "false") + " but H2-PD=" +
                           (f.h2 ? "true" : "false")});
        }
        if (f.pd && !f.pwd) {
            report.violations.push_back({f.g6, "PD but fails bounded-weight divisibility"});
        }
        if (!f.pd && f.pwd) {
            report.violations.push_back({f.g6, "bounded-weight divisible but not PD"});
        }
        any_mnpd_with_2clique |= f.owns_homog_2clique;
        any_pd_without_h2 |= f.pd && !f.h2;
    }
    if (any_pd_without_h2 && !any_mnpd_with_2clique) {
        report.assumptions.push_back(
            "RESEARCH FLAG: a PD graph fails H2-PD while no MNPD member owns a homogeneous "
            "2-clique; jointly these contradict the equivalence");
    }
    report.universe = "corpus members with n <= " + std::to_string(config.t2_max_n) + " (" +
                      std::to_string(in_scope) + " graphs)";
    report.checked = std::int64_t(in_scope);
    report.vacuous = in_scope == 0;
    report.assumptions.push_back("bounded-weight leg uses weight bound " +
                                 std::to_string(config.weight_bound));
    report.wall_time_ms = ms_since(start);
    return report;
}

}  // namespace

std::string suite_report_json(const SuiteConfig& config, const std::vector<TheoremReport>& reports) {
    nlohmann::json j;
    j["suiteVersion"] = "1";
    j["config"] = to_json(config);
    nlohmann::json rs = nlohmann::json::array();
    for (const TheoremReport& r : reports) rs.push_back(to_json(r));
    j["reports"] = rs;
    return j.dump(2) + "\n";
}

SuiteResult run_suite(const SuiteConfig& config) {
    SuiteResult result;
    std::vector<Graph> graphs;
    try {
        if (config.max_n < 1 || config.max_n > 8) {
            throw CapabilityError("embedded corpus is capped at n <= 8; use corpus files beyond");
        }
        if (config.weight_bound < 1) throw std::invalid_argument("weight bound must be positive");
        if (config.caps.exhaustive < 1 || config.caps.weighted < 1 || config.caps.pwd_bounded < 1) {
            throw std::invalid_argument("caps must be positive");
        }
        CorpusStream base = CorpusStream::generate_range(1, config.max_n);
        graphs = drain(base);
        if (config.include_groetzsch) graphs.push_back(pattern(PatternName::groetzsch));
        for (const std::string& path : config.corpus_files) {
            CorpusStream file = CorpusStream::from_file(path);
            auto extra = drain(file);
            graphs.insert(graphs.end(), std::make_move_iterator(extra.begin()),
                          std::make_move_iterator(extra.end()));
        }
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
        return result;
    }

    const int jobs = resolve_jobs(config.jobs);
    std::vector<TheoremId> selected = config.theorems;
    if (selected.empty()) {
        selected = {TheoremId::T5_MNPD_PROPS,       TheoremId::T9_MN2D_PROPS,
                    TheoremId::T3_HOMOG,            TheoremId::T4_CUTSET,
                    TheoremId::L6_TRIANGLEFREE,     TheoremId::L11_CLAWFREE_ANTIHOLE,
                    TheoremId::T10_4CRITICAL,       TheoremId::CHROMATIC_BOUNDS,
                    TheoremId::T2_EQUIVALENCE_EMPIRICAL};
    }
    const auto wants = [&](TheoremId id) {
        return std::find(selected.begin(), selected.end(), id) != selected.end();
    };

    try {
        const std::string universe = "embedded corpus n <= " + std::to_string(config.max_n) +
                                     (config.include_groetzsch ? " plus groetzsch" : "") +
                                     (config.corpus_files.empty() ? "" : " plus corpus files") + " (" +
                                     std::to_string(graphs.size()) + " graphs)";

        if (wants(TheoremId::T5_MNPD_PROPS) || wants(TheoremId::T9_MN2D_PROPS)) {
            const auto start = Clock::now();
            struct MinimalFacts {
                std::string g6;
                bool mnpd = false, mn2d = false;
                bool skipped = false;
            };
            const auto facts = parallel_map<MinimalFacts>(graphs, jobs, [&](const Graph& g) {
                MinimalFacts f;
                f.g6 = g6_of(g);
                try {
                    f.mnpd = certify_minimal(g, MinimalityScheme::mnpd, config.caps).verdict;
                    f.mn2d = certify_minimal(g, MinimalityScheme::mn2d, config.caps).verdict;
                } catch (const CapabilityError&) {
                    f.skipped = true;
                }
                return f;
            });
            const std::int64_t elapsed = ms_since(start);
            for (MinimalityScheme scheme : {MinimalityScheme::mnpd, MinimalityScheme::mn2d}) {
                const bool is_mnpd = scheme == MinimalityScheme::mnpd;
                if (is_mnpd && !wants(TheoremId::T5_MNPD_PROPS)) continue;
                if (!is_mnpd && !wants(TheoremId::T9_MN2D_PROPS)) continue;
                TheoremReport merged;
                merged.id = is_mnpd ? TheoremId::T5_MNPD_PROPS : TheoremId::T9_MN2D_PROPS;
                std::size_t members = 0;
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    if (facts[i].skipped) continue;
                    if (!(is_mnpd ? facts[i].mnpd : facts[i].mn2d)) continue;
                    ++members;
                    const TheoremReport single =
                        is_mnpd ? check_mnpd_properties(graphs[i], nullptr, config.caps)
                                : check_mn2d_properties(graphs[i], nullptr, config.caps);
                    merged.violations.insert(merged.violations.end(), single.violations.begin(),
                                             single.violations.end());
                }
                merged.universe = universe + "; " + std::to_string(members) +
                                  (is_mnpd ? " MNPD" : " MN2D") + " members";
                merged.checked = std::int64_t(graphs.size());
                merged.vacuous = members == 0;
                merged.wall_time_ms = elapsed;
                if (!is_mnpd) {
                    merged.assumptions.push_back("2-divisibility exempts edgeless subgraphs");
                }
                result.reports.push_back(std::move(merged));
            }
        }

        if (wants(TheoremId::T3_HOMOG) || wants(TheoremId::T4_CUTSET) ||
            wants(TheoremId::L6_TRIANGLEFREE) || wants(TheoremId::L11_CLAWFREE_ANTIHOLE)) {
            auto reports = check_structural_theorems(CorpusStream::from_graphs(graphs), config.caps, jobs);
            for (TheoremReport& r : reports) {
                if (wants(r.id)) result.reports.push_back(std::move(r));
            }
        }

        if (wants(TheoremId::T10_4CRITICAL) || wants(TheoremId::CHROMATIC_BOUNDS)) {
            auto reports =
                check_chromatic_and_critical(CorpusStream::from_graphs(graphs), config.caps, jobs);
            for (TheoremReport& r : reports) {
                if (wants(r.id)) result.reports.push_back(std::move(r));
            }
        }

        if (wants(TheoremId::T2_EQUIVALENCE_EMPIRICAL)) {
            result.reports.push_back(t2_equivalence(graphs, config, jobs));
        }
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = e.what();
        return result;
    }

    // Fixed report order for byte-identical output.
    std::sort(result.reports.begin(), result.reports.end(),
              [](const TheoremReport& a, const TheoremReport& b) { return int(a.id) < int(b.id); });
    if (config.deterministic_timing) {
        for (TheoremReport& r : result.reports) r.wall_time_ms = 0;
    }
    for (const TheoremReport& r : result.reports) {
        if (!r.violations.empty()) result.exit_code = 1;
    }
    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path);
        if (!out) {
            result.exit_code = 2;
            result.error = "cannot write report to " + config.output_path;
            return result;
        }
        out << suite_report_json(config, result.reports);
    }
    return result;
}

}  // namespace pdg
