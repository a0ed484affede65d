// Command-line front end: every library capability as a subcommand, JSON out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pdg/json_io.hpp"
#include "pdg/verify.hpp"

namespace {

using nlohmann::json;
using namespace pdg;

struct GraphInput {
    std::string graph6;
    std::string file;
    std::string format = "graph6";
    std::string pattern_token;
    int k = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph as a graph6 token");
        cmd->add_option("--file", file, "read the graph from a file");
        cmd->add_option("--format", format, "file format: graph6|edgelist")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
        cmd->add_option("--pattern", pattern_token, "named construction (c5, claw, groetzsch, ...)");
        cmd->add_option("--k", k, "size parameter for kn/cn/pn patterns");
    }

    Graph resolve() const {
        const int sources = int(!graph6.empty()) + int(!file.empty()) + int(!pattern_token.empty());
        if (sources != 1) {
            throw std::invalid_argument("give exactly one of --graph6, --file, --pattern");
        }
        if (!graph6.empty()) return parse_graph(graph6, GraphFormat::graph6);
        if (!pattern_token.empty()) {
            const auto name = pattern_from_name(pattern_token);
            if (!name) throw std::invalid_argument("unknown pattern: " + pattern_token);
            return pattern(*name, k > 0 ? std::optional<int>(k) : std::nullopt);
        }
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str(),
                           format == "graph6" ? GraphFormat::graph6 : GraphFormat::edgelist);
    }
};

struct Output {
    bool quiet = false;
    bool human = false;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--quiet", quiet, "print only the verdict line");
        cmd->add_flag("--human", human, "pretty-print JSON");
    }

    void emit(const json& j, const std::string& verdict_line) const {
        if (quiet) {
            std::cout << verdict_line << '\n';
        } else {
            std::cout << (human ? j.dump(2) : j.dump()) << '\n';
        }
    }
};

WeightFunction load_weights(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weights file " + path);
    std::vector<int> w;
    int value;
    while (in >> value) w.push_back(value);
    if (int(w.size()) != n) {
        throw std::invalid_argument("weights file holds " + std::to_string(w.size()) +
                                    " values for a graph on " + std::to_string(n) + " vertices");
    }
    return WeightFunction(std::move(w));
}

VertexSet parse_set(const std::string& csv, int n) {
    VertexSet out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const int v = std::stoi(tok);
        if (v < 0 || v >= n) throw std::invalid_argument("vertex " + tok + " out of range");
        out |= VertexSet::single(v);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for perfect divisibility structure in small graphs"};
    app.require_subcommand(1);

    GraphInput in;
    Output out;
    DivisibilityCaps caps;

    // info
    auto* info = app.add_subcommand("info", "basic invariants as JSON");
    GraphInput info_in;
    Output info_out;
    info_in.attach(info);
    info_out.attach(info);

    // perfect
    auto* perfect = app.add_subcommand("perfect", "perfection verdict with witness");
    GraphInput perfect_in;
    Output perfect_out;
    perfect_in.attach(perfect);
    perfect_out.attach(perfect);

    // divide
    auto* divide = app.add_subcommand("divide", "search for a division");
    GraphInput divide_in;
    Output divide_out;
    divide_in.attach(divide);
    divide_out.attach(divide);
    std::string divide_kind = "perfect";
    std::string divide_weights;
    int divide_through = -1;
    divide->add_option("--kind", divide_kind, "perfect|two")
        ->check(CLI::IsMember({"perfect", "two"}));
    divide->add_option("--weights", divide_weights, "weights file for an h-perfect division");
    divide->add_option("--through", divide_through, "require this vertex on the perfect side");

    // certify
    auto* certify = app.add_subcommand("certify", "divisibility and minimality certificates");
    GraphInput certify_in;
    Output certify_out;
    certify_in.attach(certify);
    certify_out.attach(certify);
    std::string claim;
    int weight_bound = 3;
    certify->add_option("--claim", claim, "pd|h2pd|pwd|2div|mnpd|mn2d")->required()
        ->check(CLI::IsMember({"pd", "h2pd", "pwd", "2div", "mnpd", "mn2d"}));
    certify->add_option("--weight-bound", weight_bound, "weight bound for pwd");

    // structure
    auto* structure = app.add_subcommand("structure", "structural searches");
    GraphInput structure_in;
    Output structure_out;
    structure_in.attach(structure);
    structure_out.attach(structure);
    std::string find;
    std::string mode;
    std::string set_csv;
    int max_size = 0;
    structure->add_option("--find", find, "homogeneous|cutsets|peeling|basins")->required()
        ->check(CLI::IsMember({"homogeneous", "cutsets", "peeling", "basins"}));
    structure->add_option("--mode", mode, "homogeneous: all_minimal|any|two_clique; cutsets: any|minimum|all");
    structure->add_option("--set", set_csv, "comma-separated vertex set (peeling target)");
    structure->add_option("--max-size", max_size, "basin size bound");

    // construct
    auto* construct = app.add_subcommand("construct", "graph constructions, emitting graph6");
    GraphInput construct_in;
    Output construct_out;
    construct_in.attach(construct);
    construct_out.attach(construct);
    std::string op;
    int at = -1;
    std::string with_graph6;
    std::string with_pattern;
    std::string construct_weights;
    construct->add_option("--op", op, "substitute|mycielski|weight-expand")->required()
        ->check(CLI::IsMember({"substitute", "mycielski", "weight-expand"}));
    construct->add_option("--at", at, "vertex to substitute or expand");
    construct->add_option("--with-graph6", with_graph6, "substituted graph as graph6");
    construct->add_option("--with-pattern", with_pattern, "substituted graph as a pattern name");
    construct->add_option("--weights", construct_weights, "weights file for weight-expand");

    // verify
    auto* verify = app.add_subcommand("verify", "run the theorem-checking suite");
    Output verify_out;
    verify_out.attach(verify);
    std::string config_path;
    SuiteConfig suite;
    std::string theorem_csv;
    verify->add_option("--config", config_path, "JSON suite configuration");
    verify->add_option("--max-n", suite.max_n, "embedded corpus bound");
    verify->add_option("--output", suite.output_path, "report path");
    verify->add_option("--jobs", suite.jobs, "worker count (default: PDG_JOBS or hardware)");
    verify->add_option("--theorems", theorem_csv, "comma-separated theorem ids");
    verify->add_option("--weight-bound", suite.weight_bound, "bounded-weight leg bound");
    verify->add_option("--t2-max-n", suite.t2_max_n, "equivalence-leg size bound");
    bool no_groetzsch = false;
    verify->add_flag("--no-groetzsch", no_groetzsch, "drop the groetzsch member");
    verify->add_flag("--deterministic-timing", suite.deterministic_timing,
                     "zero wall times for byte comparisons");
    std::vector<std::string> corpus_files;
    verify->add_option("--corpus", corpus_files, "extra graph6 corpus files");

    // hunt
    auto* hunt = app.add_subcommand("hunt", "counterexample hunters");
    Output hunt_out;
    hunt_out.attach(hunt);
    std::string problem = "pd_vs_pwd";
    int hunt_max_n = 6;
    HuntOptions hunt_opts;
    hunt->add_option("--problem", problem, "pd_vs_pwd|vertex_in_a")
        ->check(CLI::IsMember({"pd_vs_pwd", "vertex_in_a"}));
    hunt->add_option("--max-n", hunt_max_n, "corpus bound");
    hunt->add_option("--weight-bound", hunt_opts.weight_bound, "bounded-weight bound");
    hunt->add_option("--output", hunt_opts.artifact_dir, "artifact directory");
    hunt->add_option("--jobs", hunt_opts.jobs, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors exit 2
    }

    if (info->parsed()) {
        const Graph g = info_in.resolve();
        json j;
        j["n"] = g.n();
        j["edges"] = g.edge_count();
        j["omega"] = clique_number(g);
        j["alpha"] = independence_number(g);
        j["chi"] = chromatic_number(g);
        std::vector<int> degrees;
        for (int v = 0; v < g.n(); ++v) degrees.push_back(g.degree(v));
        std::sort(degrees.rbegin(), degrees.rend());
        j["degrees"] = degrees;
        j["connected"] = is_connected(g);
        j["triangleFree"] = triangle_free(g);
        if (!g.name().empty()) j["name"] = g.name();
        info_out.emit(j, "n=" + std::to_string(g.n()));
        return 0;
    }

    if (perfect->parsed()) {
        const Graph g = perfect_in.resolve();
        const PerfectionVerdict v = is_perfect(g);
        perfect_out.emit(to_json(v), v.perfect ? "perfect" : "imperfect");
        return 0;
    }

    if (divide->parsed()) {
        const Graph g = divide_in.resolve();
        std::optional<WeightFunction> h;
        if (!divide_weights.empty()) h = load_weights(divide_weights, g.n());
        std::optional<Division> d;
        if (divide_through >= 0) {
            if (divide_kind != "perfect" || h) {
                throw std::invalid_argument("--through applies to unweighted perfect divisions");
            }
            d = division_through_vertex(g, divide_through, caps);
        } else {
            d = find_division(g, g.vertices(),
                              divide_kind == "two" ? DivisionKind::two : DivisionKind::perfect,
                              h ? &*h : nullptr, caps);
        }
        json j;
        j["division"] = d ? to_json(*d) : json(nullptr);
        divide_out.emit(j, d ? "A=" + json(d->a.to_vector()).dump() : "none");
        return 0;
    }

    if (certify->parsed()) {
        const Graph g = certify_in.resolve();
        Certificate cert;
        if (claim == "pd") cert = is_divisible(g, DivisibilityScheme::pd(), caps);
        else if (claim == "h2pd") cert = is_divisible(g, DivisibilityScheme::h2(), caps);
        else if (claim == "pwd") cert = is_divisible(g, DivisibilityScheme::pwd_bounded(weight_bound), caps);
        else if (claim == "2div") cert = is_divisible(g, DivisibilityScheme::two_div(), caps);
        else if (claim == "mnpd") cert = certify_minimal(g, MinimalityScheme::mnpd, caps);
        else cert = certify_minimal(g, MinimalityScheme::mn2d, caps);
        certify_out.emit(to_json(cert), cert.verdict ? "true" : "false");
        return 0;
    }

    if (structure->parsed()) {
        const Graph g = structure_in.resolve();
        json j;
        std::string verdict;
        if (find == "homogeneous") {
            HomogeneousMode m = HomogeneousMode::all_minimal;
            if (mode == "any") m = HomogeneousMode::any;
            else if (mode == "two_clique") m = HomogeneousMode::two_clique;
            else if (!mode.empty() && mode != "all_minimal") {
                throw std::invalid_argument("homogeneous mode: all_minimal|any|two_clique");
            }
            json sets = json::array();
            for (VertexSet s : homogeneous_sets(g, m)) sets.push_back(to_json(s));
            j["homogeneousSets"] = sets;
            verdict = std::to_string(sets.size()) + " sets";
        } else if (find == "cutsets") {
            CutsetMode m = CutsetMode::all;
            if (mode == "any") m = CutsetMode::any;
            else if (mode == "minimum") m = CutsetMode::minimum;
            else if (!mode.empty() && mode != "all") {
                throw std::invalid_argument("cutset mode: any|minimum|all");
            }
            json sets = json::array();
            for (VertexSet s : clique_cutsets(g, m)) sets.push_back(to_json(s));
            j["cliqueCutsets"] = sets;
            verdict = std::to_string(sets.size()) + " cutsets";
        } else if (find == "peeling") {
            const VertexSet target = set_csv.empty() ? g.vertices() : parse_set(set_csv, g.n());
            const SimplicialDecomposition d = simplicial_peeling(g, target);
            json parts = json::array();
            for (VertexSet p : d.parts) parts.push_back(to_json(p));
            j["parts"] = parts;
            j["x1Perfect"] = d.x1_perfect;
            verdict = std::to_string(d.parts.size()) + " parts";
        } else {
            json sets = json::array();
            for (const Basin& b : basins(g, max_size > 0 ? std::optional<int>(max_size) : std::nullopt)) {
                sets.push_back({{"set", to_json(b.set)}, {"minimal", b.minimal}});
            }
            j["basins"] = sets;
            verdict = std::to_string(sets.size()) + " basins";
        }
        structure_out.emit(j, verdict);
        return 0;
    }

    if (construct->parsed()) {
        const Graph g = construct_in.resolve();
        Graph built;
        if (op == "mycielski") {
            built = mycielski(g);
        } else if (op == "substitute") {
            if (at < 0) throw std::invalid_argument("substitute needs --at");
            Graph h;
            if (!with_graph6.empty()) h = parse_graph(with_graph6, GraphFormat::graph6);
            else if (!with_pattern.empty()) {
                const auto name = pattern_from_name(with_pattern);
                if (!name) throw std::invalid_argument("unknown pattern: " + with_pattern);
                h = pattern(*name);
            } else {
                throw std::invalid_argument("substitute needs --with-graph6 or --with-pattern");
            }
            built = substitute(g, at, h);
        } else {
            if (construct_weights.empty()) throw std::invalid_argument("weight-expand needs --weights");
            const WeightFunction h = load_weights(construct_weights, g.n());
            built = weight_expand(g, h, at >= 0 ? std::optional<int>(at) : std::nullopt).first;
        }
        const std::string g6 = emit_graph(built, GraphFormat::graph6);
        json j;
        j["graph6"] = g6;
        j["n"] = built.n();
        j["edges"] = built.edge_count();
        construct_out.emit(j, g6);
        return 0;
    }

    if (verify->parsed()) {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot open config " + config_path);
            json j = json::parse(in);
            if (j.contains("maxN")) suite.max_n = j["maxN"].get<int>();
            if (j.contains("includeGroetzsch")) suite.include_groetzsch = j["includeGroetzsch"].get<bool>();
            if (j.contains("corpusFiles")) suite.corpus_files = j["corpusFiles"].get<std::vector<std::string>>();
            if (j.contains("jobs")) suite.jobs = j["jobs"].get<int>();
            if (j.contains("weightBound")) suite.weight_bound = j["weightBound"].get<int>();
            if (j.contains("t2MaxN")) suite.t2_max_n = j["t2MaxN"].get<int>();
            if (j.contains("outputPath")) suite.output_path = j["outputPath"].get<std::string>();
            if (j.contains("deterministicTiming")) suite.deterministic_timing = j["deterministicTiming"].get<bool>();
            if (j.contains("caps")) {
                const auto& c = j["caps"];
                if (c.contains("exhaustive")) suite.caps.exhaustive = c["exhaustive"].get<int>();
                if (c.contains("weighted")) suite.caps.weighted = c["weighted"].get<int>();
                if (c.contains("pwdBounded")) suite.caps.pwd_bounded = c["pwdBounded"].get<int>();
            }
            if (j.contains("theorems")) {
                for (const auto& name : j["theorems"]) {
                    const auto id = theorem_id_from_name(name.get<std::string>());
                    if (!id) throw std::invalid_argument("unknown theorem id: " + name.get<std::string>());
                    suite.theorems.push_back(*id);
                }
            }
        }
        if (no_groetzsch) suite.include_groetzsch = false;
        for (const std::string& path : corpus_files) suite.corpus_files.push_back(path);
        if (!theorem_csv.empty()) {
            std::stringstream ss(theorem_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                const auto id = theorem_id_from_name(tok);
                if (!id) throw std::invalid_argument("unknown theorem id: " + tok);
                suite.theorems.push_back(*id);
            }
        }
        const SuiteResult res = run_suite(suite);
        if (res.exit_code == 2) {
            std::cerr << "configuration error: " << res.error << '\n';
            return 2;
        }
        json j;
        j["report"] = json::parse(suite_report_json(suite, res.reports));
        std::size_t violations = 0;
        for (const auto& r : res.reports) violations += r.violations.size();
        verify_out.emit(j, violations == 0 ? "pass" : "violations=" + std::to_string(violations));
        return res.exit_code;
    }

    if (hunt->parsed()) {
        CorpusStream corpus = CorpusStream::generate_range(1, hunt_max_n);
        const TheoremReport report = hunt_open_problems(
            std::move(corpus),
            problem == "pd_vs_pwd" ? OpenProblem::pd_vs_pwd : OpenProblem::vertex_in_a, hunt_opts);
        hunt_out.emit(to_json(report),
                      report.violations.empty() ? "no hits"
                                                : "hits=" + std::to_string(report.violations.size()));
        return report.violations.empty() ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pdg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const pdg::CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
