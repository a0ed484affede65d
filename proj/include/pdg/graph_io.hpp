#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>

#include "pdg/graph.hpp"

namespace pdg {

enum class PatternName {
    p2, p3, p4, p5, c5, c7, k3, k4, claw, diamond,
    two_p3, p2_p4, four_k1, groetzsch, k_n, c_n, p_n
};

/// Fixed small-graph constructions; k_n/c_n/p_n require the size parameter.
Graph pattern(PatternName name, std::optional<int> k = {});
std::optional<PatternName> pattern_from_name(std::string_view token);
std::string_view pattern_name(PatternName name);

/// 2n+1 vertices: the original graph, one shadow per vertex wired to the
/// original neighborhoods, and an apex over all shadows.
Graph mycielski(const Graph& g);

enum class GraphFormat { graph6, edgelist };

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

/// Canonical form: the least upper-triangle bit-string over all vertex
/// orderings (branch and bound with twin pruning). Capped at 16 vertices.
using CanonicalCode = unsigned __int128;
struct CanonicalForm {
    CanonicalCode code;
    Graph graph;  // relabeled to realize the code
};
CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

struct CorpusFilter {
    bool connected = false;
    bool triangle_free = false;
    std::optional<int> max_n;
};

/// All pairwise non-isomorphic graphs on exactly n vertices passing the
/// filter, sorted by canonical code. Internal generation is capped at n <= 8,
/// or n <= 9 when the triangle-free filter prunes the growth.
std::vector<Graph> enumerate_graphs(int n, const CorpusFilter& filter = {});

class CorpusStream {
public:
    static CorpusStream generate(int n, CorpusFilter filter = {});
    static CorpusStream generate_range(int lo, int hi, CorpusFilter filter = {});
    static CorpusStream from_file(const std::string& path, CorpusFilter filter = {});
    static CorpusStream from_graphs(std::vector<Graph> graphs);

    std::optional<Graph> next();

private:
    CorpusStream() = default;
    std::vector<Graph> buffered_;
    std::size_t cursor_ = 0;
    std::shared_ptr<std::istream> file_;
    std::size_t line_no_ = 0;
    CorpusFilter filter_;
};

}  // namespace pdg
