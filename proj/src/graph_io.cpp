#include "pdg/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace pdg {

namespace {

Graph path_graph(int k, std::string name) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return make_graph(k, edges, std::move(name));
}

Graph cycle_graph(int k, std::string name) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return make_graph(k, edges, std::move(name));
}

Graph complete_graph(int k, std::string name) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return make_graph(k, edges, std::move(name));
}

Graph renamed(const Graph& g, std::string name) {
    std::vector<std::uint64_t> rows;
    rows.reserve(std::size_t(g.n()));
    for (int v = 0; v < g.n(); ++v) rows.push_back(g.neighbors(v).bits());
    return Graph::from_rows(g.n(), rows, std::move(name));
}

}  // namespace

Graph pattern(PatternName name, std::optional<int> k) {
    switch (name) {
        case PatternName::p2: return path_graph(2, "P2");
        case PatternName::p3: return path_graph(3, "P3");
        case PatternName::p4: return path_graph(4, "P4");
        case PatternName::p5: return path_graph(5, "P5");
        case PatternName::c5: return cycle_graph(5, "C5");
        case PatternName::c7: return cycle_graph(7, "C7");
        case PatternName::k3: return complete_graph(3, "K3");
        case PatternName::k4: return complete_graph(4, "K4");
        case PatternName::claw:
            return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}, "claw");
        case PatternName::diamond:
            return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, "diamond");
        case PatternName::two_p3:
            return make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, "2P3");
        case PatternName::p2_p4:
            return make_graph(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}}, "P2+P4");
        case PatternName::four_k1:
            return make_graph(4, std::initializer_list<std::pair<int, int>>{}, "4K1");
        case PatternName::groetzsch:
            return renamed(mycielski(cycle_graph(5, "")), "groetzsch");
        case PatternName::k_n:
            if (!k || *k < 1) throw std::invalid_argument("K_n needs a size k >= 1");
            return complete_graph(*k, "K" + std::to_string(*k));
        case PatternName::c_n:
            if (!k || *k < 3) throw std::invalid_argument("C_n needs a size k >= 3");
            return cycle_graph(*k, "C" + std::to_string(*k));
        case PatternName::p_n:
            if (!k || *k < 1) throw std::invalid_argument("P_n needs a size k >= 1");
            return path_graph(*k, "P" + std::to_string(*k));
    }
    throw std::invalid_argument("unknown pattern");
}

std::optional<PatternName> pattern_from_name(std::string_view token) {
    std::string t;
    for (char c : token) t.push_back(char(std::tolower(static_cast<unsigned char>(c))));
    if (t == "p2") return PatternName::p2;
    if (t == "p3") return PatternName::p3;
    if (t == "p4") return PatternName::p4;
    if (t == "p5") return PatternName::p5;
    if (t == "c5") return PatternName::c5;
    if (t == "c7") return PatternName::c7;
    if (t == "k3" || t == "triangle") return PatternName::k3;
    if (t == "k4") return PatternName::k4;
    if (t == "claw") return PatternName::claw;
    if (t == "diamond") return PatternName::diamond;
    if (t == "2p3") return PatternName::two_p3;
    if (t == "p2p4" || t == "p2+p4" || t == "p2up4") return PatternName::p2_p4;
    if (t == "4k1") return PatternName::four_k1;
    if (t == "groetzsch" || t == "grotzsch") return PatternName::groetzsch;
    if (t == "kn") return PatternName::k_n;
    if (t == "cn") return PatternName::c_n;
    if (t == "pn") return PatternName::p_n;
    return {};
}

std::string_view pattern_name(PatternName name) {
    switch (name) {
        case PatternName::p2: return "p2";
        case PatternName::p3: return "p3";
        case PatternName::p4: return "p4";
        case PatternName::p5: return "p5";
        case PatternName::c5: return "c5";
        case PatternName::c7: return "c7";
        case PatternName::k3: return "k3";
        case PatternName::k4: return "k4";
        case PatternName::claw: return "claw";
        case PatternName::diamond: return "diamond";
        case PatternName::two_p3: return "2p3";
        case PatternName::p2_p4: return "p2p4";
        case PatternName::four_k1: return "4k1";
        case PatternName::groetzsch: return "groetzsch";
        case PatternName::k_n: return "kn";
        case PatternName::c_n: return "cn";
        case PatternName::p_n: return "pn";
    }
    return "?";
}

Graph mycielski(const Graph& g) {
    const int n = g.n();
    if (2 * n + 1 > kMaxVertices) {
        throw std::invalid_argument("mycielskian would exceed 64 vertices");
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) edges.emplace_back(u, v);
            edges.emplace_back(n + u, v);  // shadow of u to original neighbors
        }
        edges.emplace_back(2 * n, n + u);  // apex to every shadow
    }
    return make_graph(2 * n + 1, edges);
}

// ---------------------------------------------------------------------------
// graph6 / edgelist
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::size_t body_chars(int n) {
    return (std::size_t(n) * std::size_t(n - 1) / 2 + 5) / 6;
}

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) base = kGraph6Header.size();
    // Trailing newline is tolerated; anything else after the token is not.
    std::size_t end = text.size();
    while (end > base && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
    if (end == base) throw ParseError("empty graph6 token", base);

    const unsigned char first = static_cast<unsigned char>(text[base]);
    if (first == 126) throw ParseError("graph6 long form is unsupported", base);
    if (first < 63 || first > 126) throw ParseError("graph6 byte outside 63..126", base);
    const int n = int(first) - 63;
    if (n < 1) throw ParseError("graph6 vertex count must be at least 1", base);

    const std::size_t want = body_chars(n);
    if (end - base - 1 < want) throw ParseError("graph6 token shorter than its header implies", end);
    if (end - base - 1 > want) throw ParseError("trailing garbage after graph6 token", base + 1 + want);

    std::vector<std::uint64_t> rows(std::size_t(n), 0);
    std::size_t bit_index = 0;
    const std::size_t total_bits = std::size_t(n) * std::size_t(n - 1) / 2;
    for (std::size_t i = 0; i < want; ++i) {
        const std::size_t off = base + 1 + i;
        const unsigned char c = static_cast<unsigned char>(text[off]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", off);
        const unsigned bits = unsigned(c) - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool set = (bits >> b) & 1;
            if (bit_index >= total_bits) {
                if (set) throw ParseError("nonzero padding bits in graph6 token", off);
                continue;
            }
            if (set) {
                // Upper triangle, column major: bit order (0,1),(0,2),(1,2),(0,3),...
                std::size_t idx = bit_index;
                int col = 1;
                while (idx >= std::size_t(col)) {
                    idx -= std::size_t(col);
                    ++col;
                }
                const int row = int(idx);
                rows[std::size_t(row)] |= 1ull << col;
                rows[std::size_t(col)] |= 1ull << row;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.n();
    if (n > 62) throw CapabilityError("graph6 short form is capped at 62 vertices");
    std::string out;
    out.push_back(char(n + 63));
    unsigned acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | unsigned(g.adjacent(row, col));
            if (++filled == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(char((acc << (6 - filled)) + 63));
    return out;
}

struct Tokenizer {
    std::string_view text;
    std::size_t pos = 0;

    std::optional<std::pair<std::string_view, std::size_t>> next() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) return {};
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::make_pair(text.substr(start, pos - start), start);
    }
};

int parse_int(std::string_view token, std::size_t offset) {
    int value = 0;
    if (token.empty()) throw ParseError("expected an integer", offset);
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("expected an integer, got '" + std::string(token) + "'", offset);
        }
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw ParseError("integer out of range", offset);
    }
    return value;
}

Graph parse_edgelist(std::string_view text) {
    Tokenizer tok{text};
    const auto head = tok.next();
    if (!head) throw ParseError("empty edgelist", 0);
    const int n = parse_int(head->first, head->second);
    if (n < 1 || n > kMaxVertices) throw ParseError("vertex count outside 1..64", head->second);
    std::vector<std::pair<int, int>> edges;
    for (;;) {
        const auto a = tok.next();
        if (!a) break;
        const auto b = tok.next();
        if (!b) throw ParseError("dangling endpoint in edgelist", a->second);
        const int u = parse_int(a->first, a->second);
        const int v = parse_int(b->first, b->second);
        if (u >= n) throw ParseError("vertex " + std::to_string(u) + " out of range", a->second);
        if (v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", b->second);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), a->second);
        edges.emplace_back(u, v);
    }
    return make_graph(n, edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n() << '\n';
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u) out << u << ' ' << v << '\n';
        }
    }
    return out.str();
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? emit_graph6(g) : emit_edgelist(g);
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

namespace {

constexpr int kCanonicalCap = 16;

struct CanonicalSearch {
    int n;
    const std::vector<std::uint64_t>& rows;
    std::vector<int> twin_rep;  // least interchangeable vertex per twin class

    CanonicalCode best = ~CanonicalCode(0);
    std::array<int, kMaxVertices> best_perm{};
    std::array<int, kMaxVertices> perm{};
    int total_bits = 0;

    CanonicalSearch(int n_, const std::vector<std::uint64_t>& rows_) : n(n_), rows(rows_) {
        total_bits = n * (n - 1) / 2;
        twin_rep.assign(std::size_t(n), 0);
        for (int v = 0; v < n; ++v) {
            twin_rep[std::size_t(v)] = v;
            for (int u = 0; u < v; ++u) {
                const std::uint64_t ru = rows[std::size_t(u)] & ~(1ull << v);
                const std::uint64_t rv = rows[std::size_t(v)] & ~(1ull << u);
                if (ru == rv) {
                    twin_rep[std::size_t(v)] = twin_rep[std::size_t(u)];
                    break;
                }
            }
        }
    }

    void place(int t, std::uint64_t used, CanonicalCode prefix, int bits_so_far) {
        if (t == n) {
            if (prefix < best) {
                best = prefix;
                best_perm = perm;
            }
            return;
        }
        struct Cand {
            std::uint64_t column;
            int v;
        };
        std::array<Cand, kMaxVertices> cands{};
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            // Interchangeable twins explore identical completions; keep the
            // least unused one.
            const int rep = twin_rep[std::size_t(v)];
            if (rep != v && !((used >> rep) & 1)) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < t; ++i) {
                col = (col << 1) | ((rows[std::size_t(perm[std::size_t(i)])] >> v) & 1);
            }
            cands[std::size_t(count++)] = {col, v};
        }
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Cand& a, const Cand& b) { return a.column < b.column; });
        for (int i = 0; i < count; ++i) {
            const CanonicalCode next = (prefix << t) | CanonicalCode(cands[std::size_t(i)].column);
            const int next_bits = bits_so_far + t;
            if (best != ~CanonicalCode(0)) {
                const CanonicalCode best_prefix = best >> (total_bits - next_bits);
                if (next > best_prefix) break;  // candidates are sorted, rest only grow
            }
            perm[std::size_t(t)] = cands[std::size_t(i)].v;
            place(t + 1, used | (1ull << cands[std::size_t(i)].v), next, next_bits);
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.n();
    if (n > kCanonicalCap) {
        throw CapabilityError("canonical form capped at " + std::to_string(kCanonicalCap) + " vertices");
    }
    std::vector<std::uint64_t> rows(std::size_t(n), 0);
    int edges = 0;
    for (int v = 0; v < n; ++v) {
        rows[std::size_t(v)] = g.neighbors(v).bits();
        edges += g.degree(v);
    }
    edges /= 2;
    if (n == 1) return {CanonicalCode(0), g};

    CanonicalSearch search(n, rows);
    search.place(0, 0, 0, 0);

    // perm[t] = original vertex placed at position t; rebuild in that order.
    std::vector<std::uint64_t> out(std::size_t(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(search.best_perm[std::size_t(a)], search.best_perm[std::size_t(b)])) {
                out[std::size_t(a)] |= 1ull << b;
                out[std::size_t(b)] |= 1ull << a;
            }
        }
    }
    return {search.best, Graph::from_rows(n, out)};
}

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

// ---------------------------------------------------------------------------
// Corpus enumeration
// ---------------------------------------------------------------------------

namespace {

struct CodeHash {
    std::size_t operator()(CanonicalCode c) const {
        std::uint64_t x = std::uint64_t(c) ^ (std::uint64_t(c >> 64) * 0x9e3779b97f4a7c15ull);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return std::size_t(x);
    }
};

bool mask_independent(const Graph& g, std::uint64_t mask) {
    for (int v : VertexSet(mask)) {
        if (g.neighbors(v).bits() & mask) return false;
    }
    return true;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const CorpusFilter& filter) {
    const int cap = filter.triangle_free ? 9 : 8;
    if (n < 1 || n > cap) {
        throw CapabilityError("internal enumeration is capped at n <= " + std::to_string(cap) +
                              (filter.triangle_free ? " (triangle-free)" : "") +
                              "; larger universes must come from graph6 files");
    }
    std::vector<Graph> level;
    level.push_back(make_graph(1, std::initializer_list<std::pair<int, int>>{}));
    for (int size = 2; size <= n; ++size) {
        std::unordered_set<CanonicalCode, CodeHash> seen;
        std::vector<std::pair<CanonicalCode, Graph>> next;
        for (const Graph& parent : level) {
            const std::uint64_t masks = 1ull << parent.n();
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                if (filter.triangle_free && !mask_independent(parent, mask)) continue;
                std::vector<std::uint64_t> rows(std::size_t(size), 0);
                for (int v = 0; v < parent.n(); ++v) rows[std::size_t(v)] = parent.neighbors(v).bits();
                for (int v : VertexSet(mask)) {
                    rows[std::size_t(v)] |= 1ull << (size - 1);
                    rows[std::size_t(size - 1)] |= 1ull << v;
                }
                const CanonicalForm canon = canonical_form(Graph::from_rows(size, rows));
                if (seen.insert(canon.code).second) next.emplace_back(canon.code, canon.graph);
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(next.size());
        for (auto& [code, graph] : next) level.push_back(std::move(graph));
    }
    std::vector<Graph> out;
    for (Graph& g : level) {
        if (filter.connected && !is_connected(g)) continue;
        if (filter.max_n && g.n() > *filter.max_n) continue;
        out.push_back(std::move(g));
    }
    return out;
}

CorpusStream CorpusStream::generate(int n, CorpusFilter filter) {
    CorpusStream s;
    s.buffered_ = enumerate_graphs(n, filter);
    return s;
}

CorpusStream CorpusStream::generate_range(int lo, int hi, CorpusFilter filter) {
    CorpusStream s;
    for (int n = lo; n <= hi; ++n) {
        auto part = enumerate_graphs(n, filter);
        s.buffered_.insert(s.buffered_.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
    }
    return s;
}

CorpusStream CorpusStream::from_file(const std::string& path, CorpusFilter filter) {
    auto file = std::make_shared<std::ifstream>(path);
    if (!*file) throw std::runtime_error("cannot open corpus file: " + path);
    CorpusStream s;
    s.file_ = file;
    s.filter_ = filter;
    return s;
}

CorpusStream CorpusStream::from_graphs(std::vector<Graph> graphs) {
    CorpusStream s;
    s.buffered_ = std::move(graphs);
    return s;
}

std::optional<Graph> CorpusStream::next() {
    if (!file_) {
        if (cursor_ >= buffered_.size()) return {};
        return buffered_[cursor_++];
    }
    std::string line;
    while (std::getline(*file_, line)) {
        ++line_no_;
        if (line.empty()) continue;
        if (line_no_ == 1 && line.rfind(">>graph6<<", 0) == 0) {
            line = line.substr(10);
            if (line.empty()) continue;
        }
        Graph g;
        try {
            g = parse_graph(line, GraphFormat::graph6);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no_) + ": " + e.what(), e.offset);
        }
        if (filter_.connected && !is_connected(g)) continue;
        if (filter_.triangle_free && !triangle_free(g)) continue;
        if (filter_.max_n && g.n() > *filter_.max_n) continue;
        return g;
    }
    return {};
}

}  // namespace pdg
