#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcol/rng.hpp"

namespace gcol {

/// Thrown by parse_dimacs; line is 1-based within the input stream.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// Simple undirected graph.
///
/// Nodes are 0-based ints internally; every text format (DIMACS files,
/// coloring and orientation dumps, CLI output) is 1-based, so external node i
/// is internal node i-1. The edge list is kept sorted with each pair stored
/// as (min, max); adjacency lists are sorted and symmetric by construction.
/// Instances are immutable after construction and safe to share across
/// threads.
class Graph {
  public:
    Graph() = default;

    /// Builds from an edge list. Self-loops and out-of-range endpoints are
    /// rejected; duplicate edges (in either endpoint order) are collapsed.
    Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative node count");
        for (auto& [u, v] : edge_list) {
            if (u == v) throw std::invalid_argument("Graph: self-loop at node " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);
        adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Fraction of present edges, 2m / (n(n-1)). Defined only for n >= 2.
inline double density(const Graph& g) {
    const double n = g.node_count();
    if (n < 2) throw std::invalid_argument("density: undefined for n < 2");
    return 2.0 * g.edge_count() / (n * (n - 1.0));
}

/// Graph on the same nodes holding exactly the absent edges.
inline Graph complement(const Graph& g) {
    const int n = g.node_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// Parses the DIMACS .col format:
///   c <comment>
///   p edge <n> <m>
///   e <i> <j>          (1-based endpoints)
/// Blank lines are ignored and trailing \r is stripped, so both LF and CRLF
/// files load. Duplicate and reversed-duplicate edge lines are collapsed; a
/// declared m that disagrees with the distinct-edge count is reported as a
/// warning, not an error (several challenge files contain duplicates).
inline Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr) {
    int n = -1;
    long long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate problem line");
            std::string fmt;
            long long pn = -1, pm = -1;
            if (!(ls >> fmt >> pn >> pm) || fmt != "edge" || pn < 0 || pm < 0)
                throw ParseError(line_no, "malformed problem line, expected 'p edge n m'");
            n = static_cast<int>(pn);
            declared_m = pm;
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError(line_no, "edge before problem line");
            long long i = 0, j = 0;
            if (!(ls >> i >> j)) throw ParseError(line_no, "malformed edge line");
            if (i < 1 || j < 1 || i > n || j > n)
                throw ParseError(line_no, "node index out of range 1.." + std::to_string(n));
            if (i == j) throw ParseError(line_no, "self-loop edge");
            edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
            continue;
        }
        throw ParseError(line_no, "unrecognized line tag '" + tag + "'");
    }
    if (n < 0) throw ParseError(line_no, "missing problem line");
    Graph g(n, std::move(edges));
    if (warnings && declared_m != g.edge_count())
        warnings->push_back("declared m=" + std::to_string(declared_m) + " but found " +
                            std::to_string(g.edge_count()) + " distinct edges");
    return g;
}

inline Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_dimacs(in, warnings);
}

/// Writes the graph back out in the same format: the problem line followed by
/// one sorted 'e i j' line per edge, 1-based. Round-trips through parse_dimacs.
inline void dump_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

/// G(n, p): every unordered pair becomes an edge independently with
/// probability prob. Pairs are visited in fixed order (0,1), (0,2), ...,
/// (n-2,n-1), one Bernoulli draw each, so the edge set is a pure function of
/// (n, prob, seed).
inline Graph gen_gnp(int n, double prob, std::uint64_t seed) {
    if (prob < 0.0 || prob > 1.0) throw std::invalid_argument("gen_gnp: probability outside [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(prob)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// Random geometric graph: n points uniform in the unit square, edge between
/// any two points at Euclidean distance <= radius (closed ball, so radius
/// sqrt(2) is exactly complete). Coordinates are drawn x then y per node in
/// node order; pass points to capture them.
inline Graph gen_geometric(int n, double radius, std::uint64_t seed,
                           std::vector<std::pair<double, double>>* points = nullptr) {
    if (radius < 0.0) throw std::invalid_argument("gen_geometric: negative radius");
    Rng rng(seed);
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
    for (auto& [x, y] : pts) {
        x = rng.uniform01();
        y = rng.uniform01();
    }
    const double r2 = radius * radius;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const double dx = pts[static_cast<std::size_t>(u)].first - pts[static_cast<std::size_t>(v)].first;
            const double dy = pts[static_cast<std::size_t>(u)].second - pts[static_cast<std::size_t>(v)].second;
            if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
        }
    if (points) *points = std::move(pts);
    return Graph(n, std::move(edges));
}

} // namespace gcol
