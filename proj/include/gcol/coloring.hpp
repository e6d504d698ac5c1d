#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "gcol/graph.hpp"
#include "gcol/permutation.hpp"
#include "gcol/rng.hpp"

namespace gcol {

/// Total assignment node -> color, colors being positive integers. Properness
/// is deliberately not an invariant of the type (verify_coloring checks it);
/// any total positive assignment is representable so that improper inputs can
/// be exercised in tests.
class Coloring {
  public:
    explicit Coloring(std::vector<int> assignment) : colors_(std::move(assignment)) {
        for (int c : colors_)
            if (c < 1) throw std::invalid_argument("Coloring: colors must be positive");
    }

    int color(int node) const { return colors_[static_cast<std::size_t>(node)]; }
    const std::vector<int>& values() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }

    /// Number of distinct colors used.
    int color_count() const {
        std::set<int> distinct(colors_.begin(), colors_.end());
        return static_cast<int>(distinct.size());
    }

  private:
    std::vector<int> colors_;
};

struct VerifyResult {
    bool proper;
    int colors;
};

/// Checks properness (no edge joins equal colors) and counts distinct colors.
/// An assignment that does not cover every node of g is rejected.
inline VerifyResult verify_coloring(const Graph& g, const Coloring& col) {
    if (col.size() != g.node_count())
        throw std::invalid_argument("verify_coloring: assignment does not cover all nodes");
    bool proper = true;
    for (auto [u, v] : g.edges())
        if (col.color(u) == col.color(v)) {
            proper = false;
            break;
        }
    return {proper, col.color_count()};
}

/// Colors nodes in the given order, each receiving the smallest positive
/// integer absent among its already-colored neighbors. Always proper; never
/// uses more than max_degree + 1 colors.
inline Coloring greedy_color(const Graph& g, std::span<const int> order) {
    const int n = g.node_count();
    require_permutation(order, n, "greedy_color order");
    std::vector<int> color(static_cast<std::size_t>(n), 0); // 0 = uncolored
    std::vector<char> taken(static_cast<std::size_t>(g.max_degree()) + 2, 0);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (color[static_cast<std::size_t>(u)] != 0)
                taken[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 1;
        int c = 1;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        for (int u : g.neighbors(v))
            if (color[static_cast<std::size_t>(u)] != 0)
                taken[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 0;
    }
    return Coloring(std::move(color));
}

namespace detail {

/// DSatur: repeatedly color the uncolored node with the most distinct colors
/// among its colored neighbors (its saturation degree), using the smallest
/// non-conflicting color. Ties fall back to the largest degree counting only
/// uncolored neighbors, then to the tie rule: smallest node id when rng is
/// null, otherwise a seeded uniform draw among the tied nodes.
inline Coloring dsatur_impl(const Graph& g, Rng* rng) {
    const int n = g.node_count();
    const int max_colors = g.max_degree() + 1;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    // seen[v][c] = neighbor of v already wears color c
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(max_colors) + 1, 0));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);
    std::vector<int> uncolored_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) uncolored_degree[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<int> tied;
    for (int step = 0; step < n; ++step) {
        int best_sat = -1, best_deg = -1;
        tied.clear();
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != 0) continue;
            const int s = saturation[static_cast<std::size_t>(v)];
            const int d = uncolored_degree[static_cast<std::size_t>(v)];
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best_sat = s;
                best_deg = d;
                tied.clear();
            }
            if (s == best_sat && d == best_deg) tied.push_back(v);
        }
        const int v = rng == nullptr
                          ? tied.front()
                          : tied[static_cast<std::size_t>(rng->uniform_int(0, static_cast<std::int64_t>(tied.size()) - 1))];
        int c = 1;
        while (seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        for (int u : g.neighbors(v)) {
            if (color[static_cast<std::size_t>(u)] == 0) {
                if (!seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = 1;
                    ++saturation[static_cast<std::size_t>(u)];
                }
            }
            --uncolored_degree[static_cast<std::size_t>(u)];
        }
    }
    return Coloring(std::move(color));
}

} // namespace detail

/// Deterministic DSatur: final ties broken by smallest node id, so repeated
/// runs are identical.
inline Coloring dsatur(const Graph& g) { return detail::dsatur_impl(g, nullptr); }

/// DSatur with randomized final tie-breaking drawn from rng.
inline Coloring dsatur(const Graph& g, Rng& rng) { return detail::dsatur_impl(g, &rng); }

/// Solution dump: one 'v node color' line per node, sorted by node id,
/// 1-based node ids.
inline void dump_coloring(const Coloring& col, std::ostream& out) {
    for (int v = 0; v < col.size(); ++v) out << "v " << v + 1 << ' ' << col.color(v) << '\n';
}

} // namespace gcol
