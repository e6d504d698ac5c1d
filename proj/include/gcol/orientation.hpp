#pragma once

#include <algorithm>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"
#include "gcol/permutation.hpp"
#include "gcol/rng.hpp"

namespace gcol {

/// Canonical topological order of the acyclic orientation induced by seq
/// (every edge directed from the earlier to the later endpoint of seq).
/// Canonical means: among nodes simultaneously available, the smallest id
/// comes first, which makes the order a unique key for the orientation.
inline std::vector<int> induced_canonical_order(const Graph& g, std::span<const int> seq) {
    const int n = g.node_count();
    require_permutation(seq, n, "orientation sequence");
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges())
        ++indeg[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)] ? v : u)];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int w : g.neighbors(u))
            if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(w)] &&
                --indeg[static_cast<std::size_t>(w)] == 0)
                ready.push(w);
    }
    return order;
}

/// Number of nodes on the longest directed path of the orientation induced by
/// order. Single backward sweep over the sequence (which is a topological
/// order of that orientation), so O(n + m).
inline int longest_directed_path_nodes(const Graph& g, std::span<const int> order) {
    const int n = g.node_count();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> path_len(static_cast<std::size_t>(n), 1);
    int longest = n > 0 ? 1 : 0;
    for (int i = n - 1; i >= 0; --i) {
        const int v = order[static_cast<std::size_t>(i)];
        for (int w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(w)])
                path_len[static_cast<std::size_t>(v)] =
                    std::max(path_len[static_cast<std::size_t>(v)], 1 + path_len[static_cast<std::size_t>(w)]);
        longest = std::max(longest, path_len[static_cast<std::size_t>(v)]);
    }
    return longest;
}

/// Acyclic orientation of a fixed graph, represented canonically by a linear
/// extension. Any node permutation induces a unique acyclic orientation;
/// construction immediately re-derives the canonical order, so two
/// orientations are equal iff their order() sequences are equal. The
/// referenced Graph must outlive the orientation.
class Orientation {
  public:
    Orientation(const Graph& g, std::span<const int> seq)
        : graph_(&g), order_(induced_canonical_order(g, seq)) {
        pos_.resize(order_.size());
        for (int i = 0; i < static_cast<int>(order_.size()); ++i)
            pos_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    }

    const Graph& graph() const { return *graph_; }

    /// Canonical linear extension: topological order, ties by ascending id.
    const std::vector<int>& order() const { return order_; }

    int position(int v) const { return pos_[static_cast<std::size_t>(v)]; }

    /// For an edge (u, v) of the graph: true iff it is directed u -> v.
    bool directs(int u, int v) const {
        return pos_[static_cast<std::size_t>(u)] < pos_[static_cast<std::size_t>(v)];
    }

    bool operator==(const Orientation& other) const {
        return graph_ == other.graph_ && order_ == other.order_;
    }

  private:
    const Graph* graph_;
    std::vector<int> order_;
    std::vector<int> pos_;
};

inline int longest_path_nodes(const Orientation& o) {
    return longest_directed_path_nodes(o.graph(), o.order());
}

/// Orientation fitness: n minus the longest directed path, so fitter
/// orientations admit colorings with fewer colors.
inline int ao_fitness(const Orientation& o) {
    return o.graph().node_count() - longest_path_nodes(o);
}

/// Colors each node with the round in which it becomes a sink when sinks are
/// repeatedly removed. Uses exactly longest_path_nodes(o) colors and is
/// always proper (neighbors never leave in the same round).
inline Coloring sink_decomposition_coloring(const Orientation& o) {
    const Graph& g = o.graph();
    const int n = g.node_count();
    std::vector<int> out_remaining(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) ++out_remaining[static_cast<std::size_t>(o.directs(u, v) ? u : v)];
    std::vector<int> color(static_cast<std::size_t>(n), 0), frontier, next;
    for (int v = 0; v < n; ++v)
        if (out_remaining[static_cast<std::size_t>(v)] == 0) frontier.push_back(v);
    int round = 0;
    while (!frontier.empty()) {
        ++round;
        next.clear();
        for (int s : frontier) {
            color[static_cast<std::size_t>(s)] = round;
            for (int u : g.neighbors(s))
                if (o.directs(u, s) && --out_remaining[static_cast<std::size_t>(u)] == 0)
                    next.push_back(u);
        }
        std::swap(frontier, next);
    }
    return Coloring(std::move(color));
}

/// Directs every edge from the higher color to the lower. Colors strictly
/// decrease along any directed path of the result, so its longest path has at
/// most color_count nodes.
inline Orientation orientation_from_coloring(const Graph& g, const Coloring& col) {
    const auto check = verify_coloring(g, col);
    if (!check.proper) throw std::invalid_argument("orientation_from_coloring: coloring is improper");
    std::vector<int> order(static_cast<std::size_t>(g.node_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&col](int a, int b) {
        if (col.color(a) != col.color(b)) return col.color(a) > col.color(b);
        return a < b;
    });
    return Orientation(g, order);
}

/// One-point crossover on the parents' linear extensions, children
/// re-canonicalized. Child 1 agrees with parent 1 on every edge touching the
/// first z nodes of L(parent 1) and with parent 2 on edges internal to the
/// remaining nodes; child 2 symmetrically.
inline std::pair<Orientation, Orientation> ao_crossover(const Orientation& p1, const Orientation& p2,
                                                        int z) {
    if (&p1.graph() != &p2.graph())
        throw std::invalid_argument("ao_crossover: parents over different graphs");
    auto [s1, s2] = crossover_sequences(p1.order(), p2.order(), z);
    return {Orientation(p1.graph(), s1), Orientation(p2.graph(), s2)};
}

/// Turns node v into a source: all incident edges now leave v, everything
/// else is untouched, and the result is again acyclic. Equivalent to moving v
/// to the front of the linear extension. A node that already is a source
/// yields the same orientation back.
inline Orientation ao_mutate(const Orientation& o, int v) {
    const int n = o.graph().node_count();
    if (v < 0 || v >= n) throw std::invalid_argument("ao_mutate: node out of range");
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));
    seq.push_back(v);
    for (int u : o.order())
        if (u != v) seq.push_back(u);
    return Orientation(o.graph(), seq);
}

/// Plan transforming one orientation into another through source-turning
/// mutations only. targets[v] is how many times node v gets turned; applying
/// sequence left to right to the source orientation yields the target
/// exactly. u_plus lists the nodes incident to edges whose head is turned at
/// least once; every positive target belongs to it and the sequence never
/// exceeds |u_plus|^2 turns.
struct MutationPlan {
    std::vector<int> targets;
    std::vector<int> sequence;
    std::vector<int> u_plus;
};

/// Computes the minimal turn counts and the mutation sequence that carry
/// `from` into `to`.
///
/// Counts must strictly increase along edges the two orientations direct
/// differently (the head is turned more often, leaving the edge reversed) and
/// must not increase along agreeing edges whose head is turned (head and tail
/// then alternate, tail last, leaving the edge as it was). Both constraint
/// families follow the reverse of `to`, which is acyclic, so relaxing nodes
/// in reverse canonical order of `to` yields the least counts in one sweep.
/// The sequence then repeatedly turns a non-source node of maximal nonzero
/// count, preferring among tied neighbors the one the connecting edge points
/// to, and the smallest id among mutually non-adjacent tied nodes.
inline MutationPlan mutation_sequence(const Orientation& from, const Orientation& to) {
    if (&from.graph() != &to.graph())
        throw std::invalid_argument("mutation_sequence: orientations over different graphs");
    const Graph& g = from.graph();
    const int n = g.node_count();
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());

    auto reversed = [&](int u, int v) { return from.directs(u, v) != to.directs(u, v); };

    MutationPlan plan;
    plan.targets.assign(static_cast<std::size_t>(n), 0);
    auto& t = plan.targets;
    for (int i = n - 1; i >= 0; --i) {
        const int v = to.order()[static_cast<std::size_t>(i)];
        int need = 0;
        for (int w : g.neighbors(v)) {
            if (reversed(v, w)) {
                if (from.directs(w, v)) need = std::max(need, t[static_cast<std::size_t>(w)] + 1);
            } else {
                if (from.directs(v, w)) need = std::max(need, t[static_cast<std::size_t>(w)]);
            }
        }
        t[static_cast<std::size_t>(v)] = need;
    }

    std::vector<char> in_u_plus(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        const int head = from.directs(u, v) ? v : u;
        if (t[static_cast<std::size_t>(head)] > 0) {
            in_u_plus[static_cast<std::size_t>(u)] = 1;
            in_u_plus[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (in_u_plus[static_cast<std::size_t>(v)]) plan.u_plus.push_back(v);

    // Replay state: per-edge direction plus out-degrees for the source test.
    std::vector<char> toward_second(static_cast<std::size_t>(m));
    std::vector<int> out_deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(n)); // node -> (edge, other)
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        toward_second[static_cast<std::size_t>(e)] = from.directs(u, v) ? 1 : 0;
        ++out_deg[static_cast<std::size_t>(from.directs(u, v) ? u : v)];
        incident[static_cast<std::size_t>(u)].emplace_back(e, v);
        incident[static_cast<std::size_t>(v)].emplace_back(e, u);
    }
    auto points_away = [&](int v, int e) {
        const bool v_is_first = edges[static_cast<std::size_t>(e)].first == v;
        return toward_second[static_cast<std::size_t>(e)] == (v_is_first ? 1 : 0);
    };

    std::vector<int> remaining(t); // turns still owed per node
    long long owed = 0;
    for (int v = 0; v < n; ++v) owed += remaining[static_cast<std::size_t>(v)];
    std::vector<int> tied;
    std::vector<char> is_tied(static_cast<std::size_t>(n), 0);
    while (owed > 0) {
        int best = 0;
        tied.clear();
        for (int v = 0; v < n; ++v) {
            const int r = remaining[static_cast<std::size_t>(v)];
            if (r == 0 || out_deg[static_cast<std::size_t>(v)] == g.degree(v)) continue; // zero or source
            if (r > best) {
                best = r;
                tied.clear();
            }
            if (r == best) tied.push_back(v);
        }
        if (tied.empty()) throw std::logic_error("mutation_sequence: no turnable node left");
        int chosen = -1;
        for (int v : tied) is_tied[static_cast<std::size_t>(v)] = 1;
        for (int v : tied) {
            bool dominated = false;
            for (auto [e, u] : incident[static_cast<std::size_t>(v)])
                if (is_tied[static_cast<std::size_t>(u)] && points_away(v, e)) {
                    dominated = true; // the edge points at u, so u goes first
                    break;
                }
            if (!dominated) {
                chosen = v;
                break;
            }
        }
        for (int v : tied) is_tied[static_cast<std::size_t>(v)] = 0;
        for (auto [e, u] : incident[static_cast<std::size_t>(chosen)]) {
            if (!points_away(chosen, e)) {
                toward_second[static_cast<std::size_t>(e)] ^= 1;
                ++out_deg[static_cast<std::size_t>(chosen)];
                --out_deg[static_cast<std::size_t>(u)];
            }
        }
        --remaining[static_cast<std::size_t>(chosen)];
        --owed;
        plan.sequence.push_back(chosen);
    }

    for (int e = 0; e < m; ++e) {
        const auto [u, v] = edges[static_cast<std::size_t>(e)];
        if ((toward_second[static_cast<std::size_t>(e)] == 1) != to.directs(u, v))
            throw std::logic_error("mutation_sequence: replay does not reach the target");
    }
    return plan;
}

/// Adapter plugging acyclic orientations into the evolution engine.
/// Individuals are canonical linear extensions of a fixed graph.
class AoProblem {
  public:
    explicit AoProblem(const Graph& g) : graph_(&g) {}

    int size() const { return graph_->node_count(); }

    std::vector<int> make_individual(std::vector<int> perm) const {
        return induced_canonical_order(*graph_, perm);
    }

    double fitness(std::span<const int> individual) const {
        return size() - longest_directed_path_nodes(*graph_, individual);
    }

    std::pair<std::vector<int>, std::vector<int>> crossover(std::span<const int> a,
                                                            std::span<const int> b, int z) const {
        auto [c1, c2] = crossover_sequences(a, b, z);
        return {induced_canonical_order(*graph_, c1), induced_canonical_order(*graph_, c2)};
    }

    /// Source-turning mutation at a uniformly drawn node.
    std::vector<int> mutate(std::span<const int> individual, Rng& rng) const {
        const int v = static_cast<int>(rng.uniform_int(0, size() - 1));
        std::vector<int> seq;
        seq.reserve(individual.size());
        seq.push_back(v);
        for (int u : individual)
            if (u != v) seq.push_back(u);
        return induced_canonical_order(*graph_, seq);
    }

  private:
    const Graph* graph_;
};

} // namespace gcol
