#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcol/graph.hpp"
#include "gcol/orientation.hpp"

namespace gcol {

using BigInt = boost::multiprecision::cpp_int;

/// Exact chromatic polynomial, stored densely by ascending power. Exact
/// integer coefficients throughout; the leading coefficient is always 1.
struct ChromaticPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    BigInt eval(long long c) const {
        BigInt acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * c + *it;
        return acc;
    }

    bool operator==(const ChromaticPolynomial& other) const { return coeffs == other.coeffs; }
};

namespace detail {

inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline void poly_sub_inplace(std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
}

// Adjacency-bitmask graph for the deletion-contraction recursion; n <= 32.
using MaskGraph = std::vector<std::uint32_t>;

inline int mask_edge_count(const MaskGraph& g) {
    int total = 0;
    for (auto row : g) total += __builtin_popcount(row);
    return total / 2;
}

inline std::vector<BigInt> chrom_rec(const MaskGraph& g) {
    const int k = static_cast<int>(g.size());

    // Work per connected component; the polynomial is the product.
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    int comp_count = 0;
    for (int start = 0; start < k; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = comp_count;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < k; ++v)
                if ((g[static_cast<std::size_t>(u)] >> v & 1u) && comp[static_cast<std::size_t>(v)] < 0) {
                    comp[static_cast<std::size_t>(v)] = comp_count;
                    stack.push_back(v);
                }
        }
        ++comp_count;
    }
    if (comp_count > 1) {
        std::vector<BigInt> out{1};
        for (int c = 0; c < comp_count; ++c) {
            std::vector<int> keep;
            for (int v = 0; v < k; ++v)
                if (comp[static_cast<std::size_t>(v)] == c) keep.push_back(v);
            MaskGraph sub(keep.size(), 0);
            for (std::size_t i = 0; i < keep.size(); ++i)
                for (std::size_t j = 0; j < keep.size(); ++j)
                    if (g[static_cast<std::size_t>(keep[i])] >> keep[j] & 1u)
                        sub[i] |= 1u << j;
            out = poly_mul(out, chrom_rec(sub));
        }
        return out;
    }

    const int m = mask_edge_count(g);
    if (m == 0) { // single node (connected, edgeless)
        std::vector<BigInt> out(static_cast<std::size_t>(k) + 1, 0);
        out[static_cast<std::size_t>(k)] = 1;
        return out;
    }
    if (m == k - 1) { // connected and acyclic: a tree, c(c-1)^(k-1)
        std::vector<BigInt> out{0, 1};
        const std::vector<BigInt> lin{-1, 1};
        for (int i = 0; i < k - 1; ++i) out = poly_mul(out, lin);
        return out;
    }
    if (m == k * (k - 1) / 2) { // complete: falling factorial
        std::vector<BigInt> out{0, 1};
        for (int i = 1; i < k; ++i) out = poly_mul(out, {BigInt(-i), 1});
        return out;
    }

    // Deletion-contraction on the first edge of a maximum-degree node.
    int u = 0;
    for (int v = 1; v < k; ++v)
        if (__builtin_popcount(g[static_cast<std::size_t>(v)]) >
            __builtin_popcount(g[static_cast<std::size_t>(u)]))
            u = v;
    const int v = __builtin_ctz(g[static_cast<std::size_t>(u)]);

    MaskGraph deleted = g;
    deleted[static_cast<std::size_t>(u)] &= ~(1u << v);
    deleted[static_cast<std::size_t>(v)] &= ~(1u << u);
    auto result = chrom_rec(deleted);

    // Contract v into u, dropping the (u,v) edge and merging duplicates.
    MaskGraph contracted(g.size() - 1, 0);
    auto remap = [&](int w) { return w < v ? w : w - 1; };
    for (int a = 0; a < k; ++a) {
        if (a == v) continue;
        std::uint32_t row = g[static_cast<std::size_t>(a)];
        if (a == u) row |= g[static_cast<std::size_t>(v)];
        row &= ~(1u << u);
        row &= ~(1u << v);
        std::uint32_t out_row = 0;
        for (int b = 0; b < k; ++b)
            if (row >> b & 1u) out_row |= 1u << remap(b);
        if (a == u) out_row &= ~(1u << remap(u));
        contracted[static_cast<std::size_t>(remap(a))] = out_row;
    }
    for (int b = 0; b < k - 1; ++b)
        if (contracted[static_cast<std::size_t>(remap(u))] >> b & 1u)
            contracted[static_cast<std::size_t>(b)] |= 1u << remap(u);
    poly_sub_inplace(result, chrom_rec(contracted));
    return result;
}

} // namespace detail

/// Exact chromatic polynomial by deletion-contraction, with shortcuts for
/// forests, complete graphs and disconnected inputs. Guarded by a node cap
/// because the recursion is exponential in general.
inline ChromaticPolynomial chromatic_polynomial(const Graph& g, int cap = 12) {
    const int n = g.node_count();
    if (n > cap) throw std::invalid_argument("chromatic_polynomial: node count exceeds cap");
    detail::MaskGraph mg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        mg[static_cast<std::size_t>(u)] |= 1u << v;
        mg[static_cast<std::size_t>(v)] |= 1u << u;
    }
    ChromaticPolynomial p;
    p.coeffs = detail::chrom_rec(mg);
    p.coeffs.resize(static_cast<std::size_t>(n) + 1, 0);
    return p;
}

namespace detail {

inline bool k_colorable(const Graph& g, const std::vector<int>& order, int k) {
    const int n = g.node_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    // Try colors 1..min(used+1, k) for each node; restricting the first use
    // of every new color kills the color-permutation symmetry.
    auto rec = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        const int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, idx + 1, std::max(used, c))) return true;
            color[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace detail

/// Exact chromatic number by branch and bound over color assignments, nodes
/// visited in nonincreasing degree order.
inline int chromatic_number_exact(const Graph& g, int cap = 16) {
    const int n = g.node_count();
    if (n > cap) throw std::invalid_argument("chromatic_number_exact: node count exceeds cap");
    if (n == 0) return 0;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    for (int k = 1; k <= g.max_degree(); ++k)
        if (detail::k_colorable(g, order, k)) return k;
    return g.max_degree() + 1; // greedy bound makes this always colorable
}

/// All acyclic orientations, obtained by inducing one from every node
/// permutation and deduplicating on the canonical form. Every acyclic
/// orientation has a topological order, so the sweep is exhaustive. n <= 8.
inline std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g, int cap = 8) {
    const int n = g.node_count();
    if (n > cap) throw std::invalid_argument("enumerate_acyclic_orientations: node count exceeds cap");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> canon;
    do {
        canon.insert(induced_canonical_order(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Orientation> out;
    out.reserve(canon.size());
    for (const auto& seq : canon) out.emplace_back(g, seq);
    return out;
}

struct StanleyCheck {
    long long orientation_count;
    long long polynomial_value; // (-1)^n * C_G(-1)
    bool equal;
};

/// Checks the identity |acyclic orientations| = (-1)^n C_G(-1).
inline StanleyCheck verify_stanley(const Graph& g, int cap = 8) {
    const auto count = static_cast<long long>(enumerate_acyclic_orientations(g, cap).size());
    const BigInt value = chromatic_polynomial(g).eval(-1);
    const BigInt signed_value = g.node_count() % 2 == 0 ? value : -value;
    return {count, signed_value.convert_to<long long>(), count == signed_value};
}

/// Minimum over all acyclic orientations of the longest directed path length.
/// Equals the chromatic number; the equality is exercised by the test suite
/// against chromatic_number_exact.
inline int chi_via_orientations(const Graph& g, int cap = 8) {
    int best = g.node_count() + 1;
    for (const Orientation& o : enumerate_acyclic_orientations(g, cap))
        best = std::min(best, longest_path_nodes(o));
    return best;
}

} // namespace gcol
