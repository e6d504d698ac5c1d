#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcol/coloring.hpp"
#include "gcol/graph.hpp"
#include "gcol/permutation.hpp"
#include "gcol/rng.hpp"

namespace gcol {

/// Coloring program: a permutation of 0..n-1 whose entries index the
/// degree-sorted reference sequence of whatever graph it is run on.
struct Program {
    std::vector<int> indices;

    explicit Program(std::vector<int> idx) : indices(std::move(idx)) {
        require_permutation(indices, static_cast<int>(indices.size()), "Program");
    }

    int size() const { return static_cast<int>(indices.size()); }
    bool operator==(const Program& other) const { return indices == other.indices; }
};

/// Nodes sorted by nonincreasing degree, equal degrees by ascending id.
struct ReferenceSequence {
    std::vector<int> order;
    int node(int k) const { return order[static_cast<std::size_t>(k)]; }
};

inline ReferenceSequence reference_sequence(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.node_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return {std::move(order)};
}

/// Runs the program: step z colors node(k_z) with the smallest color free
/// among its neighbors. Identical to greedy coloring along the visiting order
/// the program spells out over the graph's own reference sequence.
inline Coloring run_program(const Graph& g, const Program& kappa) {
    if (kappa.size() != g.node_count())
        throw std::invalid_argument("run_program: program length does not match node count");
    const ReferenceSequence ref = reference_sequence(g);
    std::vector<int> visit(static_cast<std::size_t>(kappa.size()));
    for (int z = 0; z < kappa.size(); ++z)
        visit[static_cast<std::size_t>(z)] = ref.node(kappa.indices[static_cast<std::size_t>(z)]);
    return greedy_color(g, visit);
}

/// Graphs sharing one node count with density inside a band, plus the
/// provenance needed to regenerate or reload them.
struct TrainingSet {
    std::vector<Graph> graphs;
    int n = 0;
    double density_lo = 0.0;
    double density_hi = 0.0;
    std::uint64_t seed = 0;
    bool sampled = false;              // true when generated, false when file-loaded
    std::vector<std::string> files;    // set when loaded from disk
};

/// Program fitness: n minus the average color count over the training set.
/// Members are evaluated in list order so the floating-point average is
/// reproducible.
inline double program_fitness(const Program& kappa, const TrainingSet& training) {
    if (training.graphs.empty()) throw std::invalid_argument("program_fitness: empty training set");
    double total = 0.0;
    for (const Graph& g : training.graphs) {
        if (g.node_count() != kappa.size())
            throw std::invalid_argument("program_fitness: graph size does not match program");
        total += verify_coloring(g, run_program(g, kappa)).colors;
    }
    return kappa.size() - total / static_cast<double>(training.graphs.size());
}

inline std::pair<Program, Program> program_crossover(const Program& a, const Program& b, int z) {
    auto [c1, c2] = crossover_sequences(a.indices, b.indices, z);
    return {Program(std::move(c1)), Program(std::move(c2))};
}

/// Exchanges the entries at positions i and j.
inline Program swap_mutation(const Program& kappa, int i, int j) {
    const int n = kappa.size();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("swap_mutation: position out of range");
    std::vector<int> idx = kappa.indices;
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    return Program(std::move(idx));
}

/// Full reversal of the index sequence.
inline Program inversion(const Program& kappa) {
    std::vector<int> idx(kappa.indices.rbegin(), kappa.indices.rend());
    return Program(std::move(idx));
}

/// Samples `size` graphs of the class: target density uniform in [lo, hi],
/// then G(n, target) with a seed drawn from the master stream, rejecting any
/// draw whose realized density falls outside the band. Throws when a member
/// cannot be placed within the retry budget (the band is then infeasible or
/// nearly so for this n).
inline TrainingSet sample_training_set(int n, double lo, double hi, int size, std::uint64_t seed) {
    if (!(0.0 <= lo && lo <= hi && hi <= 1.0))
        throw std::invalid_argument("sample_training_set: bad density band");
    if (size < 1) throw std::invalid_argument("sample_training_set: size must be positive");
    if (n < 2) throw std::invalid_argument("sample_training_set: need n >= 2");
    constexpr int max_retries = 64;
    Rng rng(seed);
    TrainingSet training;
    training.n = n;
    training.density_lo = lo;
    training.density_hi = hi;
    training.seed = seed;
    training.sampled = true;
    for (int k = 0; k < size; ++k) {
        bool placed = false;
        for (int attempt = 0; attempt < max_retries && !placed; ++attempt) {
            const double target = lo + rng.uniform01() * (hi - lo);
            Graph g = gen_gnp(n, target, rng.next());
            const double realized = density(g);
            if (lo <= realized && realized <= hi) {
                training.graphs.push_back(std::move(g));
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error("sample_training_set: density band infeasible after " +
                                     std::to_string(max_retries) + " retries");
    }
    return training;
}

/// One line of n whitespace-separated integers, 1-based like all text output.
inline std::string format_program(const Program& kappa) {
    std::ostringstream out;
    for (int z = 0; z < kappa.size(); ++z) {
        if (z > 0) out << ' ';
        out << kappa.indices[static_cast<std::size_t>(z)] + 1;
    }
    return out.str();
}

inline Program parse_program(const std::string& line) {
    std::istringstream in(line);
    std::vector<int> idx;
    long long v = 0;
    while (in >> v) idx.push_back(static_cast<int>(v - 1));
    return Program(std::move(idx));
}

/// Adapter plugging coloring programs into the evolution engine. The
/// reference sequence of every training graph is fixed up front; individuals
/// are raw index permutations.
class ProgramProblem {
  public:
    explicit ProgramProblem(const TrainingSet& training) : training_(&training) {
        if (training.graphs.empty())
            throw std::invalid_argument("ProgramProblem: empty training set");
        n_ = training.graphs.front().node_count();
        for (const Graph& g : training.graphs) {
            if (g.node_count() != n_)
                throw std::invalid_argument("ProgramProblem: mixed node counts in training set");
            ref_orders_.push_back(reference_sequence(g).order);
        }
    }

    int size() const { return n_; }

    std::vector<int> make_individual(std::vector<int> perm) const { return perm; }

    double fitness(std::span<const int> individual) const {
        double total = 0.0;
        std::vector<int> visit(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < ref_orders_.size(); ++i) {
            for (int z = 0; z < n_; ++z)
                visit[static_cast<std::size_t>(z)] =
                    ref_orders_[i][static_cast<std::size_t>(individual[static_cast<std::size_t>(z)])];
            total += greedy_color(training_->graphs[i], visit).color_count();
        }
        return n_ - total / static_cast<double>(ref_orders_.size());
    }

    std::pair<std::vector<int>, std::vector<int>> crossover(std::span<const int> a,
                                                            std::span<const int> b, int z) const {
        return crossover_sequences(a, b, z);
    }

    /// Swap of two distinct positions drawn uniformly without replacement.
    std::vector<int> mutate(std::span<const int> individual, Rng& rng) const {
        std::vector<int> idx(individual.begin(), individual.end());
        if (n_ < 2) return idx;
        const int i = static_cast<int>(rng.uniform_int(0, n_ - 1));
        int j = static_cast<int>(rng.uniform_int(0, n_ - 2));
        if (j >= i) ++j;
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        return idx;
    }

    std::vector<int> invert(std::span<const int> individual) const {
        return std::vector<int>(individual.rbegin(), individual.rend());
    }

  private:
    const TrainingSet* training_;
    int n_ = 0;
    std::vector<std::vector<int>> ref_orders_;
};

} // namespace gcol
