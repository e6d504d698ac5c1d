#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gcol {

/// True iff seq holds each of 0..n-1 exactly once.
inline bool is_permutation_of_n(std::span<const int> seq, int n) {
    if (static_cast<int>(seq.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : seq) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

inline void require_permutation(std::span<const int> seq, int n, const char* what) {
    if (!is_permutation_of_n(seq, n))
        throw std::invalid_argument(std::string(what) + ": not a permutation of 0.." +
                                    std::to_string(n - 1));
}

/// One-point subsequence-completion crossover on permutations.
///
/// Child 1 keeps the first z entries of a and appends the entries of b that
/// are still missing, in b's relative order; child 2 is symmetric. The cut
/// index z must satisfy 1 <= z < n, so both children always mix material from
/// both parents and remain permutations.
inline std::pair<std::vector<int>, std::vector<int>>
crossover_sequences(std::span<const int> a, std::span<const int> b, int z) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("crossover: length mismatch");
    if (z < 1 || z >= n) throw std::invalid_argument("crossover: cut index out of range");

    auto complete = [n, z](std::span<const int> head, std::span<const int> tail) {
        std::vector<int> child(head.begin(), head.begin() + z);
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        for (int v : child) used[static_cast<std::size_t>(v)] = 1;
        for (int v : tail)
            if (!used[static_cast<std::size_t>(v)]) child.push_back(v);
        return child;
    };
    return {complete(a, b), complete(b, a)};
}

} // namespace gcol
