#pragma once

#include "gracelab/endofunction.hpp"
#include "gracelab/monoid.hpp"
#include "gracelab/permutation.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gracelab {

/// Sorted multiset of induced subtractive edge labels, one per vertex.
class EdgeLabelSequence {
public:
    /// Sorts `labels`; throws std::invalid_argument if any label is negative
    /// or not below the length.
    explicit EdgeLabelSequence(std::vector<int> labels);

    int size() const noexcept { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const noexcept { return labels_; }
    /// (0, 1, ..., n-1)
    bool is_graceful() const;

    friend bool operator==(const EdgeLabelSequence&, const EdgeLabelSequence&) = default;

private:
    std::vector<int> labels_;
};

struct SearchOptions {
    /// Explore the whole search tree; the witness is then the lex-minimal one
    /// and `solutions` counts every labeling found. Otherwise the first
    /// labeling in search order is returned.
    bool exhaustive = false;
    /// Restrict the root label below ceil(n/2). Sound because complementing
    /// a labeling preserves every induced label.
    bool break_complement_symmetry = true;
};

struct SearchResult {
    bool found = false;
    std::optional<Permutation> witness;
    std::uint64_t nodes_explored = 0;
    /// Distinct labelings seen; only meaningful for exhaustive searches. With
    /// complement symmetry broken only labelings with a low root label count.
    std::uint64_t solutions = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct AutomorphismGroup {
    /// Sorted by lex rank; the first element is the identity.
    std::vector<Permutation> elements;
    std::size_t order() const { return elements.size(); }
};

struct GrlResult {
    /// One graceful conjugate per coset of Aut G_f, sorted.
    std::vector<EndoFunction> graphs;
    /// The lex-minimal sigma producing each entry of `graphs`.
    std::vector<Permutation> representatives;
    /// Number of sigma in S_n for which sigma f sigma^{-1} is graceful.
    std::uint64_t graceful_sigma_count = 0;
    std::size_t count() const { return graphs.size(); }
};

struct RhoStat {
    int rho = 0;
    /// Deleted edges as the tail vertex i of the edge (i, f(i)), ascending.
    std::vector<int> witness_deletion;
};

struct LabelExtrema {
    int min = 0;
    int max = 0;
    bool exact = true;
    Permutation argmin;
    Permutation argmax;
};

struct ExtremaOptions {
    bool sample = false;
    std::uint64_t samples = 20000;
    std::uint64_t seed = 1;
};

constexpr int kMaxBruteForceN = 9;
constexpr int kMaxRhoN = 12;
constexpr int kMaxExactExtremaN = 7;

/// Sorted |sigma(f(i)) - sigma(i)| over all i.
EdgeLabelSequence edge_labels(const EndoFunction& f, const Permutation& sigma);
bool is_graceful(const EndoFunction& f, const Permutation& sigma);

/// Backtracking search for a graceful relabeling. Requires G_f to be a rooted
/// tree with a loop at the root (std::invalid_argument otherwise).
SearchResult search_graceful(const EndoFunction& f, const SearchOptions& options = {});

/// Searches sigma with edge_labels(f, sigma) == target. Same precondition.
SearchResult realizes_sequence(const EndoFunction& f, const EdgeLabelSequence& target,
                               const SearchOptions& options = {});

/// Sorted {|i - j| : i in Z_n}; throws std::out_of_range unless 0 <= j <= n/2.
EdgeLabelSequence star_sequence(int n, int j);

/// Brute force over S_n; n <= kMaxBruteForceN (std::out_of_range otherwise).
GrlResult enumerate_grl(const EndoFunction& f);
AutomorphismGroup automorphisms(const EndoFunction& f);

/// Minimum deletions leaving a spanning, loop-free union of disjoint paths.
/// n <= kMaxRhoN (std::out_of_range otherwise).
RhoStat rho(const EndoFunction& f);
/// Validity check of a deletion set, shared by rho() and its callers.
bool leaves_disjoint_paths(const EndoFunction& f, const std::vector<bool>& deleted);

/// Number of distinct values of |sigma f sigma^{-1}(i) - i|.
int distinct_label_count(const EndoFunction& f, const Permutation& sigma);

/// min and max of distinct_label_count over S_n. Exhaustive for
/// n <= kMaxExactExtremaN; larger n require options.sample and return
/// sampled (inexact) extrema.
LabelExtrema distinct_label_extrema(const EndoFunction& f, const ExtremaOptions& options = {});

} // namespace gracelab
