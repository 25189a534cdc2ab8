#pragma once

#include "gracelab/endofunction.hpp"
#include "gracelab/permutation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gracelab {

struct FunctionalGraphSummary {
    int component_count = 0;
    /// Sorted ascending.
    std::vector<int> cycle_lengths;
    int loops = 0;
    /// lcm of the cycle lengths (o_f).
    std::uint64_t order_lcm = 1;

    friend bool operator==(const FunctionalGraphSummary&, const FunctionalGraphSummary&) = default;
};

/// Dense A_{G_f} - I, where A_{G_f}[i][j] = 1 iff j = f(i).
class SignedIncidenceMatrix {
public:
    explicit SignedIncidenceMatrix(const EndoFunction& f);

    int size() const noexcept { return n_; }
    int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;
    /// Exact rank by fraction-free elimination.
    int rank() const;
    std::vector<int> row_sums() const;

private:
    int n_;
    std::vector<int> entries_;
};

/// f ∘ g. Throws std::invalid_argument on a dimension mismatch.
EndoFunction compose(const EndoFunction& f, const EndoFunction& g);

/// k-fold self-composition; iterate(f, 0) is the identity.
EndoFunction iterate(const EndoFunction& f, std::uint64_t k);

FunctionalGraphSummary summarize(const EndoFunction& f);

/// f(0) = 0 and f(i) < i for i >= 1.
bool is_tree_function(const EndoFunction& f);
/// f(i) <= i everywhere.
bool is_forest_function(const EndoFunction& f);
/// |f^{(n-1)}(Z_n)| = 1, i.e. G_f is a rooted tree with a loop at the root.
bool has_attractive_fixed_point(const EndoFunction& f);

/// The vertex r with f(r) = r when f has an attractive fixed point,
/// otherwise -1.
int attractive_root(const EndoFunction& f);

SignedIncidenceMatrix signed_incidence(const EndoFunction& f);

/// d[i] = sigma(f(sigma^{-1}(i))) - i.
std::vector<int> apply_label_differences(const EndoFunction& f, const Permutation& sigma);

/// DOT digraph with one edge i -> f(i) per vertex.
std::string to_dot(const EndoFunction& f, const std::string& name = "G");

} // namespace gracelab
