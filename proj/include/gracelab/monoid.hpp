#pragma once

#include "gracelab/endofunction.hpp"
#include "gracelab/permutation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gracelab {

/// Position of a permutation in lexicographic order of image sequences.
struct LexRank {
    std::uint64_t value = 0;

    friend bool operator==(const LexRank&, const LexRank&) = default;
    friend auto operator<=>(const LexRank&, const LexRank&) = default;
};

/// n! for 0 <= n <= 20; throws std::out_of_range beyond that.
std::uint64_t factorial(int n);

/// Lehmer-code rank: sum_k c_k (n-1-k)! with c_k = |{i > k : sigma(i) < sigma(k)}|.
LexRank lex_rank(const Permutation& sigma);
/// Throws std::out_of_range unless rank < n!.
Permutation lex_unrank(LexRank rank, int n);

/// sigma ∘ f ∘ sigma^{-1}. Throws std::invalid_argument on a dimension mismatch.
EndoFunction conjugate(const EndoFunction& f, const Permutation& sigma);

// Canonical enumeration order is mixed-radix on the value sequence with the
// last vertex varying fastest, which is lexicographic order on values.

std::uint64_t tree_function_count(int n);
std::uint64_t forest_function_count(int n);
/// The index-th tree function (f(0) = 0, f(i) < i) in canonical order.
EndoFunction tree_function_at(int n, std::uint64_t index);
/// The index-th forest function (f(i) <= i) in canonical order.
EndoFunction forest_function_at(int n, std::uint64_t index);
/// The index-th element of Z_n^{Z_n}; the inverse of EndoFunction::code().
EndoFunction function_at(int n, std::uint64_t index);

std::vector<EndoFunction> enumerate_tree_functions(int n);
std::vector<EndoFunction> enumerate_forest_functions(int n);

enum class Family {
    forest_monoid,
    tree_semigroup,
    conjugated_forest,
    no_odd_permutations,
};

/// Throws std::invalid_argument on an unknown name.
Family parse_family(const std::string& name);
std::string family_name(Family family);

struct ClosureResult {
    bool closed = true;
    bool contains_identity = false;
    /// Whether the family is claimed to be a monoid (and so must contain id).
    bool requires_identity = false;
    std::size_t member_count = 0;
    /// A pair (a, b) with a ∘ b outside the family, when one exists.
    std::optional<std::pair<EndoFunction, EndoFunction>> witness;

    bool passed() const { return closed && (!requires_identity || contains_identity); }
};

/// Exhaustive closure check; `sigma` is required for conjugated_forest and
/// ignored otherwise. Throws std::out_of_range above the per-family cap
/// (closure_cap) and std::invalid_argument for a missing sigma.
int closure_cap(Family family);
ClosureResult verify_closure(Family family, int n, const std::optional<Permutation>& sigma = std::nullopt);

struct MonoidCensus {
    int n = 0;
    std::uint64_t forest_monoid_size = 0;
    std::uint64_t tree_semigroup_size = 0;
    /// |S_n ∪ (∪_sigma sigma·forest·sigma^{-1})| by materialization.
    std::uint64_t union_count = 0;
    /// (n+1)^(n-1) + n! - 1
    std::uint64_t cayley_formula = 0;
    bool forest_monoid_closed = false;
    bool tree_semigroup_closed = false;
    bool conjugated_forests_distinct = false;
    /// n!·2 + n when n > 3, otherwise 0.
    std::uint64_t lower_bound_family_count = 0;
    std::uint64_t lower_bound_family_size = 0;
    bool lower_bound_families_distinct = false;
    /// Every lower-bound family was checked for closure (n <= 6), or only
    /// one representative per kind (n = 7).
    bool lower_bound_families_closed = false;
    bool lower_bound_closure_exhaustive = false;

    bool union_matches() const { return union_count == cayley_formula; }
};

/// 2 <= n <= 7; throws std::out_of_range otherwise.
MonoidCensus census(int n);

/// The three kinds of size-((n-1)!+1) submonoid used for the n!·2+n lower
/// bound, conjugated by sigma where applicable.
std::vector<EndoFunction> tree_semigroup_with_identity(const Permutation& sigma);
std::vector<EndoFunction> pinned_forest_with_constant(const Permutation& sigma);
std::vector<EndoFunction> stabilizer_with_constant(int n, int j);

/// Composes `factors` left to right: factors[0] ∘ factors[1] ∘ ...
EndoFunction compose_all(const std::vector<EndoFunction>& factors);

} // namespace gracelab
