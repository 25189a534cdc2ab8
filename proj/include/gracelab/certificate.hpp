#pragma once

// Exact evaluation of the Vandermonde-square and Eisenstein-norm certificate
// sums over S_n, the identities they satisfy, and graceful expansions.
// Every value here is an exact integer; evaluation points use unit scale and
// zero translation, so d[i] = sigma h sigma^{-1}(i) - i.

#include "gracelab/endofunction.hpp"
#include "gracelab/monoid.hpp"
#include "gracelab/permutation.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gracelab {

using BigValue = mpz_class;

constexpr int kMaxVandermondeSumN = 6;
constexpr int kMaxStrongCertificateN = 7;

struct EvaluationPoint {
    std::vector<int> d;
    LexRank sigma_rank;
    int t = 0;
};

/// prod_{i<j} (d[j]^2 - d[i]^2), the determinant of [d[i]^(2j)].
BigValue vander_det(std::span<const int> d);

/// d[i] = sigma f g^(t) sigma^{-1}(i) - i with g^(0) = id. Both inputs must be
/// tree functions of the same size (std::invalid_argument otherwise).
EvaluationPoint evaluation_points(const EndoFunction& f, const EndoFunction& g, const Permutation& sigma, int t);

/// f ∘ g^(t) for t in {0, 1}.
EndoFunction composite(const EndoFunction& f, const EndoFunction& g, int t);

/// sum over sigma of vander_det(d_sigma)^2 for h = f g^(t).
/// n <= kMaxVandermondeSumN (std::out_of_range otherwise).
BigValue vandermonde_sum(const EndoFunction& f, const EndoFunction& g, int t);

/// prod_{0<=i<j<n} (j^2 - i^2)^2
BigValue graceful_vandermonde_square(int n);

struct CenterSumsCheck {
    BigValue lhs;
    BigValue rhs;
    std::size_t grl = 0;
    std::size_t aut = 0;
    bool match = false;
};

/// vandermonde_sum(f, g, t) == |GrL(h)| |Aut h| prod (j^2 - i^2)^2, h = f g^(t).
CenterSumsCheck center_sums_check(const EndoFunction& f, const EndoFunction& g, int t);

struct CompositionCheck {
    int max_composite = 0;
    int max_left = 0;
    bool holds = false;
};

/// max distinct labels of f∘g <= max distinct labels of f, both exhaustive
/// over S_n. Tree inputs only.
CompositionCheck composition_lemma_check(const EndoFunction& f, const EndoFunction& g);

struct GracefulExpansion {
    Permutation gamma;
    /// sign[j] in {-1, 0, 1}
    std::vector<int> sign;
    Permutation sigma_gamma;

    int size() const { return gamma.size(); }
};

/// Throws std::invalid_argument unless sigma labels f gracefully.
GracefulExpansion extract_expansion(const EndoFunction& f, const Permutation& sigma);

/// Pointwise reconstruction of f from the expansion, for t = 0 and t = 1.
bool verify_expansion(const GracefulExpansion& e, const EndoFunction& f);
bool verify_expansion(const GracefulExpansion& e, const EndoFunction& f, int t);

/// |a + b w + c w^2|^2 with w a primitive cube root of unity.
BigValue eisenstein_norm_sq(const BigValue& a, const BigValue& b, const BigValue& c);

/// True when 1 <= ell < ceil((n-1)/2).
bool strong_ell_valid(int n, int ell);

/// Sum over sigma of the three-factor product (top-label avoidance, middle
/// label uniqueness, no label used three times). Throws std::out_of_range for
/// an invalid ell or n > kMaxStrongCertificateN, std::invalid_argument for a
/// non-tree f.
BigValue strong_certificate(const EndoFunction& f, int ell);

/// The summand for one relabeling; shared with tests and reports.
BigValue strong_certificate_term(std::span<const int> d, int ell);

struct StrongCompositionCheck {
    BigValue certificate_left;
    BigValue certificate_composite;
    bool holds = false;
};

/// certificate(f) == 0 implies certificate(f ∘ g) == 0.
StrongCompositionCheck strong_composition_check(const EndoFunction& f, const EndoFunction& g, int ell);

} // namespace gracelab
