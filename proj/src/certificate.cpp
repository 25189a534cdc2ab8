#include "gracelab/certificate.hpp"
#include "gracelab/endograph.hpp"
#include "gracelab/labeling.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gracelab {

namespace {

void require_tree(const EndoFunction& f, const char* what)
{
    if (!is_tree_function(f)) throw std::invalid_argument(std::string(what) + ": not a tree function: " + f.to_string());
}

void require_t(int t)
{
    if (t != 0 && t != 1) throw std::invalid_argument("t must be 0 or 1");
}

} // namespace

BigValue vander_det(std::span<const int> d)
{
    BigValue det = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const long dj = static_cast<long>(d[j]) * d[j];
        for (std::size_t i = 0; i < j; ++i) {
            const long factor = dj - static_cast<long>(d[i]) * d[i];
            if (factor == 0) return 0;
            det *= factor;
        }
    }
    return det;
}

EndoFunction composite(const EndoFunction& f, const EndoFunction& g, int t)
{
    require_t(t);
    if (f.size() != g.size()) throw std::invalid_argument("composite: dimension mismatch");
    return t == 0 ? f : compose(f, g);
}

EvaluationPoint evaluation_points(const EndoFunction& f, const EndoFunction& g, const Permutation& sigma, int t)
{
    require_tree(f, "evaluation_points");
    require_tree(g, "evaluation_points");
    if (sigma.size() != f.size()) throw std::invalid_argument("evaluation_points: dimension mismatch");
    return {apply_label_differences(composite(f, g, t), sigma), lex_rank(sigma), t};
}

BigValue vandermonde_sum(const EndoFunction& f, const EndoFunction& g, int t)
{
    const EndoFunction h = composite(f, g, t);
    if (h.size() > kMaxVandermondeSumN) {
        throw std::out_of_range("vandermonde_sum: n=" + std::to_string(h.size()) + " exceeds " +
                                std::to_string(kMaxVandermondeSumN));
    }
    BigValue total = 0;
    for_each_permutation(h.size(), [&](const Permutation& sigma) {
        const BigValue det = vander_det(apply_label_differences(h, sigma));
        total += det * det;
    });
    return total;
}

BigValue graceful_vandermonde_square(int n)
{
    BigValue p = 1;
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < j; ++i) p *= j * j - i * i;
    }
    return p * p;
}

CenterSumsCheck center_sums_check(const EndoFunction& f, const EndoFunction& g, int t)
{
    CenterSumsCheck check;
    const EndoFunction h = composite(f, g, t);
    check.lhs = vandermonde_sum(f, g, t);
    check.grl = enumerate_grl(h).count();
    check.aut = automorphisms(h).order();
    check.rhs = BigValue(static_cast<unsigned long>(check.grl)) * static_cast<unsigned long>(check.aut) *
                graceful_vandermonde_square(h.size());
    check.match = check.lhs == check.rhs;
    return check;
}

CompositionCheck composition_lemma_check(const EndoFunction& f, const EndoFunction& g)
{
    require_tree(f, "composition_lemma_check");
    require_tree(g, "composition_lemma_check");
    CompositionCheck check;
    check.max_composite = distinct_label_extrema(compose(f, g)).max;
    check.max_left = distinct_label_extrema(f).max;
    check.holds = check.max_composite <= check.max_left;
    return check;
}

GracefulExpansion extract_expansion(const EndoFunction& f, const Permutation& sigma)
{
    if (!is_graceful(f, sigma)) {
        throw std::invalid_argument("extract_expansion: " + sigma.to_string() + " does not label " + f.to_string() +
                                    " gracefully");
    }
    const auto d = apply_label_differences(f, sigma);
    std::vector<int> gamma(d.size());
    std::vector<int> sign(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
        gamma[j] = std::abs(d[j]);
        sign[j] = (d[j] > 0) - (d[j] < 0);
    }
    return {Permutation(std::move(gamma)), std::move(sign), sigma};
}

bool verify_expansion(const GracefulExpansion& e, const EndoFunction& f, int t)
{
    require_t(t);
    const int n = f.size();
    if (e.gamma.size() != n || e.sigma_gamma.size() != n || static_cast<int>(e.sign.size()) != n) return false;
    auto phi_t = [&](long x) { return t == 0 ? x : (n - 1) - x; };
    const Permutation inv = e.sigma_gamma.inverse();
    for (int i = 0; i < n; ++i) {
        const int j = e.sigma_gamma(i);
        const long step = (t == 0 ? 1 : -1) * e.sign[static_cast<std::size_t>(j)] * static_cast<long>(e.gamma(j));
        const long image = phi_t(phi_t(j) + step);
        if (image < 0 || image >= n) return false;
        if (inv(static_cast<int>(image)) != f(i)) return false;
    }
    return true;
}

bool verify_expansion(const GracefulExpansion& e, const EndoFunction& f)
{
    return verify_expansion(e, f, 0) && verify_expansion(e, f, 1);
}

BigValue eisenstein_norm_sq(const BigValue& a, const BigValue& b, const BigValue& c)
{
    return a * a + b * b + c * c - a * b - b * c - c * a;
}

bool strong_ell_valid(int n, int ell)
{
    // ceil((n-1)/2) = n/2 for n >= 1
    return ell >= 1 && ell < n / 2;
}

BigValue strong_certificate_term(std::span<const int> d, int ell)
{
    const long n = static_cast<long>(d.size());
    std::vector<long> sq(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) sq[i] = static_cast<long>(d[i]) * d[i];

    auto norm = [](long a, long b, long c) { return a * a + b * b + c * c - a * b - b * c - c * a; };

    BigValue term = 1;
    for (long s = 0; s < n; ++s) {
        for (long t = n - ell; t < n; ++t) {
            const long factor = sq[static_cast<std::size_t>(s)] - t * t;
            if (factor == 0) return 0;
            term *= factor * factor;
        }
    }
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < j; ++i) {
            for (long k = ell + 1; k < n - ell; ++k) {
                const long factor = norm(sq[static_cast<std::size_t>(j)], sq[static_cast<std::size_t>(i)], k * k);
                if (factor == 0) return 0;
                term *= factor;
            }
        }
    }
    for (long w = 0; w < n; ++w) {
        for (long v = 0; v < w; ++v) {
            for (long u = 0; u < v; ++u) {
                const long factor = norm(sq[static_cast<std::size_t>(w)], sq[static_cast<std::size_t>(v)],
                                         sq[static_cast<std::size_t>(u)]);
                if (factor == 0) return 0;
                term *= factor;
            }
        }
    }
    return term;
}

BigValue strong_certificate(const EndoFunction& f, int ell)
{
    require_tree(f, "strong_certificate");
    const int n = f.size();
    if (!strong_ell_valid(n, ell)) {
        throw std::out_of_range("strong_certificate: ell=" + std::to_string(ell) + " outside [1, ceil((n-1)/2)) for n=" +
                                std::to_string(n) + (n <= 3 ? " (empty range)" : ""));
    }
    if (n > kMaxStrongCertificateN) {
        throw std::out_of_range("strong_certificate: n=" + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxStrongCertificateN));
    }
    BigValue total = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        total += strong_certificate_term(apply_label_differences(f, sigma), ell);
    });
    return total;
}

StrongCompositionCheck strong_composition_check(const EndoFunction& f, const EndoFunction& g, int ell)
{
    require_tree(g, "strong_composition_check");
    StrongCompositionCheck check;
    check.certificate_left = strong_certificate(f, ell);
    check.certificate_composite = strong_certificate(compose(f, g), ell);
    check.holds = !(check.certificate_left == 0 && check.certificate_composite != 0);
    return check;
}

} // namespace gracelab
