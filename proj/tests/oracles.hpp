#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the value types, so agreement is meaningful.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline Vec compose(const Vec& f, const Vec& g)
{
    Vec out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
    return out;
}

inline Vec inverse(const Vec& p)
{
    Vec out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

// sigma f sigma^{-1} via three explicit compositions
inline Vec conjugate(const Vec& f, const Vec& sigma) { return compose(sigma, compose(f, inverse(sigma))); }

inline std::vector<Vec> all_permutations(int n)
{
    Vec p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Vec> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Vec> all_functions(int n)
{
    std::vector<Vec> out;
    Vec f(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(f);
        int k = n - 1;
        while (k >= 0 && f[static_cast<std::size_t>(k)] == n - 1) f[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++f[static_cast<std::size_t>(k)];
    }
    return out;
}

inline std::vector<Vec> all_tree_functions(int n)
{
    std::vector<Vec> out;
    for (const auto& f : all_functions(n)) {
        bool ok = f[0] == 0;
        for (int i = 1; i < n && ok; ++i) ok = f[static_cast<std::size_t>(i)] < i;
        if (ok) out.push_back(f);
    }
    return out;
}

inline Vec labels(const Vec& f, const Vec& sigma)
{
    Vec out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(std::abs(sigma[static_cast<std::size_t>(f[i])] - sigma[i]));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool graceful(const Vec& f, const Vec& sigma)
{
    const Vec l = labels(f, sigma);
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] != static_cast<int>(i)) return false;
    }
    return true;
}

inline std::uint64_t graceful_sigma_count(const Vec& f)
{
    std::uint64_t c = 0;
    for (const auto& s : all_permutations(static_cast<int>(f.size()))) c += graceful(f, s) ? 1 : 0;
    return c;
}

inline std::size_t grl_count(const Vec& f)
{
    std::set<Vec> graphs;
    for (const auto& s : all_permutations(static_cast<int>(f.size()))) {
        if (graceful(f, s)) graphs.insert(conjugate(f, s));
    }
    return graphs.size();
}

inline std::size_t aut_order(const Vec& f)
{
    std::size_t c = 0;
    for (const auto& s : all_permutations(static_cast<int>(f.size()))) c += conjugate(f, s) == f ? 1 : 0;
    return c;
}

// position of sigma in the lexicographic listing of S_n
inline std::uint64_t lex_position(const Vec& sigma)
{
    std::uint64_t pos = 0;
    for (const auto& s : all_permutations(static_cast<int>(sigma.size()))) {
        if (s == sigma) return pos;
        ++pos;
    }
    return pos;
}

inline int distinct_labels(const Vec& f, const Vec& sigma)
{
    const Vec l = labels(f, sigma);
    return static_cast<int>(std::set<int>(l.begin(), l.end()).size());
}

inline std::pair<int, int> label_extrema(const Vec& f)
{
    int lo = static_cast<int>(f.size()) + 1, hi = 0;
    for (const auto& s : all_permutations(static_cast<int>(f.size()))) {
        const int d = distinct_labels(f, s);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

// weakly connected components by repeated relaxation
inline int components(const Vec& f)
{
    Vec comp(f.size());
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto j = static_cast<std::size_t>(f[i]);
            const int m = std::min(comp[i], comp[j]);
            if (comp[i] != m || comp[j] != m) {
                comp[i] = comp[j] = m;
                changed = true;
            }
        }
    }
    return static_cast<int>(std::set<int>(comp.begin(), comp.end()).size());
}

// det [x_i^j] by rational Gaussian elimination, x_i = d_i^2
inline mpz_class vandermonde_by_elimination(const Vec& d)
{
    const std::size_t n = d.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class x = d[i] * d[i];
        mpq_class p = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = p;
            p *= x;
        }
    }
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const mpq_class factor = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
        }
    }
    return mpz_class(det);
}

// |a + b w + c w^2|^2 with w a primitive cube root of unity, in floating point
inline long double eisenstein_norm_float(long double a, long double b, long double c)
{
    const std::complex<long double> w(-0.5L, std::sqrt(3.0L) / 2.0L);
    return std::norm(a + b * w + c * w * w);
}

// Floating evaluation of the strong certificate sum, straight from the
// displayed product, with d_sigma(i) = sigma f sigma^{-1}(i) - i.
inline long double strong_certificate_float(const Vec& f, int ell)
{
    const int n = static_cast<int>(f.size());
    long double total = 0;
    for (const auto& s : all_permutations(n)) {
        const Vec h = conjugate(f, s);
        std::vector<long double> sq(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const long double d = h[static_cast<std::size_t>(i)] - i;
            sq[static_cast<std::size_t>(i)] = d * d;
        }
        long double term = 1;
        for (int a = 0; a < n; ++a) {
            for (int t = n - ell; t < n; ++t) {
                const long double x = sq[static_cast<std::size_t>(a)] - static_cast<long double>(t) * t;
                term *= x * x;
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = ell + 1; k < n - ell; ++k) {
                    term *= eisenstein_norm_float(sq[static_cast<std::size_t>(j)], sq[static_cast<std::size_t>(i)],
                                                  static_cast<long double>(k) * k);
                }
            }
        }
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                for (int w = v + 1; w < n; ++w) {
                    term *= eisenstein_norm_float(sq[static_cast<std::size_t>(w)], sq[static_cast<std::size_t>(v)],
                                                  sq[static_cast<std::size_t>(u)]);
                }
            }
        }
        total += term;
    }
    return total;
}

} // namespace oracle
