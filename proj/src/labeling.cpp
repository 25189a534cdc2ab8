#include "gracelab/labeling.hpp"
#include "gracelab/endograph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gracelab {

EdgeLabelSequence::EdgeLabelSequence(std::vector<int> labels) : labels_(std::move(labels))
{
    const int n = size();
    for (int label : labels_) {
        if (label < 0 || label >= n) {
            throw std::invalid_argument("edge label " + std::to_string(label) + " outside [0, " + std::to_string(n) + ")");
        }
    }
    std::sort(labels_.begin(), labels_.end());
}

bool EdgeLabelSequence::is_graceful() const
{
    for (int i = 0; i < size(); ++i) {
        if (labels_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

EdgeLabelSequence edge_labels(const EndoFunction& f, const Permutation& sigma)
{
    if (f.size() != sigma.size()) throw std::invalid_argument("edge_labels: dimension mismatch");
    std::vector<int> labels(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) labels[static_cast<std::size_t>(i)] = std::abs(sigma(f(i)) - sigma(i));
    return EdgeLabelSequence(std::move(labels));
}

bool is_graceful(const EndoFunction& f, const Permutation& sigma) { return edge_labels(f, sigma).is_graceful(); }

EdgeLabelSequence star_sequence(int n, int j)
{
    if (n < 1 || j < 0 || j > n / 2) {
        throw std::out_of_range("star_sequence: need 0 <= j <= floor(n/2), got n=" + std::to_string(n) +
                                " j=" + std::to_string(j));
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::abs(i - j);
    return EdgeLabelSequence(std::move(labels));
}

namespace {

void require_brute_force_size(const EndoFunction& f, const char* what)
{
    if (f.size() > kMaxBruteForceN) {
        throw std::out_of_range(std::string(what) + ": n=" + std::to_string(f.size()) + " exceeds " +
                                std::to_string(kMaxBruteForceN));
    }
}

} // namespace

AutomorphismGroup automorphisms(const EndoFunction& f)
{
    require_brute_force_size(f, "automorphisms");
    AutomorphismGroup group;
    for_each_permutation(f.size(), [&](const Permutation& sigma) {
        if (conjugate(f, sigma) == f) group.elements.push_back(sigma);
    });
    return group;
}

GrlResult enumerate_grl(const EndoFunction& f)
{
    require_brute_force_size(f, "enumerate_grl");
    std::map<EndoFunction, Permutation> first_sigma;
    GrlResult result;
    const int n = f.size();
    std::vector<bool> seen(static_cast<std::size_t>(n));
    for_each_permutation(n, [&](const Permutation& sigma) {
        EndoFunction h = conjugate(f, sigma);
        std::fill(seen.begin(), seen.end(), false);
        for (int j = 0; j < n; ++j) {
            const int label = std::abs(h(j) - j);
            if (seen[static_cast<std::size_t>(label)]) return;
            seen[static_cast<std::size_t>(label)] = true;
        }
        ++result.graceful_sigma_count;
        first_sigma.try_emplace(std::move(h), sigma);
    });
    for (auto& [graph, sigma] : first_sigma) {
        result.graphs.push_back(graph);
        result.representatives.push_back(sigma);
    }
    return result;
}

bool leaves_disjoint_paths(const EndoFunction& f, const std::vector<bool>& deleted)
{
    const int n = f.size();
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n; ++i) {
        if (deleted[static_cast<std::size_t>(i)]) continue;
        const int j = f(i);
        if (i == j) return false;
        if (++degree[static_cast<std::size_t>(i)] > 2 || ++degree[static_cast<std::size_t>(j)] > 2) return false;
        const int ri = find(i);
        const int rj = find(j);
        if (ri == rj) return false;
        parent[static_cast<std::size_t>(ri)] = rj;
    }
    return true;
}

RhoStat rho(const EndoFunction& f)
{
    const int n = f.size();
    if (n > kMaxRhoN) throw std::out_of_range("rho: n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxRhoN));

    // Greedy pass: keep each edge in vertex order while the kept set stays
    // valid. Its deletion count bounds the exact search below.
    std::vector<bool> greedy(static_cast<std::size_t>(n), true);
    for (int i = 0; i < n; ++i) {
        greedy[static_cast<std::size_t>(i)] = false;
        if (!leaves_disjoint_paths(f, greedy)) greedy[static_cast<std::size_t>(i)] = true;
    }
    const int upper = static_cast<int>(std::count(greedy.begin(), greedy.end(), true));

    std::vector<bool> deleted(static_cast<std::size_t>(n));
    for (int k = 0; k <= upper; ++k) {
        // lexicographic k-subsets of Z_n
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::fill(deleted.begin(), deleted.end(), false);
            for (int e : pick) deleted[static_cast<std::size_t>(e)] = true;
            if (leaves_disjoint_paths(f, deleted)) return {k, pick};
            int pos = k - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < k; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    throw std::logic_error("rho: greedy bound not attained");
}

int distinct_label_count(const EndoFunction& f, const Permutation& sigma)
{
    if (f.size() != sigma.size()) throw std::invalid_argument("distinct_label_count: dimension mismatch");
    std::uint64_t mask = 0;
    for (int i = 0; i < f.size(); ++i) mask |= std::uint64_t{1} << std::abs(sigma(f(i)) - sigma(i));
    return std::popcount(mask);
}

LabelExtrema distinct_label_extrema(const EndoFunction& f, const ExtremaOptions& options)
{
    const int n = f.size();
    if (!options.sample && n > kMaxExactExtremaN) {
        throw std::out_of_range("distinct_label_extrema: n=" + std::to_string(n) +
                                " needs sampling mode (exhaustive cap " + std::to_string(kMaxExactExtremaN) + ")");
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    LabelExtrema out{n + 1, 0, !options.sample, Permutation(image), Permutation(image)};

    auto visit = [&]() {
        std::uint64_t mask = 0;
        for (int i = 0; i < n; ++i) {
            mask |= std::uint64_t{1} << std::abs(image[static_cast<std::size_t>(f(i))] - image[static_cast<std::size_t>(i)]);
        }
        const int count = std::popcount(mask);
        if (count < out.min) {
            out.min = count;
            out.argmin = Permutation(image);
        }
        if (count > out.max) {
            out.max = count;
            out.argmax = Permutation(image);
        }
    };

    if (options.sample) {
        std::mt19937_64 rng(options.seed);
        visit();
        for (std::uint64_t s = 1; s < options.samples; ++s) {
            std::shuffle(image.begin(), image.end(), rng);
            visit();
        }
        return out;
    }
    do {
        visit();
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

} // namespace gracelab
