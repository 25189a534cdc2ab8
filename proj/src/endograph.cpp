#include "gracelab/endograph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gracelab {

namespace {

void require_same_size(int a, int b, const char* what)
{
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

} // namespace

EndoFunction compose(const EndoFunction& f, const EndoFunction& g)
{
    require_same_size(f.size(), g.size(), "compose");
    std::vector<int> out(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(i)] = f(g(i));
    return EndoFunction(std::move(out));
}

EndoFunction iterate(const EndoFunction& f, std::uint64_t k)
{
    const auto n = static_cast<std::uint64_t>(f.size());
    if (k <= n) {
        EndoFunction result = EndoFunction::identity(f.size());
        for (std::uint64_t step = 0; step < k; ++step) result = compose(f, result);
        return result;
    }
    EndoFunction result = EndoFunction::identity(f.size());
    EndoFunction base = f;
    while (k) {
        if (k & 1u) result = compose(base, result);
        base = compose(base, base);
        k >>= 1u;
    }
    return result;
}

FunctionalGraphSummary summarize(const EndoFunction& f)
{
    const int n = f.size();
    // 0 = unvisited, 1 = on the current walk, 2 = finished
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    FunctionalGraphSummary s;
    for (int start = 0; start < n; ++start) {
        if (state[static_cast<std::size_t>(start)]) continue;
        int v = start;
        while (state[static_cast<std::size_t>(v)] == 0) {
            state[static_cast<std::size_t>(v)] = 1;
            v = f(v);
        }
        if (state[static_cast<std::size_t>(v)] == 1) {
            int len = 1;
            for (int w = f(v); w != v; w = f(w)) ++len;
            s.cycle_lengths.push_back(len);
            if (len == 1) ++s.loops;
        }
        for (int w = start; state[static_cast<std::size_t>(w)] == 1; w = f(w)) state[static_cast<std::size_t>(w)] = 2;
    }
    std::sort(s.cycle_lengths.begin(), s.cycle_lengths.end());
    s.component_count = static_cast<int>(s.cycle_lengths.size());
    s.order_lcm = 1;
    for (int len : s.cycle_lengths) s.order_lcm = std::lcm(s.order_lcm, static_cast<std::uint64_t>(len));
    return s;
}

bool is_tree_function(const EndoFunction& f)
{
    if (f(0) != 0) return false;
    for (int i = 1; i < f.size(); ++i) {
        if (f(i) >= i) return false;
    }
    return true;
}

bool is_forest_function(const EndoFunction& f)
{
    for (int i = 0; i < f.size(); ++i) {
        if (f(i) > i) return false;
    }
    return true;
}

int attractive_root(const EndoFunction& f)
{
    const EndoFunction collapsed = iterate(f, static_cast<std::uint64_t>(f.size() - 1));
    const int root = collapsed(0);
    for (int i = 1; i < f.size(); ++i) {
        if (collapsed(i) != root) return -1;
    }
    return root;
}

bool has_attractive_fixed_point(const EndoFunction& f) { return attractive_root(f) >= 0; }

SignedIncidenceMatrix::SignedIncidenceMatrix(const EndoFunction& f)
    : n_(f.size()), entries_(static_cast<std::size_t>(n_ * n_), 0)
{
    for (int i = 0; i < n_; ++i) {
        if (f(i) == i) continue;
        entries_[static_cast<std::size_t>(i * n_ + f(i))] = 1;
        entries_[static_cast<std::size_t>(i * n_ + i)] = -1;
    }
}

std::vector<std::int64_t> SignedIncidenceMatrix::apply(const std::vector<std::int64_t>& x) const
{
    require_same_size(n_, static_cast<int>(x.size()), "signed incidence apply");
    std::vector<std::int64_t> y(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) y[static_cast<std::size_t>(i)] += at(i, j) * x[static_cast<std::size_t>(j)];
    }
    return y;
}

std::vector<int> SignedIncidenceMatrix::row_sums() const
{
    std::vector<int> sums(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) sums[static_cast<std::size_t>(i)] += at(i, j);
    }
    return sums;
}

int SignedIncidenceMatrix::rank() const
{
    // Bareiss elimination; entries stay integral and, for 0/±1 input at
    // n <= 12, well inside 64 bits.
    std::vector<std::int64_t> m(entries_.begin(), entries_.end());
    auto cell = [&](int r, int c) -> std::int64_t& { return m[static_cast<std::size_t>(r * n_ + c)]; };
    int rank = 0;
    std::int64_t prev = 1;
    for (int col = 0; col < n_ && rank < n_; ++col) {
        int pivot = -1;
        for (int r = rank; r < n_; ++r) {
            if (cell(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < n_; ++c) std::swap(cell(pivot, c), cell(rank, c));
        }
        for (int r = rank + 1; r < n_; ++r) {
            for (int c = col + 1; c < n_; ++c) {
                cell(r, c) = (cell(rank, col) * cell(r, c) - cell(r, col) * cell(rank, c)) / prev;
            }
            cell(r, col) = 0;
        }
        prev = cell(rank, col);
        ++rank;
    }
    return rank;
}

SignedIncidenceMatrix signed_incidence(const EndoFunction& f) { return SignedIncidenceMatrix(f); }

std::vector<int> apply_label_differences(const EndoFunction& f, const Permutation& sigma)
{
    require_same_size(f.size(), sigma.size(), "apply_label_differences");
    const int n = f.size();
    std::vector<int> d(static_cast<std::size_t>(n));
    // index by the relabeled vertex j = sigma(i)
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(sigma(i))] = sigma(f(i)) - sigma(i);
    return d;
}

std::string to_dot(const EndoFunction& f, const std::string& name)
{
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int i = 0; i < f.size(); ++i) os << "  " << i << ";\n";
    for (int i = 0; i < f.size(); ++i) os << "  " << i << " -> " << f(i) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace gracelab
