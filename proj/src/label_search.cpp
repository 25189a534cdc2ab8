// Backtracking search for a relabeling of a rooted functional tree whose
// induced subtractive labels match a target multiset.
//
// Labels are realized from the largest down. The largest label L still owed
// must appear on some edge that is not yet fully labeled; every such edge
// either touches an assigned vertex (one new endpoint at value x +/- L) or
// has two unassigned endpoints (values a, a+L). Branching over exactly those
// placements keeps the search complete. Assigning a vertex labels all edges
// to its assigned neighbours at once, and a placement is rejected as soon as
// a label would exceed its target multiplicity.

#include "gracelab/endograph.hpp"
#include "gracelab/labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <set>

namespace gracelab {

namespace {

class LabelSearch {
public:
    LabelSearch(const EndoFunction& f, const std::vector<int>& target_counts, const SearchOptions& options)
        : n_(f.size()), root_(attractive_root(f)), options_(options),
          neighbours_(static_cast<std::size_t>(n_)), value_(static_cast<std::size_t>(n_), -1),
          vertex_at_(static_cast<std::size_t>(n_), -1), remaining_(target_counts)
    {
        for (int v = 0; v < n_; ++v) {
            if (v == root_) continue;
            neighbours_[static_cast<std::size_t>(v)].push_back(f(v));
            neighbours_[static_cast<std::size_t>(f(v))].push_back(v);
            edges_.emplace_back(v, f(v));
        }
        // the root loop always carries label 0
        remaining_[0] -= 1;
    }

    SearchResult run()
    {
        SearchResult result;
        if (remaining_[0] != 0) return result;
        dfs();
        result.nodes_explored = nodes_;
        if (!solutions_.empty()) {
            result.found = true;
            result.solutions = solutions_.size();
            result.witness.emplace(*solutions_.begin());
        }
        return result;
    }

private:
    bool root_allowed(int v, int x) const
    {
        return !(options_.break_complement_symmetry && v == root_ && x >= (n_ + 1) / 2);
    }

    // Assigns value x to vertex v; on success returns true and leaves the
    // new edge labels charged against remaining_.
    bool assign(int v, int x)
    {
        if (!root_allowed(v, x)) return false;
        std::size_t charged = 0;
        for (int w : neighbours_[static_cast<std::size_t>(v)]) {
            const int xw = value_[static_cast<std::size_t>(w)];
            if (xw < 0) continue;
            const int label = std::abs(x - xw);
            if (remaining_[static_cast<std::size_t>(label)] == 0) {
                refund(v, x, charged);
                return false;
            }
            --remaining_[static_cast<std::size_t>(label)];
            ++charged;
        }
        value_[static_cast<std::size_t>(v)] = x;
        vertex_at_[static_cast<std::size_t>(x)] = v;
        ++assigned_;
        return true;
    }

    void refund(int v, int x, std::size_t charged)
    {
        for (int w : neighbours_[static_cast<std::size_t>(v)]) {
            if (charged == 0) break;
            const int xw = value_[static_cast<std::size_t>(w)];
            if (xw < 0) continue;
            ++remaining_[static_cast<std::size_t>(std::abs(x - xw))];
            --charged;
        }
    }

    void unassign(int v)
    {
        const int x = value_[static_cast<std::size_t>(v)];
        value_[static_cast<std::size_t>(v)] = -1;
        vertex_at_[static_cast<std::size_t>(x)] = -1;
        --assigned_;
        for (int w : neighbours_[static_cast<std::size_t>(v)]) {
            const int xw = value_[static_cast<std::size_t>(w)];
            if (xw >= 0) ++remaining_[static_cast<std::size_t>(std::abs(x - xw))];
        }
    }

    bool done() const { return stop_; }

    void record()
    {
        solutions_.insert(Permutation(value_));
        if (!options_.exhaustive) stop_ = true;
    }

    // Tries placing vertex v at x and recursing.
    void try_one(int v, int x)
    {
        if (assign(v, x)) {
            dfs();
            unassign(v);
        }
    }

    void try_pair(int v, int xv, int w, int xw)
    {
        if (!assign(v, xv)) return;
        if (assign(w, xw)) {
            dfs();
            unassign(w);
        }
        unassign(v);
    }

    void dfs()
    {
        ++nodes_;
        if (assigned_ == n_) {
            record();
            return;
        }
        int label = n_ - 1;
        while (label > 0 && remaining_[static_cast<std::size_t>(label)] == 0) --label;
        if (label == 0) {
            // edgeless tree: only the root remains
            if (assigned_ == 0) try_one(root_, 0);
            return;
        }

        for (int a = 0; a + label < n_ && !done(); ++a) {
            const int b = a + label;
            const int u = vertex_at_[static_cast<std::size_t>(a)];
            const int w = vertex_at_[static_cast<std::size_t>(b)];
            if (u >= 0 && w >= 0) continue;
            if (u >= 0 || w >= 0) {
                const int anchor = u >= 0 ? u : w;
                const int free_value = u >= 0 ? b : a;
                for (int y : neighbours_[static_cast<std::size_t>(anchor)]) {
                    if (done()) break;
                    if (value_[static_cast<std::size_t>(y)] < 0) try_one(y, free_value);
                }
                continue;
            }
            for (const auto& [y, z] : edges_) {
                if (done()) break;
                if (value_[static_cast<std::size_t>(y)] >= 0 || value_[static_cast<std::size_t>(z)] >= 0) continue;
                try_pair(y, a, z, b);
                if (!done()) try_pair(y, b, z, a);
            }
        }
    }

    int n_;
    int root_;
    SearchOptions options_;
    std::vector<std::vector<int>> neighbours_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> value_;
    std::vector<int> vertex_at_;
    std::vector<int> remaining_;
    int assigned_ = 0;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
    std::set<Permutation> solutions_;
};

} // namespace

SearchResult realizes_sequence(const EndoFunction& f, const EdgeLabelSequence& target, const SearchOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    if (!has_attractive_fixed_point(f)) {
        throw std::invalid_argument("label search needs a rooted functional tree: " + f.to_string());
    }
    if (target.size() != f.size()) throw std::invalid_argument("target length differs from vertex count");
    std::vector<int> counts(static_cast<std::size_t>(f.size()), 0);
    for (int label : target.labels()) ++counts[static_cast<std::size_t>(label)];
    SearchResult result = LabelSearch(f, counts, options).run();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

SearchResult search_graceful(const EndoFunction& f, const SearchOptions& options)
{
    return realizes_sequence(f, star_sequence(f.size(), 0), options);
}

} // namespace gracelab
