#include "gracelab/monoid.hpp"
#include "gracelab/endograph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace gracelab {

std::uint64_t factorial(int n)
{
    if (n < 0 || n > 20) throw std::out_of_range("factorial argument outside [0, 20]");
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
    return r;
}

LexRank lex_rank(const Permutation& sigma)
{
    const int n = sigma.size();
    std::uint64_t rank = 0;
    for (int k = 0; k < n; ++k) {
        std::uint64_t smaller_after = 0;
        for (int i = k + 1; i < n; ++i) {
            if (sigma(i) < sigma(k)) ++smaller_after;
        }
        rank += smaller_after * factorial(n - 1 - k);
    }
    return {rank};
}

Permutation lex_unrank(LexRank rank, int n)
{
    if (n < 1 || n > 20) throw std::out_of_range("lex_unrank: n outside [1, 20]");
    if (rank.value >= factorial(n)) {
        throw std::out_of_range("lex_unrank: rank " + std::to_string(rank.value) + " >= " + std::to_string(n) + "!");
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> image;
    image.reserve(pool.size());
    std::uint64_t r = rank.value;
    for (int k = 0; k < n; ++k) {
        const std::uint64_t block = factorial(n - 1 - k);
        const auto pick = static_cast<std::ptrdiff_t>(r / block);
        r %= block;
        image.push_back(pool[static_cast<std::size_t>(pick)]);
        pool.erase(pool.begin() + pick);
    }
    return Permutation(std::move(image));
}

EndoFunction conjugate(const EndoFunction& f, const Permutation& sigma)
{
    if (f.size() != sigma.size()) throw std::invalid_argument("conjugate: dimension mismatch");
    std::vector<int> out(static_cast<std::size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(sigma(i))] = sigma(f(i));
    return EndoFunction(std::move(out));
}

std::uint64_t tree_function_count(int n) { return factorial(n - 1); }
std::uint64_t forest_function_count(int n) { return factorial(n); }

namespace {

void require_positive(int n, const char* what)
{
    if (n < 1) throw std::out_of_range(std::string(what) + ": n must be positive");
}

// Decodes `index` in the mixed radix where vertex i has radix(i) choices,
// vertex n-1 least significant.
template <typename Radix>
std::vector<int> mixed_radix(int n, std::uint64_t index, Radix radix)
{
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        const auto r = static_cast<std::uint64_t>(radix(i));
        v[static_cast<std::size_t>(i)] = static_cast<int>(index % r);
        index /= r;
    }
    return v;
}

} // namespace

EndoFunction tree_function_at(int n, std::uint64_t index)
{
    require_positive(n, "tree_function_at");
    if (index >= tree_function_count(n)) throw std::out_of_range("tree_function_at: index out of range");
    return EndoFunction(mixed_radix(n, index, [](int i) { return i == 0 ? 1 : i; }));
}

EndoFunction forest_function_at(int n, std::uint64_t index)
{
    require_positive(n, "forest_function_at");
    if (index >= forest_function_count(n)) throw std::out_of_range("forest_function_at: index out of range");
    return EndoFunction(mixed_radix(n, index, [](int i) { return i + 1; }));
}

EndoFunction function_at(int n, std::uint64_t index)
{
    require_positive(n, "function_at");
    return EndoFunction(mixed_radix(n, index, [n](int) { return n; }));
}

std::vector<EndoFunction> enumerate_tree_functions(int n)
{
    std::vector<EndoFunction> out;
    const auto count = tree_function_count(n);
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(tree_function_at(n, k));
    return out;
}

std::vector<EndoFunction> enumerate_forest_functions(int n)
{
    std::vector<EndoFunction> out;
    const auto count = forest_function_count(n);
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(forest_function_at(n, k));
    return out;
}

EndoFunction compose_all(const std::vector<EndoFunction>& factors)
{
    if (factors.empty()) throw std::invalid_argument("compose_all: no factors");
    EndoFunction acc = factors.back();
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

Family parse_family(const std::string& name)
{
    if (name == "forest-monoid") return Family::forest_monoid;
    if (name == "tree-semigroup") return Family::tree_semigroup;
    if (name == "conjugated-forest") return Family::conjugated_forest;
    if (name == "no-odd-permutations") return Family::no_odd_permutations;
    throw std::invalid_argument("unknown family descriptor: " + name);
}

std::string family_name(Family family)
{
    switch (family) {
    case Family::forest_monoid: return "forest-monoid";
    case Family::tree_semigroup: return "tree-semigroup";
    case Family::conjugated_forest: return "conjugated-forest";
    case Family::no_odd_permutations: return "no-odd-permutations";
    }
    return "unknown";
}

int closure_cap(Family family)
{
    switch (family) {
    case Family::forest_monoid: return 6;
    case Family::tree_semigroup: return 7;
    case Family::conjugated_forest: return 6;
    case Family::no_odd_permutations: return 5;
    }
    return 0;
}

namespace {

bool is_odd_permutation(const EndoFunction& h)
{
    std::vector<bool> seen(static_cast<std::size_t>(h.size()), false);
    for (int v : h.values()) {
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return !Permutation(std::vector<int>(h.values().begin(), h.values().end())).is_even();
}

ClosureResult check_closed(const std::vector<EndoFunction>& members, bool requires_identity)
{
    ClosureResult result;
    result.requires_identity = requires_identity;
    result.member_count = members.size();
    std::unordered_set<std::uint64_t> codes;
    codes.reserve(members.size() * 2);
    for (const auto& m : members) codes.insert(m.code());
    if (!members.empty()) result.contains_identity = codes.count(EndoFunction::identity(members.front().size()).code()) > 0;
    for (const auto& a : members) {
        for (const auto& b : members) {
            if (!codes.count(compose(a, b).code())) {
                result.closed = false;
                result.witness.emplace(a, b);
                return result;
            }
        }
    }
    return result;
}

std::vector<EndoFunction> conjugate_all(const std::vector<EndoFunction>& base, const Permutation& sigma)
{
    std::vector<EndoFunction> out;
    out.reserve(base.size());
    for (const auto& h : base) out.push_back(conjugate(h, sigma));
    return out;
}

} // namespace

ClosureResult verify_closure(Family family, int n, const std::optional<Permutation>& sigma)
{
    if (n < 1 || n > closure_cap(family)) {
        throw std::out_of_range("verify_closure: n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(closure_cap(family)) + "] for " + family_name(family));
    }
    switch (family) {
    case Family::forest_monoid:
        return check_closed(enumerate_forest_functions(n), true);
    case Family::tree_semigroup:
        return check_closed(enumerate_tree_functions(n), false);
    case Family::conjugated_forest: {
        if (!sigma) throw std::invalid_argument("conjugated-forest needs a permutation");
        if (sigma->size() != n) throw std::invalid_argument("conjugated-forest: dimension mismatch");
        return check_closed(conjugate_all(enumerate_forest_functions(n), *sigma), true);
    }
    case Family::no_odd_permutations: {
        std::vector<EndoFunction> members;
        std::uint64_t total = 1;
        for (int k = 0; k < n; ++k) total *= static_cast<std::uint64_t>(n);
        for (std::uint64_t c = 0; c < total; ++c) {
            auto h = function_at(n, c);
            if (!is_odd_permutation(h)) members.push_back(std::move(h));
        }
        return check_closed(members, true);
    }
    }
    throw std::invalid_argument("unknown family");
}

namespace {

std::vector<EndoFunction> tree_semigroup_with_identity_base(int n)
{
    auto members = enumerate_tree_functions(n);
    members.push_back(EndoFunction::identity(n));
    return members;
}

// Forest monoid on the first n-1 vertices with n-1 kept as an isolated fixed
// point, plus the constant map onto n-1.
std::vector<EndoFunction> pinned_forest_with_constant_base(int n)
{
    std::vector<EndoFunction> base;
    for (const auto& h : enumerate_forest_functions(n)) {
        if (h(n - 1) == n - 1) base.push_back(h);
    }
    base.push_back(EndoFunction::constant(n, n - 1));
    return base;
}

} // namespace

std::vector<EndoFunction> tree_semigroup_with_identity(const Permutation& sigma)
{
    return conjugate_all(tree_semigroup_with_identity_base(sigma.size()), sigma);
}

std::vector<EndoFunction> pinned_forest_with_constant(const Permutation& sigma)
{
    return conjugate_all(pinned_forest_with_constant_base(sigma.size()), sigma);
}

std::vector<EndoFunction> stabilizer_with_constant(int n, int j)
{
    std::vector<EndoFunction> members;
    for_each_permutation(n, [&](const Permutation& p) {
        if (p(j) == j) members.push_back(p.as_function());
    });
    members.push_back(EndoFunction::constant(n, j));
    return members;
}

namespace {

// pi ∘ F ∘ pi^{-1} != F for every non-identity pi, checked with the path
// function (i -> i-1) as the first candidate witness.
bool conjugates_pairwise_distinct(int n)
{
    const auto forests = enumerate_forest_functions(n);
    std::vector<int> path(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = i > 0 ? i - 1 : 0;
    const EndoFunction path_fn(path);
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& pi) {
        if (pi.is_identity()) return true;
        if (!is_forest_function(conjugate(path_fn, pi))) return true;
        for (const auto& h : forests) {
            if (!is_forest_function(conjugate(h, pi))) return true;
        }
        ok = false;
        return false;
    });
    return ok;
}

std::vector<std::uint64_t> sorted_codes(const std::vector<EndoFunction>& members)
{
    std::vector<std::uint64_t> codes;
    codes.reserve(members.size());
    for (const auto& m : members) codes.push_back(m.code());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

} // namespace

MonoidCensus census(int n)
{
    if (n < 2 || n > 7) throw std::out_of_range("census: n must lie in [2, 7]");
    MonoidCensus c;
    c.n = n;
    const auto forests = enumerate_forest_functions(n);
    const auto trees = enumerate_tree_functions(n);
    c.forest_monoid_size = forests.size();
    c.tree_semigroup_size = trees.size();
    c.forest_monoid_closed = check_closed(forests, true).passed();
    c.tree_semigroup_closed = check_closed(trees, false).passed();

    std::uint64_t space = 1;
    for (int k = 0; k < n; ++k) space *= static_cast<std::uint64_t>(n);
    std::vector<bool> in_union(space, false);
    std::vector<int> buf(static_cast<std::size_t>(n));
    for_each_permutation(n, [&](const Permutation& sigma) {
        in_union[sigma.as_function().code()] = true;
        for (const auto& h : forests) {
            for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(sigma(i))] = sigma(h(i));
            std::uint64_t code = 0;
            for (int v : buf) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
            in_union[code] = true;
        }
    });
    c.union_count = static_cast<std::uint64_t>(std::count(in_union.begin(), in_union.end(), true));
    std::uint64_t cayley = 1;
    for (int k = 0; k < n - 1; ++k) cayley *= static_cast<std::uint64_t>(n + 1);
    c.cayley_formula = cayley + factorial(n) - 1;
    c.conjugated_forests_distinct = conjugates_pairwise_distinct(n);

    if (n > 3) {
        const bool exhaustive = n <= 6;
        c.lower_bound_closure_exhaustive = exhaustive;
        c.lower_bound_family_size = factorial(n - 1) + 1;
        std::set<std::vector<std::uint64_t>> distinct;
        bool sizes_ok = true;
        bool closed = true;
        auto take = [&](const std::vector<EndoFunction>& family, bool check) {
            auto codes = sorted_codes(family);
            if (codes.size() != c.lower_bound_family_size) sizes_ok = false;
            distinct.insert(std::move(codes));
            ++c.lower_bound_family_count;
            if (check && closed) closed = check_closed(family, true).passed();
        };
        const auto tree_base = tree_semigroup_with_identity_base(n);
        const auto pinned_base = pinned_forest_with_constant_base(n);
        for_each_permutation(n, [&](const Permutation& sigma) {
            const bool check = exhaustive || sigma.is_identity();
            take(conjugate_all(tree_base, sigma), check);
            take(conjugate_all(pinned_base, sigma), check);
        });
        for (int j = 0; j < n; ++j) take(stabilizer_with_constant(n, j), exhaustive || j == 0);
        c.lower_bound_families_distinct = sizes_ok && distinct.size() == c.lower_bound_family_count;
        c.lower_bound_families_closed = closed;
    }
    return c;
}

} // namespace gracelab
