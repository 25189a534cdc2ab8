#include "gracelab/verify.hpp"
#include "gracelab/certificate.hpp"
#include "gracelab/endograph.hpp"
#include "gracelab/labeling.hpp"
#include "gracelab/monoid.hpp"
#include "gracelab/parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace gracelab {

Suite parse_suite(const std::string& name)
{
    for (Suite s : every_suite()) {
        if (suite_name(s) == name) return s;
    }
    if (name == "all") return Suite::all;
    throw std::invalid_argument("unknown suite: " + name);
}

std::string suite_name(Suite suite)
{
    switch (suite) {
    case Suite::glc: return "glc";
    case Suite::strong_glc: return "strong-glc";
    case Suite::composition: return "composition";
    case Suite::strong_composition: return "strong-composition";
    case Suite::center_sums: return "center-sums";
    case Suite::monoid: return "monoid";
    case Suite::bounds: return "bounds";
    case Suite::component_identity: return "theorem6";
    case Suite::lex: return "lex";
    case Suite::expansion: return "expansion";
    case Suite::all: return "all";
    }
    return "unknown";
}

SuiteLimits suite_limits(Suite suite)
{
    switch (suite) {
    case Suite::glc: return {1, 8, 10};
    case Suite::strong_glc: return {2, 8, 9};
    case Suite::composition: return {1, 5, 6};
    case Suite::strong_composition: return {4, 5, 6};
    case Suite::center_sums: return {1, 5, kMaxVandermondeSumN};
    case Suite::monoid: return {2, 5, 7};
    case Suite::bounds: return {1, 5, 6};
    case Suite::component_identity: return {1, 5, 6};
    case Suite::lex: return {1, 7, 8};
    case Suite::expansion: return {1, 6, 6};
    case Suite::all: return {1, 0, 0};
    }
    return {0, 0, 0};
}

std::vector<Suite> every_suite()
{
    return {Suite::glc,      Suite::strong_glc, Suite::composition, Suite::strong_composition,
            Suite::center_sums, Suite::monoid, Suite::bounds,     Suite::component_identity,
            Suite::lex,      Suite::expansion};
}

namespace {

struct Partial {
    std::uint64_t instances = 0;
    std::uint64_t failure_count = 0;
    std::uint64_t nodes = 0;
    std::vector<json> failures;
    std::vector<json> witnesses;
};

class Tally {
public:
    explicit Tally(std::size_t cap) : cap_(cap) {}

    void pass() { ++part_.instances; }
    void check(bool ok, const std::function<json()>& record)
    {
        ++part_.instances;
        if (ok) return;
        ++part_.failure_count;
        if (part_.failures.size() < cap_) part_.failures.push_back(record());
    }
    Partial& part() { return part_; }
    Partial take() { return std::move(part_); }

private:
    std::size_t cap_;
    Partial part_;
};

auto merger(std::size_t cap)
{
    return [cap](Partial& acc, Partial&& p) {
        acc.instances += p.instances;
        acc.failure_count += p.failure_count;
        acc.nodes += p.nodes;
        for (auto& f : p.failures) {
            if (acc.failures.size() < cap) acc.failures.push_back(std::move(f));
        }
        for (auto& w : p.witnesses) acc.witnesses.push_back(std::move(w));
    };
}

std::uint64_t power(int base, int exp)
{
    std::uint64_t r = 1;
    for (int k = 0; k < exp; ++k) r *= static_cast<std::uint64_t>(base);
    return r;
}

template <typename Body>
Partial sweep(std::uint64_t count, const VerifyOptions& opt, Body body)
{
    return parallel_reduce<Partial>(
        count, opt.jobs,
        [&](std::uint64_t begin, std::uint64_t end) {
            Tally tally(opt.failure_cap);
            body(begin, end, tally);
            return tally.take();
        },
        merger(opt.failure_cap));
}

json claim(const char* text, json data)
{
    data["claim"] = text;
    return data;
}

Partial glc_at(int n, const VerifyOptions& opt, json& detail)
{
    auto p = sweep(tree_function_count(n), opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        for (auto k = b; k < e; ++k) {
            const auto f = tree_function_at(n, k);
            const auto r = search_graceful(f);
            tally.part().nodes += r.nodes_explored;
            const bool ok = r.found && is_graceful(f, *r.witness);
            tally.check(ok, [&] { return claim("tree admits a graceful labeling", witness_record(f, r)); });
            if (opt.witnesses) tally.part().witnesses.push_back(witness_record(f, r));
        }
    });
    detail["nodes_explored"] = p.nodes;
    return p;
}

Partial strong_glc_at(int n, const VerifyOptions& opt, json& detail)
{
    auto p = sweep(tree_function_count(n), opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        for (auto k = b; k < e; ++k) {
            const auto f = tree_function_at(n, k);
            for (int j = 1; j <= n / 2; ++j) {
                const auto target = star_sequence(n, j);
                const auto r = realizes_sequence(f, target);
                tally.part().nodes += r.nodes_explored;
                const bool ok = r.found && edge_labels(f, *r.witness) == target;
                tally.check(ok, [&] {
                    auto rec = witness_record(f, r);
                    rec["j"] = j;
                    rec["target"] = values_json(target);
                    return claim("tree realizes the star label sequence", rec);
                });
                if (opt.witnesses) {
                    auto rec = witness_record(f, r);
                    rec["j"] = j;
                    tally.part().witnesses.push_back(std::move(rec));
                }
            }
        }
    });
    detail["nodes_explored"] = p.nodes;
    return p;
}

Partial composition_at(int n, const VerifyOptions& opt, json&)
{
    const auto count = tree_function_count(n);
    return sweep(count, opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        std::unordered_map<std::uint64_t, int> max_cache;
        auto max_of = [&](const EndoFunction& h) {
            auto it = max_cache.find(h.code());
            if (it == max_cache.end()) it = max_cache.emplace(h.code(), distinct_label_extrema(h).max).first;
            return it->second;
        };
        for (auto k = b; k < e; ++k) {
            const auto f = tree_function_at(n, k);
            const int max_f = max_of(f);
            for (std::uint64_t m = 0; m < count; ++m) {
                const auto g = tree_function_at(n, m);
                const auto fg = compose(f, g);
                const int max_fg = max_of(fg);
                tally.check(max_fg <= max_f, [&] {
                    return claim("max distinct labels of f∘g <= max distinct labels of f",
                                 {{"f", values_json(f)}, {"g", values_json(g)}, {"fg", values_json(fg)},
                                  {"max_fg", max_fg}, {"max_f", max_f}});
                });
            }
        }
    });
}

Partial strong_composition_at(int n, const VerifyOptions& opt, json& detail)
{
    if (!strong_ell_valid(n, opt.ell)) {
        throw std::out_of_range("strong-composition: ell=" + std::to_string(opt.ell) +
                                " outside [1, ceil((n-1)/2)) for n=" + std::to_string(n));
    }
    detail["ell"] = opt.ell;
    const auto count = tree_function_count(n);
    auto p = sweep(count, opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        std::unordered_map<std::uint64_t, BigValue> cache;
        auto cert = [&](const EndoFunction& h) -> const BigValue& {
            auto it = cache.find(h.code());
            if (it == cache.end()) it = cache.emplace(h.code(), strong_certificate(h, opt.ell)).first;
            return it->second;
        };
        for (auto k = b; k < e; ++k) {
            const auto f = tree_function_at(n, k);
            const BigValue cf = cert(f);
            if (cf == 0) tally.part().nodes += 1;
            for (std::uint64_t m = 0; m < count; ++m) {
                const auto g = tree_function_at(n, m);
                const auto fg = compose(f, g);
                const BigValue& cfg = cert(fg);
                tally.check(!(cf == 0 && cfg != 0), [&] {
                    return claim("vanishing certificate of f implies vanishing certificate of f∘g",
                                 {{"f", values_json(f)}, {"g", values_json(g)}, {"fg", values_json(fg)},
                                  {"ell", opt.ell}, {"certificate_f", big_string(cf)},
                                  {"certificate_fg", big_string(cfg)}});
                });
            }
        }
    });
    // trees whose own certificate vanishes (the non-vacuous premises)
    detail["vanishing_left"] = p.nodes;
    return p;
}

Partial center_sums_at(int n, const VerifyOptions& opt, json&)
{
    const auto count = tree_function_count(n);
    return sweep(count, opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        std::unordered_map<std::uint64_t, CenterSumsCheck> cache;
        for (auto k = b; k < e; ++k) {
            const auto f = tree_function_at(n, k);
            for (std::uint64_t m = 0; m < count; ++m) {
                const auto g = tree_function_at(n, m);
                for (int t = 0; t <= 1; ++t) {
                    const auto h = composite(f, g, t);
                    auto it = cache.find(h.code());
                    if (it == cache.end()) it = cache.emplace(h.code(), center_sums_check(f, g, t)).first;
                    const auto& c = it->second;
                    tally.check(c.match, [&] {
                        return claim("vandermonde sum equals |GrL| |Aut| prod (j^2-i^2)^2",
                                     center_sums_report(f, g, t, c));
                    });
                }
            }
        }
    });
}

Partial monoid_at(int n, const VerifyOptions& opt, json& detail)
{
    Tally tally(opt.failure_cap);
    const auto c = census(n);
    detail["census"] = census_json(c);
    auto expect = [&](bool ok, const char* what) { tally.check(ok, [&] { return claim(what, census_json(c)); }); };
    expect(c.forest_monoid_size == factorial(n), "forest monoid has n! elements");
    expect(c.tree_semigroup_size == factorial(n - 1), "tree semigroup has (n-1)! elements");
    expect(c.forest_monoid_closed, "forest monoid is closed and contains id");
    expect(c.tree_semigroup_closed, "tree semigroup is closed");
    expect(c.union_matches(), "union of permutations and conjugated forests has (n+1)^(n-1)+n!-1 elements");
    expect(c.conjugated_forests_distinct, "conjugated forest monoids are pairwise distinct");
    if (n > 3) {
        expect(c.lower_bound_family_count == 2 * factorial(n) + static_cast<std::uint64_t>(n),
               "n!*2+n lower-bound submonoids enumerated");
        expect(c.lower_bound_families_distinct, "lower-bound submonoids are distinct with (n-1)!+1 elements");
        expect(c.lower_bound_families_closed, "lower-bound submonoids are closed");
    }

    auto closure = [&](Family fam, const std::optional<Permutation>& sigma = std::nullopt) {
        const auto r = verify_closure(fam, n, sigma);
        tally.check(r.passed(), [&] {
            json rec = {{"family", family_name(fam)}, {"n", n}, {"contains_identity", r.contains_identity}};
            if (sigma) rec["sigma"] = values_json(*sigma);
            if (r.witness) rec["witness"] = {values_json(r.witness->first), values_json(r.witness->second)};
            return claim("family is closed under composition", rec);
        });
        return r;
    };
    if (n <= 4) {
        closure(Family::forest_monoid);
        closure(Family::tree_semigroup);
        const auto r = closure(Family::no_odd_permutations);
        expect(r.member_count == power(n, n) - factorial(n) / 2, "no-odd-permutation set has n^n - n!/2 elements");
    }
    if (n <= 5) {
        for_each_permutation(n, [&](const Permutation& sigma) { closure(Family::conjugated_forest, sigma); });
    }

    // Length-(n-1) compositions of tree functions are identically zero.
    const auto trees = enumerate_tree_functions(n);
    const EndoFunction zero = EndoFunction::constant(n, 0);
    const int length = n - 1;
    auto check_word = [&](const std::vector<EndoFunction>& word) {
        const auto h = compose_all(word);
        tally.check(h == zero, [&] {
            json factors = json::array();
            for (const auto& w : word) factors.push_back(values_json(w));
            return claim("n-1 fold composition of tree functions is zero",
                         {{"factors", factors}, {"composite", values_json(h)}});
        });
    };
    const bool exhaustive = n <= 5;
    detail["corollary_exhaustive"] = exhaustive;
    if (exhaustive) {
        const std::uint64_t words = power(static_cast<int>(trees.size()), length);
        for (std::uint64_t w = 0; w < words; ++w) {
            std::vector<EndoFunction> word;
            std::uint64_t code = w;
            for (int k = 0; k < length; ++k) {
                word.push_back(trees[code % trees.size()]);
                code /= trees.size();
            }
            check_word(word);
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
        for (int s = 0; s < 20000; ++s) {
            std::vector<EndoFunction> word;
            for (int k = 0; k < length; ++k) word.push_back(trees[pick(rng)]);
            check_word(word);
        }
    }
    return tally.take();
}

Partial bounds_at(int n, const VerifyOptions& opt, json&)
{
    return sweep(power(n, n), opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        for (auto k = b; k < e; ++k) {
            const auto f = function_at(n, k);
            const auto ext = distinct_label_extrema(f);
            const auto r = rho(f);
            const int loops = summarize(f).loops;
            const int lower_max = n - r.rho + std::max(0, loops - 1);
            auto record = [&] {
                return json{{"f", values_json(f)},          {"min", ext.min},
                            {"max", ext.max},                {"rho", r.rho},
                            {"loops", loops},                {"max_lower_bound", lower_max},
                            {"argmin", values_json(ext.argmin)}, {"argmax", values_json(ext.argmax)},
                            {"deleted_edges", r.witness_deletion}};
            };
            tally.check(1 <= ext.min && ext.min <= r.rho,
                        [&] { return claim("1 <= min distinct labels <= rho", record()); });
            tally.check(lower_max <= ext.max && ext.max <= n,
                        [&] { return claim("n - rho + max(0, loops-1) <= max distinct labels <= n", record()); });
        }
    });
}

Partial component_identity_at(int n, const VerifyOptions& opt, json&)
{
    return sweep(power(n, n), opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        std::unordered_map<std::uint64_t, int> max_cache;
        for (auto k = b; k < e; ++k) {
            const auto f = function_at(n, k);
            const auto order = summarize(f).order_lcm;
            const auto h = iterate(f, order);
            const int lhs = n + 1 - summarize(h).component_count;
            auto it = max_cache.find(h.code());
            if (it == max_cache.end()) it = max_cache.emplace(h.code(), distinct_label_extrema(h).max).first;
            const int rhs = it->second;
            tally.check(lhs == rhs, [&] {
                return claim("n + 1 - components(f^(o_f)) equals max distinct labels of f^(o_f)",
                             {{"f", values_json(f)}, {"o_f", order}, {"f_o", values_json(h)}, {"lhs", lhs},
                              {"rhs", rhs}});
            });
        }
    });
}

Partial lex_at(int n, const VerifyOptions& opt, json&)
{
    const auto total = factorial(n);
    auto p = sweep(total, opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        if (b == e) return;
        // walk lexicographic order independently of unrank
        const auto start = lex_unrank({b}, n);
        std::vector<int> image(start.image().begin(), start.image().end());
        for (auto k = b; k < e; ++k) {
            const Permutation sigma(image);
            const auto rank = lex_rank(sigma);
            const bool ok = rank.value == k && lex_unrank({k}, n) == sigma;
            tally.check(ok, [&] {
                return claim("lex rank equals lexicographic position",
                             {{"sigma", values_json(sigma)}, {"position", k}, {"rank", rank.value}});
            });
            std::next_permutation(image.begin(), image.end());
        }
    });
    Tally anchors(opt.failure_cap);
    anchors.check(lex_rank(Permutation::identity(n)).value == 0, [&] {
        return claim("lex(id) = 0", {{"n", n}});
    });
    anchors.check(lex_rank(Permutation::complement(n)).value == total - 1, [&] {
        return claim("lex((n-1) - id) = n! - 1", {{"n", n}, {"rank", lex_rank(Permutation::complement(n)).value}});
    });
    merger(opt.failure_cap)(p, anchors.take());
    return p;
}

// Worked n = 4 path example, both labelings of the complement pair.
void expansion_example(Tally& tally)
{
    const EndoFunction path(std::vector<int>{0, 0, 1, 2});
    struct Row {
        Permutation sigma;
        Permutation gamma;
        std::vector<int> sign;
    };
    const Row rows[] = {
        {Permutation(std::vector<int>{0, 3, 1, 2}), Permutation(std::vector<int>{0, 2, 1, 3}), {0, 1, -1, -1}},
        {Permutation(std::vector<int>{2, 1, 3, 0}), Permutation(std::vector<int>{3, 1, 0, 2}), {1, 1, 0, -1}},
    };
    for (const auto& row : rows) {
        const auto e = extract_expansion(path, row.sigma);
        const bool ok = e.gamma == row.gamma && e.sign == row.sign && verify_expansion(e, path);
        tally.check(ok, [&] { return claim("worked n=4 expansion reproduced", to_json(e)); });
    }
}

Partial expansion_at(int n, const VerifyOptions& opt, json& detail)
{
    const bool all_functions = n <= 5;
    detail["domain"] = all_functions ? "all functions" : "tree functions";
    const auto count = all_functions ? power(n, n) : tree_function_count(n);
    const Permutation phi = Permutation::complement(n);
    auto p = sweep(count, opt, [&](std::uint64_t b, std::uint64_t e, Tally& tally) {
        for (auto k = b; k < e; ++k) {
            const auto f = all_functions ? function_at(n, k) : tree_function_at(n, k);
            for_each_permutation(n, [&](const Permutation& sigma) {
                if (!is_graceful(f, sigma)) return;
                const auto ex = extract_expansion(f, sigma);
                const auto twin = extract_expansion(f, phi * sigma);
                const bool ok = verify_expansion(ex, f) && verify_expansion(twin, f) && twin.gamma == ex.gamma * phi;
                tally.check(ok, [&] {
                    return claim("graceful expansion round-trips",
                                 {{"f", values_json(f)}, {"expansion", to_json(ex)}, {"complement", to_json(twin)}});
                });
            });
        }
    });
    if (n == 4) {
        Tally tally(opt.failure_cap);
        expansion_example(tally);
        merger(opt.failure_cap)(p, tally.take());
    }
    return p;
}

using PerN = Partial (*)(int, const VerifyOptions&, json&);

PerN per_n(Suite suite)
{
    switch (suite) {
    case Suite::glc: return glc_at;
    case Suite::strong_glc: return strong_glc_at;
    case Suite::composition: return composition_at;
    case Suite::strong_composition: return strong_composition_at;
    case Suite::center_sums: return center_sums_at;
    case Suite::monoid: return monoid_at;
    case Suite::bounds: return bounds_at;
    case Suite::component_identity: return component_identity_at;
    case Suite::lex: return lex_at;
    case Suite::expansion: return expansion_at;
    case Suite::all: break;
    }
    throw std::invalid_argument("no per-n runner for " + suite_name(suite));
}

} // namespace

VerificationReport run_suite(Suite suite, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = suite_name(suite);
    if (suite == Suite::all) {
        report.n_min = 0;
        report.n_max = 0;
        for (Suite s : every_suite()) {
            VerifyOptions sub = options;
            sub.n_min = suite_limits(s).min_n;
            sub.n_max = suite_limits(s).default_n_max;
            auto child = run_suite(s, sub);
            report.n_min = report.n_min == 0 ? child.n_min : std::min(report.n_min, child.n_min);
            report.n_max = std::max(report.n_max, child.n_max);
            report.instances_checked += child.instances_checked;
            report.failure_count += child.failure_count;
            report.children.push_back(std::move(child));
        }
        report.elapsed = std::chrono::steady_clock::now() - start;
        return report;
    }

    const auto limits = suite_limits(suite);
    if (options.n_min < limits.min_n || options.n_max > limits.cap || options.n_min > options.n_max) {
        throw std::out_of_range(report.suite + ": n range [" + std::to_string(options.n_min) + ", " +
                                std::to_string(options.n_max) + "] outside supported [" +
                                std::to_string(limits.min_n) + ", " + std::to_string(limits.cap) + "]");
    }
    report.n_min = options.n_min;
    report.n_max = options.n_max;
    const auto runner = per_n(suite);
    for (int n = options.n_min; n <= options.n_max; ++n) {
        json detail = {{"n", n}};
        Partial p = runner(n, options, detail);
        detail["instances"] = p.instances;
        detail["failures"] = p.failure_count;
        report.details.push_back(std::move(detail));
        report.instances_checked += p.instances;
        report.failure_count += p.failure_count;
        for (auto& f : p.failures) {
            if (report.failures.size() < options.failure_cap) report.failures.push_back(std::move(f));
        }
        if (options.witnesses) {
            for (const auto& w : p.witnesses) *options.witnesses << w.dump() << '\n';
        }
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

json report_json(const VerificationReport& report)
{
    json j = {{"suite", report.suite},
              {"n_min", report.n_min},
              {"n_max", report.n_max},
              {"instances_checked", report.instances_checked},
              {"failure_count", report.failure_count},
              {"passed", report.passed()},
              {"failures", report.failures},
              {"details", report.details}};
    if (!report.children.empty()) {
        json children = json::array();
        for (const auto& c : report.children) children.push_back(report_json(c));
        j["suites"] = std::move(children);
    }
    return j;
}

VerificationReport report_from_json(const json& j)
{
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.n_min = j.at("n_min").get<int>();
    r.n_max = j.at("n_max").get<int>();
    r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
    r.failure_count = j.at("failure_count").get<std::uint64_t>();
    r.failures = j.at("failures").get<std::vector<json>>();
    r.details = j.at("details");
    if (j.at("passed").get<bool>() != r.passed()) throw std::invalid_argument("report: passed flag inconsistent");
    if (j.contains("suites")) {
        for (const auto& c : j.at("suites")) r.children.push_back(report_from_json(c));
    }
    return r;
}

} // namespace gracelab
