#include "gracelab/cli.hpp"
#include "gracelab/certificate.hpp"
#include "gracelab/endograph.hpp"
#include "gracelab/json_io.hpp"
#include "gracelab/labeling.hpp"
#include "gracelab/monoid.hpp"
#include "gracelab/parallel.hpp"
#include "gracelab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>

namespace gracelab {

namespace {

constexpr int kMaxEnumerateTreesN = 10;
constexpr int kMaxEnumerateForestsN = 9;

struct Settings {
    int n = 0;
    int n_max = 0;
    int ell = 1;
    int t = 0;
    int jobs = 0;
    std::uint64_t seed = 1;
    std::string output;
    std::string format = "json";
    std::string f;
    std::string g;
    std::string sigma;
    std::string sequence;
    std::string witnesses;
    std::string kind;
    std::string suite;
    bool exhaustive = false;
    bool first = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where records go: the --output file when given, else `out`. The summary
// goes to whichever stream is not receiving records.
class Sink {
public:
    Sink(const std::string& path, std::ostream& out, std::ostream& err) : out_(&out), err_(&err)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& records() { return file_ ? *file_ : *out_; }
    std::ostream& summary() { return file_ ? *out_ : *err_; }

private:
    std::ostream* out_;
    std::ostream* err_;
    std::unique_ptr<std::ofstream> file_;
};

EndoFunction require_function(const std::string& text, const char* flag)
{
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    return parse_function(text);
}

int cmd_enumerate(const Settings& s, std::ostream& out, std::ostream& err)
{
    Sink sink(s.output, out, err);
    std::uint64_t count = 0;
    if (s.kind == "trees" || s.kind == "forests") {
        const bool trees = s.kind == "trees";
        const int cap = trees ? kMaxEnumerateTreesN : kMaxEnumerateForestsN;
        if (s.n < 1 || s.n > cap) {
            throw UsageError("enumerate " + s.kind + ": --n must be in [1, " + std::to_string(cap) + "]");
        }
        const auto total = trees ? tree_function_count(s.n) : forest_function_count(s.n);
        for (std::uint64_t k = 0; k < total; ++k) {
            const auto f = trees ? tree_function_at(s.n, k) : forest_function_at(s.n, k);
            sink.records() << to_json(f).dump() << '\n';
        }
        count = total;
    } else {
        const auto f = require_function(s.f, "--f");
        if (f.size() > kMaxBruteForceN) {
            throw UsageError("enumerate grl: n must be at most " + std::to_string(kMaxBruteForceN));
        }
        const auto grl = enumerate_grl(f);
        for (std::size_t k = 0; k < grl.count(); ++k) {
            json rec = to_json(grl.graphs[k]);
            rec["sigma"] = values_json(grl.representatives[k]);
            sink.records() << rec.dump() << '\n';
        }
        count = grl.count();
    }
    sink.summary() << count << " records\n";
    return exit_code::ok;
}

int cmd_search(const Settings& s, std::ostream& out)
{
    const auto f = require_function(s.f, "--f");
    SearchOptions options;
    options.exhaustive = s.exhaustive && !s.first;
    SearchResult r;
    if (s.sequence.empty()) {
        r = search_graceful(f, options);
    } else {
        const auto target = parse_labels(s.sequence);
        if (target.size() != f.size()) throw UsageError("--sequence must have one label per vertex");
        r = realizes_sequence(f, target, options);
    }
    json rec = witness_record(f, r);
    rec["found"] = r.found;
    if (options.exhaustive) rec["solutions"] = r.solutions;
    out << rec.dump() << '\n';
    return r.found ? exit_code::ok : exit_code::counterexample;
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err)
{
    Suite suite;
    try {
        suite = parse_suite(s.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    VerifyOptions options;
    options.ell = s.ell;
    options.seed = s.seed;
    options.jobs = s.jobs > 0 ? s.jobs : default_jobs();
    if (suite != Suite::all) {
        const auto limits = suite_limits(suite);
        options.n_min = s.n > 0 ? s.n : limits.min_n;
        options.n_max = s.n_max > 0 ? s.n_max : (s.n > 0 ? s.n : limits.default_n_max);
    }
    std::unique_ptr<std::ofstream> witness_file;
    if (!s.witnesses.empty()) {
        witness_file = std::make_unique<std::ofstream>(s.witnesses);
        if (!*witness_file) throw UsageError("cannot open witness file: " + s.witnesses);
        options.witnesses = witness_file.get();
    }
    Sink sink(s.output, out, err);
    VerificationReport report;
    try {
        report = run_suite(suite, options);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    sink.records() << report_json(report).dump(2) << '\n';
    auto& summary = sink.summary();
    auto line = [&](const VerificationReport& r) {
        summary << r.suite << " n=" << r.n_min << ".." << r.n_max << ": " << (r.passed() ? "pass" : "FAIL") << ", "
                << r.instances_checked << " instances, " << r.failure_count << " failures\n";
    };
    for (const auto& child : report.children) line(child);
    line(report);
    return report.passed() ? exit_code::ok : exit_code::counterexample;
}

int cmd_expand(const Settings& s, std::ostream& out)
{
    const auto f = require_function(s.f, "--f");
    if (s.t != 0 && s.t != 1) throw UsageError("--t must be 0 or 1");
    std::optional<Permutation> sigma;
    if (!s.sigma.empty()) {
        sigma = parse_permutation(s.sigma);
        if (sigma->size() != f.size()) throw UsageError("--sigma must have one entry per vertex");
    } else {
        const auto r = search_graceful(f);
        if (r.found) sigma = r.witness;
    }
    if (!sigma || !is_graceful(f, *sigma)) {
        out << json{{"f", values_json(f)}, {"graceful", false}}.dump() << '\n';
        return exit_code::counterexample;
    }
    const auto e = extract_expansion(f, *sigma);
    const bool ok = verify_expansion(e, f, s.t);
    json rec = to_json(e);
    rec["f"] = values_json(f);
    rec["sigma"] = values_json(*sigma);
    rec["t"] = s.t;
    rec["verified"] = ok;
    out << rec.dump() << '\n';
    return ok ? exit_code::ok : exit_code::counterexample;
}

int cmd_certify(const Settings& s, const CLI::Option* ell_given, std::ostream& out)
{
    const auto f = require_function(s.f, "--f");
    const auto g = s.g.empty() ? f : parse_function(s.g);
    if (g.size() != f.size()) throw UsageError("--f and --g must have the same size");
    if (!is_tree_function(f) || !is_tree_function(g)) throw UsageError("certify expects tree functions");
    if (s.t != 0 && s.t != 1) throw UsageError("--t must be 0 or 1");
    const int n = f.size();
    json rec = {{"n", n}, {"f", values_json(f)}, {"g", values_json(g)}, {"t", s.t}};
    bool ok = true;
    if (n <= kMaxVandermondeSumN) {
        const auto c = center_sums_check(f, g, s.t);
        rec["center_sums"] = center_sums_report(f, g, s.t, c);
        ok = ok && c.match;
    }
    if (ell_given->count() > 0) {
        if (n > kMaxStrongCertificateN) throw UsageError("strong certificate supports n <= " + std::to_string(kMaxStrongCertificateN));
        if (!strong_ell_valid(n, s.ell)) throw UsageError("--ell must satisfy 1 <= ell < ceil((n-1)/2)");
        const auto check = strong_composition_check(f, g, s.ell);
        rec["strong"] = {{"ell", s.ell},
                         {"certificate_f", big_string(check.certificate_left)},
                         {"certificate_fg", big_string(check.certificate_composite)},
                         {"implication_holds", check.holds}};
        ok = ok && check.holds;
    }
    if (!rec.contains("center_sums") && !rec.contains("strong")) {
        throw UsageError("n too large for center sums; pass --ell for the strong certificate");
    }
    out << rec.dump() << '\n';
    return ok ? exit_code::ok : exit_code::counterexample;
}

int cmd_export(const Settings& s, std::ostream& out, std::ostream& err)
{
    const auto f = require_function(s.f, "--f");
    Sink sink(s.output, out, err);
    if (s.format == "dot") {
        sink.records() << to_dot(f);
    } else {
        sink.records() << to_json(f).dump() << '\n';
    }
    return exit_code::ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact combinatorics for graceful labelings of functional graphs", "gracelab"};
    app.require_subcommand(1);
    Settings s;

    auto jobs_flag = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", s.jobs, "worker threads (default: GRACELAB_JOBS or all cores)")
            ->check(CLI::PositiveNumber);
    };

    auto* enumerate = app.add_subcommand("enumerate", "write instances as JSON lines");
    enumerate->add_option("kind", s.kind, "trees | forests | grl")
        ->required()
        ->check(CLI::IsMember({"trees", "forests", "grl"}));
    enumerate->add_option("--n", s.n, "vertex count");
    enumerate->add_option("--f", s.f, "function for grl, JSON array");
    enumerate->add_option("--output", s.output, "JSON-lines file");

    auto* search = app.add_subcommand("search", "find a graceful labeling or realize a label sequence");
    search->add_option("--f", s.f, "function, JSON array or {\"n\",\"f\"}")->required();
    search->add_option("--sequence", s.sequence, "target label multiset, JSON array");
    search->add_flag("--exhaustive", s.exhaustive, "explore every labeling and report the lex-minimal one");
    search->add_flag("--first", s.first, "stop at the first labeling found (default)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", s.suite, "glc | strong-glc | composition | strong-composition | center-sums | "
                                         "monoid | bounds | theorem6 | lex | expansion | all")
        ->required();
    verify->add_option("--n", s.n, "smallest n (alone: the only n)")->check(CLI::PositiveNumber);
    verify->add_option("--n-max", s.n_max, "largest n")->check(CLI::PositiveNumber);
    verify->add_option("--ell", s.ell, "certificate depth for strong-composition");
    verify->add_option("--seed", s.seed, "seed for sampled checks");
    verify->add_option("--output", s.output, "report file");
    verify->add_option("--witnesses", s.witnesses, "JSON-lines file of search witnesses");
    jobs_flag(verify);

    auto* expand = app.add_subcommand("expand", "graceful expansion of a labeled function");
    expand->add_option("--f", s.f, "function")->required();
    expand->add_option("--sigma", s.sigma, "graceful labeling (default: searched)");
    expand->add_option("--t", s.t, "0 or 1");

    auto* certify = app.add_subcommand("certify", "Vandermonde and strong certificates");
    certify->add_option("--f", s.f, "tree function")->required();
    certify->add_option("--g", s.g, "second tree function (default: f)");
    certify->add_option("--t", s.t, "0 evaluates f, 1 evaluates f∘g");
    auto* ell_option = certify->add_option("--ell", s.ell, "strong certificate depth");

    auto* exporter = app.add_subcommand("export", "render a function graph");
    exporter->add_option("--f", s.f, "function")->required();
    exporter->add_option("--format", s.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    exporter->add_option("--output", s.output, "output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::usage;
    }

    try {
        if (*enumerate) return cmd_enumerate(s, out, err);
        if (*search) return cmd_search(s, out);
        if (*verify) return cmd_verify(s, out, err);
        if (*expand) return cmd_expand(s, out);
        if (*certify) return cmd_certify(s, ell_option, out);
        if (*exporter) return cmd_export(s, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace gracelab
