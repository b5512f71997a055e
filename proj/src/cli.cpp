#include "blockchar/cli.hpp"

#include "blockchar/block_function.hpp"
#include "blockchar/irreducibles.hpp"
#include "blockchar/json_io.hpp"
#include "blockchar/shapes.hpp"
#include "blockchar/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace blockchar {

namespace {

struct CharOptions {
    int n = 0;
    std::string family;
    std::optional<int> k;
    std::optional<std::string> theta;
    std::string basis = "values";
};

struct SampleOptions {
    int n = 0;
    int k = 0;
    std::string kind;
    int count = 1;
    std::uint64_t seed = 0;
    std::string emit = "shapes";
    int threads = 0;
};

struct VerifyOptions {
    std::string suite;
    int n_max = 0;
    std::string fault = "none";
    int threads = 0;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string canonical_family(const std::string& family) {
    if (family == "sigma" || family == "σ") return "sigma";
    if (family == "sigma-hat" || family == "sigma_hat" || family == "σ̂") return "sigma-hat";
    if (family == "tau" || family == "τ") return "tau";
    if (family == "psi" || family == "ψ") return "psi";
    if (family == "ewens") return "ewens";
    throw UsageError("unknown family: " + family);
}

struct BuiltFamily {
    BlockFunction function;
    Json parameters;
    bool degenerate = false;
};

BuiltFamily build_family(const CharOptions& o) {
    const std::string family = canonical_family(o.family);
    Json parameters = {{"n", o.n}, {"family", family}};
    if (family == "ewens") {
        if (!o.theta) throw UsageError("--theta is required for the ewens family");
        if (o.k) throw UsageError("--k does not apply to the ewens family");
        const Rational theta = parse_rational(*o.theta);
        parameters["theta"] = rational_to_json(theta);
        auto e = ewens(o.n, theta);
        return {std::move(e.values), std::move(parameters), e.degenerate};
    }
    if (!o.k) throw UsageError("--k is required for the " + family + " family");
    if (o.theta) throw UsageError("--theta only applies to the ewens family");
    parameters["k"] = *o.k;
    const int k = *o.k;
    if (family == "sigma") return {sigma(o.n, k), std::move(parameters)};
    if (family == "sigma-hat") return {sigma_hat(o.n, k), std::move(parameters)};
    if (family == "tau") return {tau(o.n, k), std::move(parameters)};
    return {psi(o.n, k), std::move(parameters)};
}

Json envelope(const std::string& command, Json parameters, Json payload, const std::string& status) {
    return {{"command", command}, {"parameters", std::move(parameters)}, {"payload", std::move(payload)},
            {"status", status}};
}

int run_char(const CharOptions& o, std::ostream& out) {
    auto built = build_family(o);
    built.parameters["basis"] = o.basis;
    const auto test = is_character(built.function);
    Json values;
    if (o.basis == "values")
        values = rationals_to_json(built.function.values());
    else if (o.basis == "sigma")
        values = rationals_to_json(to_sigma_basis(built.function));
    else
        values = rationals_to_json(test.coefficients.values());
    Json payload = {{"values", std::move(values)},
                    {"is_character", test.is_character},
                    {"first_negative", test.first_negative ? Json(*test.first_negative) : Json(nullptr)},
                    {"degenerate", built.degenerate}};
    out << envelope("char", std::move(built.parameters), std::move(payload), "ok").dump(2) << '\n';
    return kExitOk;
}

int run_decompose(const CharOptions& o, std::ostream& out) {
    auto built = build_family(o);
    const auto decomposition = decompose(built.function);
    Json multiplicities = Json::object();
    for (const auto& [lambda, b] : decomposition.entries) multiplicities[lambda.to_string()] = rational_to_json(b);
    Json payload = {{"multiplicities", std::move(multiplicities)},
                    {"total_dimension", rational_to_json(decomposition.total_dimension())},
                    {"is_character", is_character(built.function).is_character}};
    out << envelope("decompose", std::move(built.parameters), std::move(payload), "ok").dump(2) << '\n';
    return kExitOk;
}

std::string format_double(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12f", x);
    return buffer;
}

int run_sample(const SampleOptions& o, std::ostream& out) {
    const MeasureKind kind = parse_kind(o.kind);
    if (o.count < 1) throw UsageError("--count must be positive");
    const int threads = o.threads > 0 ? o.threads : default_thread_count();
    const SampleBatch batch = sample_batch(o.n, o.k, kind, o.seed, o.count, threads);
    Json parameters = {{"n", o.n},         {"k", o.k},       {"kind", std::string(kind_name(kind))},
                       {"count", o.count}, {"seed", o.seed}, {"emit", o.emit}};
    if (o.emit == "shapes") {
        Json shapes = Json::array();
        for (const auto& lambda : batch.shapes) shapes.push_back(partition_to_json(lambda));
        out << envelope("sample", std::move(parameters), {{"shapes", std::move(shapes)}}, "ok").dump(2) << '\n';
        return kExitOk;
    }
    const auto grid = default_profile_grid();
    const ProfileStatistics stats = mean_profile(batch, grid);
    if (o.emit == "profile-csv") {
        out << "x,mean_f,stderr\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            char x[16];
            std::snprintf(x, sizeof x, "%.1f", grid[i]);
            out << x << ',' << format_double(stats.mean[i]) << ',' << format_double(stats.standard_error[i]) << '\n';
        }
        return kExitOk;
    }
    Json payload = {{"n", o.n},         {"k", o.k},       {"kind", std::string(kind_name(kind))},
                    {"seed", o.seed},   {"count", o.count}, {"grid", stats.grid},
                    {"mean", stats.mean}, {"stderr", stats.standard_error}};
    out << envelope("sample", std::move(parameters), std::move(payload), "ok").dump(2) << '\n';
    return kExitOk;
}

int run_verify(const VerifyOptions& o, std::ostream& out) {
    SuiteOptions options;
    options.fault = parse_fault(o.fault);
    options.threads = o.threads;
    const Suite suite = parse_suite(o.suite);
    const SuiteReport report = run_suite(suite, o.n_max, options);
    Json parameters = {{"suite", o.suite}, {"n_max", o.n_max}};
    if (options.fault != Fault::none) parameters["inject_fault"] = o.fault;
    Json payload = {{"suite", o.suite},
                    {"n_max", o.n_max},
                    {"passed", report.passed},
                    {"cases", report.cases},
                    {"failing_n", report.failing_n ? Json(*report.failing_n) : Json(nullptr)},
                    {"counterexample", report.passed ? Json(nullptr) : Json(report.counterexample)}};
    out << envelope("verify", std::move(parameters), std::move(payload), report.passed ? "pass" : "fail").dump(2)
        << '\n';
    return report.passed ? kExitOk : kExitVerificationFailed;
}

void add_family_options(CLI::App* sub, CharOptions& o) {
    sub->add_option("--n", o.n, "Group size n")->required()->check(CLI::Range(1, 200));
    sub->add_option("--family", o.family, "sigma | sigma-hat | tau | psi | ewens (Greek letters accepted)")
        ->required();
    sub->add_option("--k", o.k, "Index k of the sigma/tau/psi family");
    sub->add_option("--theta", o.theta, "Ewens parameter as p or p/q");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact block characters of the symmetric groups", "blockchar"};
    app.require_subcommand(1);

    CharOptions char_options;
    auto* char_cmd = app.add_subcommand("char", "Values or basis coefficients of a block character");
    add_family_options(char_cmd, char_options);
    char_cmd->add_option("--basis", char_options.basis, "values | sigma | tau")
        ->check(CLI::IsMember({"values", "sigma", "tau"}));

    CharOptions decompose_options;
    auto* decompose_cmd = app.add_subcommand("decompose", "Irreducible multiplicities of a block character");
    add_family_options(decompose_cmd, decompose_options);

    SampleOptions sample_options;
    auto* sample_cmd = app.add_subcommand("sample", "Random Young diagrams under the tau or sigma measure");
    sample_cmd->add_option("--n", sample_options.n, "Diagram size")->required()->check(CLI::Range(1, 1000000));
    sample_cmd->add_option("--k", sample_options.k, "Measure index")->required()->check(CLI::Range(1, 1000000));
    sample_cmd->add_option("--kind", sample_options.kind, "tau | sigma")->required();
    sample_cmd->add_option("--count", sample_options.count, "Number of replicas")->check(CLI::Range(1, 100000000));
    sample_cmd->add_option("--seed", sample_options.seed, "Base seed");
    sample_cmd->add_option("--emit", sample_options.emit, "shapes | profile-csv | manifest")
        ->check(CLI::IsMember({"shapes", "profile-csv", "manifest"}));
    sample_cmd->add_option("--threads", sample_options.threads, "Worker threads (default BLOCKCHAR_THREADS)")
        ->check(CLI::Range(1, 1024));

    VerifyOptions verify_options;
    auto* verify_cmd = app.add_subcommand("verify", "Check an identity for every n up to --n-max");
    std::vector<std::string> suite_names;
    for (Suite s : all_suites()) suite_names.emplace_back(suite_name(s));
    verify_cmd->add_option("--suite", verify_options.suite, "Identity suite")
        ->required()
        ->check(CLI::IsMember(suite_names));
    verify_cmd->add_option("--n-max", verify_options.n_max, "Largest n checked")->required()->check(CLI::Range(1, 1000));
    verify_cmd->add_option("--inject-fault", verify_options.fault, "Break an identity on purpose (mutation testing)")
        ->check(CLI::IsMember({"none", "branching", "regular"}))
        ->group("");
    verify_cmd->add_option("--threads", verify_options.threads, "Worker threads (default BLOCKCHAR_THREADS)")
        ->check(CLI::Range(1, 1024));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (char_cmd->parsed()) return run_char(char_options, out);
        if (decompose_cmd->parsed()) return run_decompose(decompose_options, out);
        if (sample_cmd->parsed()) return run_sample(sample_options, out);
        return run_verify(verify_options, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace blockchar
