#include "blockchar/verify.hpp"

#include "blockchar/coinvariant.hpp"
#include "blockchar/infinite_group.hpp"
#include "blockchar/irreducibles.hpp"
#include "blockchar/random.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace blockchar {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::branching, "branching"},     {Suite::duality, "duality"},
    {Suite::inversion, "inversion"},     {Suite::regular, "regular"},
    {Suite::coinvariant, "coinvariant"}, {Suite::recursion, "recursion"},
    {Suite::extreme_identity, "extreme-identity"}, {Suite::gram, "gram"},
};

// Above this size the inversion suite only compares admissible counts with
// the closed form and skips the explicit image check.
constexpr int kBijectionImageBound = 8;

std::string values_string(const BlockFunction& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.values().size(); ++i) out += (i ? "," : "") + to_string(f.values()[i]);
    return out + ")";
}

CheckResult branching_item(int n, Fault fault) {
    CheckResult result;
    if (n < 2) return result;
    for (int k = 1; k <= n; ++k) {
        ++result.cases;
        BlockFunction rhs = BlockFunction::zero(n - 1);
        if (k <= n - 1) rhs += Rational(k) * tau(n - 1, k);
        const int weight = fault == Fault::branching ? n - k : n - k + 1;
        if (k >= 2) rhs += Rational(weight) * tau(n - 1, k - 1);
        const BlockFunction lhs = restrict(tau(n, k));
        if (lhs != rhs)
            return CheckResult::fail("restriction of tau_" + std::to_string(k) + "^" + std::to_string(n) + " is " +
                                         values_string(lhs) + ", expected " + values_string(rhs),
                                     result.cases);
    }
    return result;
}

CheckResult regular_item(int n, Fault fault) {
    BlockFunction total = BlockFunction::zero(n);
    const int last = fault == Fault::regular ? n - 1 : n;
    for (int k = 1; k <= last; ++k) total += tau(n, k);
    const BlockFunction expected = regular_character(n);
    if (total == expected) return {true, 1, {}};
    return CheckResult::fail("sum of tau_k^" + std::to_string(n) + " is " + values_string(total) + ", expected " +
                                 values_string(expected),
                             1);
}

CheckResult inversion_item(int n) {
    CheckResult result = verify_ms_inversion(n);
    if (!result) return result;
    CheckResult bijection = verify_admissible_bijection(n, n <= kBijectionImageBound);
    bijection.cases += result.cases;
    return bijection;
}

CheckResult gram_item(int n, const SuiteOptions& options) {
    CheckResult result;
    for (int i = 0; i < options.gram_samples; ++i) {
        ++result.cases;
        const BlockFunction phi = random_block_function(n, derive_seed(options.gram_seed, 1000u * n + i));
        const bool gate = is_character(phi).is_character;
        const bool oracle = gram_psd_oracle(phi);
        if (gate != oracle)
            return CheckResult::fail("n=" + std::to_string(n) + " values " + values_string(phi) + ": gate says " +
                                         (gate ? "character" : "not a character") + ", Gram matrix says " +
                                         (oracle ? "PSD" : "not PSD"),
                                     result.cases);
    }
    return result;
}

std::vector<ArrayFamily> recursion_families() {
    std::vector<ArrayFamily> families;
    for (int K = 1; K <= 5; ++K) families.push_back({ArrayType::T1, K});
    for (int K = 1; K <= 5; ++K) families.push_back({ArrayType::T2, K});
    families.push_back({ArrayType::T3, 1});
    return families;
}

CheckResult extreme_item(int n) {
    CheckResult result;
    for (const auto& family : recursion_families()) {
        CheckResult one = verify_extreme_identity(family, n);
        result.cases += one.cases;
        if (!one) return CheckResult::fail(one.counterexample, result.cases);
    }
    return result;
}

}  // namespace

std::string_view suite_name(Suite suite) {
    for (const auto& [s, name] : kSuiteNames)
        if (s == suite) return name;
    return "?";
}

Suite parse_suite(std::string_view name) {
    for (const auto& [s, text] : kSuiteNames)
        if (text == name) return s;
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    for (const auto& [s, name] : kSuiteNames) out.push_back(s);
    return out;
}

Fault parse_fault(std::string_view name) {
    if (name == "none") return Fault::none;
    if (name == "branching") return Fault::branching;
    if (name == "regular") return Fault::regular;
    throw std::invalid_argument("unknown fault: " + std::string(name));
}

int suite_bound(Suite suite) {
    switch (suite) {
        case Suite::branching: return 60;
        case Suite::duality: return 20;
        case Suite::inversion: return 10;
        case Suite::regular: return 60;
        case Suite::coinvariant: return kCoinvariantBound;
        case Suite::recursion: return 60;
        case Suite::extreme_identity: return 30;
        case Suite::gram: return kGramOracleBound;
    }
    return 0;
}

int default_thread_count() {
    if (const char* env = std::getenv("BLOCKCHAR_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0 && value <= 1024) return static_cast<int>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckResult> run_parallel(int count, int threads, const std::function<CheckResult(int)>& item) {
    std::vector<CheckResult> results(static_cast<std::size_t>(std::max(count, 0)));
    threads = std::clamp(threads, 1, std::max(count, 1));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) results[i] = item(i);
        return results;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(results.size());
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t)
        workers.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    results[i] = item(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

BlockFunction random_block_function(int n, std::uint64_t seed) {
    Rng rng(seed);
    const bool force_nonnegative = rng.below(2) == 0;
    std::vector<Rational> a(n);
    for (auto& c : a) {
        Rational v(static_cast<long>(rng.below(10)) - 3, static_cast<long>(rng.below(4)) + 1);
        v.canonicalize();
        c = force_nonnegative && v < 0 ? Rational(-v) : v;
    }
    return from_tau_basis(TauCoefficients(n, std::move(a)));
}

SuiteReport run_suite(Suite suite, int n_max, const SuiteOptions& options) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    if (n_max > suite_bound(suite))
        throw BoundError(std::string(suite_name(suite)) + " suite accepts n_max <= " +
                         std::to_string(suite_bound(suite)));
    const int threads = options.threads > 0 ? options.threads : default_thread_count();
    SuiteReport report;
    report.suite = suite;
    report.n_max = n_max;

    std::vector<CheckResult> results;
    std::vector<std::string> labels;
    if (suite == Suite::recursion) {
        const auto families = recursion_families();
        for (const auto& f : families) labels.push_back(f.to_string());
        results = run_parallel(static_cast<int>(families.size()), threads, [&](int i) {
            return verify_backward_recursion(extreme_array(families[i], n_max));
        });
    } else {
        results = run_parallel(n_max, threads, [&](int i) -> CheckResult {
            const int n = i + 1;
            switch (suite) {
                case Suite::branching: return branching_item(n, options.fault);
                case Suite::duality: return verify_duality(n);
                case Suite::inversion: return inversion_item(n);
                case Suite::regular: return regular_item(n, options.fault);
                case Suite::coinvariant: return verify_coinvariant(n);
                case Suite::extreme_identity: return extreme_item(n);
                case Suite::gram: return gram_item(n, options);
                case Suite::recursion: break;
            }
            return {};
        });
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        report.cases += results[i].cases;
        if (report.passed && !results[i]) {
            report.passed = false;
            if (labels.empty())
                report.failing_n = static_cast<int>(i) + 1;
            report.counterexample = labels.empty() ? results[i].counterexample
                                                   : labels[i] + ": " + results[i].counterexample;
        }
    }
    return report;
}

}  // namespace blockchar
