#include "blockchar/verify.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace blockchar;

namespace {

int small_size(Suite suite) {
    switch (suite) {
        case Suite::coinvariant: return 4;
        case Suite::gram: return 4;
        case Suite::inversion: return 7;
        case Suite::duality: return 9;
        default: return 20;
    }
}

}  // namespace

TEST_CASE("suite names round trip") {
    for (Suite s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
    CHECK(all_suites().size() == 8);
    CHECK(suite_name(Suite::extreme_identity) == "extreme-identity");
    CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
    CHECK(parse_fault("branching") == Fault::branching);
    CHECK(parse_fault("none") == Fault::none);
    CHECK_THROWS_AS(parse_fault("other"), std::invalid_argument);
}

TEST_CASE("every suite passes at small sizes") {
    for (Suite s : all_suites()) {
        SuiteOptions options;
        options.threads = 2;
        options.gram_samples = 10;
        const auto report = run_suite(s, small_size(s), options);
        CHECK_MESSAGE(report.passed, suite_name(s), ": ", report.counterexample);
        CHECK(report.cases > 0);
        CHECK_FALSE(report.failing_n.has_value());
        CHECK(report.counterexample.empty());
        CHECK(report.n_max == small_size(s));
    }
}

TEST_CASE("branching and regular suites reach their bound") {
    SuiteOptions options;
    options.threads = 4;
    CHECK(run_suite(Suite::branching, 60, options).passed);
    CHECK(run_suite(Suite::regular, 60, options).passed);
    CHECK(run_suite(Suite::recursion, 60, options).passed);
}

TEST_CASE("injected faults give the minimal counterexample") {
    for (int threads : {1, 3, 8}) {
        SuiteOptions options;
        options.threads = threads;
        options.fault = Fault::branching;
        const auto b = run_suite(Suite::branching, 12, options);
        CHECK_FALSE(b.passed);
        REQUIRE(b.failing_n.has_value());
        CHECK(*b.failing_n == 2);
        CHECK(b.counterexample.find("tau_2^2") != std::string::npos);

        options.fault = Fault::regular;
        const auto r = run_suite(Suite::regular, 12, options);
        CHECK_FALSE(r.passed);
        REQUIRE(r.failing_n.has_value());
        CHECK(*r.failing_n == 1);
    }
    SuiteOptions options;
    options.fault = Fault::branching;
    CHECK(run_suite(Suite::regular, 5, options).passed);
}

TEST_CASE("reports do not depend on the thread count") {
    SuiteOptions one;
    one.threads = 1;
    one.gram_samples = 8;
    SuiteOptions many = one;
    many.threads = 6;
    for (Suite s : all_suites()) {
        const auto a = run_suite(s, std::min(small_size(s), 6), one);
        const auto b = run_suite(s, std::min(small_size(s), 6), many);
        CHECK(a.passed == b.passed);
        CHECK(a.cases == b.cases);
        CHECK(a.counterexample == b.counterexample);
    }
}

TEST_CASE("suite bounds") {
    CHECK_THROWS_AS(run_suite(Suite::coinvariant, 6), BoundError);
    CHECK_THROWS_AS(run_suite(Suite::gram, 6), BoundError);
    CHECK_THROWS_AS(run_suite(Suite::branching, 61), BoundError);
    CHECK_THROWS_AS(run_suite(Suite::branching, 0), std::invalid_argument);
    for (Suite s : all_suites()) CHECK(suite_bound(s) >= 5);
}

TEST_CASE("worker pool") {
    const auto results = run_parallel(50, 7, [](int i) {
        return i % 13 == 5 ? CheckResult::fail("item " + std::to_string(i), i) : CheckResult{true, i, {}};
    });
    REQUIRE(results.size() == 50);
    for (int i = 0; i < 50; ++i) {
        CHECK(results[i].cases == i);
        CHECK(results[i].passed == (i % 13 != 5));
    }
    CHECK_THROWS_AS(run_parallel(10, 3,
                                 [](int i) -> CheckResult {
                                     if (i == 4) throw std::runtime_error("boom");
                                     return {};
                                 }),
                    std::runtime_error);
    CHECK(run_parallel(0, 4, [](int) { return CheckResult{}; }).empty());
}

TEST_CASE("thread count from the environment") {
    setenv("BLOCKCHAR_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    setenv("BLOCKCHAR_THREADS", "zero", 1);
    CHECK(default_thread_count() >= 1);
    setenv("BLOCKCHAR_THREADS", "-2", 1);
    CHECK(default_thread_count() >= 1);
    unsetenv("BLOCKCHAR_THREADS");
    CHECK(default_thread_count() >= 1);
}

TEST_CASE("random block functions are reproducible") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CHECK(random_block_function(n, seed) == random_block_function(n, seed));
            CHECK(random_block_function(n, seed).n() == n);
        }
    int characters = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) characters += is_character(random_block_function(4, seed)).is_character;
    CHECK(characters > 20);
    CHECK(characters < 80);
}
