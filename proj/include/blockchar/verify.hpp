#pragma once

// Named identity suites run over n = 1..n_max on a worker pool. Items are
// evaluated independently and reported in n order, so the first failure is
// the smallest counterexample whatever the scheduling.

#include "blockchar/block_function.hpp"
#include "blockchar/check_result.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blockchar {

enum class Suite { branching, duality, inversion, regular, coinvariant, recursion, extreme_identity, gram };

std::string_view suite_name(Suite suite);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Deliberately broken variants of two identities, for mutation testing.
enum class Fault { none, branching, regular };
Fault parse_fault(std::string_view name);

struct SuiteOptions {
    Fault fault = Fault::none;
    /// 0 means BLOCKCHAR_THREADS, falling back to the hardware count.
    int threads = 0;
    /// Random block functions per n in the gram suite.
    int gram_samples = 40;
    std::uint64_t gram_seed = 20240601;
};

struct SuiteReport {
    Suite suite = Suite::branching;
    int n_max = 0;
    bool passed = true;
    long long cases = 0;
    /// n of the first failing item.
    std::optional<int> failing_n;
    std::string counterexample;
};

/// Largest n_max each suite accepts; BoundError beyond it.
int suite_bound(Suite suite);

SuiteReport run_suite(Suite suite, int n_max, const SuiteOptions& options = {});

/// Worker count from BLOCKCHAR_THREADS (ignored unless a positive integer).
int default_thread_count();

/// Runs item(i) for i in [0, count) on `threads` workers; results keep index order.
std::vector<CheckResult> run_parallel(int count, int threads, const std::function<CheckResult(int)>& item);

/// Random block function on S_n whose tau coefficients are small integers,
/// negative with some probability; used by the gram suite.
BlockFunction random_block_function(int n, std::uint64_t seed);

}  // namespace blockchar
