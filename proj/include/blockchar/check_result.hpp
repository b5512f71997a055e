#pragma once

#include <string>
#include <utility>

namespace blockchar {

/// Outcome of an identity check: pass/fail plus the first counterexample.
struct CheckResult {
    bool passed = true;
    long long cases = 0;
    std::string counterexample;

    static CheckResult fail(std::string detail, long long cases = 0) { return {false, cases, std::move(detail)}; }
    explicit operator bool() const { return passed; }
};

}  // namespace blockchar
