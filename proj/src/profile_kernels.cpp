#include "blockchar/profile_kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace blockchar::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detect_isa() {
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() {
    const char* forced = std::getenv("BLOCKCHAR_SIMD");
    if (forced != nullptr && std::string(forced) == "scalar") return Isa::scalar;
    return detect_isa();
}

void evaluate_profile_scalar(std::span<const double> shifted_rows, double length, std::span<const double> points,
                             std::span<double> out) {
    for (std::size_t j = 0; j < points.size(); ++j) {
        const double x = points[j];
        double mass = 0.0;
        for (double row : shifted_rows) mass += std::min(std::max(row + 1.0 - x, 0.0), 1.0);
        mass += std::max(-length - x, 0.0);
        out[j] = x + 2.0 * mass;
    }
}

void evaluate_profile(std::span<const double> shifted_rows, double length, std::span<const double> points,
                      std::span<double> out, Isa isa) {
    if (out.size() < points.size()) throw std::invalid_argument("evaluate_profile: output too short");
    if (!isa_available(isa)) throw std::invalid_argument("evaluate_profile: instruction set not available");
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: evaluate_profile_avx2(shifted_rows, length, points, out); return;
#endif
#if defined(__aarch64__)
        case Isa::neon: evaluate_profile_neon(shifted_rows, length, points, out); return;
#endif
        default: evaluate_profile_scalar(shifted_rows, length, points, out); return;
    }
}

}  // namespace blockchar::simd
