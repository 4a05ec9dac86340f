#pragma once

// Shared fixtures for the unit suites: the two worked-example towers and a
// couple of tiny independent oracles kept deliberately separate from the
// library code paths they check.

#include <cstdint>
#include <memory>

#include "gabfield/code.hpp"
#include "gabfield/parse.hpp"

namespace testhelpers {

using namespace gabfield;

inline std::shared_ptr<const FqContext> f16() {
    static auto ctx = FqContext::make(2, 4, {1, 1, 0, 0, 1}, "β");
    return ctx;
}

inline std::shared_ptr<const FqContext> f5() {
    static auto ctx = FqContext::make(5, 1);
    return ctx;
}

inline std::shared_ptr<const FqContext> f2() {
    static auto ctx = FqContext::make(2, 1);
    return ctx;
}

/// L = F16(x)[y]/(y^5 - x) with θ(y) = β^3 y.
inline std::shared_ptr<const CyclicExtension> kummer_ext() {
    static auto ext = CyclicExtension::make_kummer(
        f16(), RatFunc::x_power(*f16(), 1), 5, parse_fq("β^3", *f16()));
    return ext;
}

/// L = F5(x)[y]/(y^5 - y - x) with θ(y) = y + 1.
inline std::shared_ptr<const CyclicExtension> artin_schreier_ext() {
    static auto ext =
        CyclicExtension::make_artin_schreier(f5(), RatFunc::x_power(*f5(), 1));
    return ext;
}

// --- independent F16 oracle (4-bit carryless arithmetic, no library code) ---

inline std::uint32_t oracle_f16_mul(std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        if (a & 0x10) a ^= 0x13;  // β^4 = β + 1
        b >>= 1;
    }
    return r;
}

inline std::uint32_t oracle_f16_pow(std::uint32_t a, unsigned e) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = oracle_f16_mul(r, a);
        a = oracle_f16_mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t oracle_f16_inv(std::uint32_t a) {
    for (std::uint32_t b = 1; b < 16; ++b)
        if (oracle_f16_mul(a, b) == 1) return b;
    return 0;
}

}  // namespace testhelpers
