#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

#include "racah/gaussian.hpp"

namespace racah {

// Compile-time capacities. The ring dimension n is a runtime value bounded
// by kMaxDim; unused slots stay zero so monomials compare bytewise.
inline constexpr int kMaxDim = 8;             // coordinates x_1..x_n, p_1..p_n
inline constexpr int kMaxPot = 4;             // potential tower slots V^(0)..V^(3)
inline constexpr int kMaxPar = kMaxDim + 3;   // hbar, omega, mu, a_1..a_n

// Formal-parameter indices inside Mono::pp.
inline constexpr int kParHbar = 0;
inline constexpr int kParOmega = 1;
inline constexpr int kParMu = 2;
/// Parameter slot of a_i (1-based coordinate index).
inline constexpr int par_a(int i) { return 3 + (i - 1); }

/// One monomial: Laurent powers of x_i, powers of p_i, a single r power,
/// potential-tower powers, and nonnegative powers of the formal parameters.
/// In the classical ring all factors commute; in the Weyl ring the momentum
/// exponents are the normal-ordered right factor p^ep.
///
/// Canonical form keeps er <= 1; any r^2 is expanded through r^2 = sum x_i^2.
struct Mono {
    std::array<int8_t, kMaxDim> ex{};
    std::array<uint8_t, kMaxDim> ep{};
    int8_t er = 0;
    std::array<uint8_t, kMaxPot> ev{};
    std::array<uint8_t, kMaxPar> pp{};

    bool is_unit() const {
        static const Mono kUnit{};
        return *this == kUnit;
    }

    friend bool operator==(const Mono& a, const Mono& b) {
        return std::memcmp(&a, &b, sizeof(Mono)) == 0;
    }

    /// Numeric lexicographic order on (ex, ep, er, ev, pp); this is the
    /// storage and serialization order.
    friend bool operator<(const Mono& a, const Mono& b) {
        for (int i = 0; i < kMaxDim; ++i)
            if (a.ex[i] != b.ex[i]) return a.ex[i] < b.ex[i];
        for (int i = 0; i < kMaxDim; ++i)
            if (a.ep[i] != b.ep[i]) return a.ep[i] < b.ep[i];
        if (a.er != b.er) return a.er < b.er;
        for (int i = 0; i < kMaxPot; ++i)
            if (a.ev[i] != b.ev[i]) return a.ev[i] < b.ev[i];
        for (int i = 0; i < kMaxPar; ++i)
            if (a.pp[i] != b.pp[i]) return a.pp[i] < b.pp[i];
        return false;
    }
};

static_assert(sizeof(Mono) == 2 * kMaxDim + 1 + kMaxPot + kMaxPar,
              "Mono must stay densely packed (bytewise comparable)");

struct MonoHash {
    size_t operator()(const Mono& m) const {
        // FNV-1a over the packed bytes.
        const unsigned char* b = reinterpret_cast<const unsigned char*>(&m);
        uint64_t h = 1469598103934665603ull;
        for (size_t i = 0; i < sizeof(Mono); ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

using Term = std::pair<Mono, GRat>;

/// Ring shape: dimension n (>= 2) and potential tower depth kpot, meaning
/// the symbols V^(0)..V^(kpot) exist and d/dx_i V^(kpot) is an error.
struct RingDims {
    uint8_t n = 0;
    uint8_t kpot = 0;

    friend bool operator==(RingDims a, RingDims b) {
        return a.n == b.n && a.kpot == b.kpot;
    }
};

inline void check_dims(RingDims a, RingDims b, const char* op) {
    if (!(a == b))
        throw std::invalid_argument(std::string(op) +
                                    ": operands from different rings");
}

inline int8_t chk_e(int v, const char* what) {
    if (v < -127 || v > 127)
        throw std::overflow_error(std::string(what) + " exponent out of range");
    return static_cast<int8_t>(v);
}

inline uint8_t chk_u(int v, const char* what) {
    if (v < 0 || v > 255)
        throw std::overflow_error(std::string(what) + " exponent out of range");
    return static_cast<uint8_t>(v);
}

}  // namespace racah
