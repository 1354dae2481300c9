#pragma once

#include <gmpxx.h>

#include <vector>

#include "racah/term.hpp"

namespace racah {

/// An exact evaluation point: integer coordinates whose squared norm is a
/// perfect square (so r is an exact integer), integer momenta, and rational
/// values for the potential tower and the formal parameters.
struct RadialPoint {
    std::vector<long> x;           // size n, all nonzero
    std::vector<long> p;           // size n
    long r = 0;                    // > 0, r*r == sum x_i^2
    std::vector<mpq_class> vpot;   // values of V^(0)..V^(K)
    std::vector<mpq_class> par;    // values of hbar, omega, mu, a_1..a_n

    /// Value of parameter slot (kParHbar / kParOmega / kParMu / par_a(i)).
    const mpq_class& param(int slot) const { return par.at(slot); }

    /// Throws if the point violates its own invariants for dimension n.
    void validate(int n) const;
};

}  // namespace racah
