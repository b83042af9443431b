#ifndef DRENDO_STRUCTURE_HPP
#define DRENDO_STRUCTURE_HPP

#include <string>

#include "drendo/charpoly.hpp"

namespace drendo {

/// Elementary divisors d_1 | d_2 | ... | d_r of the A-module F_p under phi,
/// with a note per entry saying which rule pinned it down.
struct DivisorProfile {
    std::vector<APoly> d;
    std::vector<std::string> derivation;
};

// The exponent d_r: minimal monic annihilator of F_p under phi.  Solves the
// simultaneous affine systems x*M_k = N_k and takes the gcd of the monic
// degree-d polynomials attached to the solution family.
APoly exponent(const ReducedDrinfeldModule& phi);

// dim_Fq of ker(phi_f acting on F_p).
unsigned kernel_dimension(const ReducedDrinfeldModule& phi, const APoly& f);

// Whether every root of phi_f(x) lies in F_p, i.e. phi_f(x) | x^(q^d) - x.
// Decided by q-power modular exponentiation: the remainder of tau^d under
// right division by phi_f must be the identity additive polynomial x.
// Requires gamma(f) != 0 (p does not divide f); constants split trivially.
bool torsion_splits(const ReducedDrinfeldModule& phi, const APoly& f);

// d_1: the largest monic f, p not dividing f, with phi_f split over F_p.
APoly first_divisor(const ReducedDrinfeldModule& phi, const FrobeniusData& fd,
                    std::uint64_t seed = 1);

DivisorProfile elementary_divisors(const ReducedDrinfeldModule& phi, const FrobeniusData& fd,
                                   std::uint64_t seed = 1);
DivisorProfile elementary_divisors(const ReducedDrinfeldModule& phi, std::uint64_t seed = 1);

}  // namespace drendo

#endif
