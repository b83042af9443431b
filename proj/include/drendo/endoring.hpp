#ifndef DRENDO_ENDORING_HPP
#define DRENDO_ENDORING_HPP

#include <optional>

#include "drendo/quadorder.hpp"

namespace drendo {

/// Index chain data for rank 2: c_pi = [O_K : A[pi]], c_phi = [O_K : E_phi],
/// b = c_pi / c_phi = [E_phi : A[pi]], and a generator x with E_phi = A[x].
struct EndoRingData {
    APoly c_pi, c_phi, b;
    SkewPoly generator;
    // Primes removed from c_1 during the descent, with the solution that
    // witnessed each removal.
    std::vector<std::pair<APoly, SkewPoly>> steps;
};

// Unique x with x*phi_c = phi_m + n*tau^d when the linear system is
// consistent; nullopt otherwise.  c monic nonconstant.
std::optional<SkewPoly> solve_central_equation(const ReducedDrinfeldModule& phi,
                                               const APoly& c, const APoly& m, FqElt n);

// Divisor descent: starting from c_1 = c_pi, repeatedly remove a prime ell
// of c_1 whenever x*phi_{g*ell} = phi_m + n*tau^d has a solution commuting
// with phi_T (g = product removed so far); ends with c_phi = c_1.
EndoRingData endomorphism_index(const ReducedDrinfeldModule& phi, const FrobeniusData& fd,
                                const MaximalOrderData& mo, std::uint64_t seed = 1);

}  // namespace drendo

#endif
