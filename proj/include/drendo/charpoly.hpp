#ifndef DRENDO_CHARPOLY_HPP
#define DRENDO_CHARPOLY_HPP

#include "drendo/drinfeld.hpp"

namespace drendo {

/// P(X) = X^r + a_1 X^(r-1) + ... + a_r, the characteristic (= minimal)
/// polynomial of the Frobenius pi = tau^d.  Invariants: deg a_i <= i*d/r,
/// a_r = epsilon(phi)*p, and P(pi) = 0 in F_p{tau}.
struct FrobeniusData {
    unsigned rank = 0;
    APoly prime;
    unsigned d = 0;
    std::vector<APoly> a;  // a[i] = a_{i+1}
    FqElt epsilon = 1;
};

FrobeniusData frobenius_charpoly(const ReducedDrinfeldModule& phi);

// Monic generator of P(1)A; its degree always equals d.
APoly euler_characteristic(const Fq& F, const FrobeniusData& fd);

// The trace -a_1 (tables list P(X) = X^2 - aX + eps*p for rank 2).
APoly trace(const Fq& F, const FrobeniusData& fd);

// Exact check of tau^(dr) + phi_{a_1} tau^(d(r-1)) + ... + phi_{a_r} = 0.
bool verify_frobenius_identity(const ReducedDrinfeldModule& phi, const FrobeniusData& fd);

}  // namespace drendo

#endif
