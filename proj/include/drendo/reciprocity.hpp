#ifndef DRENDO_RECIPROCITY_HPP
#define DRENDO_RECIPROCITY_HPP

#include "drendo/endoring.hpp"
#include "drendo/structure.hpp"

namespace drendo {

/// Two-sided evaluation of the split-completely criterion at (p, n):
/// the torsion-rationality oracle against the congruence conditions on
/// the trace coefficient and the first refined index b_1.
struct ReciprocityReport {
    APoly prime, modulus;
    bool splits_direct = false;
    bool congruence_trace = false;
    bool congruence_index = false;
    bool index_evaluated = false;  // b_1 computed (rank 2 only)
    bool equivalence_checked = false;
    APoly b1;
    APoly d1_predicted, d1_actual;
    bool d2_ok = false;      // generator formula exact and matches (rank 2)
    APoly d2_generator;
};

// True iff every root of phi_n(x) mod p lies in F_p, evaluated on the
// reduction by q-power modular exponentiation (remainder of tau^d under
// right division by phi_n equal to x).  Requires p good and p not
// dividing n; units split trivially.
bool splits_completely_direct(const GlobalDrinfeldModule& phi, const APoly& p, const APoly& n);

// Main evaluation, p coprime to the rank.  Asserts the equivalence
//   splits  <=>  a_1 + r = 0 (mod n)  and  n | b_1,
// and fills the gcd prediction d1 = gcd(b_1, a_1 + r) plus the d_2
// generator (1 + a_1 + eps*p)/gcd(b_1, a_1 + r).
ReciprocityReport reciprocity_check(const GlobalDrinfeldModule& phi, const APoly& p,
                                    const APoly& n, std::uint64_t seed = 1);

// Variant when the characteristic divides the rank (n must be prime;
// r = p^s r'): the trace congruence becomes a_{p^s} + r' = 0 (mod n).
// The index side is evaluated for rank 2 only.
ReciprocityReport reciprocity_check_p_divides_r(const GlobalDrinfeldModule& phi, const APoly& p,
                                                const APoly& n, std::uint64_t seed = 1);

}  // namespace drendo

#endif
