#ifndef DRENDO_QUADORDER_HPP
#define DRENDO_QUADORDER_HPP

#include "drendo/charpoly.hpp"
#include "drendo/factor.hpp"

namespace drendo {

enum class OrderCase { Odd, EvenInsep, EvenSep };

/// Rank-2 maximal order O_K = A[alpha] together with the index c_pi of
/// A[pi] and the relation c_pi * alpha = m + n * pi (n a unit of F_q).
struct MaximalOrderData {
    OrderCase kind = OrderCase::Odd;
    APoly f1, f0;  // minimal polynomial f(X) = X^2 + f1 X + f0 of alpha
    APoly c_pi;    // monic
    APoly m;
    FqElt n_unit = 1;

    // Odd characteristic: discriminant data.
    APoly delta_pi, delta_max;
    // Even inseparable: eps*p = s^2 + T c^2.
    APoly s_even, c_even;
    // Even separable: different, its primes with exponents, the reduced
    // Artin-Schreier numerator, and the leading unit of the trace.
    APoly different;
    std::vector<std::pair<APoly, unsigned>> as_primes;
    APoly as_numerator;
    FqElt lc_a = 1;
};

MaximalOrderData maximal_order_odd(const Fq& F, const FrobeniusData& fd);
MaximalOrderData maximal_order_even_insep(const Fq& F, const FrobeniusData& fd);
MaximalOrderData maximal_order_even_sep(const Fq& F, const FrobeniusData& fd,
                                        std::uint64_t seed = 1);
// Case dispatch on the parity of q and the trace.
MaximalOrderData maximal_order(const Fq& F, const FrobeniusData& fd, std::uint64_t seed = 1);

// Exact per-case identity linking (m, n, c_pi, f) to P(X); throws on failure.
void verify_maximal_order(const Fq& F, const FrobeniusData& fd, const MaximalOrderData& mo);

// Solves m^2 + a*m = h over A (characteristic 2).  The record of how each
// coefficient was pinned is exposed for the structural assertions.
struct QuadSolveInfo {
    APoly m;
    std::vector<char> rule;  // per coefficient index: 's' sqrt, 'q' quadratic, 'l' linear
};
std::optional<QuadSolveInfo> solve_m_quadratic(const Fq& F, const APoly& a, const APoly& h);

}  // namespace drendo

#endif
