#ifndef DRENDO_FACTOR_HPP
#define DRENDO_FACTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "drendo/apoly.hpp"

namespace drendo {

struct Factorization {
    FqElt unit = 1;
    // Monic irreducibles with multiplicities, sorted by (degree, coeffs).
    std::vector<std::pair<APoly, unsigned>> factors;
};

// h = c^2 * e with c monic and e square-free.  Handles the characteristic-p
// degenerate case (h' = 0) by recursing on the p-th root.
std::pair<APoly, APoly> squarefree_decompose(const Fq& F, const APoly& h);

// h = unit * prod f_j^j with the f_j monic, square-free, pairwise coprime.
std::vector<std::pair<APoly, unsigned>> squarefree_factorization(const Fq& F, APoly h);

// Full factorization: square-free split, then distinct-degree, then
// randomized equal-degree splitting (Cantor-Zassenhaus; seeded).
Factorization factorize(const Fq& F, const APoly& h, std::uint64_t seed = 1);

bool is_irreducible(const Fq& F, const APoly& f);

/// Yields the monic irreducibles of one degree in lexicographic order
/// (coefficients compared from the highest power of T down).
class PrimeEnumerator {
  public:
    PrimeEnumerator(const Fq& F, unsigned degree);
    std::optional<APoly> next();

  private:
    const Fq& F_;
    unsigned degree_;
    std::vector<FqElt> counter_;  // coefficients 0..degree-1
    bool done_ = false;
    bool step();
};

std::vector<APoly> primes_of_degree(const Fq& F, unsigned d);

// (1/d) sum_{k | d} mu(k) q^(d/k)
std::uint64_t count_monic_irreducibles(std::uint64_t q, unsigned d);

// Square root in A/(prime) for q even (squaring is bijective there).
APoly sqrt_mod_prime(const Fq& F, const APoly& x, const APoly& prime);

// p-th root of a polynomial all of whose exponents are multiples of p.
APoly pth_root(const Fq& F, const APoly& h);

}  // namespace drendo

#endif
