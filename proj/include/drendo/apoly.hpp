#ifndef DRENDO_APOLY_HPP
#define DRENDO_APOLY_HPP

#include <utility>
#include <vector>

#include "drendo/fq.hpp"

namespace drendo {

/// Dense polynomial in T over F_q.  Canonical form: no trailing zero
/// coefficients, the zero polynomial is the empty vector (degree -1).
struct APoly {
    std::vector<FqElt> c;

    APoly() = default;
    explicit APoly(std::vector<FqElt> coeffs) : c(std::move(coeffs)) { normalize(); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    FqElt lead() const { return c.empty() ? 0 : c.back(); }
    FqElt coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const APoly& o) const { return c == o.c; }
    bool operator!=(const APoly& o) const { return !(*this == o); }

    static APoly zero() { return APoly(); }
    static APoly one() { return APoly({1}); }
    static APoly T() { return APoly({0, 1}); }
    static APoly constant(FqElt v) { return v ? APoly({v}) : APoly(); }
};

APoly add(const Fq& F, const APoly& a, const APoly& b);
APoly sub(const Fq& F, const APoly& a, const APoly& b);
APoly neg(const Fq& F, const APoly& a);
APoly mul(const Fq& F, const APoly& a, const APoly& b);
APoly mul(const Fq& F, const APoly& a, FqElt s);
APoly shift(const APoly& a, unsigned k);  // a * T^k

// f = q*g + r with deg r < deg g.  Throws on g = 0.
std::pair<APoly, APoly> divrem(const Fq& F, const APoly& f, const APoly& g);
APoly rem(const Fq& F, const APoly& f, const APoly& g);
bool divides(const Fq& F, const APoly& g, const APoly& f);
APoly divexact(const Fq& F, const APoly& f, const APoly& g);

APoly monic(const Fq& F, const APoly& a);
// Monic gcd; gcd(0, 0) = 0.
APoly gcd(const Fq& F, APoly a, APoly b);
// g = gcd monic, and u with u*a = g (mod m).  Used for modular inverses.
APoly invmod(const Fq& F, const APoly& a, const APoly& m);

APoly powmod(const Fq& F, APoly base, unsigned long long e, const APoly& m);
// base^(2^k) mod m: k successive squarings.
APoly sqpowmod(const Fq& F, APoly base, unsigned k, const APoly& m);

APoly derivative(const Fq& F, const APoly& a);
FqElt eval(const Fq& F, const APoly& a, FqElt x);

// Degree first, then coefficients from the highest power down.
int cmp(const APoly& a, const APoly& b);

unsigned multiplicity(const Fq& F, const APoly& a, const APoly& p);

APoly poly_from_ints(const Fq& F, const std::vector<long long>& coeffs);

}  // namespace drendo

#endif
