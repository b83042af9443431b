#include "drendo/charpoly.hpp"

namespace drendo {

// The coefficients are recovered back to front.  With
//   f_i = phi_{a_i} tau^(d(r-i)) + ... + phi_{a_r},
// the full identity f_1 + tau^(dr) + ... = P(pi) = 0 forces
//   gamma(a_{i-1}) = - [coefficient of tau^(d(r-i+1)) in f_i],
// and a_{i-1} is the unique lift of that residue with deg <= (i-1)d/r < d.
// f_i is accumulated incrementally, one phi_{a} term per step.
FrobeniusData frobenius_charpoly(const ReducedDrinfeldModule& phi) {
    const ResidueCtx& R = phi.ctx();
    const Fq& F = R.field();
    const unsigned r = phi.rank();
    const unsigned d = R.d();

    FrobeniusData fd;
    fd.rank = r;
    fd.prime = R.prime();
    fd.d = d;
    fd.epsilon = phi.epsilon();
    fd.a.assign(r, APoly());
    fd.a[r - 1] = mul(F, fd.prime, fd.epsilon);

    SkewPoly f = phi.phi(fd.a[r - 1]);  // f_r
    for (unsigned i = r; i >= 2; --i) {
        ResElt coeff = f.coeff(static_cast<size_t>(d) * (r - i + 1));
        APoly lifted = R.lift(R.neg(coeff));
        unsigned bound = (i - 1) * d / r;
        if (lifted.deg() > static_cast<int>(bound))
            throw internal_error("charpoly: residue lift violates the degree bound");
        fd.a[i - 2] = lifted;
        if (i > 2) f = add(f, mul_tau_right(phi.phi(lifted), d * (r - i + 1)));
    }

    if (r == 2) {
        // P must be irreducible over F; a root in A would divide a_2 = eps*p,
        // so units and unit multiples of p are the only candidates.
        for (FqElt u = 1; u < F.q(); ++u) {
            for (const APoly& cand : {APoly::constant(u), mul(F, fd.prime, u)}) {
                APoly val =
                    add(F, mul(F, cand, cand), add(F, mul(F, fd.a[0], cand), fd.a[1]));
                if (val.is_zero())
                    throw internal_error("charpoly: P(X) has a root in A");
            }
        }
    }
    return fd;
}

APoly euler_characteristic(const Fq& F, const FrobeniusData& fd) {
    APoly p1 = APoly::one();
    for (const APoly& ai : fd.a) p1 = add(F, p1, ai);
    if (p1.deg() != static_cast<int>(fd.d))
        throw internal_error("euler characteristic: deg chi != deg p");
    return monic(F, p1);
}

APoly trace(const Fq& F, const FrobeniusData& fd) { return neg(F, fd.a[0]); }

bool verify_frobenius_identity(const ReducedDrinfeldModule& phi, const FrobeniusData& fd) {
    const ResidueCtx& R = phi.ctx();
    const unsigned r = fd.rank;
    const unsigned d = fd.d;
    SkewPoly acc = SkewPoly::tau_power(R, d * r);
    for (unsigned i = 1; i <= r; ++i)
        acc = add(acc, mul_tau_right(phi.phi(fd.a[i - 1]), d * (r - i)));
    return acc.is_zero();
}

}  // namespace drendo
