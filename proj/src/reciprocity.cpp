#include "drendo/reciprocity.hpp"

namespace drendo {

namespace {

ResidueCtx make_ctx(const GlobalDrinfeldModule& phi, const APoly& p) {
    if (!has_good_reduction(phi, p))
        throw invalid_input("reciprocity: p is a bad-reduction prime");
    return ResidueCtx(*phi.F, p);
}

void check_coprime(const Fq& F, const APoly& p, const APoly& n) {
    if (n.is_zero()) throw invalid_input("reciprocity: modulus must be nonzero");
    if (n.deg() > 0 && divides(F, p, n))
        throw invalid_input("reciprocity: p divides the modulus");
}

}  // namespace

bool splits_completely_direct(const GlobalDrinfeldModule& phi, const APoly& p, const APoly& n) {
    const Fq& F = *phi.F;
    check_coprime(F, p, n);
    if (n.deg() <= 0) return true;
    ResidueCtx R = make_ctx(phi, p);
    ReducedDrinfeldModule red = reduce(phi, R);
    return torsion_splits(red, n);
}

ReciprocityReport reciprocity_check(const GlobalDrinfeldModule& phi, const APoly& p,
                                    const APoly& n, std::uint64_t seed) {
    const Fq& F = *phi.F;
    const unsigned r = phi.rank();
    if (r % F.p() == 0)
        throw invalid_input("reciprocity_check: characteristic divides the rank");
    check_coprime(F, p, n);

    ResidueCtx R = make_ctx(phi, p);
    ReducedDrinfeldModule red = reduce(phi, R);
    FrobeniusData fd = frobenius_charpoly(red);

    ReciprocityReport rep;
    rep.prime = p;
    rep.modulus = n;
    rep.splits_direct = n.deg() <= 0 ? true : torsion_splits(red, n);

    APoly a1_plus_r = add(F, fd.a[0], APoly::constant(F.from_int(r)));
    rep.congruence_trace = n.deg() <= 0 || rem(F, a1_plus_r, n).is_zero();

    if (r == 2) {
        MaximalOrderData mo = maximal_order(F, fd, seed);
        EndoRingData er = endomorphism_index(red, fd, mo, seed);
        rep.b1 = er.b;
        rep.index_evaluated = true;
        rep.congruence_index = n.deg() <= 0 || divides(F, n, er.b);

        rep.equivalence_checked = true;
        if (rep.splits_direct != (rep.congruence_trace && rep.congruence_index))
            throw internal_error("reciprocity: congruence criterion disagrees with the oracle");

        rep.d1_predicted = gcd(F, er.b, a1_plus_r);
        rep.d1_actual = elementary_divisors(red, fd, seed).d[0];

        // (1 + a_1 + eps*p) / gcd(b_1, a_1 + r) generates d_2.
        APoly p1 = add(F, APoly::one(), add(F, fd.a[0], mul(F, fd.prime, fd.epsilon)));
        auto [quot, remv] = divrem(F, p1, rep.d1_predicted);
        if (remv.is_zero()) {
            rep.d2_generator = quot;
            DivisorProfile prof = elementary_divisors(red, fd, seed);
            rep.d2_ok = monic(F, quot) == prof.d[1];
        }
    }
    return rep;
}

ReciprocityReport reciprocity_check_p_divides_r(const GlobalDrinfeldModule& phi, const APoly& p,
                                                const APoly& n, std::uint64_t seed) {
    const Fq& F = *phi.F;
    const unsigned r = phi.rank();
    if (n.deg() >= 1 && !is_irreducible(F, n))
        throw invalid_input("reciprocity (p | r): modulus must be prime");
    check_coprime(F, p, n);

    ResidueCtx R = make_ctx(phi, p);
    ReducedDrinfeldModule red = reduce(phi, R);
    FrobeniusData fd = frobenius_charpoly(red);

    // r = p^s r' with p not dividing r'.
    unsigned ps = 1, rp = r;
    while (rp % F.p() == 0) {
        rp /= F.p();
        ps *= F.p();
    }

    ReciprocityReport rep;
    rep.prime = p;
    rep.modulus = n;
    rep.splits_direct = n.deg() <= 0 ? true : torsion_splits(red, n);

    APoly lhs = add(F, fd.a[ps - 1], APoly::constant(F.from_int(rp)));
    rep.congruence_trace = n.deg() <= 0 || rem(F, lhs, n).is_zero();

    if (r == 2) {
        MaximalOrderData mo = maximal_order(F, fd, seed);
        EndoRingData er = endomorphism_index(red, fd, mo, seed);
        rep.b1 = er.b;
        rep.index_evaluated = true;
        rep.congruence_index = n.deg() <= 0 || divides(F, n, er.b);
        rep.equivalence_checked = true;
        if (rep.splits_direct != (rep.congruence_trace && rep.congruence_index))
            throw internal_error("reciprocity (p | r): criterion disagrees with the oracle");
    }
    return rep;
}

}  // namespace drendo
