#include "drendo/structure.hpp"

#include <algorithm>

#include "drendo/factor.hpp"

namespace drendo {

APoly exponent(const ReducedDrinfeldModule& phi) {
    const ResidueCtx& R = phi.ctx();
    const Fq& F = R.field();
    const unsigned d = R.d();
    SkewPoly phiT = phi.phi_T();

    // Seek d = x_0 + x_1 T + ... + x_{d-1} T^{d-1} + T^d with phi_d = 0 on
    // F_p.  Testing on the basis theta^k gives one affine system per k.
    std::vector<FqMat> Ms(d);
    std::vector<std::vector<FqElt>> Ns(d);
    for (unsigned k = 0; k < d; ++k) {
        FqMat M(d, d);
        ResElt v = R.zero();
        v.c[k] = 1;  // theta^k
        M.at(0, k) = 1;
        for (unsigned i = 1; i <= d; ++i) {
            v = apply(phiT, v);  // phi_{T^i}(theta^k)
            if (i < d) {
                for (unsigned j = 0; j < d; ++j) M.at(i, j) = v.c[j];
            } else {
                std::vector<FqElt> N(d);
                for (unsigned j = 0; j < d; ++j) N[j] = F.neg(v.c[j]);
                Ns[k] = std::move(N);
            }
        }
        Ms[k] = std::move(M);
    }

    auto sol = solve_affine_system(F, Ms, Ns);
    if (!sol) throw internal_error("exponent: annihilator system inconsistent");

    auto monic_of = [&](const std::vector<FqElt>& y) {
        std::vector<FqElt> c(y.begin(), y.end());
        c.resize(d + 1, 0);
        c[d] = 1;
        return APoly(std::move(c));
    };

    APoly g = monic_of(sol->particular);
    for (const auto& b : sol->nullspace) {
        std::vector<FqElt> y(d);
        for (unsigned i = 0; i < d; ++i) y[i] = F.add(sol->particular[i], b[i]);
        g = gcd(F, g, monic_of(y));
    }
    return g;
}

unsigned kernel_dimension(const ReducedDrinfeldModule& phi, const APoly& f) {
    const ResidueCtx& R = phi.ctx();
    const unsigned d = R.d();
    SkewPoly op = phi.phi(f);
    FqMat M(d, d);
    for (unsigned j = 0; j < d; ++j) {
        ResElt v = R.zero();
        v.c[j] = 1;
        ResElt w = apply(op, v);
        for (unsigned i = 0; i < d; ++i) M.at(i, j) = w.c[i];
    }
    return d - rank(R.field(), M);
}

bool torsion_splits(const ReducedDrinfeldModule& phi, const APoly& f) {
    if (f.deg() <= 0) {
        if (f.is_zero()) throw invalid_input("torsion_splits: zero polynomial");
        return true;
    }
    const ResidueCtx& R = phi.ctx();
    if (R.reduce(f).is_zero())
        throw invalid_input("torsion_splits: p divides f (inseparable torsion)");
    SkewPoly rem = right_divrem(SkewPoly::tau_power(R, R.d()), phi.phi(f)).second;
    return rem == SkewPoly::one(R);
}

APoly first_divisor(const ReducedDrinfeldModule& phi, const FrobeniusData& fd,
                    std::uint64_t seed) {
    const Fq& F = phi.ctx().field();
    const unsigned r = phi.rank();
    if (r == 1) return euler_characteristic(F, fd);

    APoly chi = euler_characteristic(F, fd);
    APoly expnt = exponent(phi);
    APoly d1 = APoly::one();
    for (const auto& [q, mult_dr] : factorize(F, expnt, seed).factors) {
        if (q == fd.prime) continue;
        unsigned cap = std::min(mult_dr, multiplicity(F, chi, q) / r);
        APoly qe = APoly::one();
        unsigned best = 0;
        for (unsigned e = 1; e <= cap; ++e) {
            qe = mul(F, qe, q);
            if (!torsion_splits(phi, qe)) break;
            best = e;
        }
        for (unsigned e = 0; e < best; ++e) d1 = mul(F, d1, q);
    }
    return d1;
}

namespace {

// Non-decreasing middle exponents x_2 <= ... <= x_{r-1} between lo and hi
// with the given sum.
void middle_tuples(unsigned slots, unsigned lo, unsigned hi, unsigned sum, unsigned minv,
                   std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
    if (slots == 0) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    for (unsigned v = std::max(lo, minv); v <= hi && v <= sum; ++v) {
        cur.push_back(v);
        middle_tuples(slots - 1, lo, hi, sum - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

DivisorProfile elementary_divisors(const ReducedDrinfeldModule& phi, const FrobeniusData& fd,
                                   std::uint64_t seed) {
    const Fq& F = phi.ctx().field();
    const unsigned r = phi.rank();

    DivisorProfile out;
    out.d.assign(r, APoly::one());
    out.derivation.assign(r, "");

    APoly chi = euler_characteristic(F, fd);
    if (r == 1) {
        out.d[0] = chi;
        out.derivation[0] = "exponent";
        return out;
    }

    APoly dr = exponent(phi);
    APoly d1 = first_divisor(phi, fd, seed);
    out.derivation[0] = "first-divisor";
    out.derivation[r - 1] = "exponent";
    for (unsigned i = 1; i + 1 < r; ++i) out.derivation[i] = "chi-product";

    for (const auto& [q, chi_mult] : factorize(F, chi, seed).factors) {
        unsigned e_r = multiplicity(F, dr, q);
        unsigned e_1 = multiplicity(F, d1, q);
        std::vector<unsigned> exps;
        if (r == 2) {
            if (e_1 + e_r != chi_mult)
                throw internal_error("elementary divisors: constraints inconsistent");
            exps = {e_1, e_r};
        } else {
            std::vector<std::vector<unsigned>> cands;
            std::vector<unsigned> cur;
            if (chi_mult >= e_1 + e_r)
                middle_tuples(r - 2, e_1, e_r, chi_mult - e_1 - e_r, 0, cur, cands);
            if (cands.empty())
                throw internal_error("elementary divisors: constraints inconsistent");
            if (cands.size() == 1) {
                exps = cands[0];
            } else {
                // Pin the profile at q with kernel dimensions: with
                // N_e = dim ker(phi_{q^e}) / deg q, the count of divisors
                // having q-order >= e is N_e - N_{e-1}.
                std::vector<unsigned> geq(e_r + 1, 0);  // geq[e], e >= 1
                unsigned prev = 0;
                APoly qe = APoly::one();
                for (unsigned e = 1; e <= e_r; ++e) {
                    qe = mul(F, qe, q);
                    unsigned Ne = kernel_dimension(phi, qe) / static_cast<unsigned>(q.deg());
                    geq[e] = Ne - prev;
                    prev = Ne;
                }
                std::vector<unsigned> full(r, 0);
                for (unsigned i = 0; i < r; ++i) {
                    // i-th smallest order: the number of levels e with
                    // geq[e] >= r - i.
                    unsigned v = 0;
                    for (unsigned e = 1; e <= e_r; ++e)
                        if (geq[e] >= r - i) ++v;
                    full[i] = v;
                }
                exps.assign(full.begin() + 1, full.end() - 1);
                if (full.front() != e_1 || full.back() != e_r ||
                    std::find(cands.begin(), cands.end(), exps) == cands.end())
                    throw internal_error("elementary divisors: kernel profile mismatch");
                for (unsigned i = 1; i + 1 < r; ++i) out.derivation[i] = "kernel-dimension";
            }
            exps.insert(exps.begin(), e_1);
            exps.push_back(e_r);
        }
        for (unsigned i = 0; i < r; ++i)
            for (unsigned e = 0; e < exps[i]; ++e) out.d[i] = mul(F, out.d[i], q);
    }

    // Cross-checks: divisibility chain and product = chi.
    APoly prod = APoly::one();
    for (unsigned i = 0; i < r; ++i) {
        prod = mul(F, prod, out.d[i]);
        if (i + 1 < r && !divides(F, out.d[i], out.d[i + 1]))
            throw internal_error("elementary divisors: chain broken");
    }
    if (monic(F, prod) != chi)
        throw internal_error("elementary divisors: product differs from chi");
    return out;
}

DivisorProfile elementary_divisors(const ReducedDrinfeldModule& phi, std::uint64_t seed) {
    FrobeniusData fd = frobenius_charpoly(phi);
    return elementary_divisors(phi, fd, seed);
}

}  // namespace drendo
