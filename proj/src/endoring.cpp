#include "drendo/endoring.hpp"

#include <algorithm>

namespace drendo {

std::optional<SkewPoly> solve_central_equation(const ReducedDrinfeldModule& phi,
                                               const APoly& c, const APoly& m, FqElt n) {
    const ResidueCtx& R = phi.ctx();
    if (c.deg() < 1 || c.lead() != 1)
        throw invalid_input("solve_central_equation: c must be monic nonconstant");

    SkewPoly rhs = add(phi.phi(m), mul_res(SkewPoly::tau_power(R, R.d()), R.from_fq(n)));
    SkewPoly phic = phi.phi(c);
    const int s = rhs.deg() - phic.deg();
    if (s < 0) return std::nullopt;

    // (x * phi_c)_k = sum_i x_i * (phi_c)_{k-i}^(q^i): linear over F_p.
    const int nrows = rhs.deg() + 1;
    std::vector<std::vector<ResElt>> A(nrows, std::vector<ResElt>(s + 1, R.zero()));
    std::vector<ResElt> b(nrows, R.zero());
    for (int k = 0; k < nrows; ++k) {
        for (int i = std::max(0, k - phic.deg()); i <= std::min(s, k); ++i)
            A[k][i] = R.frob_pow(phic.coeff(k - i), static_cast<unsigned>(i));
        b[k] = rhs.coeff(k);
    }
    ResOps ops{R};
    auto sol = LinSolve<ResOps>::solve(ops, std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    if (!sol->second.empty())
        throw internal_error("solve_central_equation: solution not unique");
    return SkewPoly(R, std::move(sol->first));
}

EndoRingData endomorphism_index(const ReducedDrinfeldModule& phi, const FrobeniusData& fd,
                                const MaximalOrderData& mo, std::uint64_t seed) {
    if (fd.rank != 2) throw invalid_input("endomorphism_index: rank must be 2");
    const ResidueCtx& R = phi.ctx();
    const Fq& F = R.field();
    SkewPoly phi_T = phi.phi_T();

    EndoRingData out;
    out.c_pi = mo.c_pi;
    APoly c1 = mo.c_pi;
    APoly removed = APoly::one();
    // x = phi-image of c_pi*alpha solves the g = 1 instance by definition.
    out.generator =
        add(phi.phi(mo.m), mul_res(SkewPoly::tau_power(R, R.d()), R.from_fq(mo.n_unit)));

    bool progress = c1.deg() >= 1;
    while (progress) {
        progress = false;
        auto fact = factorize(F, c1, seed);
        for (const auto& [ell, mult] : fact.factors) {
            APoly cand = mul(F, removed, ell);
            auto x = solve_central_equation(phi, cand, mo.m, mo.n_unit);
            if (!x || !commutes_with(*x, phi_T)) continue;
            removed = std::move(cand);
            c1 = divexact(F, c1, ell);
            out.steps.emplace_back(ell, *x);
            out.generator = std::move(*x);
            progress = c1.deg() >= 1;
            break;
        }
    }

    out.c_phi = c1;
    out.b = removed;
    if (!divides(F, out.c_phi, out.c_pi))
        throw internal_error("endomorphism_index: c_phi does not divide c_pi");
    return out;
}

}  // namespace drendo
