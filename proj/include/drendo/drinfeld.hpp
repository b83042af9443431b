#ifndef DRENDO_DRINFELD_HPP
#define DRENDO_DRINFELD_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "drendo/skew.hpp"

namespace drendo {

/// Rational function over A, kept with monic denominator.
struct RatFunc {
    APoly num, den = APoly::one();

    static RatFunc of(APoly p) { return RatFunc{std::move(p), APoly::one()}; }
    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_one(); }
};

RatFunc rf_normalize(const Fq& F, RatFunc r);
RatFunc rf_add(const Fq& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const Fq& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_mul_fq(const Fq& F, const RatFunc& a, FqElt s);
RatFunc rf_pow_q(const Fq& F, const RatFunc& a);  // a^q
bool rf_eq(const Fq& F, const RatFunc& a, const RatFunc& b);
// ord_p: multiplicity of p in num minus multiplicity in den; p irreducible.
// Unbounded (zero numerator) is reported via the bool flag.
std::pair<long, bool> rf_ord_at(const Fq& F, const RatFunc& r, const APoly& p);

/// phi_T = T + g_1 tau + ... + g_r tau^r over F = F_q(T).
struct GlobalDrinfeldModule {
    const Fq* F = nullptr;
    std::vector<RatFunc> g;  // g[i-1] = g_i, i = 1..r; g_r != 0

    unsigned rank() const { return static_cast<unsigned>(g.size()); }
};

GlobalDrinfeldModule make_global(const Fq& F, std::vector<RatFunc> g);
GlobalDrinfeldModule make_global_polys(const Fq& F, const std::vector<APoly>& g);

bool has_good_reduction(const GlobalDrinfeldModule& phi, const APoly& p);

/// Reduction phi (x) F_p, plus the memoized phi_{T^k} ladder.
class ReducedDrinfeldModule {
  public:
    ReducedDrinfeldModule(const ResidueCtx& R, std::vector<ResElt> coeffs);
    ReducedDrinfeldModule(const ReducedDrinfeldModule& o);
    ReducedDrinfeldModule& operator=(const ReducedDrinfeldModule&) = delete;

    const ResidueCtx& ctx() const { return *R_; }
    unsigned rank() const { return static_cast<unsigned>(g_.size()); }
    const std::vector<ResElt>& coeffs() const { return g_; }

    SkewPoly phi_T() const;
    /// Image of a under phi; deg_tau = rank * deg a.
    SkewPoly phi(const APoly& a) const;

    /// epsilon(phi) = (-1)^r (-1)^(d(r+1)) Nr(g_r)^(-1), a unit of F_q.
    FqElt epsilon() const;

  private:
    const ResidueCtx* R_;
    std::vector<ResElt> g_;

    // phi_{T^k} ladder; readers either see a computed entry or extend the
    // ladder idempotently under the lock.
    mutable std::mutex mu_;
    mutable std::vector<SkewPoly> ladder_;
};

ReducedDrinfeldModule reduce(const GlobalDrinfeldModule& phi, const ResidueCtx& R);

// Coefficients (by q-power) of the additive torsion polynomial phi_a(x)
// over F; requires polynomial coefficients or fractions (handled exactly).
std::vector<RatFunc> global_torsion_coeffs(const GlobalDrinfeldModule& phi, const APoly& a);

// Pretty form "(T + 2)x + Tx^3 + x^27" of a reduced torsion polynomial.
std::string additive_to_string(const SkewPoly& f);

}  // namespace drendo

#endif
