#ifndef DRENDO_RESIDUE_HPP
#define DRENDO_RESIDUE_HPP

#include <vector>

#include "drendo/apoly.hpp"
#include "drendo/linalg.hpp"

namespace drendo {

/// Element of F_p = A/p in the basis 1, theta, ..., theta^(d-1); the
/// coefficient vector always has length exactly d.
struct ResElt {
    std::vector<FqElt> c;

    bool operator==(const ResElt& o) const { return c == o.c; }
    bool operator!=(const ResElt& o) const { return !(*this == o); }
    bool is_zero() const {
        for (FqElt x : c)
            if (x) return false;
        return true;
    }
};

/// Residue field context: the prime p, reduction tables for theta powers,
/// and the matrices of the q-power Frobenius iterates.
class ResidueCtx {
  public:
    ResidueCtx(const Fq& F, APoly prime);

    const Fq& field() const { return *F_; }
    const APoly& prime() const { return prime_; }
    unsigned d() const { return d_; }

    ResElt zero() const { return ResElt{std::vector<FqElt>(d_, 0)}; }
    ResElt one() const { return from_fq(1); }
    ResElt theta() const;
    ResElt from_fq(FqElt v) const {
        ResElt r = zero();
        r.c[0] = v;
        return r;
    }
    ResElt from_int(long long v) const { return from_fq(F_->from_int(v)); }

    ResElt add(const ResElt& a, const ResElt& b) const;
    ResElt sub(const ResElt& a, const ResElt& b) const;
    ResElt neg(const ResElt& a) const;
    ResElt mul(const ResElt& a, const ResElt& b) const;
    ResElt mul_fq(const ResElt& a, FqElt s) const;
    ResElt inv(const ResElt& a) const;
    ResElt pow(ResElt a, unsigned long long e) const;

    // x -> x^(q^e); e is reduced mod d (tau^d fixes F_p pointwise).
    ResElt frob_pow(const ResElt& a, unsigned e) const;

    // a mod p in the theta basis.
    ResElt reduce(const APoly& a) const;
    // The representative of degree < d.
    APoly lift(const ResElt& a) const;

    // prod_{i<d} x^(q^i); always lands in F_q.
    FqElt norm(const ResElt& a) const;

    bool same(const ResidueCtx& o) const {
        return F_->same(*o.F_) && prime_ == o.prime_;
    }

  private:
    const Fq* F_;
    APoly prime_;
    unsigned d_;
    std::vector<std::vector<FqElt>> theta_red_;  // theta^k for k in [d, 2d-2]
    std::vector<FqMat> frob_;                    // frob_[e]: matrix of x -> x^(q^e)
};

// Field-ops adapter so the generic solver runs over F_p.
struct ResOps {
    const ResidueCtx& R;
    using elem = ResElt;
    elem zero() const { return R.zero(); }
    elem one() const { return R.one(); }
    bool is_zero(const elem& e) const { return e.is_zero(); }
    elem add(const elem& a, const elem& b) const { return R.add(a, b); }
    elem sub(const elem& a, const elem& b) const { return R.sub(a, b); }
    elem neg(const elem& a) const { return R.neg(a); }
    elem mul(const elem& a, const elem& b) const { return R.mul(a, b); }
    elem inv(const elem& a) const { return R.inv(a); }
};

}  // namespace drendo

#endif
