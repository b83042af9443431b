#include "drendo/residue.hpp"

#include "drendo/factor.hpp"

namespace drendo {

ResidueCtx::ResidueCtx(const Fq& F, APoly prime) : F_(&F), prime_(std::move(prime)) {
    if (prime_.deg() < 1) throw invalid_input("ResidueCtx: prime must have degree >= 1");
    prime_ = monic(F, prime_);
    if (!is_irreducible(F, prime_)) throw invalid_input("ResidueCtx: p is reducible");
    d_ = static_cast<unsigned>(prime_.deg());

    // theta^k for k = d .. 2d-2, used to fold products back into the basis.
    theta_red_.resize(d_ > 1 ? d_ - 1 : 0);
    APoly cur = rem(F, shift(APoly::one(), d_), prime_);
    for (unsigned k = 0; k + 1 < d_; ++k) {
        std::vector<FqElt> row(d_, 0);
        for (int i = 0; i <= cur.deg(); ++i) row[i] = cur.c[i];
        theta_red_[k] = std::move(row);
        cur = rem(F, shift(cur, 1), prime_);
    }

    // Matrix of x -> x^q, then its iterates.
    frob_.resize(d_);
    for (unsigned e = 0; e < d_; ++e) frob_[e] = FqMat(d_, d_);
    for (unsigned j = 0; j < d_; ++j) frob_[0].at(j, j) = 1;
    if (d_ > 1) {
        APoly theta_q = powmod(F, APoly::T(), F.q(), prime_);
        APoly col = APoly::one();
        for (unsigned j = 0; j < d_; ++j) {
            for (int i = 0; i <= col.deg(); ++i) frob_[1].at(i, j) = col.c[i];
            col = rem(F, drendo::mul(F, col, theta_q), prime_);
        }
        for (unsigned e = 2; e < d_; ++e) {
            for (unsigned i = 0; i < d_; ++i)
                for (unsigned j = 0; j < d_; ++j) {
                    FqElt acc = 0;
                    for (unsigned k = 0; k < d_; ++k)
                        acc = F.add(acc, F.mul(frob_[1].at(i, k), frob_[e - 1].at(k, j)));
                    frob_[e].at(i, j) = acc;
                }
        }
    }
}

ResElt ResidueCtx::theta() const {
    ResElt r = zero();
    if (d_ == 1) return reduce(APoly::T());
    r.c[1] = 1;
    return r;
}

ResElt ResidueCtx::add(const ResElt& a, const ResElt& b) const {
    ResElt r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = F_->add(r.c[i], b.c[i]);
    return r;
}

ResElt ResidueCtx::sub(const ResElt& a, const ResElt& b) const {
    ResElt r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = F_->sub(r.c[i], b.c[i]);
    return r;
}

ResElt ResidueCtx::neg(const ResElt& a) const {
    ResElt r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = F_->neg(r.c[i]);
    return r;
}

ResElt ResidueCtx::mul(const ResElt& a, const ResElt& b) const {
    std::vector<FqElt> conv(2 * d_ - 1, 0);
    for (unsigned i = 0; i < d_; ++i) {
        if (a.c[i] == 0) continue;
        for (unsigned j = 0; j < d_; ++j)
            conv[i + j] = F_->add(conv[i + j], F_->mul(a.c[i], b.c[j]));
    }
    ResElt r = zero();
    for (unsigned i = 0; i < d_; ++i) r.c[i] = conv[i];
    for (unsigned k = d_; k <= 2 * d_ - 2; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = theta_red_[k - d_];
        for (unsigned i = 0; i < d_; ++i)
            r.c[i] = F_->add(r.c[i], F_->mul(conv[k], row[i]));
    }
    return r;
}

ResElt ResidueCtx::mul_fq(const ResElt& a, FqElt s) const {
    ResElt r = a;
    for (unsigned i = 0; i < d_; ++i) r.c[i] = F_->mul(r.c[i], s);
    return r;
}

ResElt ResidueCtx::inv(const ResElt& a) const {
    if (a.is_zero()) throw invalid_input("ResidueCtx: inverse of zero");
    return reduce(invmod(*F_, lift(a), prime_));
}

ResElt ResidueCtx::pow(ResElt a, unsigned long long e) const {
    ResElt acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

ResElt ResidueCtx::frob_pow(const ResElt& a, unsigned e) const {
    e %= d_;
    if (e == 0) return a;
    const FqMat& M = frob_[e];
    ResElt r = zero();
    for (unsigned i = 0; i < d_; ++i) {
        FqElt acc = 0;
        for (unsigned j = 0; j < d_; ++j) acc = F_->add(acc, F_->mul(M.at(i, j), a.c[j]));
        r.c[i] = acc;
    }
    return r;
}

ResElt ResidueCtx::reduce(const APoly& a) const {
    APoly r = rem(*F_, a, prime_);
    ResElt out = zero();
    for (int i = 0; i <= r.deg(); ++i) out.c[i] = r.c[i];
    return out;
}

APoly ResidueCtx::lift(const ResElt& a) const { return APoly(a.c); }

FqElt ResidueCtx::norm(const ResElt& a) const {
    ResElt acc = one();
    for (unsigned i = 0; i < d_; ++i) acc = mul(acc, frob_pow(a, i));
    // The product of all conjugates is Galois-invariant, so it sits in F_q.
    for (unsigned i = 1; i < d_; ++i)
        if (acc.c[i] != 0) throw internal_error("norm: value not in F_q");
    return acc.c[0];
}

}  // namespace drendo
