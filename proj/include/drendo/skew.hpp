#ifndef DRENDO_SKEW_HPP
#define DRENDO_SKEW_HPP

#include <string>
#include <utility>
#include <vector>

#include "drendo/residue.hpp"

namespace drendo {

/// Element of F_p{tau} with the commutation rule tau*c = c^q*tau.
/// Coefficients are indexed by tau-degree; canonical form drops trailing
/// zeros (degree of the zero element is -1).
struct SkewPoly {
    const ResidueCtx* ctx = nullptr;
    std::vector<ResElt> c;

    SkewPoly() = default;
    SkewPoly(const ResidueCtx& R, std::vector<ResElt> coeffs)
        : ctx(&R), c(std::move(coeffs)) {
        normalize();
    }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    ResElt coeff(size_t i) const {
        return i < c.size() ? c[i] : (ctx ? ctx->zero() : ResElt{});
    }

    bool operator==(const SkewPoly& o) const { return c == o.c; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    static SkewPoly zero(const ResidueCtx& R) { return SkewPoly(R, {}); }
    static SkewPoly one(const ResidueCtx& R) { return SkewPoly(R, {R.one()}); }
    static SkewPoly tau_power(const ResidueCtx& R, unsigned k);
    static SkewPoly constant(const ResidueCtx& R, const ResElt& v) {
        return SkewPoly(R, {v});
    }
};

SkewPoly add(const SkewPoly& f, const SkewPoly& g);
SkewPoly sub(const SkewPoly& f, const SkewPoly& g);
SkewPoly mul(const SkewPoly& f, const SkewPoly& g);
SkewPoly mul_tau_right(const SkewPoly& f, unsigned k);  // f * tau^k
SkewPoly mul_res(const SkewPoly& f, const ResElt& s);   // s * f (left scalar)

// f = quot*g + rem, rem = 0 or deg rem < deg g; the pair is unique.
std::pair<SkewPoly, SkewPoly> right_divrem(const SkewPoly& f, const SkewPoly& g);

// Evaluation of f as the additive polynomial sum c_i x^(q^i) on F_p.
ResElt apply(const SkewPoly& f, const ResElt& x);

// Same, over any F_q-algebra extension of F_p.  Dom must provide
//   elem, zero(), add, frobq (x -> x^q), embed_mul(ResElt, elem).
template <class Dom>
typename Dom::elem apply_in(const SkewPoly& f, const Dom& D, typename Dom::elem x) {
    auto acc = D.zero();
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i].is_zero()) acc = D.add(acc, D.embed_mul(f.c[i], x));
        x = D.frobq(x);
    }
    return acc;
}

bool commutes_with(const SkewPoly& f, const SkewPoly& g);
// Commutation with tau and with every theta^k, which generate the ring.
bool is_central(const SkewPoly& f);

// Debug form "c_k*t^k + ... + c_0" with coefficients in the theta basis.
std::string skew_to_string(const SkewPoly& f);

}  // namespace drendo

#endif
