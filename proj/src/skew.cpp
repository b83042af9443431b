#include "drendo/skew.hpp"

#include "drendo/textio.hpp"

namespace drendo {

namespace {
const ResidueCtx& common_ctx(const SkewPoly& f, const SkewPoly& g) {
    if (!f.ctx || !g.ctx) throw invalid_input("SkewPoly: missing context");
    if (f.ctx != g.ctx && !f.ctx->same(*g.ctx))
        throw invalid_input("SkewPoly: context mismatch");
    return *f.ctx;
}
}  // namespace

SkewPoly SkewPoly::tau_power(const ResidueCtx& R, unsigned k) {
    std::vector<ResElt> c(k + 1, R.zero());
    c[k] = R.one();
    return SkewPoly(R, std::move(c));
}

SkewPoly add(const SkewPoly& f, const SkewPoly& g) {
    const ResidueCtx& R = common_ctx(f, g);
    std::vector<ResElt> c(std::max(f.c.size(), g.c.size()), R.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = R.add(f.coeff(i), g.coeff(i));
    return SkewPoly(R, std::move(c));
}

SkewPoly sub(const SkewPoly& f, const SkewPoly& g) {
    const ResidueCtx& R = common_ctx(f, g);
    std::vector<ResElt> c(std::max(f.c.size(), g.c.size()), R.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = R.sub(f.coeff(i), g.coeff(i));
    return SkewPoly(R, std::move(c));
}

SkewPoly mul(const SkewPoly& f, const SkewPoly& g) {
    const ResidueCtx& R = common_ctx(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(R);
    std::vector<ResElt> c(f.c.size() + g.c.size() - 1, R.zero());
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (g.c[j].is_zero()) continue;
            // (a tau^i)(b tau^j) = a b^(q^i) tau^(i+j)
            c[i + j] = R.add(c[i + j], R.mul(f.c[i], R.frob_pow(g.c[j], static_cast<unsigned>(i))));
        }
    }
    return SkewPoly(R, std::move(c));
}

SkewPoly mul_tau_right(const SkewPoly& f, unsigned k) {
    if (!f.ctx || f.is_zero() || k == 0) return f;
    std::vector<ResElt> c(f.c.size() + k, f.ctx->zero());
    for (size_t i = 0; i < f.c.size(); ++i) c[i + k] = f.c[i];
    return SkewPoly(*f.ctx, std::move(c));
}

SkewPoly mul_res(const SkewPoly& f, const ResElt& s) {
    if (!f.ctx) throw invalid_input("SkewPoly: missing context");
    const ResidueCtx& R = *f.ctx;
    std::vector<ResElt> c(f.c.size(), R.zero());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = R.mul(s, f.c[i]);
    return SkewPoly(R, std::move(c));
}

std::pair<SkewPoly, SkewPoly> right_divrem(const SkewPoly& f, const SkewPoly& g) {
    const ResidueCtx& R = common_ctx(f, g);
    if (g.is_zero()) throw invalid_input("SkewPoly: division by zero");
    SkewPoly rem = f;
    if (f.deg() < g.deg()) return {SkewPoly::zero(R), rem};
    std::vector<ResElt> quot(f.deg() - g.deg() + 1, R.zero());
    const ResElt& glead = g.c.back();
    while (rem.deg() >= g.deg()) {
        unsigned k = static_cast<unsigned>(rem.deg() - g.deg());
        // Leading coefficient of (c tau^k) * g is c * glead^(q^k).
        ResElt c = R.mul(rem.c.back(), R.inv(R.frob_pow(glead, k)));
        quot[k] = c;
        // rem -= (c tau^k) * g
        for (size_t j = 0; j < g.c.size(); ++j) {
            if (g.c[j].is_zero()) continue;
            rem.c[k + j] = R.sub(rem.c[k + j], R.mul(c, R.frob_pow(g.c[j], k)));
        }
        rem.normalize();
        if (rem.is_zero()) break;
    }
    return {SkewPoly(R, std::move(quot)), rem};
}

ResElt apply(const SkewPoly& f, const ResElt& x) {
    if (!f.ctx) throw invalid_input("SkewPoly: missing context");
    const ResidueCtx& R = *f.ctx;
    ResElt acc = R.zero();
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        acc = R.add(acc, R.mul(f.c[i], R.frob_pow(x, static_cast<unsigned>(i))));
    }
    return acc;
}

bool commutes_with(const SkewPoly& f, const SkewPoly& g) { return mul(f, g) == mul(g, f); }

bool is_central(const SkewPoly& f) {
    if (!f.ctx) throw invalid_input("SkewPoly: missing context");
    const ResidueCtx& R = *f.ctx;
    SkewPoly tau = SkewPoly::tau_power(R, 1);
    if (!commutes_with(f, tau)) return false;
    ResElt th = R.theta();
    ResElt pw = R.one();
    for (unsigned k = 0; k < R.d(); ++k) {
        if (!commutes_with(f, SkewPoly::constant(R, pw))) return false;
        pw = R.mul(pw, th);
    }
    return true;
}

std::string skew_to_string(const SkewPoly& f) {
    if (!f.ctx) return "<null>";
    if (f.is_zero()) return "0";
    const Fq& F = f.ctx->field();
    std::string out;
    for (size_t i = f.c.size(); i-- > 0;) {
        if (f.c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(F, f.ctx->lift(f.c[i])) + ")";
        if (i == 1)
            out += "*t";
        else if (i > 1)
            out += "*t^" + std::to_string(i);
    }
    return out;
}

}  // namespace drendo
