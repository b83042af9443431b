#include "drendo/drinfeld.hpp"

#include "drendo/textio.hpp"

namespace drendo {

RatFunc rf_normalize(const Fq& F, RatFunc r) {
    if (r.den.is_zero()) throw invalid_input("RatFunc: zero denominator");
    if (r.num.is_zero()) return RatFunc{APoly(), APoly::one()};
    APoly g = gcd(F, r.num, r.den);
    if (g.deg() > 0) {
        r.num = divexact(F, r.num, g);
        r.den = divexact(F, r.den, g);
    }
    FqElt u = r.den.lead();
    if (u != 1) {
        FqElt ui = F.inv(u);
        r.num = mul(F, r.num, ui);
        r.den = mul(F, r.den, ui);
    }
    return r;
}

RatFunc rf_add(const Fq& F, const RatFunc& a, const RatFunc& b) {
    return rf_normalize(
        F, RatFunc{add(F, mul(F, a.num, b.den), mul(F, b.num, a.den)), mul(F, a.den, b.den)});
}

RatFunc rf_mul(const Fq& F, const RatFunc& a, const RatFunc& b) {
    return rf_normalize(F, RatFunc{mul(F, a.num, b.num), mul(F, a.den, b.den)});
}

RatFunc rf_mul_fq(const Fq& F, const RatFunc& a, FqElt s) {
    return RatFunc{mul(F, a.num, s), a.den};
}

RatFunc rf_pow_q(const Fq& F, const RatFunc& a) {
    auto powq = [&](const APoly& f) {
        APoly acc = APoly::one();
        for (FqElt i = 0; i < F.q(); ++i) acc = mul(F, acc, f);
        return acc;
    };
    return RatFunc{powq(a.num), powq(a.den)};
}

bool rf_eq(const Fq& F, const RatFunc& a, const RatFunc& b) {
    return mul(F, a.num, b.den) == mul(F, b.num, a.den);
}

std::pair<long, bool> rf_ord_at(const Fq& F, const RatFunc& r, const APoly& p) {
    if (r.num.is_zero()) return {0, true};
    long v = static_cast<long>(multiplicity(F, r.num, p)) -
             static_cast<long>(multiplicity(F, r.den, p));
    return {v, false};
}

GlobalDrinfeldModule make_global(const Fq& F, std::vector<RatFunc> g) {
    if (g.empty() || g.back().is_zero())
        throw invalid_input("Drinfeld module: g_r must be nonzero");
    for (auto& gi : g) gi = rf_normalize(F, std::move(gi));
    return GlobalDrinfeldModule{&F, std::move(g)};
}

GlobalDrinfeldModule make_global_polys(const Fq& F, const std::vector<APoly>& g) {
    std::vector<RatFunc> fr;
    fr.reserve(g.size());
    for (const auto& gi : g) fr.push_back(RatFunc::of(gi));
    return make_global(F, std::move(fr));
}

bool has_good_reduction(const GlobalDrinfeldModule& phi, const APoly& p) {
    const Fq& F = *phi.F;
    const unsigned r = phi.rank();
    for (unsigned i = 0; i < r; ++i) {
        auto [v, inf] = rf_ord_at(F, phi.g[i], p);
        if (inf) continue;  // zero coefficient: ord = +infinity
        if (i + 1 < r ? v < 0 : v != 0) return false;
    }
    return !phi.g[r - 1].is_zero();
}

ReducedDrinfeldModule::ReducedDrinfeldModule(const ResidueCtx& R, std::vector<ResElt> coeffs)
    : R_(&R), g_(std::move(coeffs)) {
    if (g_.empty() || g_.back().is_zero())
        throw invalid_input("reduced module: leading coefficient vanishes");
    ladder_.push_back(SkewPoly::one(R));
    ladder_.push_back(phi_T());
}

ReducedDrinfeldModule::ReducedDrinfeldModule(const ReducedDrinfeldModule& o)
    : R_(o.R_), g_(o.g_) {
    std::lock_guard<std::mutex> lk(o.mu_);
    ladder_ = o.ladder_;
}

SkewPoly ReducedDrinfeldModule::phi_T() const {
    std::vector<ResElt> c;
    c.reserve(g_.size() + 1);
    c.push_back(R_->theta());
    for (const auto& gi : g_) c.push_back(gi);
    return SkewPoly(*R_, std::move(c));
}

SkewPoly ReducedDrinfeldModule::phi(const APoly& a) const {
    const unsigned da = a.deg() < 0 ? 0 : static_cast<unsigned>(a.deg());
    std::vector<SkewPoly> pw(da + 1);
    {
        std::lock_guard<std::mutex> lk(mu_);
        while (ladder_.size() <= da) ladder_.push_back(mul(ladder_[1], ladder_.back()));
        for (unsigned k = 0; k <= da; ++k) pw[k] = ladder_[k];
    }
    // phi is F_q-linear in a: phi_a = sum gamma(a_k) phi_{T^k}.
    SkewPoly acc = SkewPoly::zero(*R_);
    for (size_t k = 0; k < a.c.size(); ++k) {
        if (a.c[k] == 0) continue;
        acc = add(acc, mul_res(pw[k], R_->from_fq(a.c[k])));
    }
    return acc;
}

FqElt ReducedDrinfeldModule::epsilon() const {
    const Fq& F = R_->field();
    const unsigned r = rank();
    const unsigned d = R_->d();
    FqElt sign = F.one();
    FqElt minus1 = F.from_int(-1);
    unsigned exp = (r + d * (r + 1)) % 2;
    if (exp) sign = minus1;
    FqElt nrm = R_->norm(g_.back());
    if (nrm == 0) throw internal_error("epsilon: leading coefficient has zero norm");
    return F.mul(sign, F.inv(nrm));
}

ReducedDrinfeldModule reduce(const GlobalDrinfeldModule& phi, const ResidueCtx& R) {
    if (!has_good_reduction(phi, R.prime()))
        throw invalid_input("reduce: bad-reduction prime");
    std::vector<ResElt> g;
    g.reserve(phi.rank());
    for (const auto& gi : phi.g) {
        ResElt num = R.reduce(gi.num);
        if (gi.den.is_one()) {
            g.push_back(num);
        } else {
            g.push_back(R.mul(num, R.inv(R.reduce(gi.den))));
        }
    }
    return ReducedDrinfeldModule(R, std::move(g));
}

std::vector<RatFunc> global_torsion_coeffs(const GlobalDrinfeldModule& phi, const APoly& a) {
    const Fq& F = *phi.F;
    const unsigned r = phi.rank();
    const unsigned da = a.deg() < 0 ? 0 : static_cast<unsigned>(a.deg());
    // ladder[k] = coefficient list of phi_{T^k} as an additive polynomial.
    std::vector<std::vector<RatFunc>> ladder(da + 1);
    ladder[0] = {RatFunc::of(APoly::one())};
    std::vector<RatFunc> phiT;
    phiT.push_back(RatFunc::of(APoly::T()));
    for (unsigned i = 0; i < r; ++i) phiT.push_back(phi.g[i]);
    if (da >= 1) ladder[1] = phiT;
    for (unsigned k = 2; k <= da; ++k) {
        const auto& prev = ladder[k - 1];
        std::vector<RatFunc> cur(prev.size() + r, RatFunc{});
        // phi_T composed with prev: (phi_T o f)_m = T f_m + sum_j g_j f_{m-j}^(q^j)
        for (size_t m = 0; m < prev.size(); ++m) {
            if (prev[m].is_zero()) continue;
            cur[m] = rf_add(F, cur[m], rf_mul(F, RatFunc::of(APoly::T()), prev[m]));
            RatFunc pw = prev[m];
            for (unsigned j = 1; j <= r; ++j) {
                pw = rf_pow_q(F, pw);
                if (!phi.g[j - 1].is_zero())
                    cur[m + j] = rf_add(F, cur[m + j], rf_mul(F, phi.g[j - 1], pw));
            }
        }
        ladder[k] = std::move(cur);
    }
    std::vector<RatFunc> acc(r * da + 1, RatFunc{});
    for (size_t k = 0; k < a.c.size(); ++k) {
        if (a.c[k] == 0) continue;
        for (size_t m = 0; m < ladder[k].size(); ++m)
            acc[m] = rf_add(F, acc[m], rf_mul_fq(F, ladder[k][m], a.c[k]));
    }
    return acc;
}

std::string additive_to_string(const SkewPoly& f) {
    if (!f.ctx) return "<null>";
    if (f.is_zero()) return "0";
    const ResidueCtx& R = *f.ctx;
    const Fq& F = R.field();
    std::string out;
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = to_string(F, R.lift(f.c[i]));
        unsigned long long qi = 1;
        for (size_t k = 0; k < i; ++k) qi *= F.q();
        if (cs != "1") out += (cs.find(' ') != std::string::npos) ? "(" + cs + ")" : cs;
        out += "x";
        if (i > 0) out += "^" + std::to_string(qi);
    }
    return out;
}

}  // namespace drendo
