#include "drendo/quadorder.hpp"

#include <algorithm>

namespace drendo {

namespace {

void require_rank2(const FrobeniusData& fd) {
    if (fd.rank != 2) throw invalid_input("maximal order: rank must be 2");
}

// Even/odd-degree split of the coefficient list (characteristic 2).
std::pair<APoly, APoly> even_odd_split(const APoly& g) {
    std::vector<FqElt> e, o;
    for (size_t i = 0; i < g.c.size(); ++i) {
        if (i % 2 == 0)
            e.resize(std::max(e.size(), i + 1), 0), e[i] = g.c[i];
        else
            o.resize(std::max(o.size(), i + 1), 0), o[i] = g.c[i];
    }
    return {APoly(std::move(e)), APoly(std::move(o))};
}

// s with s^2 = g, g having even exponents only (char 2: coefficient-wise).
APoly even_part_sqrt(const Fq& F, const APoly& g) {
    std::vector<FqElt> s(g.c.size() / 2 + 1, 0);
    for (size_t i = 0; i < g.c.size(); ++i) {
        if (g.c[i] == 0) continue;
        if (i % 2) throw internal_error("even_part_sqrt: odd exponent");
        s[i / 2] = F.sqrt(g.c[i]);
    }
    return APoly(std::move(s));
}

}  // namespace

MaximalOrderData maximal_order_odd(const Fq& F, const FrobeniusData& fd) {
    require_rank2(fd);
    if (F.p() == 2) throw invalid_input("maximal_order_odd: q is even");
    MaximalOrderData mo;
    mo.kind = OrderCase::Odd;
    APoly a = trace(F, fd);
    APoly eps_p = mul(F, fd.prime, fd.epsilon);
    mo.delta_pi = sub(F, mul(F, a, a), mul(F, eps_p, F.from_int(4)));
    auto [c, e] = squarefree_decompose(F, mo.delta_pi);
    mo.delta_max = e;
    mo.c_pi = c;
    mo.f1 = APoly();
    mo.f0 = neg(F, e);
    // 2*pi = a + c_pi*alpha
    mo.m = neg(F, a);
    mo.n_unit = F.from_int(2);
    return mo;
}

MaximalOrderData maximal_order_even_insep(const Fq& F, const FrobeniusData& fd) {
    require_rank2(fd);
    if (F.p() != 2) throw invalid_input("maximal_order_even_insep: q is odd");
    if (!fd.a[0].is_zero()) throw invalid_input("maximal_order_even_insep: trace nonzero");
    MaximalOrderData mo;
    mo.kind = OrderCase::EvenInsep;
    APoly g = mul(F, fd.prime, fd.epsilon);
    auto [ge, go] = even_odd_split(g);
    mo.s_even = even_part_sqrt(F, ge);
    if (go.coeff(0) != 0) throw internal_error("even inseparable: odd part not divisible by T");
    mo.c_even = even_part_sqrt(F, divexact(F, go, APoly::T()));
    // eps*p = s^2 + T c^2
    if (add(F, mul(F, mo.s_even, mo.s_even),
            mul(F, APoly::T(), mul(F, mo.c_even, mo.c_even))) != g)
        throw internal_error("even inseparable: s^2 + T c^2 recombination failed");
    FqElt u = mo.c_even.lead();
    FqElt ui = F.inv(u);
    mo.c_pi = mul(F, mo.c_even, ui);
    mo.f1 = APoly();
    mo.f0 = APoly::T();
    // pi + s = c sqrt(T)  =>  c_pi sqrt(T) = u^(-1) s + u^(-1) pi
    mo.m = mul(F, mo.s_even, ui);
    mo.n_unit = ui;
    return mo;
}

MaximalOrderData maximal_order_even_sep(const Fq& F, const FrobeniusData& fd,
                                        std::uint64_t seed) {
    require_rank2(fd);
    if (F.p() != 2) throw invalid_input("maximal_order_even_sep: q is odd");
    APoly a = trace(F, fd);
    if (a.is_zero()) throw invalid_input("maximal_order_even_sep: trace is zero");
    MaximalOrderData mo;
    mo.kind = OrderCase::EvenSep;
    mo.lc_a = a.lead();
    APoly eps_p = mul(F, fd.prime, fd.epsilon);

    // Artin-Schreier reduction of X^2 + X = eps*p / a^2: while the
    // denominator has a prime q of even multiplicity 2e, substitute
    // X -> X + b/q^e with b^2 = num/m1 (mod q) and cancel q.
    APoly am = monic(F, a);
    APoly num = mul(F, eps_p, F.pow(F.inv(mo.lc_a), 2));
    auto mfact = factorize(F, mul(F, am, am), seed).factors;  // denominator, monic
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [q, mult] : mfact) {
            if (mult == 0 || mult % 2 != 0) continue;
            unsigned e = mult / 2;
            APoly m1 = APoly::one();
            for (auto& [q2, mult2] : mfact) {
                if (mult2 == 0 || q2 == q) continue;
                for (unsigned i = 0; i < mult2; ++i) m1 = mul(F, m1, q2);
            }
            APoly val = rem(F, mul(F, num, invmod(F, m1, q)), q);
            APoly b = sqrt_mod_prime(F, val, q);
            APoly qe = APoly::one();
            for (unsigned i = 0; i < e; ++i) qe = mul(F, qe, q);
            APoly next = add(F, num, add(F, mul(F, mul(F, b, b), m1),
                                         mul(F, qe, mul(F, m1, b))));
            unsigned j = std::min(multiplicity(F, next, q), mult);
            if (j == 0) throw internal_error("artin-schreier step: no cancellation");
            for (unsigned i = 0; i < j; ++i) next = divexact(F, next, q);
            num = std::move(next);
            mult -= j;
            changed = true;
            break;
        }
    }

    APoly different = APoly::one(), radical = APoly::one();
    for (auto& [q, mult] : mfact) {
        if (mult == 0) continue;
        if (mult % 2 == 0) throw internal_error("artin-schreier: even multiplicity left");
        mo.as_primes.emplace_back(q, (mult + 1) / 2);
        radical = mul(F, radical, q);
        for (unsigned i = 0; i < (mult + 1) / 2; ++i) different = mul(F, different, q);
    }
    mo.different = different;
    mo.as_numerator = num;

    FqElt eps = mo.lc_a;
    mo.f1 = mul(F, different, eps);
    mo.f0 = mul(F, mul(F, radical, num), F.mul(eps, eps));

    if (!divides(F, different, am))
        throw internal_error("even separable: different does not divide the trace");
    mo.c_pi = divexact(F, am, different);

    // c_pi*alpha = m + pi with m^2 + a m = c_pi^2 f0 + eps(phi) p.
    APoly h = add(F, mul(F, mul(F, mo.c_pi, mo.c_pi), mo.f0), eps_p);
    auto sol = solve_m_quadratic(F, a, h);
    if (!sol) throw internal_error("even separable: no m solves the quadratic relation");
    mo.m = sol->m;
    mo.n_unit = 1;
    return mo;
}

MaximalOrderData maximal_order(const Fq& F, const FrobeniusData& fd, std::uint64_t seed) {
    require_rank2(fd);
    if (F.p() != 2) return maximal_order_odd(F, fd);
    return fd.a[0].is_zero() ? maximal_order_even_insep(F, fd)
                             : maximal_order_even_sep(F, fd, seed);
}

std::optional<QuadSolveInfo> solve_m_quadratic(const Fq& F, const APoly& a, const APoly& h) {
    if (F.p() != 2) throw invalid_input("solve_m_quadratic: characteristic must be 2");
    if (a.is_zero()) throw invalid_input("solve_m_quadratic: a must be nonzero");
    unsigned v = 0;
    while (a.coeff(v) == 0) ++v;
    const FqElt av = a.coeff(v);
    const int M = std::max(a.deg(), h.deg());
    const int K = std::max({2 * M, a.deg() + M, h.deg()});

    // Coefficient k of m^2 + a*m is m_{k/2}^2 + sum_j a_j m_{k-j}; below
    // 2v the square pins m_{k/2}, at 2v a quadratic in m_v branches, above
    // 2v the a_v m_{k-v} term is linear in one new unknown.
    auto attempt = [&](size_t branch, size_t& nbranches) -> std::optional<QuadSolveInfo> {
        std::vector<FqElt> m(M + 1, 0);
        std::vector<char> rule(M + 1, 0);
        std::vector<bool> known(M + 1, false);
        auto known_part = [&](int k) {
            FqElt s = 0;
            for (int j = static_cast<int>(v); j <= std::min(a.deg(), k); ++j) {
                int idx = k - j;
                if (idx <= M && known[idx]) s = F.add(s, F.mul(a.coeff(j), m[idx]));
            }
            return s;
        };
        for (int k = 0; k <= K; ++k) {
            if (k < static_cast<int>(2 * v)) {
                if (k % 2 == 0) {
                    int idx = k / 2;
                    FqElt rhs = F.sub(h.coeff(k), known_part(k));
                    if (idx > M) {
                        if (rhs) return std::nullopt;
                    } else {
                        m[idx] = F.sqrt(rhs);
                        known[idx] = true;
                        rule[idx] = 's';
                    }
                } else if (F.sub(h.coeff(k), known_part(k)) != 0) {
                    return std::nullopt;
                }
            } else if (k == static_cast<int>(2 * v)) {
                FqElt rhs = F.sub(h.coeff(k), known_part(k));
                std::vector<FqElt> sols;
                for (FqElt x = 0; x < F.q(); ++x)
                    if (F.add(F.mul(x, x), F.mul(av, x)) == rhs) sols.push_back(x);
                nbranches = sols.size();
                if (branch >= sols.size()) return std::nullopt;
                m[v] = sols[branch];
                known[v] = true;
                rule[v] = 'q';
            } else {
                int idx = k - static_cast<int>(v);
                FqElt sq = (k % 2 == 0 && k / 2 <= M && known[k / 2])
                               ? F.mul(m[k / 2], m[k / 2])
                               : 0;
                if (idx > M || known[idx]) {
                    FqElt residual = F.sub(h.coeff(k), F.add(known_part(k), sq));
                    if (residual) return std::nullopt;
                    continue;
                }
                // a_v m_idx = h_k - sq - (other known terms)
                FqElt rest = F.add(known_part(k), sq);
                m[idx] = F.div(F.sub(h.coeff(k), rest), av);
                known[idx] = true;
                rule[idx] = 'l';
            }
        }
        APoly mm(std::vector<FqElt>(m.begin(), m.end()));
        if (add(F, mul(F, mm, mm), mul(F, a, mm)) != h) return std::nullopt;
        QuadSolveInfo info;
        info.m = mm;
        info.rule.assign(rule.begin(), rule.begin() + (mm.deg() + 1));
        return info;
    };

    size_t nbranches = 1;
    for (size_t branch = 0; branch < std::max<size_t>(nbranches, 1); ++branch) {
        auto res = attempt(branch, nbranches);
        if (res) return res;
        if (branch + 1 >= nbranches) break;
    }
    return std::nullopt;
}

void verify_maximal_order(const Fq& F, const FrobeniusData& fd, const MaximalOrderData& mo) {
    if (mo.n_unit == 0) throw internal_error("maximal order: n is not a unit");
    if (!mo.c_pi.is_zero() && mo.c_pi.lead() != 1)
        throw internal_error("maximal order: c_pi not monic");
    APoly a = trace(F, fd);
    APoly eps_p = mul(F, fd.prime, fd.epsilon);
    // c_pi*alpha = m + n*pi demands that m + n*pi be a root of
    // X^2 + c_pi f1 X + c_pi^2 f0; reduce with pi^2 = a*pi - eps*p.
    APoly cf1 = mul(F, mo.c_pi, mo.f1);
    APoly s_const = add(F, sub(F, mul(F, mo.m, mo.m), mul(F, eps_p, F.mul(mo.n_unit, mo.n_unit))),
                        add(F, mul(F, cf1, mo.m), mul(F, mul(F, mo.c_pi, mo.c_pi), mo.f0)));
    APoly s_pi = add(F, mul(F, mo.m, F.mul(F.from_int(2), mo.n_unit)),
                     add(F, mul(F, a, F.mul(mo.n_unit, mo.n_unit)), mul(F, cf1, mo.n_unit)));
    if (!s_const.is_zero() || !s_pi.is_zero())
        throw internal_error("maximal order: c_pi*alpha = m + n*pi identity fails");

    switch (mo.kind) {
        case OrderCase::Odd: {
            auto d2 = mul(F, mul(F, mo.c_pi, mo.c_pi), mo.delta_max);
            if (d2 != mo.delta_pi)
                throw internal_error("maximal order: discriminant recombination fails");
            auto [c, e] = squarefree_decompose(F, mo.delta_max);
            if (c.deg() != 0) throw internal_error("maximal order: delta_max not square-free");
            break;
        }
        case OrderCase::EvenInsep: {
            APoly lhs = add(F, mul(F, mo.s_even, mo.s_even),
                            mul(F, APoly::T(), mul(F, mo.c_even, mo.c_even)));
            if (lhs != eps_p)
                throw internal_error("maximal order: s^2 + T c^2 != eps*p");
            break;
        }
        case OrderCase::EvenSep: {
            if (mul(F, mo.different, mo.c_pi) != monic(F, a))
                throw internal_error("maximal order: (a) != (D_K c_pi)");
            break;
        }
    }
}

}  // namespace drendo
