#include "drendo/apoly.hpp"

namespace drendo {

APoly add(const Fq& F, const APoly& a, const APoly& b) {
    std::vector<FqElt> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return APoly(std::move(c));
}

APoly neg(const Fq& F, const APoly& a) {
    std::vector<FqElt> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.neg(a.c[i]);
    return APoly(std::move(c));
}

APoly sub(const Fq& F, const APoly& a, const APoly& b) { return add(F, a, neg(F, b)); }

APoly mul(const Fq& F, const APoly& a, const APoly& b) {
    if (a.is_zero() || b.is_zero()) return APoly();
    std::vector<FqElt> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return APoly(std::move(c));
}

APoly mul(const Fq& F, const APoly& a, FqElt s) {
    if (s == 0) return APoly();
    std::vector<FqElt> c(a.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.mul(a.c[i], s);
    return APoly(std::move(c));
}

APoly shift(const APoly& a, unsigned k) {
    if (a.is_zero()) return APoly();
    std::vector<FqElt> c(a.c.size() + k, 0);
    std::copy(a.c.begin(), a.c.end(), c.begin() + k);
    return APoly(std::move(c));
}

std::pair<APoly, APoly> divrem(const Fq& F, const APoly& f, const APoly& g) {
    if (g.is_zero()) throw invalid_input("APoly: division by zero polynomial");
    if (f.deg() < g.deg()) return {APoly(), f};
    FqElt glead_inv = F.inv(g.lead());
    std::vector<FqElt> r = f.c;
    std::vector<FqElt> q(f.deg() - g.deg() + 1, 0);
    for (int k = f.deg() - g.deg(); k >= 0; --k) {
        FqElt t = F.mul(r[k + g.deg()], glead_inv);
        q[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= g.deg(); ++j)
            r[k + j] = F.sub(r[k + j], F.mul(t, g.c[j]));
    }
    r.resize(g.deg() < 0 ? 0 : g.deg());
    return {APoly(std::move(q)), APoly(std::move(r))};
}

APoly rem(const Fq& F, const APoly& f, const APoly& g) { return divrem(F, f, g).second; }

bool divides(const Fq& F, const APoly& g, const APoly& f) {
    if (g.is_zero()) return f.is_zero();
    return rem(F, f, g).is_zero();
}

APoly divexact(const Fq& F, const APoly& f, const APoly& g) {
    auto [q, r] = divrem(F, f, g);
    if (!r.is_zero()) throw internal_error("APoly: division expected exact");
    return q;
}

APoly monic(const Fq& F, const APoly& a) {
    if (a.is_zero() || a.lead() == 1) return a;
    return mul(F, a, F.inv(a.lead()));
}

APoly gcd(const Fq& F, APoly a, APoly b) {
    while (!b.is_zero()) {
        APoly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

APoly invmod(const Fq& F, const APoly& a, const APoly& m) {
    // Extended Euclid on (a mod m, m).
    APoly r0 = rem(F, a, m), r1 = m;
    APoly s0 = APoly::one(), s1 = APoly::zero();
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(F, r0, r1);
        APoly s2 = sub(F, s0, mul(F, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.deg() != 0) throw invalid_input("APoly: element not invertible mod m");
    return rem(F, mul(F, s0, F.inv(r0.c[0])), m);
}

APoly powmod(const Fq& F, APoly base, unsigned long long e, const APoly& m) {
    APoly acc = rem(F, APoly::one(), m);
    base = rem(F, base, m);
    while (e) {
        if (e & 1) acc = rem(F, mul(F, acc, base), m);
        base = rem(F, mul(F, base, base), m);
        e >>= 1;
    }
    return acc;
}

APoly sqpowmod(const Fq& F, APoly base, unsigned k, const APoly& m) {
    base = rem(F, base, m);
    for (unsigned i = 0; i < k; ++i) base = rem(F, mul(F, base, base), m);
    return base;
}

APoly derivative(const Fq& F, const APoly& a) {
    if (a.deg() < 1) return APoly();
    std::vector<FqElt> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<long long>(i)));
    return APoly(std::move(c));
}

FqElt eval(const Fq& F, const APoly& a, FqElt x) {
    FqElt acc = 0;
    for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

int cmp(const APoly& a, const APoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    }
    return 0;
}

unsigned multiplicity(const Fq& F, const APoly& a, const APoly& p) {
    if (a.is_zero()) throw invalid_input("APoly: multiplicity in zero polynomial");
    unsigned m = 0;
    APoly cur = a;
    while (true) {
        auto [q, r] = divrem(F, cur, p);
        if (!r.is_zero()) return m;
        cur = std::move(q);
        ++m;
    }
}

APoly poly_from_ints(const Fq& F, const std::vector<long long>& coeffs) {
    std::vector<FqElt> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = F.from_int(coeffs[i]);
    return APoly(std::move(c));
}

}  // namespace drendo
