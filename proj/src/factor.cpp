#include "drendo/factor.hpp"

#include <algorithm>
#include <random>

namespace drendo {

APoly pth_root(const Fq& F, const APoly& h) {
    const unsigned p = F.p();
    std::vector<FqElt> c(h.c.size() / p + 1, 0);
    for (size_t i = 0; i < h.c.size(); ++i) {
        if (h.c[i] == 0) continue;
        if (i % p != 0) throw internal_error("pth_root: exponent not divisible by p");
        // Coefficient root: x -> x^(p^(n-1)) inverts the p-power Frobenius.
        FqElt r = h.c[i];
        for (unsigned k = 0; k + 1 < F.n(); ++k) r = F.frob(r);
        // For n = 1, x^p = x already.
        c[i / p] = r;
    }
    return APoly(std::move(c));
}

std::vector<std::pair<APoly, unsigned>> squarefree_factorization(const Fq& F, APoly h) {
    std::vector<std::pair<APoly, unsigned>> out;
    if (h.deg() < 1) return out;
    h = monic(F, h);
    const unsigned p = F.p();

    // Standard char-p square-free factorization (Geddes et al. style).
    unsigned pk = 1;  // current p-power from peeled p-th roots
    while (h.deg() >= 1) {
        APoly dh = derivative(F, h);
        if (dh.is_zero()) {
            h = pth_root(F, h);
            pk *= p;
            continue;
        }
        APoly g = gcd(F, h, dh);
        APoly w = divexact(F, h, g);  // product of factors with p∤mult
        unsigned i = 1;
        while (w.deg() >= 1) {
            APoly y = gcd(F, w, g);
            APoly fac = divexact(F, w, y);
            if (fac.deg() >= 1) out.emplace_back(monic(F, fac), i * pk);
            w = std::move(y);
            g = divexact(F, g, w);
            ++i;
        }
        // g now collects the factors with multiplicity divisible by p.
        h = std::move(g);
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return cmp(a.first, b.first) < 0;
    });
    // Merge equal bases (can arise when a factor occurs both ways).
    std::vector<std::pair<APoly, unsigned>> merged;
    for (auto& fe : out) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    return merged;
}

std::pair<APoly, APoly> squarefree_decompose(const Fq& F, const APoly& h) {
    if (h.is_zero()) throw invalid_input("squarefree_decompose: zero input");
    APoly c = APoly::one();
    APoly e = APoly::constant(h.lead());
    for (auto& [f, m] : squarefree_factorization(F, h)) {
        for (unsigned i = 0; i < m / 2; ++i) c = mul(F, c, f);
        if (m % 2) e = mul(F, e, f);
    }
    return {c, e};
}

namespace {

// x^(q^k) mod f for k = 1.., advanced one Frobenius step at a time.
struct FrobTower {
    const Fq& F;
    const APoly& f;
    std::vector<APoly> xqi;  // x^(q*i) mod f for i = 0..deg f - 1
    APoly cur;               // x^(q^k) mod f

    FrobTower(const Fq& Fld, const APoly& mod) : F(Fld), f(mod) {
        const unsigned d = static_cast<unsigned>(f.deg());
        APoly xq = powmod(F, APoly::T(), F.q(), f);
        xqi.resize(d);
        xqi[0] = APoly::one();
        for (unsigned i = 1; i < d; ++i) xqi[i] = rem(F, mul(F, xqi[i - 1], xq), f);
        cur = xq;
    }

    // g(x) -> g(x)^q mod f
    APoly frob_of(const APoly& g) const {
        APoly acc;
        for (size_t i = 0; i < g.c.size(); ++i) {
            if (g.c[i] == 0) continue;
            FqElt cq = F.pow(g.c[i], F.q());
            acc = add(F, acc, mul(F, xqi[i], cq));
        }
        return acc;
    }

    void step() { cur = frob_of(cur); }
};

}  // namespace

bool is_irreducible(const Fq& F, const APoly& f) {
    const int d = f.deg();
    if (d < 1) return false;
    if (d == 1) return true;
    if (f.coeff(0) == 0) return false;  // divisible by T
    // Quick linear-root screen.
    for (FqElt x = 0; x < F.q(); ++x)
        if (eval(F, f, x) == 0) return false;
    if (d <= 3) return true;  // no factor of degree <= d/2 besides linears

    APoly fm = monic(F, f);
    FrobTower tower(F, fm);
    std::vector<unsigned> prime_divs;
    for (unsigned ell = 2; ell <= static_cast<unsigned>(d); ++ell)
        if (static_cast<unsigned>(d) % ell == 0 && [&] {
                for (unsigned t = 2; t * t <= ell; ++t)
                    if (ell % t == 0) return false;
                return true;
            }())
            prime_divs.push_back(ell);

    // Rabin: x^(q^d) = x mod f, and gcd(x^(q^(d/ell)) - x, f) = 1.
    APoly x = APoly::T();
    for (unsigned k = 1; k <= static_cast<unsigned>(d); ++k) {
        if (k > 1) tower.step();
        bool is_quotient_level =
            std::find_if(prime_divs.begin(), prime_divs.end(), [&](unsigned ell) {
                return k == static_cast<unsigned>(d) / ell;
            }) != prime_divs.end();
        if (is_quotient_level) {
            if (gcd(F, sub(F, tower.cur, x), fm).deg() != 0) return false;
        }
        if (k == static_cast<unsigned>(d)) return sub(F, tower.cur, x).is_zero();
    }
    return false;
}

namespace {

std::vector<std::pair<APoly, unsigned>> distinct_degree(const Fq& F, APoly f) {
    // f monic square-free; returns (product of degree-k primes, k).
    std::vector<std::pair<APoly, unsigned>> out;
    FrobTower tower(F, f);
    APoly x = APoly::T();
    APoly rest = f;
    for (unsigned k = 1; 2 * k <= static_cast<unsigned>(f.deg()); ++k) {
        if (k > 1) tower.step();
        APoly g = gcd(F, sub(F, rem(F, tower.cur, rest), rem(F, x, rest)), rest);
        if (g.deg() > 0) {
            out.emplace_back(g, k);
            rest = divexact(F, rest, g);
        }
        if (rest.deg() < static_cast<int>(2 * (k + 1))) break;
    }
    if (rest.deg() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.deg()));
    return out;
}

APoly random_poly(const Fq& F, int deg, std::mt19937_64& rng) {
    std::vector<FqElt> c(deg + 1);
    for (auto& x : c) x = F.elt_from_u64(rng());
    return APoly(std::move(c));
}

// Splits a monic product of distinct degree-k irreducibles.
void equal_degree(const Fq& F, const APoly& f, unsigned k, std::mt19937_64& rng,
                  std::vector<APoly>& out) {
    if (static_cast<unsigned>(f.deg()) == k) {
        out.push_back(f);
        return;
    }
    APoly g;
    while (true) {
        APoly t = random_poly(F, f.deg() - 1, rng);
        if (t.deg() < 1) continue;
        g = gcd(F, t, f);
        if (g.deg() > 0 && g.deg() < f.deg()) break;
        if (F.p() == 2) {
            // Trace map to F_2: t + t^2 + t^4 + ... over F_(q^k).
            unsigned bits = 0;
            for (FqElt v = F.q(); v > 1; v /= 2) ++bits;
            APoly tr, cur = rem(F, t, f);
            for (unsigned i = 0; i < bits * k; ++i) {
                tr = add(F, tr, cur);
                cur = rem(F, mul(F, cur, cur), f);
            }
            g = gcd(F, tr, f);
        } else {
            // t^((q^k-1)/2) = (Norm-style product)^((q-1)/2) mod f.
            FrobTower tower(F, f);
            APoly s = rem(F, t, f);
            APoly ti = s;
            for (unsigned i = 1; i < k; ++i) {
                ti = tower.frob_of(ti);
                s = rem(F, mul(F, s, ti), f);
            }
            s = powmod(F, s, (F.q() - 1) / 2, f);
            g = gcd(F, sub(F, s, APoly::one()), f);
        }
        if (g.deg() > 0 && g.deg() < f.deg()) break;
    }
    equal_degree(F, monic(F, g), k, rng, out);
    equal_degree(F, monic(F, divexact(F, f, g)), k, rng, out);
}

}  // namespace

Factorization factorize(const Fq& F, const APoly& h, std::uint64_t seed) {
    if (h.is_zero()) throw invalid_input("factorize: zero input");
    Factorization res;
    res.unit = h.lead();
    if (h.deg() < 1) return res;
    std::mt19937_64 rng(seed);
    for (auto& [sf, mult] : squarefree_factorization(F, h)) {
        for (auto& [prod, k] : distinct_degree(F, sf)) {
            std::vector<APoly> primes;
            equal_degree(F, prod, k, rng, primes);
            for (auto& pr : primes) res.factors.emplace_back(pr, mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
    return res;
}

PrimeEnumerator::PrimeEnumerator(const Fq& F, unsigned degree)
    : F_(F), degree_(degree), counter_(degree, 0) {
    if (degree < 1) throw invalid_input("PrimeEnumerator: degree must be >= 1");
}

bool PrimeEnumerator::step() {
    // Lexicographic: most significant coefficient is counter_[degree-1].
    for (size_t i = 0; i < counter_.size(); ++i) {
        if (++counter_[i] < F_.q()) return true;
        counter_[i] = 0;
    }
    return false;
}

std::optional<APoly> PrimeEnumerator::next() {
    while (!done_) {
        std::vector<FqElt> c(counter_.begin(), counter_.end());
        c.push_back(1);
        APoly f{std::move(c)};
        done_ = !step();
        if (is_irreducible(F_, f)) return f;
    }
    return std::nullopt;
}

std::vector<APoly> primes_of_degree(const Fq& F, unsigned d) {
    std::vector<APoly> out;
    PrimeEnumerator en(F, d);
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

std::uint64_t count_monic_irreducibles(std::uint64_t q, unsigned d) {
    auto mobius = [](unsigned m) -> int {
        int mu = 1;
        for (unsigned p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                mu = -mu;
            }
        }
        if (m > 1) mu = -mu;
        return mu;
    };
    std::int64_t total = 0;
    for (unsigned k = 1; k <= d; ++k) {
        if (d % k != 0) continue;
        std::uint64_t qe = 1;
        for (unsigned i = 0; i < d / k; ++i) qe *= q;
        total += mobius(k) * static_cast<std::int64_t>(qe);
    }
    return static_cast<std::uint64_t>(total) / d;
}

APoly sqrt_mod_prime(const Fq& F, const APoly& x, const APoly& prime) {
    if (F.p() != 2) throw invalid_input("sqrt_mod_prime: only for characteristic 2");
    // The residue field has 2^k elements; sqrt = (2^(k-1))-fold squaring.
    unsigned k = F.n() * static_cast<unsigned>(prime.deg());
    return sqpowmod(F, x, k - 1, prime);
}

}  // namespace drendo
