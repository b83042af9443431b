#include "drendo/fq.hpp"

#include <algorithm>
#include <numeric>

namespace drendo {

namespace {

// Arithmetic on F_p[w] digit vectors, only used while building the tables.

std::vector<unsigned> digits_of(std::uint32_t v, unsigned p, unsigned n) {
    std::vector<unsigned> d(n, 0);
    for (unsigned i = 0; i < n && v; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

std::uint32_t pack(const std::vector<unsigned>& d, unsigned p) {
    std::uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// a*b mod (modulus), all as digit vectors over F_p, modulus monic of degree n.
std::vector<unsigned> polymul_mod(const std::vector<unsigned>& a,
                                  const std::vector<unsigned>& b,
                                  const std::vector<unsigned>& mod, unsigned p) {
    unsigned n = static_cast<unsigned>(mod.size()) - 1;
    std::vector<unsigned> c(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (unsigned k = 2 * n - 2; k + 1 > n; --k) {
        unsigned t = c[k];
        if (!t) continue;
        c[k] = 0;
        for (unsigned j = 0; j < n; ++j)
            c[k - n + j] = (c[k - n + j] + t * (p - mod[j] % p)) % p;
    }
    c.resize(n);
    return c;
}

bool is_irreducible_fp(const std::vector<unsigned>& f, unsigned p) {
    unsigned n = static_cast<unsigned>(f.size()) - 1;
    if (n == 1) return true;
    // Trial division by every monic polynomial of degree <= n/2.
    for (unsigned dd = 1; 2 * dd <= n; ++dd) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<unsigned> g(dd + 1, 0);
            std::uint64_t x = t;
            for (unsigned i = 0; i < dd; ++i) {
                g[i] = static_cast<unsigned>(x % p);
                x /= p;
            }
            g[dd] = 1;
            // Remainder of f by g.
            std::vector<unsigned> r = f;
            while (r.size() >= g.size()) {
                unsigned lead = r.back();
                if (lead) {
                    size_t off = r.size() - g.size();
                    for (size_t j = 0; j < g.size(); ++j)
                        r[off + j] = (r[off + j] + lead * (p - g[j] % p)) % p;
                }
                r.pop_back();
                while (!r.empty() && r.back() == 0) r.pop_back();
                if (r.size() < g.size()) break;
            }
            if (r.empty()) return false;
        }
    }
    return true;
}

std::vector<unsigned> prime_factors_u32(std::uint32_t m) {
    std::vector<unsigned> out;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

Fq::Fq(unsigned p, unsigned n, std::vector<unsigned> mod_coeffs, std::string label)
    : p_(p), n_(n), mod_(std::move(mod_coeffs)), label_(std::move(label)) {
    if (p < 2 || n < 1) throw invalid_input("Fq: bad p or n");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw invalid_input("Fq: p not prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 16)) throw invalid_input("Fq: q exceeds 2^16");
    }
    q_ = static_cast<FqElt>(q);
    if (n_ == 1) {
        mod_ = {0, 1};
    } else {
        if (mod_.size() != n_ + 1 || mod_.back() != 1)
            throw invalid_input("Fq: modulus must be monic of degree n");
        for (auto& c : mod_) c %= p_;
        if (!is_irreducible_fp(mod_, p_))
            throw invalid_input("Fq: modulus is reducible");
    }

    neg_tab_.resize(q_);
    for (FqElt a = 0; a < q_; ++a) {
        auto d = digits_of(a, p_, n_);
        for (auto& x : d) x = (p_ - x) % p_;
        neg_tab_[a] = pack(d, p_);
    }

    // Primitive element -> exp/log tables.
    auto ord_factors = prime_factors_u32(q_ - 1);
    FqElt g = 0;
    for (FqElt cand = 1; cand < q_; ++cand) {
        bool ok = true;
        for (unsigned ell : ord_factors) {
            // cand^((q-1)/ell) == 1 ?
            std::uint32_t e = (q_ - 1) / ell;
            FqElt acc = 1, base = cand;
            while (e) {
                if (e & 1) acc = mul_poly(acc, base);
                base = mul_poly(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0 && q_ > 2) throw internal_error("Fq: no primitive element found");
    if (q_ == 2) g = 1;

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    FqElt cur = 1;
    for (FqElt i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + (q_ - 1)] = cur;
        log_[cur] = i;
        cur = mul_poly(cur, g);
    }
    if (cur != 1) throw internal_error("Fq: generator order mismatch");

    frob_tab_.resize(q_);
    frob_tab_[0] = 0;
    for (FqElt a = 1; a < q_; ++a)
        frob_tab_[a] = exp_[static_cast<std::uint64_t>(log_[a]) * p_ % (q_ - 1)];

    if (q_ <= 1024) {
        add_tab_.resize(static_cast<size_t>(q_) * q_);
        for (FqElt a = 0; a < q_; ++a)
            for (FqElt b = 0; b < q_; ++b)
                add_tab_[static_cast<size_t>(a) * q_ + b] = add_slow(a, b);
    }
}

Fq Fq::prime_field(unsigned p) { return Fq(p, 1, {}); }

Fq Fq::make(unsigned p, unsigned n, std::string label) {
    if (n == 1) return prime_field(p);
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
        std::vector<unsigned> f(n + 1, 0);
        std::uint64_t x = t;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = static_cast<unsigned>(x % p);
            x /= p;
        }
        f[n] = 1;
        if (is_irreducible_fp(f, p)) return Fq(p, n, f, std::move(label));
    }
    throw internal_error("Fq: no irreducible modulus found");
}

FqElt Fq::add_slow(FqElt a, FqElt b) const {
    auto da = digits_of(a, p_, n_);
    auto db = digits_of(b, p_, n_);
    for (unsigned i = 0; i < n_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da, p_);
}

FqElt Fq::mul_poly(FqElt a, FqElt b) const {
    if (a == 0 || b == 0) return 0;
    if (n_ == 1) return static_cast<FqElt>(static_cast<std::uint64_t>(a) * b % p_);
    auto da = digits_of(a, p_, n_);
    auto db = digits_of(b, p_, n_);
    return pack(polymul_mod(da, db, mod_, p_), p_);
}

FqElt Fq::pow(FqElt a, unsigned long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = log_[a];
    return exp_[static_cast<std::uint64_t>(le) * (e % (q_ - 1)) % (q_ - 1)];
}

bool Fq::is_square(FqElt a) const {
    if (a == 0 || p_ == 2) return true;
    return log_[a] % 2 == 0;
}

FqElt Fq::sqrt(FqElt a) const {
    if (a == 0) return 0;
    if (p_ == 2) {
        // Frobenius is an automorphism: sqrt(a) = a^(q/2).
        return pow(a, q_ / 2);
    }
    FqElt l = log_[a];
    if (l % 2 != 0) throw invalid_input("Fq: sqrt of non-square");
    return exp_[l / 2];
}

unsigned Fq::digit(FqElt a, unsigned i) const {
    for (unsigned k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

FqElt Fq::from_digits(const std::vector<unsigned>& dig) const {
    FqElt v = 0;
    for (size_t i = dig.size(); i-- > 0;) v = v * p_ + dig[i] % p_;
    return v;
}

}  // namespace drendo
