#ifndef DRENDO_FQ_HPP
#define DRENDO_FQ_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace drendo {

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated internal invariant: something the underlying theory rules out.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// An element of F_q, q = p^n, packed as a base-p integer: digit i is the
// coordinate of w^i in the basis 1, w, ..., w^{n-1}.  Comparing packed
// values gives the canonical order (most significant power of w first).
using FqElt = std::uint32_t;

/// Context for F_q = F_p[w]/(modulus), q = p^n <= 2^16.
///
/// Multiplication runs on exp/log tables over a fixed primitive element;
/// addition uses a full table for small q and digit arithmetic otherwise.
class Fq {
  public:
    // mod_coeffs: the n+1 coefficients of a monic irreducible over F_p,
    // constant term first.  For n = 1 the modulus is implicit.
    Fq(unsigned p, unsigned n, std::vector<unsigned> mod_coeffs,
       std::string label = "w");

    static Fq prime_field(unsigned p);
    // Default modulus: the lexicographically least monic irreducible of
    // degree n over F_p (for F_4 this is w^2 + w + 1).
    static Fq make(unsigned p, unsigned n, std::string label = "w");

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    FqElt q() const { return q_; }
    const std::string& label() const { return label_; }
    const std::vector<unsigned>& mod_coeffs() const { return mod_; }

    bool same(const Fq& o) const {
        return p_ == o.p_ && n_ == o.n_ && mod_ == o.mod_;
    }

    FqElt zero() const { return 0; }
    FqElt one() const { return 1; }
    FqElt gen() const { return n_ > 1 ? p_ : 0; }

    FqElt add(FqElt a, FqElt b) const {
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_slow(a, b);
    }
    FqElt neg(FqElt a) const { return neg_tab_[a]; }
    FqElt sub(FqElt a, FqElt b) const { return add(a, neg(b)); }

    FqElt mul(FqElt a, FqElt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    FqElt inv(FqElt a) const {
        if (a == 0) throw invalid_input("Fq: inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    FqElt div(FqElt a, FqElt b) const { return mul(a, inv(b)); }

    FqElt pow(FqElt a, unsigned long long e) const;
    // x -> x^p (the p-power Frobenius of F_q over F_p).
    FqElt frob(FqElt a) const { return frob_tab_[a]; }

    bool is_square(FqElt a) const;
    // Square root; throws invalid_input for odd-q non-squares.
    FqElt sqrt(FqElt a) const;

    // Embeds an integer via reduction mod p.
    FqElt from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<FqElt>(r);
    }

    unsigned digit(FqElt a, unsigned i) const;
    FqElt from_digits(const std::vector<unsigned>& dig) const;

    // Uniform element from an external RNG draw.
    FqElt elt_from_u64(std::uint64_t r) const { return static_cast<FqElt>(r % q_); }

  private:
    unsigned p_, n_;
    FqElt q_;
    std::vector<unsigned> mod_;
    std::string label_;

    std::vector<FqElt> exp_;   // size 2(q-1): g^i
    std::vector<FqElt> log_;   // size q, log_[0] unused
    std::vector<FqElt> neg_tab_, frob_tab_;
    std::vector<FqElt> add_tab_;  // q*q when q <= 1024

    FqElt add_slow(FqElt a, FqElt b) const;
    FqElt mul_poly(FqElt a, FqElt b) const;  // table-free, used during setup
};

}  // namespace drendo

#endif
