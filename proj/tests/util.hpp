#ifndef DRENDO_TESTS_UTIL_HPP
#define DRENDO_TESTS_UTIL_HPP

#include <random>

#include "drendo/factor.hpp"
#include "drendo/residue.hpp"
#include "drendo/textio.hpp"

namespace tu {

inline drendo::APoly ap(const drendo::Fq& F, const char* s) { return drendo::parse_poly(F, s); }

inline drendo::APoly random_poly(const drendo::Fq& F, int deg, std::mt19937_64& rng) {
    std::vector<drendo::FqElt> c(deg + 1);
    for (auto& x : c) x = F.elt_from_u64(rng());
    return drendo::APoly(std::move(c));
}

inline drendo::APoly random_monic(const drendo::Fq& F, int deg, std::mt19937_64& rng) {
    std::vector<drendo::FqElt> c(deg + 1);
    for (auto& x : c) x = F.elt_from_u64(rng());
    c[deg] = 1;
    return drendo::APoly(std::move(c));
}

inline drendo::APoly random_irreducible(const drendo::Fq& F, int deg, std::mt19937_64& rng) {
    while (true) {
        drendo::APoly f = random_monic(F, deg, rng);
        if (drendo::is_irreducible(F, f)) return f;
    }
}

// All q^d elements of F_p in basis order.
inline std::vector<drendo::ResElt> all_residues(const drendo::ResidueCtx& R) {
    std::vector<drendo::ResElt> out;
    const auto q = R.field().q();
    const unsigned d = R.d();
    std::vector<drendo::FqElt> idx(d, 0);
    while (true) {
        out.push_back(drendo::ResElt{idx});
        unsigned i = 0;
        for (; i < d; ++i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
        if (i == d) break;
    }
    return out;
}

}  // namespace tu

#endif
