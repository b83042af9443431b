#ifndef DRENDO_LINALG_HPP
#define DRENDO_LINALG_HPP

#include <optional>
#include <vector>

#include "drendo/fq.hpp"

namespace drendo {

/// Row-major matrix over F_q.
struct FqMat {
    unsigned rows = 0, cols = 0;
    std::vector<FqElt> a;

    FqMat() = default;
    FqMat(unsigned r, unsigned c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    FqElt& at(unsigned r, unsigned c) { return a[static_cast<size_t>(r) * cols + c]; }
    FqElt at(unsigned r, unsigned c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Gaussian elimination over any field presented through ops with
//   elem, zero(), is_zero(e), add, sub, mul, inv.
// Solves A x = b; returns particular solution and a kernel basis.
template <class Ops>
struct LinSolve {
    using E = typename Ops::elem;

    // A: rows of length ncols; b: one entry per row.
    static std::optional<std::pair<std::vector<E>, std::vector<std::vector<E>>>>
    solve(const Ops& K, std::vector<std::vector<E>> A, std::vector<E> b) {
        const size_t nr = A.size();
        const size_t nc = nr ? A[0].size() : 0;
        std::vector<size_t> pivot_col;
        size_t row = 0;
        for (size_t col = 0; col < nc && row < nr; ++col) {
            size_t sel = row;
            while (sel < nr && K.is_zero(A[sel][col])) ++sel;
            if (sel == nr) continue;
            std::swap(A[sel], A[row]);
            std::swap(b[sel], b[row]);
            E piv_inv = K.inv(A[row][col]);
            for (size_t j = col; j < nc; ++j) A[row][j] = K.mul(A[row][j], piv_inv);
            b[row] = K.mul(b[row], piv_inv);
            for (size_t i = 0; i < nr; ++i) {
                if (i == row || K.is_zero(A[i][col])) continue;
                E f = A[i][col];
                for (size_t j = col; j < nc; ++j)
                    A[i][j] = K.sub(A[i][j], K.mul(f, A[row][j]));
                b[i] = K.sub(b[i], K.mul(f, b[row]));
            }
            pivot_col.push_back(col);
            ++row;
        }
        for (size_t i = row; i < nr; ++i)
            if (!K.is_zero(b[i])) return std::nullopt;

        std::vector<E> x(nc, K.zero());
        for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];

        std::vector<bool> is_pivot(nc, false);
        for (size_t c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<E>> kernel;
        for (size_t fc = 0; fc < nc; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<E> v(nc, K.zero());
            v[fc] = K.one();
            for (size_t i = 0; i < pivot_col.size(); ++i)
                v[pivot_col[i]] = K.neg(A[i][fc]);
            kernel.push_back(std::move(v));
        }
        return std::make_pair(std::move(x), std::move(kernel));
    }

    static unsigned rank(const Ops& K, std::vector<std::vector<E>> A) {
        const size_t nr = A.size();
        const size_t nc = nr ? A[0].size() : 0;
        unsigned r = 0;
        for (size_t col = 0; col < nc && r < nr; ++col) {
            size_t sel = r;
            while (sel < nr && K.is_zero(A[sel][col])) ++sel;
            if (sel == nr) continue;
            std::swap(A[sel], A[r]);
            E piv_inv = K.inv(A[r][col]);
            for (size_t j = col; j < nc; ++j) A[r][j] = K.mul(A[r][j], piv_inv);
            for (size_t i = r + 1; i < nr; ++i) {
                if (K.is_zero(A[i][col])) continue;
                E f = A[i][col];
                for (size_t j = col; j < nc; ++j)
                    A[i][j] = K.sub(A[i][j], K.mul(f, A[r][j]));
            }
            ++r;
        }
        return r;
    }
};

struct FqOps {
    const Fq& F;
    using elem = FqElt;
    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem e) const { return e == 0; }
    elem add(elem a, elem b) const { return F.add(a, b); }
    elem sub(elem a, elem b) const { return F.sub(a, b); }
    elem neg(elem a) const { return F.neg(a); }
    elem mul(elem a, elem b) const { return F.mul(a, b); }
    elem inv(elem a) const { return F.inv(a); }
};

struct AffineSolution {
    std::vector<FqElt> particular;
    std::vector<std::vector<FqElt>> nullspace;
};

// Simultaneous solution of x * M_k = N_k over F_q for all k, with the
// common left null space of the M_k.  Empty optional when inconsistent.
std::optional<AffineSolution> solve_affine_system(const Fq& F,
                                                  const std::vector<FqMat>& Ms,
                                                  const std::vector<std::vector<FqElt>>& Ns);

unsigned rank(const Fq& F, const FqMat& M);
// Basis of {v : M v = 0}.
std::vector<std::vector<FqElt>> kernel(const Fq& F, const FqMat& M);

}  // namespace drendo

#endif
