#include "drendo/linalg.hpp"

namespace drendo {

std::optional<AffineSolution> solve_affine_system(
    const Fq& F, const std::vector<FqMat>& Ms,
    const std::vector<std::vector<FqElt>>& Ns) {
    if (Ms.size() != Ns.size()) throw invalid_input("solve_affine_system: size mismatch");
    if (Ms.empty()) return AffineSolution{{}, {}};
    const unsigned nvars = Ms[0].rows;
    std::vector<std::vector<FqElt>> A;
    std::vector<FqElt> b;
    for (size_t k = 0; k < Ms.size(); ++k) {
        const FqMat& M = Ms[k];
        if (M.rows != nvars || Ns[k].size() != M.cols)
            throw invalid_input("solve_affine_system: dimension mismatch");
        // x*M = N reads column-wise: sum_i x_i M[i][j] = N[j].
        for (unsigned j = 0; j < M.cols; ++j) {
            std::vector<FqElt> row(nvars);
            for (unsigned i = 0; i < nvars; ++i) row[i] = M.at(i, j);
            A.push_back(std::move(row));
            b.push_back(Ns[k][j]);
        }
    }
    FqOps ops{F};
    auto sol = LinSolve<FqOps>::solve(ops, std::move(A), std::move(b));
    if (!sol) return std::nullopt;
    return AffineSolution{std::move(sol->first), std::move(sol->second)};
}

unsigned rank(const Fq& F, const FqMat& M) {
    std::vector<std::vector<FqElt>> A(M.rows, std::vector<FqElt>(M.cols));
    for (unsigned i = 0; i < M.rows; ++i)
        for (unsigned j = 0; j < M.cols; ++j) A[i][j] = M.at(i, j);
    FqOps ops{F};
    return LinSolve<FqOps>::rank(ops, std::move(A));
}

std::vector<std::vector<FqElt>> kernel(const Fq& F, const FqMat& M) {
    std::vector<std::vector<FqElt>> A(M.rows, std::vector<FqElt>(M.cols));
    for (unsigned i = 0; i < M.rows; ++i)
        for (unsigned j = 0; j < M.cols; ++j) A[i][j] = M.at(i, j);
    std::vector<FqElt> b(M.rows, 0);
    FqOps ops{F};
    auto sol = LinSolve<FqOps>::solve(ops, std::move(A), std::move(b));
    return sol->second;
}

}  // namespace drendo
