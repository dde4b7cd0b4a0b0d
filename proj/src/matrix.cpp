#include "casex/matrix.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "casex/errors.hpp"

namespace casex {

EigenSolution eigen_symmetric(const SymmetricMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.dimension());
    for (double v : m.data())
        if (!std::isfinite(v)) throw NumericError("matrix has non-finite entries");

    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw NumericError("symmetric eigensolver did not converge");

    EigenSolution out;
    out.values.resize(n);
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[k] = solver.eigenvalues()(k);
        for (Eigen::Index i = 0; i < n; ++i) out.vectors[k * n + i] = solver.eigenvectors()(i, k);
    }
    return out;
}

std::vector<double> eigenvalues_of(const SymmetricMatrix& m) { return eigen_symmetric(m).values; }

} // namespace casex
