#pragma once

#include <cstddef>
#include <vector>

#include "casex/basis.hpp"

namespace casex {

// Dense real symmetric matrix with basis labels.  Writes go through set()
// which mirrors both triangles, so entries[i][j] == entries[j][i] exactly.
class SymmetricMatrix {
  public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
    SymmetricMatrix(std::size_t n, std::vector<CaseXState> labels)
        : n_(n), a_(n * n, 0.0), labels_(std::move(labels)) {}

    std::size_t dimension() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, double v) {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }
    void add(std::size_t i, std::size_t j, double v) { set(i, j, a_[i * n_ + j] + v); }

    const std::vector<CaseXState>& labels() const { return labels_; }
    const std::vector<double>& data() const { return a_; }

  private:
    std::size_t n_;
    std::vector<double> a_;
    std::vector<CaseXState> labels_;
};

struct EigenSolution {
    std::vector<double> values; // ascending
    // column k of the orthonormal eigenvector matrix, entries [k*n, (k+1)*n)
    std::vector<double> vectors;

    double vector(std::size_t k, std::size_t i, std::size_t n) const { return vectors[k * n + i]; }
};

// Eigendecomposition of a real symmetric matrix, eigenvalues ascending.
// Throws NumericError on non-finite entries or solver failure.
EigenSolution eigen_symmetric(const SymmetricMatrix& m);

std::vector<double> eigenvalues_of(const SymmetricMatrix& m);

} // namespace casex
