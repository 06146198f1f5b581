#pragma once

// Independent reference path: the full n x n matrix, solved by Gaussian
// elimination with partial pivoting, and a cyclic Jacobi eigensolver.
// Nothing here depends on the solver's spectral machinery.

#include "circsolve/core.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace circsolve::oracle {

inline constexpr std::size_t default_dense_cap = 8192;
inline constexpr int default_jacobi_sweeps = 50;

/// Row-major square matrix.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}
    DenseMatrix(std::size_t n, std::vector<double> row_major);

    std::size_t n() const noexcept { return n_; }
    double& operator()(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
    double operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    const std::vector<double>& entries() const noexcept { return entries_; }

    bool is_symmetric() const noexcept;
    double inf_norm() const noexcept;
    std::vector<double> multiply(const std::vector<double>& x) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

/// entries(k, j) = a_{(j-k) mod n}. Throws AllocationLimit when n > cap.
DenseMatrix materialize(const CirculantSpec& spec, std::size_t cap = default_dense_cap);

/// LU with partial pivoting. Throws NumericallySingular when a pivot falls
/// below 1e-13 * ||M||_inf, DimensionMismatch on a length mismatch.
RealVector dense_solve(const DenseMatrix& m, const RealVector& b);

/// Eigenvalues of a symmetric matrix, ascending. Cyclic Jacobi; converged
/// when the off-diagonal Frobenius norm is <= 1e-11 * ||M||_inf.
/// Throws NoConvergence after max_sweeps.
std::vector<double> dense_eigenvalues(const DenseMatrix& m, int max_sweeps = default_jacobi_sweeps);

/// Strictly diagonally dominant spec: a_1..a_{n/2} uniform in [-1, 1],
/// a_0 = 1 + sum_{m=1}^{n-1} |a_m|. Deterministic in (n, seed).
CirculantSpec random_spec(std::size_t n, std::uint64_t seed);

/// Entries uniform in [lo, hi]. Deterministic in (n, seed).
RealVector random_vector(std::size_t n, std::uint64_t seed, double lo = -1.0, double hi = 1.0);

/// Uniform double in [lo, hi] from a seed. Deterministic.
double random_scalar(std::uint64_t seed, double lo = -1.0, double hi = 1.0);

} // namespace circsolve::oracle
