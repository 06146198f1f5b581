#include "circsolve/oracle.hpp"

#include "circsolve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace circsolve::oracle {

namespace {

// 53 random mantissa bits from the engine; std::uniform_real_distribution is
// implementation-defined, which would break cross-platform determinism.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

    double next(double lo, double hi)
    {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

// Decorrelates the streams used for specs and right-hand sides.
constexpr std::uint64_t vector_stream = 0x9e3779b97f4a7c15ULL;

} // namespace

DenseMatrix::DenseMatrix(std::size_t n, std::vector<double> row_major) : n_(n), entries_(std::move(row_major))
{
    if (entries_.size() != n * n) {
        throw LengthMismatch(n * n, entries_.size(), "dense entry count");
    }
}

bool DenseMatrix::is_symmetric() const noexcept
{
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

double DenseMatrix::inf_norm() const noexcept
{
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            row += std::abs((*this)(i, j));
        }
        best = std::max(best, row);
    }
    return best;
}

std::vector<double> DenseMatrix::multiply(const std::vector<double>& x) const
{
    if (x.size() != n_) {
        throw DimensionMismatch(n_, x.size());
    }
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            acc += (*this)(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

DenseMatrix materialize(const CirculantSpec& spec, std::size_t cap)
{
    const std::size_t n = spec.n();
    if (n > cap) {
        throw AllocationLimit(n, cap);
    }
    DenseMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = spec[(j + n - k) % n];
        }
    }
    return m;
}

RealVector dense_solve(const DenseMatrix& m, const RealVector& b)
{
    const std::size_t n = m.n();
    if (b.size() != n) {
        throw DimensionMismatch(n, b.size());
    }
    const double pivot_floor = 1e-13 * m.inf_norm();
    std::vector<double> lu = m.entries();
    std::vector<double> x(b.entries().begin(), b.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return lu[i * n + j]; };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_abs = std::abs(at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (std::abs(at(i, col)) > pivot_abs) {
                pivot_abs = std::abs(at(i, col));
                pivot_row = i;
            }
        }
        if (pivot_abs < pivot_floor || pivot_abs == 0.0) {
            throw NumericallySingular(col, pivot_abs);
        }
        if (pivot_row != col) {
            std::swap_ranges(lu.begin() + static_cast<std::ptrdiff_t>(col * n),
                             lu.begin() + static_cast<std::ptrdiff_t>((col + 1) * n),
                             lu.begin() + static_cast<std::ptrdiff_t>(pivot_row * n));
            std::swap(x[col], x[pivot_row]);
        }
        const double pivot = at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double factor = at(i, col) / pivot;
            if (factor == 0.0) {
                continue;
            }
            at(i, col) = factor;
            for (std::size_t j = col + 1; j < n; ++j) {
                at(i, j) -= factor * at(col, j);
            }
            x[i] -= factor * x[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = x[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= at(i, j) * x[j];
        }
        x[i] = acc / at(i, i);
    }
    return RealVector(std::move(x));
}

std::vector<double> dense_eigenvalues(const DenseMatrix& m, int max_sweeps)
{
    const std::size_t n = m.n();
    std::vector<double> a = m.entries();
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    const double target = 1e-11 * m.inf_norm();

    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    sum += at(i, j) * at(i, j);
                }
            }
        }
        return std::sqrt(sum);
    };

    double off = off_norm();
    int sweep = 0;
    while (off > target) {
        if (sweep == max_sweeps) {
            throw NoConvergence(max_sweeps, off);
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                // Rotation angle zeroing (p, q); t is the smaller root of t^2 + 2 theta t - 1 = 0.
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
        off = off_norm();
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = at(i, i);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

CirculantSpec random_spec(std::size_t n, std::uint64_t seed)
{
    UniformSource rng(seed);
    std::vector<double> half(n / 2);
    for (double& v : half) {
        v = rng.next(-1.0, 1.0);
    }
    double off_diag = 0.0;
    for (std::size_t m = 1; m <= n / 2; ++m) {
        // Every a_m except the self-mirrored a_{n/2} appears twice in the row.
        const bool self_mirror = (n % 2 == 0 && m == n / 2);
        off_diag += (self_mirror ? 1.0 : 2.0) * std::abs(half[m - 1]);
    }
    return make_spec_from_generator(1.0 + off_diag, half, n);
}

RealVector random_vector(std::size_t n, std::uint64_t seed, double lo, double hi)
{
    UniformSource rng(seed ^ vector_stream);
    std::vector<double> v(n);
    for (double& x : v) {
        x = rng.next(lo, hi);
    }
    return RealVector(std::move(v));
}

double random_scalar(std::uint64_t seed, double lo, double hi)
{
    UniformSource rng(seed ^ (vector_stream >> 1));
    return rng.next(lo, hi);
}

} // namespace circsolve::oracle
