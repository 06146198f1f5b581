#pragma once

// Symmetric circulant matrices and their real spectra.
//
// A circulant matrix is stored as its first row a_0..a_{n-1}; entry (k, j)
// of the full matrix is a_{(j-k) mod n}. Symmetry means a_{n-l} == a_l.

#include <cstddef>
#include <span>
#include <vector>

namespace circsolve {

inline constexpr double default_singular_tolerance = 1e-10;

/// A length-n vector of finite doubles (right-hand side or solution).
class RealVector {
public:
    RealVector() = default;
    /// Throws NonFinite on NaN/inf entries.
    explicit RealVector(std::vector<double> entries);
    static RealVector constant(std::size_t n, double value);

    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    std::span<const double> entries() const noexcept { return entries_; }
    const std::vector<double>& vec() const noexcept { return entries_; }

    /// True when every entry is bitwise equal to the first.
    bool is_constant() const noexcept;
    double inf_norm() const noexcept;

    friend bool operator==(const RealVector&, const RealVector&) = default;

private:
    std::vector<double> entries_;
};

/// Symmetric circulant matrix compressed to its first row.
class CirculantSpec {
public:
    std::size_t n() const noexcept { return first_row_.size(); }
    std::span<const double> first_row() const noexcept { return first_row_; }
    double operator[](std::size_t m) const { return first_row_[m]; }

    /// The spec with every coefficient multiplied by c.
    CirculantSpec scaled(double c) const;

    friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

private:
    friend CirculantSpec make_spec(std::span<const double>);
    friend CirculantSpec make_spec_from_generator(double, std::span<const double>, std::size_t);
    explicit CirculantSpec(std::vector<double> row) : first_row_(std::move(row)) {}

    std::vector<double> first_row_;
};

/// Validates symmetry exactly. Throws EmptyInput, NonFinite or SymmetryViolation.
CirculantSpec make_spec(std::span<const double> first_row);

/// Builds the unique symmetric row from a_0 and a_1..a_{floor(n/2)}.
/// Throws LengthMismatch or NonFinite.
CirculantSpec make_spec_from_generator(double a0, std::span<const double> half, std::size_t n);

/// Real eigenvalues psi_0..psi_{n-1}. Symmetric in k <-> n-k.
class Spectrum {
public:
    /// Validates finiteness and the k <-> n-k symmetry (1e-12 relative).
    /// Throws InvalidSpectrum.
    explicit Spectrum(std::vector<double> values, double singular_tolerance = default_singular_tolerance);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const noexcept { return values_; }
    double singular_tolerance() const noexcept { return singular_tolerance_; }
    Spectrum with_tolerance(double tol) const { return Spectrum(values_, tol); }

    double max_abs() const noexcept;
    double min_abs() const noexcept;

private:
    std::vector<double> values_;
    double singular_tolerance_;
};

/// psi_k = a_0 + 2 sum_{m=1}^{floor((n-1)/2)} a_m cos(2 pi m k / n) + [n even] (-1)^k a_{n/2}.
/// O(n^2) real arithmetic; cosines are evaluated on the reduced index (m k mod n).
Spectrum spectrum(const CirculantSpec& spec, double singular_tolerance = default_singular_tolerance);

struct SingularityReport {
    bool singular = false;
    std::vector<std::size_t> offending;
    double min_abs = 0.0;
    double max_abs = 0.0;
};

/// Singular iff min|psi| <= tol * max|psi| or max|psi| == 0.
SingularityReport is_singular(const Spectrum& s);

/// Throws SingularSystem built from the report when it is singular.
void require_nonsingular(const Spectrum& s);

/// Table of cos(2 pi r / n) and sin(2 pi r / n) for r in 0..n-1.
struct TrigTable {
    explicit TrigTable(std::size_t n);
    std::size_t n;
    std::vector<double> cos;
    std::vector<double> sin;
};

} // namespace circsolve
