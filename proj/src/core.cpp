#include "circsolve/core.hpp"

#include "circsolve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circsolve {

namespace {

void check_finite(std::span<const double> v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw NonFinite(i);
        }
    }
}

} // namespace

RealVector::RealVector(std::vector<double> entries) : entries_(std::move(entries))
{
    check_finite(entries_);
}

RealVector RealVector::constant(std::size_t n, double value)
{
    return RealVector(std::vector<double>(n, value));
}

bool RealVector::is_constant() const noexcept
{
    // Bitwise: -0.0 and 0.0 are different right-hand sides for dispatch purposes.
    return std::all_of(entries_.begin(), entries_.end(), [&](double v) {
        return std::signbit(v) == std::signbit(entries_.front()) && v == entries_.front();
    });
}

double RealVector::inf_norm() const noexcept
{
    double m = 0.0;
    for (double v : entries_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

CirculantSpec CirculantSpec::scaled(double c) const
{
    std::vector<double> row(first_row_);
    for (double& v : row) {
        v *= c;
    }
    return make_spec(row);
}

CirculantSpec make_spec(std::span<const double> first_row)
{
    if (first_row.empty()) {
        throw EmptyInput();
    }
    check_finite(first_row);
    const std::size_t n = first_row.size();
    std::vector<double> row(first_row.begin(), first_row.end());
    for (std::size_t l = 1; l <= n / 2; ++l) {
        if (row[l] != row[n - l]) {
            throw SymmetryViolation(l, n - l, std::abs(row[l] - row[n - l]));
        }
        // +0.0 == -0.0; make the pair bitwise identical.
        row[n - l] = row[l];
    }
    return CirculantSpec(std::move(row));
}

CirculantSpec make_spec_from_generator(double a0, std::span<const double> half, std::size_t n)
{
    if (n == 0) {
        throw EmptyInput();
    }
    if (half.size() != n / 2) {
        throw LengthMismatch(n / 2, half.size(), "generator length");
    }
    if (!std::isfinite(a0)) {
        throw NonFinite(0);
    }
    for (std::size_t i = 0; i < half.size(); ++i) {
        if (!std::isfinite(half[i])) {
            throw NonFinite(i + 1);
        }
    }
    std::vector<double> row(n);
    row[0] = a0;
    for (std::size_t m = 1; m <= n / 2; ++m) {
        row[m] = half[m - 1];
        row[n - m] = half[m - 1];
    }
    return CirculantSpec(std::move(row));
}

Spectrum::Spectrum(std::vector<double> values, double singular_tolerance)
    : values_(std::move(values)), singular_tolerance_(singular_tolerance)
{
    if (values_.empty()) {
        throw InvalidSpectrum("spectrum is empty");
    }
    if (!(singular_tolerance_ >= 0.0) || !std::isfinite(singular_tolerance_)) {
        throw InvalidSpectrum("singular tolerance must be a finite non-negative number");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw InvalidSpectrum("non-finite eigenvalue at k=" + std::to_string(k));
        }
    }
    const std::size_t n = values_.size();
    const double scale = max_abs();
    for (std::size_t k = 1; k < n; ++k) {
        if (std::abs(values_[k] - values_[n - k]) > 1e-12 * scale) {
            throw InvalidSpectrum("eigenvalues not symmetric at (" + std::to_string(k) + "," +
                                  std::to_string(n - k) + ")");
        }
    }
}

double Spectrum::max_abs() const noexcept
{
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double Spectrum::min_abs() const noexcept
{
    double m = std::abs(values_.front());
    for (double v : values_) {
        m = std::min(m, std::abs(v));
    }
    return m;
}

TrigTable::TrigTable(std::size_t n_) : n(n_), cos(n_), sin(n_)
{
    // Fill the first half and mirror, so cos[n-r] == cos[r] and sin[n-r] == -sin[r] exactly.
    for (std::size_t r = 0; r <= n / 2; ++r) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
        cos[r] = std::cos(angle);
        sin[r] = std::sin(angle);
        if (r != 0 && 2 * r != n) {
            cos[n - r] = cos[r];
            sin[n - r] = -sin[r];
        }
    }
    if (n % 2 == 0) {
        cos[n / 2] = -1.0;
        sin[n / 2] = 0.0;
    }
    if (n % 4 == 0) {
        cos[n / 4] = 0.0;
        sin[n / 4] = 1.0;
        cos[3 * n / 4] = 0.0;
        sin[3 * n / 4] = -1.0;
    }
}

Spectrum spectrum(const CirculantSpec& spec, double singular_tolerance)
{
    const std::size_t n = spec.n();
    const TrigTable trig(n);
    const std::size_t pairs = (n - 1) / 2;
    std::vector<double> psi(n);
    for (std::size_t k = 0; k < n; ++k) {
        // S_0 + sum over the conjugate pairs (S_m, S_{n-m}) = 2 a_m cos(2 pi m k / n).
        double paired = 0.0;
        std::size_t r = 0;
        for (std::size_t m = 1; m <= pairs; ++m) {
            r += k;
            if (r >= n) {
                r -= n;
            }
            paired += spec[m] * trig.cos[r];
        }
        double value = spec[0] + 2.0 * paired;
        if (n % 2 == 0) {
            value += (k % 2 == 0 ? 1.0 : -1.0) * spec[n / 2];
        }
        psi[k] = value;
    }
    return Spectrum(std::move(psi), singular_tolerance);
}

SingularityReport is_singular(const Spectrum& s)
{
    SingularityReport report;
    report.max_abs = s.max_abs();
    report.min_abs = s.min_abs();
    const double threshold = s.singular_tolerance() * report.max_abs;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (report.max_abs == 0.0 || std::abs(s[k]) <= threshold) {
            report.offending.push_back(k);
        }
    }
    report.singular = !report.offending.empty();
    return report;
}

void require_nonsingular(const Spectrum& s)
{
    const auto report = is_singular(s);
    if (!report.singular) {
        return;
    }
    std::vector<double> values;
    values.reserve(report.offending.size());
    for (auto k : report.offending) {
        values.push_back(std::abs(s[k]));
    }
    throw SingularSystem(report.offending, std::move(values));
}

} // namespace circsolve
