#pragma once

// Solution paths for A x = b with A symmetric circulant:
//  - direct:       closed-form real cosine sums, O(n^2), no complex arithmetic
//  - fft:          x = F Psi^{-1} F* b through a cached DftPlan, O(n log n)
//  - constant-rhs: b_j = beta for all j gives x_l = beta / sum_j a_j, O(n)

#include "circsolve/core.hpp"
#include "circsolve/dft.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace circsolve {

enum class SolvePath { Direct, Fft, ConstantRhs };

std::string_view to_string(SolvePath path) noexcept;
/// Accepts "direct", "fft", "constant" / "constant-rhs".
std::optional<SolvePath> parse_solve_path(std::string_view name) noexcept;

/// Per-length cache of DftPlans. Lookups may run concurrently; a miss builds
/// the plan outside the lock and the first insertion wins.
class PlanCache {
public:
    std::shared_ptr<const DftPlan> get(std::size_t n);
    std::size_t size() const;

    /// Process-wide cache used by the solver entry points.
    static PlanCache& shared();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::size_t, std::shared_ptr<const DftPlan>> plans_;
};

/// T_k = (1/n) sum_j b_j e^{2 pi i k j / n}.
/// Real b gives T_{n-k} == conj(T_k) and T_0 == mean(b).
class RhsSpectrum {
public:
    explicit RhsSpectrum(ComplexVector coefficients) : coefficients_(std::move(coefficients)) {}
    std::size_t size() const noexcept { return coefficients_.size(); }
    const Complex& operator[](std::size_t k) const { return coefficients_[k]; }
    std::span<const Complex> coefficients() const noexcept { return coefficients_; }

private:
    ComplexVector coefficients_;
};

/// Throws DimensionMismatch.
RhsSpectrum rhs_spectrum(const DftPlan& plan, const RealVector& b);

/// Eigenvalues as the real part of the forward DFT of the first row, O(n log n).
/// Pairs (k, n-k) are averaged so the result is exactly symmetric.
Spectrum spectrum_fft(const CirculantSpec& spec, const DftPlan& plan,
                      double singular_tolerance = default_singular_tolerance);

/// Closed-form real solve. Throws SingularSystem or DimensionMismatch.
RealVector solve_direct(const CirculantSpec& spec, const RealVector& b,
                        double singular_tolerance = default_singular_tolerance);
/// Same formula driven by precomputed eigenvalues.
RealVector solve_direct(const Spectrum& psi, const RealVector& b);

struct FftSolveResult {
    RealVector solution;
    /// max_l |Im x_l| before it was discarded.
    double imag_residue = 0.0;
    /// 1e-11 * n * max_k |T_k / psi_k|
    double imag_tolerance = 0.0;
    bool imag_ok() const noexcept { return imag_residue <= imag_tolerance; }
};

FftSolveResult solve_fft_checked(const Spectrum& psi, const RealVector& b, const DftPlan& plan);
RealVector solve_fft(const CirculantSpec& spec, const RealVector& b,
                     double singular_tolerance = default_singular_tolerance);
RealVector solve_fft(const Spectrum& psi, const RealVector& b);

/// x_l = beta / sum_j a_j. Singular when |sum_j a_j| <= tol * sum_j |a_j|.
RealVector solve_constant(const CirculantSpec& spec, double beta,
                          double singular_tolerance = default_singular_tolerance);

/// y_k = sum_j a_{(j-k) mod n} x_j, O(n^2). Throws DimensionMismatch.
RealVector apply(const CirculantSpec& spec, const RealVector& x);
/// Same product through the DFT, O(n log n).
RealVector apply_fft(const CirculantSpec& spec, const RealVector& x);

struct SolveOptions {
    std::optional<SolvePath> path;
    double singular_tolerance = default_singular_tolerance;
    /// Smallest n routed to the FFT path (and to the FFT residual) by auto dispatch.
    std::size_t fft_threshold = 64;
};

struct SolveReport {
    RealVector solution;
    SolvePath path = SolvePath::Direct;
    double residual_inf_norm = 0.0;
    double spectrum_min_abs = 0.0;
    /// Numerical-health notes (not errors), e.g. a large discarded imaginary part.
    std::vector<std::string> diagnostics;
};

/// Dispatching front door. Auto: ConstantRhs when b is bitwise constant,
/// else Fft when n >= fft_threshold, else Direct. Always computes the residual.
/// Forcing ConstantRhs on a non-constant b throws RhsNotConstant.
SolveReport solve(const CirculantSpec& spec, const RealVector& b, const SolveOptions& options = {});

} // namespace circsolve
