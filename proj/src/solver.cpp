#include "circsolve/solver.hpp"

#include "circsolve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace circsolve {

std::string_view to_string(SolvePath path) noexcept
{
    switch (path) {
    case SolvePath::Direct:
        return "direct";
    case SolvePath::Fft:
        return "fft";
    case SolvePath::ConstantRhs:
        return "constant-rhs";
    }
    return "unknown";
}

std::optional<SolvePath> parse_solve_path(std::string_view name) noexcept
{
    if (name == "direct") {
        return SolvePath::Direct;
    }
    if (name == "fft") {
        return SolvePath::Fft;
    }
    if (name == "constant" || name == "constant-rhs") {
        return SolvePath::ConstantRhs;
    }
    return std::nullopt;
}

std::shared_ptr<const DftPlan> PlanCache::get(std::size_t n)
{
    {
        std::shared_lock lock(mutex_);
        if (auto it = plans_.find(n); it != plans_.end()) {
            return it->second;
        }
    }
    auto plan = std::make_shared<const DftPlan>(n);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = plans_.try_emplace(n, std::move(plan));
    return it->second;
}

std::size_t PlanCache::size() const
{
    std::shared_lock lock(mutex_);
    return plans_.size();
}

PlanCache& PlanCache::shared()
{
    static PlanCache cache;
    return cache;
}

RhsSpectrum rhs_spectrum(const DftPlan& plan, const RealVector& b)
{
    if (b.size() != plan.n()) {
        throw DimensionMismatch(plan.n(), b.size());
    }
    // (1/n) sum_j b_j e^{+2 pi i k j / n} is exactly the normalized inverse transform.
    return RhsSpectrum(plan.inverse(to_complex(b.entries())));
}

Spectrum spectrum_fft(const CirculantSpec& spec, const DftPlan& plan, double singular_tolerance)
{
    const std::size_t n = spec.n();
    if (plan.n() != n) {
        throw DimensionMismatch(n, plan.n());
    }
    const ComplexVector hat = plan.forward(to_complex(spec.first_row()));
    std::vector<double> psi(n);
    psi[0] = hat[0].real();
    for (std::size_t k = 1; k <= n / 2; ++k) {
        const double v = 0.5 * (hat[k].real() + hat[n - k].real());
        psi[k] = v;
        psi[n - k] = v;
    }
    return Spectrum(std::move(psi), singular_tolerance);
}

RealVector solve_direct(const CirculantSpec& spec, const RealVector& b, double singular_tolerance)
{
    if (b.size() != spec.n()) {
        throw DimensionMismatch(spec.n(), b.size());
    }
    return solve_direct(spectrum(spec, singular_tolerance), b);
}

RealVector solve_direct(const Spectrum& psi, const RealVector& b)
{
    const std::size_t n = psi.size();
    if (b.size() != n) {
        throw DimensionMismatch(n, b.size());
    }
    require_nonsingular(psi);

    const TrigTable trig(n);
    const std::size_t pairs = (n - 1) / 2;
    const double inv_n = 1.0 / static_cast<double>(n);

    double sum_b = 0.0;
    double alt_sum_b = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        sum_b += b[j];
        alt_sum_b += (j % 2 == 0 ? b[j] : -b[j]);
    }

    // cos(2 pi k (j - l) / n) = cos(kj) cos(kl) + sin(kj) sin(kl), so the
    // inner sums over j are formed once per k:
    //   c_k = psi_k^{-1} sum_j b_j cos(2 pi k j / n)
    //   s_k = psi_k^{-1} sum_j b_j sin(2 pi k j / n)
    std::vector<double> c(pairs + 1, 0.0);
    std::vector<double> s(pairs + 1, 0.0);
    for (std::size_t k = 1; k <= pairs; ++k) {
        double ck = 0.0;
        double sk = 0.0;
        std::size_t r = 0;
        for (std::size_t j = 0; j < n; ++j) {
            ck += b[j] * trig.cos[r];
            sk += b[j] * trig.sin[r];
            r += k;
            if (r >= n) {
                r -= n;
            }
        }
        c[k] = ck / psi[k];
        s[k] = sk / psi[k];
    }

    const double mean_term = inv_n * sum_b / psi[0];
    const double nyquist_term = (n % 2 == 0) ? inv_n * alt_sum_b / psi[n / 2] : 0.0;

    std::vector<double> x(n);
    for (std::size_t l = 0; l < n; ++l) {
        double acc = 0.0;
        std::size_t r = 0;
        for (std::size_t k = 1; k <= pairs; ++k) {
            r += l;
            if (r >= n) {
                r -= n;
            }
            acc += c[k] * trig.cos[r] + s[k] * trig.sin[r];
        }
        double value = mean_term + 2.0 * inv_n * acc;
        if (n % 2 == 0) {
            value += (l % 2 == 0 ? nyquist_term : -nyquist_term);
        }
        x[l] = value;
    }
    return RealVector(std::move(x));
}

FftSolveResult solve_fft_checked(const Spectrum& psi, const RealVector& b, const DftPlan& plan)
{
    const std::size_t n = psi.size();
    if (b.size() != n) {
        throw DimensionMismatch(n, b.size());
    }
    if (plan.n() != n) {
        throw DimensionMismatch(n, plan.n());
    }
    require_nonsingular(psi);

    const RhsSpectrum t = rhs_spectrum(plan, b);
    ComplexVector scaled(n);
    double max_ratio = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        scaled[k] = t[k] / psi[k];
        max_ratio = std::max(max_ratio, std::abs(scaled[k]));
    }
    // x_l = sum_k psi_k^{-1} T_k e^{-2 pi i l k / n}
    const ComplexVector x = plan.forward(scaled);

    FftSolveResult result;
    std::vector<double> real(n);
    for (std::size_t l = 0; l < n; ++l) {
        real[l] = x[l].real();
        result.imag_residue = std::max(result.imag_residue, std::abs(x[l].imag()));
    }
    result.imag_tolerance = 1e-11 * static_cast<double>(n) * max_ratio;
    result.solution = RealVector(std::move(real));
    return result;
}

RealVector solve_fft(const CirculantSpec& spec, const RealVector& b, double singular_tolerance)
{
    if (b.size() != spec.n()) {
        throw DimensionMismatch(spec.n(), b.size());
    }
    const auto plan = PlanCache::shared().get(spec.n());
    return solve_fft_checked(spectrum_fft(spec, *plan, singular_tolerance), b, *plan).solution;
}

RealVector solve_fft(const Spectrum& psi, const RealVector& b)
{
    const auto plan = PlanCache::shared().get(psi.size());
    return solve_fft_checked(psi, b, *plan).solution;
}

RealVector solve_constant(const CirculantSpec& spec, double beta, double singular_tolerance)
{
    if (!std::isfinite(beta)) {
        throw NonFinite(0);
    }
    double row_sum = 0.0;
    double abs_sum = 0.0;
    for (double a : spec.first_row()) {
        row_sum += a;
        abs_sum += std::abs(a);
    }
    // abs_sum bounds max_k |psi_k|, so this is the relative criterion on psi_0.
    if (abs_sum == 0.0 || std::abs(row_sum) <= singular_tolerance * abs_sum) {
        throw SingularSystem({0}, {std::abs(row_sum)});
    }
    return RealVector::constant(spec.n(), beta / row_sum);
}

RealVector apply(const CirculantSpec& spec, const RealVector& x)
{
    const std::size_t n = spec.n();
    if (x.size() != n) {
        throw DimensionMismatch(n, x.size());
    }
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        // a_{(j-k) mod n} for j = k..n-1 then 0..k-1
        for (std::size_t j = k; j < n; ++j) {
            acc += spec[j - k] * x[j];
        }
        for (std::size_t j = 0; j < k; ++j) {
            acc += spec[n - k + j] * x[j];
        }
        y[k] = acc;
    }
    return RealVector(std::move(y));
}

RealVector apply_fft(const CirculantSpec& spec, const RealVector& x)
{
    const std::size_t n = spec.n();
    if (x.size() != n) {
        throw DimensionMismatch(n, x.size());
    }
    const auto plan = PlanCache::shared().get(n);
    const Spectrum psi = spectrum_fft(spec, *plan);
    ComplexVector hat = plan->forward(to_complex(x.entries()));
    for (std::size_t k = 0; k < n; ++k) {
        hat[k] *= psi[k];
    }
    const ComplexVector y = plan->inverse(hat);
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = y[k].real();
    }
    return RealVector(std::move(out));
}

SolveReport solve(const CirculantSpec& spec, const RealVector& b, const SolveOptions& options)
{
    const std::size_t n = spec.n();
    if (b.size() != n) {
        throw DimensionMismatch(n, b.size());
    }
    const bool large = n >= options.fft_threshold;

    SolveReport report;
    if (options.path) {
        report.path = *options.path;
    } else if (b.is_constant()) {
        report.path = SolvePath::ConstantRhs;
    } else {
        report.path = large ? SolvePath::Fft : SolvePath::Direct;
    }

    switch (report.path) {
    case SolvePath::ConstantRhs: {
        if (!b.is_constant()) {
            throw RhsNotConstant();
        }
        report.solution = solve_constant(spec, b[0], options.singular_tolerance);
        const Spectrum psi = large ? spectrum_fft(spec, *PlanCache::shared().get(n), options.singular_tolerance)
                                   : spectrum(spec, options.singular_tolerance);
        report.spectrum_min_abs = psi.min_abs();
        break;
    }
    case SolvePath::Direct: {
        const Spectrum psi = spectrum(spec, options.singular_tolerance);
        report.solution = solve_direct(psi, b);
        report.spectrum_min_abs = psi.min_abs();
        break;
    }
    case SolvePath::Fft: {
        const auto plan = PlanCache::shared().get(n);
        const Spectrum psi = spectrum_fft(spec, *plan, options.singular_tolerance);
        auto result = solve_fft_checked(psi, b, *plan);
        if (!result.imag_ok()) {
            std::ostringstream os;
            os << "discarded imaginary part " << result.imag_residue << " exceeds " << result.imag_tolerance;
            report.diagnostics.push_back(os.str());
        }
        report.solution = std::move(result.solution);
        report.spectrum_min_abs = psi.min_abs();
        break;
    }
    }

    const RealVector ax = large ? apply_fft(spec, report.solution) : apply(spec, report.solution);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        residual = std::max(residual, std::abs(ax[i] - b[i]));
    }
    report.residual_inf_norm = residual;
    return report;
}

} // namespace circsolve
