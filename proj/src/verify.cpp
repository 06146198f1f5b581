#include "circsolve/verify.hpp"

#include "circsolve/oracle.hpp"
#include "circsolve/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace circsolve {

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Spectrum perturbed(const Spectrum& psi, std::size_t k)
{
    std::vector<double> values(psi.values().begin(), psi.values().end());
    const std::size_t n = values.size();
    k %= n;
    const double bump = 1e-3 * psi.max_abs();
    values[k] += bump;
    if (k != 0 && 2 * k != n) {
        values[n - k] += bump;
    }
    return Spectrum(std::move(values), psi.singular_tolerance());
}

VerifyCase run_case(std::size_t n, std::uint64_t seed, const VerifyOptions& options)
{
    VerifyCase c;
    c.n = n;
    c.seed = seed;
    const auto& tol = options.tolerances;
    try {
        const CirculantSpec spec = oracle::random_spec(n, seed);
        const RealVector b = oracle::random_vector(n, seed);

        Spectrum psi = spectrum(spec);
        if (options.perturb_eigenvalue) {
            psi = perturbed(psi, *options.perturb_eigenvalue);
        }

        const oracle::DenseMatrix dense = oracle::materialize(spec);
        std::vector<double> sorted_psi(psi.values().begin(), psi.values().end());
        std::sort(sorted_psi.begin(), sorted_psi.end());
        const std::vector<double> jacobi = oracle::dense_eigenvalues(dense);
        c.spectrum_error = max_abs_diff(sorted_psi, jacobi) / psi.max_abs();

        const RealVector x_dense = oracle::dense_solve(dense, b);
        const RealVector x_direct = solve_direct(psi, b);
        const RealVector x_fft = options.perturb_eigenvalue ? solve_fft(psi, b) : solve_fft(spec, b);
        const double x_scale = 1.0 + x_direct.inf_norm();
        c.direct_vs_dense = max_abs_diff(x_direct.entries(), x_dense.entries()) / x_scale;
        c.fft_vs_direct = max_abs_diff(x_fft.entries(), x_direct.entries()) / x_scale;

        const RealVector ax = apply(spec, x_direct);
        c.residual = max_abs_diff(ax.entries(), b.entries()) / (1.0 + b.inf_norm());

        c.worst_ratio = std::max({c.spectrum_error / tol.spectrum_vs_jacobi, c.direct_vs_dense / tol.direct_vs_dense,
                                  c.fft_vs_direct / tol.fft_vs_direct, c.residual / tol.residual});
        c.passed = c.worst_ratio <= 1.0;
    } catch (const std::exception& e) {
        c.error = e.what();
        c.passed = false;
        c.worst_ratio = INFINITY;
    }
    return c;
}

} // namespace

bool VerifyReport::passed() const noexcept
{
    return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed; });
}

const VerifyCase* VerifyReport::worst() const noexcept
{
    const VerifyCase* w = nullptr;
    for (const auto& c : cases) {
        if (w == nullptr || c.worst_ratio > w->worst_ratio) {
            w = &c;
        }
    }
    return w;
}

VerifyReport run_verify(const VerifyOptions& options)
{
    VerifyReport report;
    for (std::size_t n = std::max<std::size_t>(options.n_min, 1); n <= options.n_max; ++n) {
        for (std::size_t s = 0; s < options.seeds; ++s) {
            report.cases.push_back(run_case(n, options.base_seed + s, options));
            (n % 2 == 0 ? report.even_cases : report.odd_cases) += 1;
        }
    }
    return report;
}

std::string describe(const VerifyCase& c)
{
    std::ostringstream os;
    os.precision(3);
    os << "n=" << c.n << " seed=" << c.seed;
    if (!c.error.empty()) {
        os << " error=\"" << c.error << "\" FAIL";
        return os.str();
    }
    os << std::scientific << " spectrum=" << c.spectrum_error << " direct_vs_dense=" << c.direct_vs_dense
       << " fft_vs_direct=" << c.fft_vs_direct << " residual=" << c.residual << (c.passed ? " PASS" : " FAIL");
    return os.str();
}

} // namespace circsolve
