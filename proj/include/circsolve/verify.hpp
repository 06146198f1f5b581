#pragma once

// Three-way agreement suite: closed-form direct solve vs FFT solve vs the
// dense LU oracle, plus the closed-form spectrum vs dense Jacobi eigenvalues.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace circsolve {

struct VerifyTolerances {
    double spectrum_vs_jacobi = 1e-9;   // * max|psi|
    double direct_vs_dense = 1e-9;      // * (1 + ||x||_inf)
    double fft_vs_direct = 1e-10;       // * (1 + ||x||_inf)
    double residual = 1e-8;             // * (1 + ||b||_inf)
};

struct VerifyOptions {
    std::size_t n_min = 1;
    std::size_t n_max = 32;
    std::size_t seeds = 5;
    std::uint64_t base_seed = 1;
    /// Fault injection: scale psi_k (and its mirror psi_{n-k}) before solving.
    std::optional<std::size_t> perturb_eigenvalue;
    VerifyTolerances tolerances;
};

struct VerifyCase {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double spectrum_error = 0.0;       // scaled by max|psi|
    double direct_vs_dense = 0.0;      // scaled by 1 + ||x||_inf
    double fft_vs_direct = 0.0;        // scaled by 1 + ||x||_inf
    double residual = 0.0;             // scaled by 1 + ||b||_inf
    bool passed = false;
    /// Largest discrepancy / tolerance ratio over the four checks.
    double worst_ratio = 0.0;
    std::string error; // set when a solver threw
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    std::size_t even_cases = 0;
    std::size_t odd_cases = 0;

    bool passed() const noexcept;
    /// Case with the largest worst_ratio, or nullptr when empty.
    const VerifyCase* worst() const noexcept;
};

/// Runs cases for every n in [n_min, n_max] and seeds base_seed.. base_seed+seeds-1.
/// Cases are reported in input order.
VerifyReport run_verify(const VerifyOptions& options);

std::string describe(const VerifyCase& c);

} // namespace circsolve
