#pragma once

// Discrete Fourier transforms with the unnormalized-forward convention:
//   forward  X_k = sum_j v_j e^{-2 pi i j k / n}
//   inverse  v_j = (1/n) sum_k X_k e^{+2 pi i j k / n}
// The unitary matrices F, F* map to these as F* v = forward(v) / sqrt(n)
// and F X = sqrt(n) * inverse(X).

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace circsolve {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

enum class DftStrategy { Radix2, ArbitraryLength };

/// Precomputed twiddles for one transform length. Immutable and shareable.
/// Power-of-two lengths use iterative radix-2; everything else goes through
/// Bluestein's chirp-z reduction onto a radix-2 convolution.
class DftPlan {
public:
    explicit DftPlan(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    DftStrategy strategy() const noexcept { return strategy_; }
    /// twiddles()[j] == e^{-2 pi i j / n}
    std::span<const Complex> twiddles() const noexcept { return twiddles_; }

    ComplexVector forward(std::span<const Complex> v) const;
    ComplexVector inverse(std::span<const Complex> v) const;

private:
    void radix2_in_place(std::span<Complex> data) const;
    ComplexVector bluestein(std::span<const Complex> v) const;

    std::size_t n_;
    DftStrategy strategy_;
    ComplexVector twiddles_;
    std::vector<std::size_t> bit_reverse_;

    // Bluestein state (ArbitraryLength only).
    ComplexVector chirp_;           // e^{-pi i j^2 / n}
    ComplexVector chirp_filter_hat_; // radix-2 transform of the conjugate chirp filter
    std::shared_ptr<const DftPlan> conv_plan_;
};

bool is_power_of_two(std::size_t n) noexcept;

/// Throws LengthMismatch when v.size() != plan.n().
ComplexVector dft_forward(const DftPlan& plan, std::span<const Complex> v);
ComplexVector dft_inverse(const DftPlan& plan, std::span<const Complex> v);

ComplexVector to_complex(std::span<const double> v);

} // namespace circsolve
