#include "circsolve/dft.hpp"

#include "circsolve/core.hpp"
#include "circsolve/errors.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace circsolve {

namespace {

// Plain product; std::complex operator* takes the slow Annex G path for inf/nan.
inline Complex mul(const Complex& a, const Complex& b) noexcept
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

} // namespace

bool is_power_of_two(std::size_t n) noexcept
{
    return std::has_single_bit(n);
}

DftPlan::DftPlan(std::size_t n) : n_(n), strategy_(is_power_of_two(n) ? DftStrategy::Radix2 : DftStrategy::ArbitraryLength)
{
    if (n == 0) {
        throw EmptyInput();
    }
    const TrigTable trig(n);
    twiddles_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        twiddles_[j] = Complex(trig.cos[j], -trig.sin[j]);
    }

    if (strategy_ == DftStrategy::Radix2) {
        bit_reverse_.resize(n);
        const int bits = std::countr_zero(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (int b = 0; b < bits; ++b) {
                r |= ((i >> b) & 1u) << (bits - 1 - b);
            }
            bit_reverse_[i] = r;
        }
        return;
    }

    // Bluestein: j k = (j^2 + k^2 - (k - j)^2) / 2 turns the DFT into a
    // linear convolution with the chirp e^{+pi i j^2 / n}.
    const std::size_t m = std::bit_ceil(2 * n - 1);
    conv_plan_ = std::make_shared<const DftPlan>(m);
    chirp_.resize(n);
    const std::size_t period = 2 * n;
    for (std::size_t j = 0; j < n; ++j) {
        // j^2 mod 2n keeps the angle in [0, 2 pi).
        const std::size_t r = static_cast<std::size_t>((static_cast<unsigned long long>(j) * j) % period);
        const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
        chirp_[j] = Complex(std::cos(angle), -std::sin(angle));
    }
    ComplexVector filter(m, Complex(0.0, 0.0));
    filter[0] = std::conj(chirp_[0]);
    for (std::size_t j = 1; j < n; ++j) {
        filter[j] = std::conj(chirp_[j]);
        filter[m - j] = std::conj(chirp_[j]);
    }
    conv_plan_->radix2_in_place(filter);
    chirp_filter_hat_ = std::move(filter);
}

void DftPlan::radix2_in_place(std::span<Complex> data) const
{
    const std::size_t n = n_;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = bit_reverse_[i];
        if (i < r) {
            std::swap(data[i], data[r]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Complex w = twiddles_[j * stride];
                const Complex u = data[start + j];
                const Complex t = mul(w, data[start + j + half]);
                data[start + j] = u + t;
                data[start + j + half] = u - t;
            }
        }
    }
}

ComplexVector DftPlan::bluestein(std::span<const Complex> v) const
{
    const std::size_t m = conv_plan_->n();
    ComplexVector work(m, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < n_; ++j) {
        work[j] = mul(v[j], chirp_[j]);
    }
    conv_plan_->radix2_in_place(work);
    // Inverse radix-2 via conjugation: ifft(x) = conj(fft(conj(x))) / m.
    for (std::size_t i = 0; i < m; ++i) {
        work[i] = std::conj(mul(work[i], chirp_filter_hat_[i]));
    }
    conv_plan_->radix2_in_place(work);
    const double inv_m = 1.0 / static_cast<double>(m);
    ComplexVector out(n_);
    for (std::size_t k = 0; k < n_; ++k) {
        out[k] = mul(chirp_[k], std::conj(work[k])) * inv_m;
    }
    return out;
}

ComplexVector DftPlan::forward(std::span<const Complex> v) const
{
    if (v.size() != n_) {
        throw LengthMismatch(n_, v.size());
    }
    if (strategy_ == DftStrategy::Radix2) {
        ComplexVector out(v.begin(), v.end());
        radix2_in_place(out);
        return out;
    }
    return bluestein(v);
}

ComplexVector DftPlan::inverse(std::span<const Complex> v) const
{
    if (v.size() != n_) {
        throw LengthMismatch(n_, v.size());
    }
    ComplexVector conj_in(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        conj_in[i] = std::conj(v[i]);
    }
    ComplexVector out = forward(conj_in);
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (auto& z : out) {
        z = std::conj(z) * inv_n;
    }
    return out;
}

ComplexVector dft_forward(const DftPlan& plan, std::span<const Complex> v)
{
    return plan.forward(v);
}

ComplexVector dft_inverse(const DftPlan& plan, std::span<const Complex> v)
{
    return plan.inverse(v);
}

ComplexVector to_complex(std::span<const double> v)
{
    return ComplexVector(v.begin(), v.end());
}

} // namespace circsolve
