#pragma once

// Timing harness for the solve paths. Each repetition times a batch of calls
// long enough to swamp clock resolution; rows report the median and median
// absolute deviation of the per-call time.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circsolve {

enum class BenchPath { Direct, Fft, Dense };

std::string_view to_string(BenchPath path) noexcept;
std::optional<BenchPath> parse_bench_path(std::string_view name) noexcept;

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::vector<BenchPath> paths{BenchPath::Direct, BenchPath::Fft};
    int repetitions = 9;
    int warmup = 2;
    std::uint64_t seed = 1;
    /// Sizes above this are skipped for the dense path.
    std::size_t dense_max = 1024;
    /// Minimum wall time of one timed batch.
    double min_batch_seconds = 2e-3;
};

struct BenchRow {
    std::size_t n = 0;
    BenchPath path = BenchPath::Direct;
    double median_ns = 0.0;
    double mad_ns = 0.0;
    double residual_inf = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    /// Least-squares slope of log(median_ns) against log(n), per path with >= 2 sizes.
    std::map<BenchPath, double> scaling_exponent;

    const BenchRow* find(std::size_t n, BenchPath path) const noexcept;
};

/// Throws std::invalid_argument unless sizes are non-empty, positive and strictly ascending.
BenchResult run_bench(const BenchOptions& options);

/// CSV with columns n,path,median_ns,mad_ns,residual_inf followed by
/// `# scaling_exponent,<path>,<slope>` footer lines.
std::string bench_csv(const BenchResult& result);

/// Least-squares slope of log(y) over log(x).
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace circsolve
