#include "circsolve/bench.hpp"

#include "circsolve/oracle.hpp"
#include "circsolve/problem_file.hpp"
#include "circsolve/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace circsolve {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// Keeps the optimizer from discarding a result.
volatile double sink = 0.0;

double time_batch(const std::function<RealVector()>& call, std::size_t iterations)
{
    const auto start = Clock::now();
    for (std::size_t i = 0; i < iterations; ++i) {
        const RealVector x = call();
        sink = sink + x[0];
    }
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(iterations);
}

BenchRow measure(std::size_t n, BenchPath path, const BenchOptions& options)
{
    const CirculantSpec spec = oracle::random_spec(n, options.seed);
    const RealVector b = oracle::random_vector(n, options.seed);

    std::function<RealVector()> call;
    switch (path) {
    case BenchPath::Direct:
        call = [&] { return solve_direct(spec, b); };
        break;
    case BenchPath::Fft:
        call = [&] { return solve_fft(spec, b); };
        break;
    case BenchPath::Dense:
        call = [&] { return oracle::dense_solve(oracle::materialize(spec), b); };
        break;
    }

    // Calibrate the batch size on the first warmup call.
    std::size_t iterations = 1;
    const double first_ns = time_batch(call, 1);
    const double target_ns = options.min_batch_seconds * 1e9;
    if (first_ns < target_ns) {
        iterations = static_cast<std::size_t>(std::ceil(target_ns / std::max(first_ns, 1.0)));
    }
    for (int w = 1; w < options.warmup; ++w) {
        time_batch(call, iterations);
    }

    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(options.repetitions));
    for (int r = 0; r < options.repetitions; ++r) {
        samples.push_back(time_batch(call, iterations));
    }

    BenchRow row;
    row.n = n;
    row.path = path;
    row.median_ns = median(samples);
    std::vector<double> deviations;
    deviations.reserve(samples.size());
    for (double s : samples) {
        deviations.push_back(std::abs(s - row.median_ns));
    }
    row.mad_ns = median(deviations);

    const RealVector x = call();
    const RealVector ax = apply(spec, x);
    for (std::size_t i = 0; i < n; ++i) {
        row.residual_inf = std::max(row.residual_inf, std::abs(ax[i] - b[i]));
    }
    return row;
}

} // namespace

std::string_view to_string(BenchPath path) noexcept
{
    switch (path) {
    case BenchPath::Direct:
        return "direct";
    case BenchPath::Fft:
        return "fft";
    case BenchPath::Dense:
        return "dense";
    }
    return "unknown";
}

std::optional<BenchPath> parse_bench_path(std::string_view name) noexcept
{
    if (name == "direct") {
        return BenchPath::Direct;
    }
    if (name == "fft") {
        return BenchPath::Fft;
    }
    if (name == "dense") {
        return BenchPath::Dense;
    }
    return std::nullopt;
}

const BenchRow* BenchResult::find(std::size_t n, BenchPath path) const noexcept
{
    for (const auto& row : rows) {
        if (row.n == n && row.path == path) {
            return &row;
        }
    }
    return nullptr;
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two points");
    }
    const double count = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= count;
    my /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

BenchResult run_bench(const BenchOptions& options)
{
    if (options.sizes.empty()) {
        throw std::invalid_argument("no sizes given");
    }
    for (std::size_t i = 0; i < options.sizes.size(); ++i) {
        if (options.sizes[i] == 0) {
            throw std::invalid_argument("sizes must be positive");
        }
        if (i > 0 && options.sizes[i] <= options.sizes[i - 1]) {
            throw std::invalid_argument("sizes must be strictly ascending");
        }
    }
    if (options.repetitions < 1 || options.warmup < 1) {
        throw std::invalid_argument("repetitions and warmup must be at least 1");
    }

    BenchResult result;
    for (BenchPath path : options.paths) {
        std::vector<double> ns;
        std::vector<double> times;
        for (std::size_t n : options.sizes) {
            if (path == BenchPath::Dense && n > options.dense_max) {
                continue;
            }
            const BenchRow row = measure(n, path, options);
            ns.push_back(static_cast<double>(n));
            times.push_back(row.median_ns);
            result.rows.push_back(row);
        }
        if (ns.size() >= 2) {
            result.scaling_exponent[path] = fit_loglog_slope(ns, times);
        }
    }
    return result;
}

std::string bench_csv(const BenchResult& result)
{
    std::string out = "n,path,median_ns,mad_ns,residual_inf\n";
    for (const auto& row : result.rows) {
        out += std::to_string(row.n) + "," + std::string(to_string(row.path)) + "," +
               io::format_double(row.median_ns) + "," + io::format_double(row.mad_ns) + "," +
               io::format_double(row.residual_inf) + "\n";
    }
    for (const auto& [path, slope] : result.scaling_exponent) {
        out += "# scaling_exponent," + std::string(to_string(path)) + "," + io::format_double(slope) + "\n";
    }
    return out;
}

} // namespace circsolve
