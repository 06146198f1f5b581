#include "circsolve/cli.hpp"

#include "circsolve/bench.hpp"
#include "circsolve/errors.hpp"
#include "circsolve/oracle.hpp"
#include "circsolve/problem_file.hpp"
#include "circsolve/solver.hpp"
#include "circsolve/verify.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace circsolve::cli {

namespace {

struct GlobalFlags {
    double tolerance = default_singular_tolerance;
};

struct SolveFlags {
    std::string input = "-";
    std::string path = "auto";
    std::string format = "text";
    std::string output = "-";
    std::size_t fft_threshold = 64;
};

struct SpectrumFlags {
    std::string input;
    std::string row;
    std::string format = "text";
    std::string output = "-";
};

struct GenFlags {
    std::size_t n = 0;
    std::uint64_t seed = 1;
    bool constant = false;
    std::string format = "text";
    std::string output = "-";
};

struct VerifyFlags {
    std::size_t n_min = 1;
    std::size_t n_max = 32;
    std::size_t seeds = 5;
    std::uint64_t seed = 1;
    std::optional<std::size_t> perturb;
};

struct BenchFlags {
    std::string sizes = "256,1024,4096";
    std::string paths = "direct,fft";
    int repetitions = 9;
    int warmup = 2;
    std::uint64_t seed = 1;
    std::size_t dense_max = 1024;
    std::string output = "-";
};

io::Format require_format(const std::string& name)
{
    const auto f = io::parse_format(name);
    if (!f) {
        throw io::ParseError("--format", "unknown format '" + name + "'");
    }
    return *f;
}

// Writes to the -o target; "-" means the caller's output stream.
void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        out.flush();
    } else {
        io::write_output(path, text);
    }
}

std::string format_indices(const std::vector<std::size_t>& idx, io::Format format)
{
    std::string s = format == io::Format::Csv ? "" : "[";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i != 0) {
            s += format == io::Format::Text ? ", " : ",";
        }
        s += std::to_string(idx[i]);
    }
    if (format != io::Format::Csv) {
        s += "]";
    }
    return s;
}

int do_solve(const SolveFlags& flags, const GlobalFlags& global, std::ostream& out, std::ostream& err)
{
    const io::Format format = require_format(flags.format);
    const io::ProblemFile problem = io::parse_problem(io::read_input(flags.input));
    const CirculantSpec spec = io::to_spec(problem);
    const RealVector b = io::to_rhs(problem);

    SolveOptions options;
    options.singular_tolerance = global.tolerance;
    options.fft_threshold = flags.fft_threshold;
    if (flags.path != "auto") {
        options.path = parse_solve_path(flags.path);
        if (!options.path) {
            throw io::ParseError("--path", "unknown path '" + flags.path + "'");
        }
    }
    const SolveReport report = solve(spec, b, options);
    for (const auto& note : report.diagnostics) {
        err << "warning: " << note << "\n";
    }

    const std::string path_name(to_string(report.path));
    std::string text;
    switch (format) {
    case io::Format::Text:
        text = "n: " + std::to_string(spec.n()) + "\npath: " + path_name +
               "\nresidual_inf: " + io::format_double(report.residual_inf_norm) +
               "\nspectrum_min_abs: " + io::format_double(report.spectrum_min_abs) +
               "\nsolution: " + io::format_list(report.solution.entries(), io::Format::Text) + "\n";
        break;
    case io::Format::Json:
        text = "{\"n\": " + std::to_string(spec.n()) + ", \"path\": \"" + path_name +
               "\", \"residual_inf\": " + io::format_double(report.residual_inf_norm) +
               ", \"spectrum_min_abs\": " + io::format_double(report.spectrum_min_abs) +
               ", \"solution\": " + io::format_list(report.solution.entries(), io::Format::Json) + "}\n";
        break;
    case io::Format::Csv:
        text = "# path=" + path_name + ",residual_inf=" + io::format_double(report.residual_inf_norm) +
               ",spectrum_min_abs=" + io::format_double(report.spectrum_min_abs) + "\n" +
               io::format_list(report.solution.entries(), io::Format::Csv) + "\n";
        break;
    }
    emit(flags.output, text, out);
    return exit_ok;
}

int do_spectrum(const SpectrumFlags& flags, const GlobalFlags& global, std::ostream& out, std::ostream& err)
{
    const io::Format format = require_format(flags.format);
    std::vector<double> row;
    if (!flags.row.empty()) {
        if (!flags.input.empty()) {
            throw io::ParseError("--row", "give either an input file or --row, not both");
        }
        row = io::parse_number_list(flags.row, "first_row");
    } else {
        row = io::parse_problem(io::read_input(flags.input.empty() ? "-" : flags.input)).first_row;
    }
    const CirculantSpec spec = make_spec(row);
    const Spectrum psi = spectrum(spec, global.tolerance);
    const SingularityReport report = is_singular(psi);
    if (report.singular) {
        err << "note: " << report.offending.size() << " eigenvalue(s) numerically zero\n";
    }

    const std::string singular = report.singular ? "true" : "false";
    std::string text;
    switch (format) {
    case io::Format::Text:
        text = "n: " + std::to_string(spec.n()) + "\nspectrum: " + io::format_list(psi.values(), io::Format::Text) +
               "\nsingular: " + singular + "\nnear_zero: " + format_indices(report.offending, io::Format::Text) +
               "\n";
        break;
    case io::Format::Json:
        text = "{\"n\": " + std::to_string(spec.n()) +
               ", \"spectrum\": " + io::format_list(psi.values(), io::Format::Json) + ", \"singular\": " + singular +
               ", \"near_zero\": " + format_indices(report.offending, io::Format::Json) + "}\n";
        break;
    case io::Format::Csv:
        text = "# singular=" + singular + ",near_zero=" + format_indices(report.offending, io::Format::Csv) + "\n" +
               io::format_list(psi.values(), io::Format::Csv) + "\n";
        break;
    }
    emit(flags.output, text, out);
    return exit_ok;
}

int do_gen(const GenFlags& flags, std::ostream& out)
{
    const io::Format format = require_format(flags.format);
    if (flags.n == 0) {
        throw io::ParseError("--n", "must be at least 1");
    }
    const CirculantSpec spec = oracle::random_spec(flags.n, flags.seed);
    io::ProblemFile problem;
    problem.n = flags.n;
    problem.first_row.assign(spec.first_row().begin(), spec.first_row().end());
    if (flags.constant) {
        problem.rhs = io::ConstantRhs{oracle::random_scalar(flags.seed)};
    } else {
        problem.rhs = oracle::random_vector(flags.n, flags.seed).vec();
    }
    emit(flags.output, io::serialize_problem(problem, format), out);
    return exit_ok;
}

int do_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err)
{
    if (flags.n_min == 0 || flags.n_min > flags.n_max) {
        throw io::ParseError("--n-min", "need 1 <= n-min <= n-max");
    }
    if (flags.n_max > oracle::default_dense_cap) {
        throw io::ParseError("--n-max", "exceeds the dense oracle cap " + std::to_string(oracle::default_dense_cap));
    }
    VerifyOptions options;
    options.n_min = flags.n_min;
    options.n_max = flags.n_max;
    options.seeds = flags.seeds;
    options.base_seed = flags.seed;
    options.perturb_eigenvalue = flags.perturb;

    const VerifyReport report = run_verify(options);
    for (const auto& c : report.cases) {
        out << describe(c) << "\n";
    }
    out << "branches: even=" << report.even_cases << " odd=" << report.odd_cases << "\n";
    const bool ok = report.passed();
    if (const VerifyCase* worst = report.worst()) {
        out << "worst: " << describe(*worst) << "\n";
        if (!ok) {
            err << "verification failed; worst offender: " << describe(*worst) << "\n";
        }
    }
    out << "result: " << (ok ? "PASS" : "FAIL") << " (" << report.cases.size() << " cases)\n";
    return ok ? exit_ok : exit_verify_failed;
}

int do_bench(const BenchFlags& flags, std::ostream& out)
{
    BenchOptions options;
    for (double v : io::parse_number_list(flags.sizes, "--sizes")) {
        if (v < 1 || v != std::floor(v)) {
            throw io::ParseError("--sizes", "sizes must be positive integers");
        }
        options.sizes.push_back(static_cast<std::size_t>(v));
    }
    for (std::size_t i = 1; i < options.sizes.size(); ++i) {
        if (options.sizes[i] <= options.sizes[i - 1]) {
            throw io::ParseError("--sizes", "sizes must be sorted ascending without repeats");
        }
    }
    if (options.sizes.empty()) {
        throw io::ParseError("--sizes", "no sizes given");
    }
    options.paths.clear();
    std::string_view rest = flags.paths;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto name = rest.substr(0, comma);
        const auto path = parse_bench_path(name);
        if (!path) {
            throw io::ParseError("--paths", "unknown path '" + std::string(name) + "'");
        }
        options.paths.push_back(*path);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (flags.repetitions < 1 || flags.warmup < 1) {
        throw io::ParseError("--repetitions", "repetitions and warmup must be at least 1");
    }
    options.repetitions = flags.repetitions;
    options.warmup = flags.warmup;
    options.seed = flags.seed;
    options.dense_max = flags.dense_max;
    emit(flags.output, bench_csv(run_bench(options)), out);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Solver for symmetric circulant real linear systems", "circsolve"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags global;
    app.add_option("--tolerance", global.tolerance, "Relative singularity tolerance")
        ->check(CLI::NonNegativeNumber);

    SolveFlags solve_flags;
    auto* solve_cmd = app.add_subcommand("solve", "Solve A x = b from a problem file");
    solve_cmd->add_option("input", solve_flags.input, "Problem file, '-' for standard input");
    solve_cmd->add_option("--path", solve_flags.path, "auto|direct|fft|constant");
    solve_cmd->add_option("--format", solve_flags.format, "text|csv|json-like-text");
    solve_cmd->add_option("-o,--output", solve_flags.output, "Output path");
    solve_cmd->add_option("--fft-threshold", solve_flags.fft_threshold, "Smallest n dispatched to the FFT path");

    SpectrumFlags spectrum_flags;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the eigenvalues of A");
    spectrum_cmd->add_option("input", spectrum_flags.input, "Problem file or first-row CSV, '-' for standard input");
    spectrum_cmd->add_option("--row", spectrum_flags.row, "First row as comma separated values");
    spectrum_cmd->add_option("--format", spectrum_flags.format, "text|csv|json-like-text");
    spectrum_cmd->add_option("-o,--output", spectrum_flags.output, "Output path");

    GenFlags gen_flags;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a diagonally dominant test problem");
    gen_cmd->add_option("-n,--n", gen_flags.n, "System dimension")->required();
    gen_cmd->add_option("--seed", gen_flags.seed, "Random seed");
    gen_cmd->add_flag("--constant", gen_flags.constant, "Emit a constant right-hand side");
    gen_cmd->add_option("--format", gen_flags.format, "text|csv|json-like-text");
    gen_cmd->add_option("-o,--output", gen_flags.output, "Output path");

    VerifyFlags verify_flags;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check solver paths against the dense oracle");
    verify_cmd->add_option("--n-min", verify_flags.n_min, "Smallest n");
    verify_cmd->add_option("--n-max", verify_flags.n_max, "Largest n");
    verify_cmd->add_option("--seeds", verify_flags.seeds, "Seeds per n");
    verify_cmd->add_option("--seed", verify_flags.seed, "First seed");
    verify_cmd->add_option("--perturb-eigenvalue", verify_flags.perturb, "Inject a fault into eigenvalue k");

    BenchFlags bench_flags;
    auto* bench_cmd = app.add_subcommand("bench", "Time the solve paths");
    bench_cmd->add_option("--sizes", bench_flags.sizes, "Ascending comma separated sizes");
    bench_cmd->add_option("--paths", bench_flags.paths, "Comma separated subset of direct,fft,dense");
    bench_cmd->add_option("--repetitions", bench_flags.repetitions, "Timed repetitions");
    bench_cmd->add_option("--warmup", bench_flags.warmup, "Warmup batches");
    bench_cmd->add_option("--seed", bench_flags.seed, "Random seed");
    bench_cmd->add_option("--dense-max", bench_flags.dense_max, "Largest n timed on the dense path");
    bench_cmd->add_option("-o,--output", bench_flags.output, "CSV output path");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("circsolve");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (*solve_cmd) {
            return do_solve(solve_flags, global, out, err);
        }
        if (*spectrum_cmd) {
            return do_spectrum(spectrum_flags, global, out, err);
        }
        if (*gen_cmd) {
            return do_gen(gen_flags, out);
        }
        if (*verify_cmd) {
            return do_verify(verify_flags, out, err);
        }
        if (*bench_cmd) {
            return do_bench(bench_flags, out);
        }
    } catch (const SingularSystem& e) {
        err << "error: " << e.what() << "\n";
        return exit_singular;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace circsolve::cli
