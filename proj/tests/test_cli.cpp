#include "circsolve/cli.hpp"
#include "circsolve/oracle.hpp"
#include "circsolve/problem_file.hpp"
#include "circsolve/solver.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace circsolve;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("circsolve_cli_" + std::to_string(counter()++)))
    {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static int& counter()
    {
        static int c = 0;
        return c;
    }
    fs::path path_;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("solve: constant right-hand side")
{
    TempDir dir;
    const auto input = dir.write("p.txt", "n: 4\nfirst_row: [4, 1, 0, 1]\nrhs: constant 6\n");
    const auto r = run({"solve", input});
    CHECK(r.code == 0);
    CHECK(r.out == "n: 4\npath: constant-rhs\nresidual_inf: 0\nspectrum_min_abs: 2\nsolution: [1, 1, 1, 1]\n");
    CHECK(r.err.empty());
}

TEST_CASE("solve: symmetry violation exits 2")
{
    TempDir dir;
    const auto input = dir.write("p.txt", "n: 4\nfirst_row: [4, 1, 0, 2]\nrhs: [1, 2, 3, 4]\n");
    const auto r = run({"solve", input});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("(1,3)") != std::string::npos);
}

TEST_CASE("solve: singular system exits 3 and names k")
{
    TempDir dir;
    const auto input = dir.write("p.txt", "n: 4\nfirst_row: [2, 1, 0, 1]\nrhs: [1, 2, 3, 4]\n");
    const auto r = run({"solve", input});
    CHECK(r.code == 3);
    CHECK(r.err.find("k=2") != std::string::npos);
    CHECK(r.err.find("|psi_k|=0") != std::string::npos);
}

TEST_CASE("solve: input errors exit 2")
{
    TempDir dir;
    CHECK(run({"solve", dir.file("missing.txt")}).code == 2);
    const auto bad_n = dir.write("n.txt", "n: 3\nfirst_row: [4, 1, 0, 1]\nrhs: constant 1\n");
    const auto r = run({"solve", bad_n});
    CHECK(r.code == 2);
    CHECK(r.err.find("'n'") != std::string::npos);
    const auto ok = dir.write("ok.txt", "n: 4\nfirst_row: [4, 1, 0, 1]\nrhs: [1, 2, 3, 4]\n");
    CHECK(run({"solve", ok, "--path", "qr"}).code == 2);
    CHECK(run({"solve", ok, "--format", "xml"}).code == 2);
    CHECK(run({"solve", ok, "--path", "constant"}).code == 2);
    CHECK(run({"solve", ok, "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("solve: forced paths, formats and output file")
{
    TempDir dir;
    const auto input = dir.write("p.json", R"({"n": 3, "first_row": [2, 1, 1], "rhs": [4, 1, 1]})");
    for (std::string path : {"direct", "fft", "auto"}) {
        const auto r = run({"solve", input, "--path", path, "--format", "json-like-text"});
        CHECK(r.code == 0);
        CHECK(r.out.find("\"solution\": [") != std::string::npos);
    }
    const auto csv = run({"solve", input, "--path", "fft", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("# path=fft,", 0) == 0);

    const auto out_file = dir.file("x.txt");
    CHECK(run({"solve", input, "-o", out_file}).code == 0);
    CHECK(slurp(out_file).find("path: direct") != std::string::npos);
    CHECK(run({"--tolerance", "0.5", "solve", input}).code == 3);
    CHECK(run({"solve", input, "--tolerance", "0.5"}).code == 3);
}

TEST_CASE("solve output satisfies the residual bound when re-parsed")
{
    TempDir dir;
    for (std::size_t n : {1u, 2u, 7u, 64u, 300u}) {
        const auto file = dir.file("g" + std::to_string(n) + ".txt");
        REQUIRE(run({"gen", "-n", std::to_string(n), "--seed", "5", "-o", file}).code == 0);
        const auto r = run({"solve", file, "--format", "csv"});
        REQUIRE(r.code == 0);
        const auto solution_line = r.out.substr(r.out.find('\n') + 1);
        const auto x = io::parse_number_list(solution_line, "solution");
        const auto problem = io::parse_problem(slurp(file));
        const auto b = io::to_rhs(problem);
        const auto ax = apply(io::to_spec(problem), RealVector(x));
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(ax[i] - b[i]));
        }
        CHECK(residual <= 1e-8 * (1.0 + b.inf_norm()));
    }
}

TEST_CASE("spectrum command")
{
    auto r = run({"spectrum", "--row", "4,1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "n: 4\nspectrum: [6, 4, 2, 4]\nsingular: false\nnear_zero: []\n");

    r = run({"spectrum", "--row", "1,0,0,0", "--format", "csv"});
    CHECK(r.out == "# singular=false,near_zero=\n1,1,1,1\n");

    TempDir dir;
    const auto csv = dir.write("row.csv", "2,1,1\n");
    r = run({"spectrum", csv, "--format", "json"});
    CHECK(r.code == 0);
    const auto open = r.out.find('[');
    const auto values = io::parse_number_list(r.out.substr(open + 1, r.out.find(']') - open - 1), "spectrum");
    REQUIRE(values.size() == 3);
    CHECK(values[0] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(std::abs(values[1] - 1.0) <= 1e-14);
    CHECK(std::abs(values[2] - 1.0) <= 1e-14);

    r = run({"spectrum", "--row", "2,1,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("singular: true\nnear_zero: [2]") != std::string::npos);

    CHECK(run({"spectrum", "--row", "2,x"}).code == 2);
    CHECK(run({"spectrum", "--row", "4,1,0,2"}).code == 2);
}

TEST_CASE("gen is deterministic and solvable")
{
    TempDir dir;
    const auto a = dir.file("a.txt");
    const auto b = dir.file("b.txt");
    CHECK(run({"gen", "-n", "8", "--seed", "42", "-o", a}).code == 0);
    CHECK(run({"gen", "-n", "8", "--seed", "42", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run({"solve", a}).code == 0);

    const auto one = dir.file("one.txt");
    CHECK(run({"gen", "-n", "1", "--seed", "7", "-o", one}).code == 0);
    const auto p = io::parse_problem(slurp(one));
    CHECK(p.n == 1);
    CHECK(run({"solve", one}).code == 0);

    const auto constant = run({"gen", "-n", "5", "--seed", "3", "--constant"});
    CHECK(constant.out.find("rhs: constant ") != std::string::npos);

    CHECK(run({"gen", "-n", "0"}).code == 2);
    CHECK(run({"gen", "-n", "4", "-o", (fs::path(dir.file("nope")) / "x" / "y.txt").string()}).code == 2);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--n-min", "1", "--n-max", "32", "--seeds", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS (160 cases)") != std::string::npos);

    r = run({"verify", "--n-min", "7", "--n-max", "8", "--seeds", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("branches: even=2 odd=2") != std::string::npos);

    r = run({"verify", "--n-min", "1", "--n-max", "8", "--seeds", "2", "--perturb-eigenvalue", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("worst offender") != std::string::npos);
    CHECK(r.out.find("result: FAIL") != std::string::npos);

    CHECK(run({"verify", "--n-min", "5", "--n-max", "4"}).code == 2);
    CHECK(run({"verify", "--n-max", "9000"}).code == 2);
}

TEST_CASE("bench")
{
    TempDir dir;
    const auto csv = dir.file("bench.csv");
    const auto r = run({"bench", "--sizes", "16,32,64", "--paths", "direct,fft,dense", "--repetitions", "3",
                        "--warmup", "1", "-o", csv});
    CHECK(r.code == 0);
    const auto text = slurp(csv);
    CHECK(text.rfind("n,path,median_ns,mad_ns,residual_inf\n", 0) == 0);
    CHECK(text.find("\n64,dense,") != std::string::npos);
    CHECK(text.find("# scaling_exponent,direct,") != std::string::npos);
    CHECK(text.find("# scaling_exponent,fft,") != std::string::npos);
    CHECK(text.find("# scaling_exponent,dense,") != std::string::npos);

    CHECK(run({"bench", "--sizes", "64,32"}).code == 2);
    CHECK(run({"bench", "--sizes", "0,32"}).code == 2);
    CHECK(run({"bench", "--sizes", "16", "--paths", "lu"}).code == 2);
}

} // TEST_SUITE
