#include "circsolve/problem_file.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>

using namespace circsolve;
using namespace circsolve::io;

TEST_SUITE("problem_file") {

TEST_CASE("parse the three encodings")
{
    const ProblemFile expected{4, {4, 1, 0, 1}, Rhs{std::vector<double>{1, 2, 3, 4}}};
    CHECK(parse_problem("n: 4\nfirst_row: [4, 1, 0, 1]\nrhs: [1, 2, 3, 4]\n") == expected);
    CHECK(parse_problem("# comment\n\n  n : 4   # trailing\nfirst_row:[4,1,0,1]\nrhs:[1,2,3,4]") == expected);
    CHECK(parse_problem(R"({"n": 4, "first_row": [4, 1, 0, 1], "rhs": [1, 2, 3, 4]})") == expected);
    CHECK(parse_problem("4,1,0,1\n1,2,3,4\n") == expected);

    const ProblemFile constant{4, {4, 1, 0, 1}, Rhs{ConstantRhs{6}}};
    CHECK(parse_problem("n: 4\nfirst_row: [4, 1, 0, 1]\nrhs: constant 6\n") == constant);
    CHECK(parse_problem(R"({"n": 4, "first_row": [4, 1, 0, 1], "rhs": {"constant": 6}})") == constant);
    CHECK(parse_problem("4,1,0,1\n6\n") == constant);

    const ProblemFile row_only{3, {2, 1, 1}, std::nullopt};
    CHECK(parse_problem("2,1,1") == row_only);
    CHECK(parse_problem("n: 3\nfirst_row: [2, 1, 1]\n") == row_only);
}

TEST_CASE("parse errors name the field")
{
    auto field_of = [](std::string_view text) {
        try {
            (void)parse_problem(text);
        } catch (const ParseError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of("n: 5\nfirst_row: [4, 1, 0, 1]\n") == "n");
    CHECK(field_of("n: 4\nfirst_row: [4, 1, 0, 1]\nrhs: [1, 2]\n") == "rhs");
    CHECK(field_of("n: 4\nfirst_row: [4, x, 0, 1]\n") == "first_row");
    CHECK(field_of("n: 4\nfirst_row: 4, 1, 0, 1\n") == "first_row");
    CHECK(field_of("n: four\nfirst_row: [4]\n") == "n");
    CHECK(field_of("first_row: [4]\n") == "n");
    CHECK(field_of("n: 1\n") == "first_row");
    CHECK(field_of("n: 1\nfirst_row: [1]\ncolour: red\n") == "colour");
    CHECK(field_of("n: 1\nn: 1\nfirst_row: [1]\n") == "n");
    CHECK(field_of(R"({"n": 2, "first_row": [1, "a"]})") == "first_row");
    CHECK(field_of(R"({"n": 2, "first_row": [1, 1], "rhs": {"const": 1}})") == "rhs");
    CHECK(field_of("{broken") == "json");
    CHECK(field_of("1,2\n3,4\n5,6\n") == "csv");
    CHECK(field_of("   ") == "input");
    CHECK(field_of("n: 0\nfirst_row: []\n") == "first_row");
}

TEST_CASE("validation after parsing")
{
    const auto bad = parse_problem("n: 4\nfirst_row: [4, 1, 0, 2]\nrhs: constant 6\n");
    CHECK_THROWS_AS((void)to_spec(bad), SymmetryViolation);
    const auto nan_rhs = parse_problem("n: 2\nfirst_row: [2, 1]\nrhs: [1, nan]\n");
    CHECK_THROWS_AS((void)to_rhs(nan_rhs), ParseError);
    const auto no_rhs = parse_problem("2,1,1");
    CHECK_THROWS_AS((void)to_rhs(no_rhs), ParseError);
    CHECK(to_rhs(parse_problem("4,1,0,1\n6\n")).vec() == std::vector<double>{6, 6, 6, 6});
}

TEST_CASE("shortest round-trip float formatting")
{
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(1e-300) == "1e-300");
    reference::Gen gen(1);
    for (int i = 0; i < 2000; ++i) {
        const double v = gen.uniform(-1, 1) * std::pow(10.0, gen.uniform(-30, 30));
        const auto text = format_double(v);
        const auto back = parse_number_list(text, "x");
        REQUIRE(back.size() == 1);
        CHECK(std::memcmp(&back[0], &v, sizeof v) == 0);
    }
}

TEST_CASE("serialize(parse(f)) is canonical for every format")
{
    reference::Gen gen(321);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = gen.size(1, 20);
        ProblemFile p;
        p.n = n;
        const auto half = gen.vec(n / 2, -1e3, 1e3);
        const auto spec = make_spec_from_generator(gen.uniform(-1e3, 1e3), half, n);
        p.first_row.assign(spec.first_row().begin(), spec.first_row().end());
        const int kind = trial % 3;
        if (kind == 0) {
            p.rhs = gen.vec(n, -1e6, 1e6);
        } else if (kind == 1 && n > 1) {
            p.rhs = ConstantRhs{gen.uniform(-10, 10)};
        }
        for (Format f : {Format::Text, Format::Json, Format::Csv}) {
            const std::string text = serialize_problem(p, f);
            const ProblemFile back = parse_problem(text);
            CHECK(back == p);
            CHECK(serialize_problem(back, f) == text);
        }
    }
}

TEST_CASE("canonical text layout")
{
    const ProblemFile p{3, {2, 1, 1}, Rhs{ConstantRhs{0.5}}};
    CHECK(serialize_problem(p) == "n: 3\nfirst_row: [2, 1, 1]\nrhs: constant 0.5\n");
    CHECK(serialize_problem(p, Format::Json) == "{\"n\": 3, \"first_row\": [2,1,1], \"rhs\": {\"constant\": 0.5}}\n");
    CHECK(serialize_problem(p, Format::Csv) == "2,1,1\n0.5\n");
}

TEST_CASE("format names")
{
    CHECK(parse_format("text") == Format::Text);
    CHECK(parse_format("json-like-text") == Format::Json);
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK_FALSE(parse_format("xml").has_value());
}

} // TEST_SUITE
