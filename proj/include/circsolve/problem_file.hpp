#pragma once

// Serialized (A, b) pairs.
//
// Three encodings are accepted on input, detected from the first
// non-blank character:
//
//   text (canonical)            json                               csv
//   n: 4                        {"n": 4,                           4,1,0,1
//   first_row: [4, 1, 0, 1]      "first_row": [4, 1, 0, 1],        1,2,3,4
//   rhs: [1, 2, 3, 4]            "rhs": [1, 2, 3, 4]}
//
// A constant right-hand side is written `rhs: constant 6` in text,
// `"rhs": {"constant": 6}` in json and as a single value in csv. Floats are
// written in shortest round-trip decimal form.

#include "circsolve/core.hpp"
#include "circsolve/errors.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace circsolve::io {

enum class Format { Text, Json, Csv };

/// Accepts "text", "json", "json-like-text", "csv".
std::optional<Format> parse_format(std::string_view name) noexcept;

/// Input that could not be parsed or validated; names the field.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct ConstantRhs {
    double value = 0.0;
    friend bool operator==(const ConstantRhs&, const ConstantRhs&) = default;
};

using Rhs = std::variant<std::vector<double>, ConstantRhs>;

struct ProblemFile {
    std::size_t n = 0;
    std::vector<double> first_row;
    /// Absent only in files used for spectrum inspection.
    std::optional<Rhs> rhs;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Parses and checks shape (n vs lengths). Symmetry is checked by to_spec.
ProblemFile parse_problem(std::string_view text);
std::string serialize_problem(const ProblemFile& problem, Format format = Format::Text);

/// Throws SymmetryViolation, NonFinite, EmptyInput.
CirculantSpec to_spec(const ProblemFile& problem);
/// Throws ParseError when rhs is absent.
RealVector to_rhs(const ProblemFile& problem);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
std::string format_list(std::span<const double> values, Format format = Format::Text);

/// Parses a comma separated list of numbers, e.g. "4,1,0,1".
std::vector<double> parse_number_list(std::string_view text, const std::string& field);

std::string read_input(const std::string& path); // "-" reads standard input
void write_output(const std::string& path, std::string_view contents);

} // namespace circsolve::io
