#include "circsolve/problem_file.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace circsolve::io {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, const std::string& field, std::size_t index)
{
    token = trim(token);
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw ParseError(field, "entry " + std::to_string(index) + " is not a number: '" + std::string(token) + "'");
    }
    return value;
}

std::size_t parse_size(std::string_view token, const std::string& field)
{
    token = trim(token);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw ParseError(field, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::vector<double> parse_bracketed(std::string_view value, const std::string& field)
{
    value = trim(value);
    if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
        throw ParseError(field, "expected a bracketed list");
    }
    return parse_number_list(value.substr(1, value.size() - 2), field);
}

void check_shape(const ProblemFile& p)
{
    if (p.first_row.empty()) {
        throw ParseError("first_row", "must contain at least one entry");
    }
    if (p.n != p.first_row.size()) {
        throw ParseError("n", "n is " + std::to_string(p.n) + " but first_row has " +
                                  std::to_string(p.first_row.size()) + " entries");
    }
    if (p.rhs) {
        if (const auto* explicit_rhs = std::get_if<std::vector<double>>(&*p.rhs)) {
            if (explicit_rhs->size() != p.n) {
                throw ParseError("rhs", "rhs has " + std::to_string(explicit_rhs->size()) + " entries, expected " +
                                            std::to_string(p.n));
            }
        }
    }
}

ProblemFile parse_text(std::string_view text)
{
    ProblemFile p;
    bool have_n = false;
    bool have_row = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no), "expected 'key: value'");
        }
        const std::string key(trim(line.substr(0, colon)));
        const std::string_view value = trim(line.substr(colon + 1));
        if (key == "n") {
            if (have_n) {
                throw ParseError(key, "duplicate key");
            }
            p.n = parse_size(value, key);
            have_n = true;
        } else if (key == "first_row") {
            if (have_row) {
                throw ParseError(key, "duplicate key");
            }
            p.first_row = parse_bracketed(value, key);
            have_row = true;
        } else if (key == "rhs") {
            if (p.rhs) {
                throw ParseError(key, "duplicate key");
            }
            constexpr std::string_view tag = "constant";
            if (value.substr(0, tag.size()) == tag) {
                p.rhs = ConstantRhs{parse_number(value.substr(tag.size()), key, 0)};
            } else {
                p.rhs = parse_bracketed(value, key);
            }
        } else {
            throw ParseError(key, "unknown key");
        }
    }
    if (!have_n) {
        throw ParseError("n", "missing");
    }
    if (!have_row) {
        throw ParseError("first_row", "missing");
    }
    return p;
}

std::vector<double> json_numbers(const nlohmann::json& node, const std::string& field)
{
    if (!node.is_array()) {
        throw ParseError(field, "expected an array");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_number()) {
            throw ParseError(field, "entry " + std::to_string(i) + " is not a number");
        }
        out.push_back(node[i].get<double>());
    }
    return out;
}

ProblemFile parse_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("json", e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("json", "top level must be an object");
    }
    for (const auto& item : doc.items()) {
        if (item.key() != "n" && item.key() != "first_row" && item.key() != "rhs") {
            throw ParseError(item.key(), "unknown key");
        }
    }
    ProblemFile p;
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
        throw ParseError("n", "missing or not a non-negative integer");
    }
    p.n = doc["n"].get<std::size_t>();
    if (!doc.contains("first_row")) {
        throw ParseError("first_row", "missing");
    }
    p.first_row = json_numbers(doc["first_row"], "first_row");
    if (doc.contains("rhs")) {
        const auto& rhs = doc["rhs"];
        if (rhs.is_object()) {
            if (rhs.size() != 1 || !rhs.contains("constant") || !rhs["constant"].is_number()) {
                throw ParseError("rhs", "expected {\"constant\": <number>}");
            }
            p.rhs = ConstantRhs{rhs["constant"].get<double>()};
        } else {
            p.rhs = json_numbers(rhs, "rhs");
        }
    }
    return p;
}

ProblemFile parse_csv(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        if (!trim(raw).empty()) {
            lines.push_back(raw);
        }
    }
    if (lines.empty() || lines.size() > 2) {
        throw ParseError("csv", "expected one or two non-empty lines");
    }
    ProblemFile p;
    p.first_row = parse_number_list(lines[0], "first_row");
    p.n = p.first_row.size();
    if (lines.size() == 2) {
        auto rhs = parse_number_list(lines[1], "rhs");
        if (rhs.size() == 1 && p.n > 1) {
            p.rhs = ConstantRhs{rhs[0]};
        } else {
            p.rhs = std::move(rhs);
        }
    }
    return p;
}

} // namespace

std::optional<Format> parse_format(std::string_view name) noexcept
{
    if (name == "text") {
        return Format::Text;
    }
    if (name == "json" || name == "json-like-text") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    return std::nullopt;
}

ParseError::ParseError(std::string field, const std::string& message)
    : Error("invalid field '" + field + "': " + message), field_(std::move(field))
{
}

std::vector<double> parse_number_list(std::string_view text, const std::string& field)
{
    std::vector<double> out;
    text = trim(text);
    if (text.empty()) {
        return out;
    }
    std::size_t index = 0;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_number(text.substr(0, comma), field, index++));
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return out;
}

ProblemFile parse_problem(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw ParseError("input", "empty document");
    }
    ProblemFile p;
    if (text[first] == '{') {
        p = parse_json(text);
    } else if (text.find(':') != std::string_view::npos) {
        p = parse_text(text);
    } else {
        p = parse_csv(text);
    }
    check_shape(p);
    return p;
}

std::string format_double(double value)
{
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_list(std::span<const double> values, Format format)
{
    std::string out;
    const char* sep = format == Format::Text ? ", " : ",";
    if (format != Format::Csv) {
        out += '[';
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += format_double(values[i]);
    }
    if (format != Format::Csv) {
        out += ']';
    }
    return out;
}

std::string serialize_problem(const ProblemFile& p, Format format)
{
    std::string out;
    switch (format) {
    case Format::Text:
        out += "n: " + std::to_string(p.n) + "\n";
        out += "first_row: " + format_list(p.first_row, Format::Text) + "\n";
        if (p.rhs) {
            if (const auto* c = std::get_if<ConstantRhs>(&*p.rhs)) {
                out += "rhs: constant " + format_double(c->value) + "\n";
            } else {
                out += "rhs: " + format_list(std::get<std::vector<double>>(*p.rhs), Format::Text) + "\n";
            }
        }
        break;
    case Format::Json:
        out += "{\"n\": " + std::to_string(p.n) + ", \"first_row\": " + format_list(p.first_row, Format::Json);
        if (p.rhs) {
            if (const auto* c = std::get_if<ConstantRhs>(&*p.rhs)) {
                out += ", \"rhs\": {\"constant\": " + format_double(c->value) + "}";
            } else {
                out += ", \"rhs\": " + format_list(std::get<std::vector<double>>(*p.rhs), Format::Json);
            }
        }
        out += "}\n";
        break;
    case Format::Csv:
        out += format_list(p.first_row, Format::Csv) + "\n";
        if (p.rhs) {
            if (const auto* c = std::get_if<ConstantRhs>(&*p.rhs)) {
                out += format_double(c->value) + "\n";
            } else {
                out += format_list(std::get<std::vector<double>>(*p.rhs), Format::Csv) + "\n";
            }
        }
        break;
    }
    return out;
}

CirculantSpec to_spec(const ProblemFile& problem)
{
    return make_spec(problem.first_row);
}

RealVector to_rhs(const ProblemFile& problem)
{
    if (!problem.rhs) {
        throw ParseError("rhs", "missing");
    }
    if (const auto* c = std::get_if<ConstantRhs>(&*problem.rhs)) {
        try {
            return RealVector::constant(problem.n, c->value);
        } catch (const NonFinite&) {
            throw ParseError("rhs", "constant is not finite");
        }
    }
    try {
        return RealVector(std::get<std::vector<double>>(*problem.rhs));
    } catch (const NonFinite& e) {
        throw ParseError("rhs", "entry " + std::to_string(e.index()) + " is not finite");
    }
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("input", "cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, std::string_view contents)
{
    if (path == "-") {
        std::cout << contents;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ParseError("output", "cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out) {
        throw ParseError("output", "write to '" + path + "' failed");
    }
}

} // namespace circsolve::io
