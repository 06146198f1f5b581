#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace circsolve {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
public:
    EmptyInput() : Error("input is empty") {}
};

class NonFinite : public Error {
public:
    explicit NonFinite(std::size_t index);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// First row violates a_{n-l} == a_l.
class SymmetryViolation : public Error {
public:
    SymmetryViolation(std::size_t l, std::size_t mirror, double abs_diff);
    std::size_t index() const noexcept { return l_; }
    std::size_t mirror() const noexcept { return mirror_; }
    double abs_diff() const noexcept { return diff_; }

private:
    std::size_t l_;
    std::size_t mirror_;
    double diff_;
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t expected, std::size_t actual, const std::string& what = "length");
    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t actual);
    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

class RhsNotConstant : public Error {
public:
    RhsNotConstant() : Error("right-hand side is not constant") {}
};

class InvalidSpectrum : public Error {
public:
    using Error::Error;
};

/// Raised when some eigenvalue is zero under the relative criterion.
class SingularSystem : public Error {
public:
    SingularSystem(std::vector<std::size_t> indices, std::vector<double> abs_values);
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    const std::vector<double>& abs_values() const noexcept { return abs_values_; }

private:
    std::vector<std::size_t> indices_;
    std::vector<double> abs_values_;
};

class AllocationLimit : public Error {
public:
    AllocationLimit(std::size_t n, std::size_t cap);
};

class NumericallySingular : public Error {
public:
    NumericallySingular(std::size_t column, double pivot);
};

class NoConvergence : public Error {
public:
    NoConvergence(int sweeps, double off_norm);
};

} // namespace circsolve
