#include "circsolve/errors.hpp"

#include <sstream>
#include <utility>

namespace circsolve {

namespace {

std::string singular_message(const std::vector<std::size_t>& idx, const std::vector<double>& vals)
{
    std::ostringstream os;
    os << "singular system: eigenvalue(s) numerically zero at";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        os << (i == 0 ? " " : ", ") << "k=" << idx[i] << " |psi_k|=" << vals[i];
    }
    return os.str();
}

} // namespace

NonFinite::NonFinite(std::size_t index)
    : Error("non-finite value at index " + std::to_string(index)), index_(index)
{
}

SymmetryViolation::SymmetryViolation(std::size_t l, std::size_t mirror, double abs_diff)
    : Error([&] {
          std::ostringstream os;
          os << "symmetry violation at (" << l << "," << mirror << "): |a_" << l << " - a_" << mirror
             << "| = " << abs_diff;
          return os.str();
      }()),
      l_(l), mirror_(mirror), diff_(abs_diff)
{
}

LengthMismatch::LengthMismatch(std::size_t expected, std::size_t actual, const std::string& what)
    : Error(what + " mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
      expected_(expected), actual_(actual)
{
}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual)),
      expected_(expected), actual_(actual)
{
}

SingularSystem::SingularSystem(std::vector<std::size_t> indices, std::vector<double> abs_values)
    : Error(singular_message(indices, abs_values)), indices_(std::move(indices)),
      abs_values_(std::move(abs_values))
{
}

AllocationLimit::AllocationLimit(std::size_t n, std::size_t cap)
    : Error("dense matrix of order " + std::to_string(n) + " exceeds cap " + std::to_string(cap))
{
}

NumericallySingular::NumericallySingular(std::size_t column, double pivot)
    : Error([&] {
          std::ostringstream os;
          os << "pivot collapse in column " << column << " (|pivot| = " << pivot << ")";
          return os.str();
      }())
{
}

NoConvergence::NoConvergence(int sweeps, double off_norm)
    : Error([&] {
          std::ostringstream os;
          os << "Jacobi iteration did not converge after " << sweeps << " sweeps (off-diagonal norm " << off_norm
             << ")";
          return os.str();
      }())
{
}

} // namespace circsolve
