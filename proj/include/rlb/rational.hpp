/**
 * Exact rational scalar type and its string/decimal renderings.
 *
 * Every quantity the library reports is an exact GMP-backed rational;
 * decimal strings are produced from the exact value by long division and
 * are never computed through floating point.
 */

#ifndef RLB_RATIONAL_HPP
#define RLB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>
#include <string>

namespace rlb {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Error categories surfaced by the library; the CLI maps them to exit codes.
enum class ErrorKind {
    Schema,        // malformed input document (exit code 2)
    Precondition,  // mathematically invalid input (exit code 3)
    Internal       // invariant breakage; should not happen
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_schema(const std::string& msg) {
    throw Error(ErrorKind::Schema, msg);
}
[[noreturn]] inline void throw_precondition(const std::string& msg) {
    throw Error(ErrorKind::Precondition, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
    throw Error(ErrorKind::Internal, msg);
}

/**
 * Parse "p", "-p" or "p/q" into an exact rational.
 *
 * Rejects zero denominators and any other malformed text with a schema
 * error mentioning `where` (a field path such as "tau.matrix[0][1]").
 */
Rational parse_rational(const std::string& text, const std::string& where);

/// Canonical exact rendering: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

/**
 * Fixed-point decimal rendering of the exact value, rounded half away
 * from zero at the requested number of fractional digits (default 12).
 */
std::string rational_to_decimal(const Rational& value, int digits = 12);

/// Nearest double; used only for oracle-side grid arithmetic and displays.
double rational_to_double(const Rational& value);

}  // namespace rlb

#endif
