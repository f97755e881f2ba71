#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ecs {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a formula is evaluated at a point where a denominator vanishes.
/// The message names the offending factor.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numerical routine cannot reach its requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

namespace detail {
inline bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace detail

/// Parses "p/q" or a plain integer. Decimal notation is rejected so that
/// couplings stay exact.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!detail::is_integer_token(s))
      throw std::invalid_argument("not a rational \"p/q\" or integer: '" + s + "'");
    return Rational(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!detail::is_integer_token(num) || !detail::is_integer_token(den))
    throw std::invalid_argument("not a rational \"p/q\" or integer: '" + s + "'");
  Int q(den);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(Int(num), q);
}

}  // namespace ecs
