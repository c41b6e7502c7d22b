#pragma once

// Exact arithmetic used across the library: arbitrary-precision integers and
// rationals, plus the handful of combinatorial helpers everything leans on.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace fatpoints {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error kinds, mirrored one-to-one by the C API status codes.
enum class errc {
  invalid_argument,  // malformed input, violated precondition
  out_of_range,      // theorem gate / applicability range not met
  internal,          // a proved statement failed to hold: a bug
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw error(kind, msg); }

inline void require(bool cond, errc kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

// binom(a, k) with the convention binom(a, k) = 0 whenever a < k or a < 0.
// This is the convention that makes virtual-dimension sums collapse for
// cycles whose multiplicity does not exceed their dimension.
inline Int binomial(const Int& a, int k) {
  if (k < 0 || a < k) return 0;
  Int num = 1;
  for (int i = 0; i < k; ++i) {
    num *= (a - i);
    num /= (i + 1);  // exact: product of j consecutive integers divides j!
  }
  return num;
}

inline Int ceil_div(const Int& a, const Int& b) {
  // b > 0 assumed
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline Int max0(const Int& a) { return a > 0 ? a : Int(0); }

}  // namespace fatpoints
