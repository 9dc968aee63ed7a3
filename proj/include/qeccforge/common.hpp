#ifndef QECCFORGE_COMMON_HPP
#define QECCFORGE_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qeccforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

enum class Failure {
  TrivialKernel,
  DistanceTooSmall,
  InsufficientCode,
  RecursionHalted,
  Infeasible,
  ColumnBlowup,
  CountingInequality,
  StateSpaceTooLarge,
  BudgetExceeded,
};

inline const char* to_string(Failure f) {
  switch (f) {
    case Failure::TrivialKernel: return "TrivialKernel";
    case Failure::DistanceTooSmall: return "DistanceTooSmall";
    case Failure::InsufficientCode: return "InsufficientCode";
    case Failure::RecursionHalted: return "RecursionHalted";
    case Failure::Infeasible: return "Infeasible";
    case Failure::ColumnBlowup: return "ColumnBlowup";
    case Failure::CountingInequality: return "CountingInequality";
    case Failure::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case Failure::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

/// A construction that cannot proceed for a mathematical (not input) reason.
class ConstructionError : public Error {
 public:
  ConstructionError(Failure kind, const std::string& what)
      : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  Failure kind() const noexcept { return kind_; }

 private:
  Failure kind_;
};

/// Non-negative residue of `v` modulo `m` (m > 0).
constexpr int mod_floor(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace qeccforge

#endif  // QECCFORGE_COMMON_HPP
