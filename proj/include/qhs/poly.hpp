#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhs/arith.hpp"

namespace qhs {

// Dense integer-coefficient polynomial. Trailing zeros are trimmed, so the
// leading coefficient is nonzero unless the polynomial is zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, std::size_t k);
  static IntPoly power_minus_one(std::size_t k);  // t^k - 1

  bool is_zero() const { return c_.empty(); }
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  const Int& coeff(std::size_t k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int sum_of_coeffs() const;  // = value at t = 1
  bool all_coeffs_nonnegative() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  // this * (t^hi - t^lo); requires hi > lo
  IntPoly times_power_difference(std::size_t hi, std::size_t lo) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Exact division in Z[t]: the q with q*den == num, or nullopt when no such
// integer polynomial exists. den must be nonzero.
std::optional<IntPoly> poly_exact_div(const IntPoly& num, const IntPoly& den);

// Cyclotomic polynomial Phi_m (memoized, safe for concurrent use).
IntPoly cyclotomic_poly(std::uint64_t m);

}  // namespace qhs
