#pragma once

#include <map>
#include <optional>
#include <string>

#include "qhs/arith.hpp"
#include "qhs/poly.hpp"

namespace qhs {

// Element of the group-ring algebra spanned by Lambda_k = div(t^k - 1), with
// the product rule Lambda_a * Lambda_b = gcd(a,b) * Lambda_{lcm(a,b)} and
// Lambda_1 acting as the unit. Coefficients stay rational during intermediate
// computations; integrality is enforced only when converting to a divisor.
class LambdaCombination {
 public:
  LambdaCombination() = default;
  static LambdaCombination unit() { return basis(1); }
  static LambdaCombination basis(const Int& k);

  const std::map<Int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Int& k, const Rat& c);

  LambdaCombination& operator+=(const LambdaCombination& o);
  LambdaCombination& operator-=(const LambdaCombination& o);
  LambdaCombination& operator*=(const Rat& c);
  friend LambdaCombination operator+(LambdaCombination a, const LambdaCombination& b) { return a += b; }
  friend LambdaCombination operator-(LambdaCombination a, const LambdaCombination& b) { return a -= b; }
  friend bool operator==(const LambdaCombination&, const LambdaCombination&) = default;

 private:
  std::map<Int, Rat> terms_;  // k -> coefficient, no zero entries
};

// Bilinear extension of the generator rule.
LambdaCombination lambda_mul(const LambdaCombination& x, const LambdaCombination& y);
inline LambdaCombination operator*(const LambdaCombination& x, const LambdaCombination& y) {
  return lambda_mul(x, y);
}

// Integer multiplicity function on cyclotomic factors Phi_m; no zero entries.
class DivisorElement {
 public:
  DivisorElement() = default;
  explicit DivisorElement(std::map<Int, Int> mult);

  const std::map<Int, Int>& multiplicities() const { return mult_; }
  bool is_empty() const { return mult_.empty(); }
  void add(const Int& m, const Int& count);

  Int degree() const;  // sum of mult(m) * phi(m)
  bool all_nonnegative() const;
  std::string to_string() const;  // e.g. "Phi_1 Phi_8"

  friend bool operator==(const DivisorElement&, const DivisorElement&) = default;

 private:
  std::map<Int, Int> mult_;
};

// mult(m) = sum of coeff(Lambda_k) over k divisible by m. nullopt when some
// multiplicity fails to be an integer.
std::optional<DivisorElement> lambda_to_divisor(const LambdaCombination& x);

// Product of cyclotomic polynomials with multiplicity. Throws
// std::domain_error on a negative multiplicity.
IntPoly divisor_to_poly(const DivisorElement& x);

}  // namespace qhs
