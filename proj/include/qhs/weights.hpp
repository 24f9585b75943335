#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhs/arith.hpp"
#include "qhs/lambda.hpp"
#include "qhs/poly.hpp"

namespace qhs {

// Integer weight system (v_1,...,v_n,d) with 0 < v_i < d. Weights are stored
// sorted ascending; that sorted form is the canonical one used for equality
// and dedup. "Reduced" means gcd(v_1,...,v_n,d) = 1.
class WeightSystem {
 public:
  WeightSystem(std::vector<Int> v, Int d);  // validates and sorts

  int n() const { return static_cast<int>(v_.size()); }
  const std::vector<Int>& weights() const { return v_; }
  const Int& weight(int i) const { return v_[i]; }  // 0-based
  const Int& degree() const { return d_; }

  bool is_reduced() const;
  bool all_below_half_degree() const;  // v_i < d/2 for all i
  Rat normalized_weight(int i) const { return Rat(v_[i]) / Rat(d_); }

  std::string to_string() const;  // "(v_1,...,v_n; d)"

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend std::strong_ordering operator<=>(const WeightSystem& a, const WeightSystem& b);

 private:
  std::vector<Int> v_;
  Int d_;
};

// Divides v_1,...,v_n,d by their gcd; idempotent.
WeightSystem reduce(const WeightSystem& ws);

// prod_i (d - v_i)/v_i, exact. An integer for every weight system admitting an
// isolated singularity, but meaningful (and useful diagnostically) in general.
Rat milnor_number(const WeightSystem& ws);

// rho_{(v,d)}(t) = prod_i (t^d - t^{v_i}) / (t^{v_i} - 1), or nullopt when the
// quotient is not an integer polynomial.
std::optional<IntPoly> poincare_series(const WeightSystem& ws);

// Multiset of exponents alpha_j = k/d with multiplicity = coefficient of t^k
// in the Poincare series; size equals the Milnor number. nullopt when the
// series is not a polynomial or has a negative coefficient.
struct ExponentMultiset {
  std::map<Rat, Int> counts;
  Int total() const;
  friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;
};
std::optional<ExponentMultiset> exponents(const WeightSystem& ws);

// Groups exponents by the order m of e^{2 pi i alpha} (the lowest-terms
// denominator of alpha) and converts counts into Phi_m multiplicities.
// nullopt when some group size is not divisible by phi(m).
std::optional<DivisorElement> divisor_from_exponents(const ExponentMultiset& ex);

// Divisor of the monodromy characteristic polynomial via the Milnor-Orlik
// product: writes each normalized weight as s_i/t_i in lowest terms and
// expands prod_i ((1/s_i) Lambda_{t_i} - 1) in the Lambda algebra. nullopt
// when the result has a non-integer multiplicity (diagnostic only; cannot
// happen for genuine isolated-singularity systems).
std::optional<DivisorElement> charpoly_milnor_orlik(const WeightSystem& ws);

// The monodromy order d. Requires ws reduced with all v_i < d/2; throws
// std::domain_error otherwise.
Int monodromy_order(const WeightSystem& ws);

}  // namespace qhs
