#pragma once

#include <optional>
#include <vector>

#include "qhs/arith.hpp"
#include "qhs/weights.hpp"

namespace qhs {

// Support set R of exponent vectors of weighted degree d, either explicit or
// the full set (N_0^n)_d (kept implicit, never materialized). Weights keep the
// caller's order; witnesses are reported against that order.
class SupportSet {
 public:
  static SupportSet full_support(std::vector<Int> v, Int d);
  static SupportSet explicit_set(std::vector<Int> v, Int d, std::vector<std::vector<Int>> elements);

  int n() const { return static_cast<int>(v_.size()); }
  const std::vector<Int>& v() const { return v_; }
  const Int& d() const { return d_; }
  bool is_full() const { return full_; }
  const std::vector<std::vector<Int>>& elements() const { return elements_; }

 private:
  SupportSet() = default;
  std::vector<Int> v_;
  Int d_;
  bool full_ = false;
  std::vector<std::vector<Int>> elements_;
};

enum class Cond { C1, C1Prime, C2, C2Prime, C3 };

struct ConditionReport {
  bool verdict = false;
  // On failure: the lexicographically first failing subset J (1-based indices),
  // plus the first failing I for C3.
  std::vector<int> witness_j;
  std::vector<int> witness_i;
};

// k in the N_0-span of values (duplicates ignored). Closed forms for one and
// two generators; dynamic programming over 0..k otherwise.
bool semigroup_member(const std::vector<Int>& values, const Int& k);

ConditionReport check_condition(const SupportSet& R, Cond which);

// (C1)' on the full support: the cheapest of the five equivalent conditions.
bool is_IS3(const std::vector<Int>& v, const Int& d);
bool is_IS3(const WeightSystem& ws);

// For every J, gcd(v_j | j in J) must divide at least |J| of the numbers
// d - v_k. Equivalent to the Poincare series lying in Z[t].
ConditionReport check_gcd_condition(const std::vector<Int>& v, const Int& d);
ConditionReport check_gcd_condition(const WeightSystem& ws);

// (C2)' on an explicit support set.
bool is_IS2(const SupportSet& R);

// Nonempty subsets of {1..n} as bitmasks, ordered by their sorted element
// lists (the order witnesses are searched in).
const std::vector<unsigned>& subsets_in_lex_order(int n);

}  // namespace qhs
