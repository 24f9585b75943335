#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qhs/arith.hpp"
#include "qhs/graphs.hpp"
#include "qhs/lambda.hpp"
#include "qhs/weights.hpp"

namespace qhs {

// One classified reduced weight system: all v_i < d/2, IS3 holds, mu <= bound.
struct EnumerationRecord {
  WeightSystem ws;
  Int mu;
  std::vector<std::string> kappa_types;  // labels of all admissible shapes
  DivisorElement charpoly;

  friend bool operator==(const EnumerationRecord&, const EnumerationRecord&) = default;
};

struct EnumerateOptions {
  int n = 2;
  Int mu_max = 50;
  int jobs = 1;
  long long budget = 0;    // DFS node budget; 0 = unlimited
  std::string cache_dir;   // empty = no checkpointing
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// All reduced weight systems with v_i < d/2 satisfying the isolated-
// singularity conditions and mu <= mu_max, sorted by (mu, weights, d).
// Generation sweeps the shape catalog with exponent DFS; a lossless lower
// bound on mu prunes the search. Complete and duplicate-free.
std::vector<EnumerationRecord> enumerate_systems(const EnumerateOptions& opts);
std::vector<EnumerationRecord> enumerate_systems(int n, const Int& mu_max);

// Independent oracle: a straight degree/weight scan. Requires n <= 3 and
// mu_max <= 60.
std::vector<EnumerationRecord> brute_force_enumerate(int n, const Int& mu_max);

struct GapReport {
  int n = 0;
  Int mu_max;
  std::vector<Int> gaps;                 // values in (2^n, mu_max] with no system
  std::vector<bool> sophie_germain;      // gap = 2p+(-1)^n with p, gap prime
};
GapReport find_gaps(const std::vector<EnumerationRecord>& records, int n, const Int& mu_max);
GapReport find_gaps(int n, const Int& mu_max);

// Chain-type closed forms: denominators t_i = a_i...a_2(a_1+1) and numerators
// s_i = rho(a_{i-1},...,a_2,a_1+1); mu = rho(a_n,...,a_2,a_1+1). Requires all
// a_i >= 2. The chain-ordered tuple is retained alongside the sorted system.
struct ChainSystem {
  std::vector<Int> a;
  WeightSystem ws;  // reduced, sorted
  Int mu;
};
ChainSystem chain_weight_system(const std::vector<Int>& a);

// Phi_m appears (with multiplicity 1) exactly when m | t_n and the smallest
// i in 0..n with m | t_i (t_0 = 1) has the same parity as n.
DivisorElement chain_charpoly(const std::vector<Int>& a);

// Audit of the prime-Milnor-number records: each must admit exactly one
// kappa-choice, of chain type, with squarefree characteristic polynomial and
// weights reproduced by the chain closed forms.
struct PrimeMuEntry {
  Int mu;
  WeightSystem ws;
  std::vector<Int> chain_tuple;  // root exponent first
};
struct PrimeMuReport {
  std::vector<PrimeMuEntry> entries;    // sorted by (mu, ws)
  std::vector<std::string> violations;  // expected empty
};
PrimeMuReport classify_prime_mu(const std::vector<EnumerationRecord>& records);
PrimeMuReport classify_prime_mu(int n, const Int& mu_max);

// {2p + (-1)^n : p and 2p + (-1)^n prime} intersected with (2^n, mu_max].
std::vector<Int> sophie_germain_gap_set(int n, const Int& mu_max);

// Existence of an injective map from {i : 3 v_i > d} to {i : 3 v_i < d}
// sending v_i to the index of a weight equal to d - 2 v_i.
bool kreuzer_skarke_injection_exists(const WeightSystem& ws);

// Builds the full record (kappa type labels, charpoly) for a system already
// known to satisfy the enumeration invariants.
EnumerationRecord make_record(const WeightSystem& ws, const Int& mu);

}  // namespace qhs
