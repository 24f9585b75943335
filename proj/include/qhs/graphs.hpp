#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhs/arith.hpp"
#include "qhs/weights.hpp"

namespace qhs {

// A self-map kappa of {0,...,n-1} together with positive exponents a_j; vertex
// j stands for the monomial x_j^{a_j} x_{kappa(j)} (x_j^{a_j+1} when
// kappa(j) = j).
struct KappaGraph {
  std::vector<int> kappa;  // 0-based
  std::vector<Int> a;
  int n() const { return static_cast<int>(kappa.size()); }
};

// Canonical name of a kappa-map's shape (exponents erased) up to relabeling.
// The code lists the connected components sorted as strings, each written
// "c<m>[T_1...T_m]": a directed cycle of length m carrying the rooted trees
// T_i (nested parentheses, children sorted), rotated to the lexicographic
// minimum. Two maps get the same code exactly when conjugate under S_n.
struct TypeClass {
  std::string code;
  friend auto operator<=>(const TypeClass&, const TypeClass&) = default;
};

// rho(x_1,...,x_k) = x_1...x_k - x_2...x_k + ... + (-1)^{k-1} x_k + (-1)^k;
// the empty sequence gives 1.
Int rho_chain(const std::vector<Int>& xs);

// All shapes on n vertices, canonically ordered (the classical numbering for
// n <= 4, code order beyond).
std::vector<TypeClass> enumerate_types(int n);

TypeClass type_of(const std::vector<int>& kappa);
inline TypeClass type_of(const KappaGraph& g) { return type_of(g.kappa); }

// A labeled representative of the shape (decoded from the canonical code).
std::vector<int> representative_kappa(const TypeClass& t);

// Roman-numeral label for n <= 4 (the classical tables), the code otherwise.
std::string type_label(const TypeClass& t, int n);
// Position of the label in the canonical order (for sorting label lists).
int type_order_index(const TypeClass& t, int n);

// Oracle-style canonicalization: minimum of the kappa table over all n!
// relabelings. Used by tests to cross-check the structural code.
std::vector<int> min_relabeling(const std::vector<int>& kappa);

enum class CycleValidity { Unique, Family, Invalid };

// Even cycles must avoid the degenerate exponent patterns: either no
// alternating half consists of all ones (EC1) or the whole cycle is ones
// (EC2). EC2 cycles admit a one-parameter family of weight solutions.
CycleValidity validate_even_cycles(const KappaGraph& g);

struct WeightSolution {
  CycleValidity status = CycleValidity::Invalid;
  std::optional<WeightSystem> system;   // reduced; set when status == Unique
  std::vector<Rat> normalized;          // per-vertex weights, graph order
};

// Solves a_j w_j + w_{kappa(j)} = 1 exactly in rationals and clears
// denominators.
WeightSolution solve_weights(const KappaGraph& g);

// True when the shape is a disjoint sum of Fermat points, cycles and chains,
// i.e. no vertex has two or more incoming arrows.
bool is_fcc(const std::vector<int>& kappa);
inline bool is_fcc(const KappaGraph& g) { return is_fcc(g.kappa); }

// All maps kappa admissible for ws on the full support: kappa(j) = k needs a
// positive integer a_j with a_j v_j + v_k = d. Each map carries its unique
// exponents. Requires n <= 6.
std::vector<KappaGraph> kappa_choices(const WeightSystem& ws);

// Decomposition of a kappa table into components, each a directed cycle
// (length >= 1; a fixed point counts as a 1-cycle) with trees hanging off it.
struct GraphStructure {
  std::vector<std::vector<int>> component_vertices;
  std::vector<std::vector<int>> component_cycles;  // in kappa order
  std::vector<std::vector<int>> children;          // non-cycle incoming arrows
};
GraphStructure graph_structure(const std::vector<int>& kappa);

}  // namespace qhs
