#include "qhs/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhs {

WeightSystem::WeightSystem(std::vector<Int> v, Int d) : v_(std::move(v)), d_(std::move(d)) {
  if (v_.empty()) throw std::invalid_argument("WeightSystem: need at least one weight");
  for (const Int& w : v_) {
    if (w < 1) throw std::invalid_argument("WeightSystem: weights must be positive");
    if (w >= d_) throw std::invalid_argument("WeightSystem: weights must satisfy v_i < d");
  }
  std::sort(v_.begin(), v_.end());
}

bool WeightSystem::is_reduced() const {
  Int g = d_;
  for (const Int& w : v_) g = gcd(g, w);
  return g == 1;
}

bool WeightSystem::all_below_half_degree() const {
  for (const Int& w : v_) {
    if (2 * w >= d_) return false;
  }
  return true;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ",";
    os << v_[i].str();
  }
  os << "; " << d_.str() << ")";
  return os.str();
}

std::strong_ordering operator<=>(const WeightSystem& a, const WeightSystem& b) {
  if (a.v_.size() != b.v_.size()) return a.v_.size() <=> b.v_.size();
  for (std::size_t i = 0; i < a.v_.size(); ++i) {
    if (a.v_[i] != b.v_[i]) {
      return a.v_[i] < b.v_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  if (a.d_ != b.d_) return a.d_ < b.d_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

WeightSystem reduce(const WeightSystem& ws) {
  Int g = ws.degree();
  for (const Int& w : ws.weights()) g = gcd(g, w);
  if (g == 1) return ws;
  std::vector<Int> v;
  v.reserve(ws.n());
  for (const Int& w : ws.weights()) v.push_back(w / g);
  return WeightSystem(std::move(v), ws.degree() / g);
}

Rat milnor_number(const WeightSystem& ws) {
  Rat mu = 1;
  for (const Int& w : ws.weights()) mu *= Rat(ws.degree() - w, w);
  return mu;
}

std::optional<IntPoly> poincare_series(const WeightSystem& ws) {
  const std::size_t d = to_u64_checked(ws.degree(), "degree for Poincare series");
  IntPoly p = IntPoly::constant(1);
  for (const Int& w : ws.weights()) {
    p = p.times_power_difference(d, to_u64_checked(w, "weight for Poincare series"));
  }
  for (const Int& w : ws.weights()) {
    auto q = poly_exact_div(p, IntPoly::power_minus_one(to_u64_checked(w, "weight")));
    if (!q) return std::nullopt;
    p = std::move(*q);
  }
  return p;
}

Int ExponentMultiset::total() const {
  Int t = 0;
  for (const auto& [a, c] : counts) {
    (void)a;
    t += c;
  }
  return t;
}

std::optional<ExponentMultiset> exponents(const WeightSystem& ws) {
  auto rho = poincare_series(ws);
  if (!rho || !rho->all_coeffs_nonnegative()) return std::nullopt;
  ExponentMultiset out;
  const auto& c = rho->coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] != 0) out.counts.emplace(Rat(Int(k), ws.degree()), c[k]);
  }
  return out;
}

std::optional<DivisorElement> divisor_from_exponents(const ExponentMultiset& ex) {
  std::map<Int, Int> grouped;  // order m -> number of exponents of that order
  for (const auto& [alpha, count] : ex.counts) grouped[denominator(alpha)] += count;
  DivisorElement out;
  for (const auto& [m, count] : grouped) {
    Int phi = euler_phi(m);
    if (count % phi != 0) return std::nullopt;
    out.add(m, count / phi);
  }
  return out;
}

std::optional<DivisorElement> charpoly_milnor_orlik(const WeightSystem& ws) {
  // (s_i, t_i) pairs sorted by ascending t_i keep the Lambda support small.
  std::vector<std::pair<Int, Int>> st;
  st.reserve(ws.n());
  for (const Int& v : ws.weights()) {
    Rat w(v, ws.degree());
    st.emplace_back(denominator(w), numerator(w));
  }
  std::sort(st.begin(), st.end());

  LambdaCombination prod = LambdaCombination::unit();
  for (const auto& [t, s] : st) {
    LambdaCombination factor;
    factor.add_term(t, Rat(1, s));
    factor.add_term(1, Rat(-1));
    prod = lambda_mul(prod, factor);
  }
  return lambda_to_divisor(prod);
}

Int monodromy_order(const WeightSystem& ws) {
  if (!ws.is_reduced()) throw std::domain_error("monodromy_order: weight system must be reduced");
  if (!ws.all_below_half_degree()) {
    throw std::domain_error("monodromy_order: requires v_i < d/2 for all i");
  }
  return ws.degree();
}

}  // namespace qhs
