#include "qhs/lambda.hpp"

#include <sstream>
#include <stdexcept>

namespace qhs {

LambdaCombination LambdaCombination::basis(const Int& k) {
  if (k < 1) throw std::domain_error("LambdaCombination: index must be >= 1");
  LambdaCombination x;
  x.terms_.emplace(k, Rat(1));
  return x;
}

void LambdaCombination::add_term(const Int& k, const Rat& c) {
  if (k < 1) throw std::domain_error("LambdaCombination: index must be >= 1");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LambdaCombination& LambdaCombination::operator+=(const LambdaCombination& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LambdaCombination& LambdaCombination::operator-=(const LambdaCombination& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LambdaCombination& LambdaCombination::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LambdaCombination lambda_mul(const LambdaCombination& x, const LambdaCombination& y) {
  LambdaCombination out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Int g = gcd(a, b);
      out.add_term(a / g * b, ca * cb * Rat(g));
    }
  }
  return out;
}

DivisorElement::DivisorElement(std::map<Int, Int> mult) : mult_(std::move(mult)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->first < 1) throw std::domain_error("DivisorElement: index must be >= 1");
    it = it->second == 0 ? mult_.erase(it) : std::next(it);
  }
}

void DivisorElement::add(const Int& m, const Int& count) {
  if (m < 1) throw std::domain_error("DivisorElement: index must be >= 1");
  if (count == 0) return;
  auto [it, inserted] = mult_.emplace(m, count);
  if (!inserted) {
    it->second += count;
    if (it->second == 0) mult_.erase(it);
  }
}

Int DivisorElement::degree() const {
  Int deg = 0;
  for (const auto& [m, c] : mult_) deg += c * euler_phi(m);
  return deg;
}

bool DivisorElement::all_nonnegative() const {
  for (const auto& [m, c] : mult_) {
    (void)m;
    if (c < 0) return false;
  }
  return true;
}

std::string DivisorElement::to_string() const {
  if (mult_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : mult_) {
    if (!first) os << " ";
    first = false;
    os << "Phi_" << m.str();
    if (c != 1) os << "^" << c.str();
  }
  return os.str();
}

std::optional<DivisorElement> lambda_to_divisor(const LambdaCombination& x) {
  std::map<Int, Rat> acc;
  for (const auto& [k, c] : x.terms()) {
    for (const Int& m : divisors(k)) acc[m] += c;
  }
  DivisorElement out;
  for (const auto& [m, c] : acc) {
    if (denominator(c) != 1) return std::nullopt;
    out.add(m, numerator(c));
  }
  return out;
}

IntPoly divisor_to_poly(const DivisorElement& x) {
  if (!x.all_nonnegative()) {
    throw std::domain_error("divisor_to_poly: negative multiplicity");
  }
  IntPoly p = IntPoly::constant(1);
  for (const auto& [m, c] : x.multiplicities()) {
    IntPoly phi = cyclotomic_poly(to_u64_checked(m, "cyclotomic index"));
    for (Int i = 0; i < c; ++i) p = p * phi;
  }
  return p;
}

}  // namespace qhs
