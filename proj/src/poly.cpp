#include "qhs/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qhs {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Int(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

IntPoly IntPoly::power_minus_one(std::size_t k) {
  if (k == 0) return IntPoly();
  IntPoly p;
  p.c_.assign(k + 1, Int(0));
  p.c_[0] = -1;
  p.c_[k] = 1;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t k) const {
  static const Int zero = 0;
  return k < c_.size() ? c_[k] : zero;
}

Int IntPoly::sum_of_coeffs() const {
  Int s = 0;
  for (const Int& c : c_) s += c;
  return s;
}

bool IntPoly::all_coeffs_nonnegative() const {
  for (const Int& c : c_) {
    if (c < 0) return false;
  }
  return true;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::times_power_difference(std::size_t hi, std::size_t lo) const {
  if (hi <= lo) throw std::invalid_argument("times_power_difference: need hi > lo");
  if (is_zero()) return IntPoly();
  std::vector<Int> out(c_.size() + hi, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out[i + hi] += c_[i];
    out[i + lo] -= c_[i];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Int& c = c_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || k == 0) os << a.str();
    if (k >= 1) {
      os << "t";
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

std::optional<IntPoly> poly_exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("poly_exact_div: zero divisor");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree()) return std::nullopt;

  // nonzero coefficients of den, highest first
  std::vector<std::pair<std::size_t, Int>> dnz;
  for (std::size_t i = den.coeffs().size(); i-- > 0;) {
    if (den.coeffs()[i] != 0) dnz.emplace_back(i, den.coeffs()[i]);
  }
  const std::size_t dd = dnz.front().first;
  const Int& lead = dnz.front().second;

  std::vector<Int> rem = num.coeffs();
  std::vector<Int> q(num.coeffs().size() - dd, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Int& cur = rem[k + dd];
    if (cur == 0) continue;
    if (cur % lead != 0) return std::nullopt;
    q[k] = cur / lead;
    for (const auto& [i, c] : dnz) rem[k + i] -= q[k] * c;
  }
  for (const Int& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly cyclotomic_poly(std::uint64_t m) {
  if (m == 0) throw std::domain_error("cyclotomic_poly: index must be >= 1");
  static std::mutex mu;
  static std::map<std::uint64_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }

  IntPoly p = IntPoly::power_minus_one(m);
  for (const Int& e : divisors(Int(m))) {
    if (e == Int(m)) continue;
    auto q = poly_exact_div(p, cyclotomic_poly(e.convert_to<std::uint64_t>()));
    if (!q) throw std::logic_error("cyclotomic_poly: exact division failed");
    p = std::move(*q);
  }

  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace qhs
