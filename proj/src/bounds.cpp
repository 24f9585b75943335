#include "qhs/bounds.hpp"

#include <mutex>
#include <stdexcept>

namespace qhs {

namespace {

std::vector<long long>& prime_table() {
  static std::vector<long long> primes{2, 3};
  return primes;
}

std::mutex& prime_mutex() {
  static std::mutex mu;
  return mu;
}

void extend_primes(int count) {
  auto& primes = prime_table();
  long long candidate = primes.back();
  while (static_cast<int>(primes.size()) < count) {
    candidate += 2;
    bool ok = true;
    for (long long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        ok = false;
        break;
      }
    }
    if (ok) primes.push_back(candidate);
  }
}

}  // namespace

std::vector<long long> first_primes(int n) {
  if (n < 0) throw std::domain_error("first_primes: n must be >= 0");
  std::lock_guard<std::mutex> lock(prime_mutex());
  if (static_cast<int>(prime_table().size()) < n) extend_primes(n);
  const auto& primes = prime_table();
  return {primes.begin(), primes.begin() + n};
}

Rat l_bound(int n) {
  if (n < 0) throw std::domain_error("l_bound: n must be >= 0");
  Rat out = 1;
  for (long long p : first_primes(n)) out *= Rat(p, p - 1);
  return out;
}

Rat l2_bound(int n) {
  if (n < 2) throw std::domain_error("l2_bound: n must be >= 2");
  Rat out = Rat(3, 2) * Rat(4, 3);  // n = 2 gives exactly 2 = l(1)
  auto primes = first_primes(n);
  for (int i = 2; i < n; ++i) out *= Rat(primes[i], primes[i] - 1);
  return out;
}

bool check_degree_bound(const WeightSystem& ws) {
  const Rat mu = milnor_number(ws);
  const Rat d(ws.degree());
  if (d > l_bound(ws.n()) * mu) return false;
  if (ws.n() >= 2 && ws.all_below_half_degree()) {
    if (d > l_bound(ws.n() - 1) * mu) return false;
  }
  return true;
}

Int enumeration_degree_cap(int n, const Int& mu_max) {
  if (n < 1) throw std::domain_error("enumeration_degree_cap: n must be >= 1");
  if (n == 1) return mu_max + 1;
  Rat cap = l_bound(n - 1) * Rat(mu_max);
  return numerator(cap) / denominator(cap);  // floor (cap > 0)
}

}  // namespace qhs
