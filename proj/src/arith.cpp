#include "qhs/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qhs {

std::uint64_t to_u64_checked(const Int& x, const char* what) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
    throw std::domain_error(std::string(what) + " out of 64-bit range: " + x.str());
  }
  return x.convert_to<std::uint64_t>();
}

long long to_i64_checked(const Int& x, const char* what) {
  if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max()) {
    throw std::domain_error(std::string(what) + " out of 64-bit range: " + x.str());
  }
  return x.convert_to<long long>();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(u64 n, u64 a) {
  if (n % a == 0) return n == a;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_rho(u64 n) {
  if ((n & 1) == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 x) {
  if (x < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(x, a)) return false;
  }
  return true;
}

bool is_prime(const Int& x) {
  if (x < 2) return false;
  return is_prime_u64(to_u64_checked(x, "primality candidate"));
}

std::vector<std::pair<u64, int>> factorize_u64(u64 x) {
  std::vector<u64> raw;
  factor_rec(x, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : raw) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<Int> divisors(const Int& x) {
  if (x < 1) throw std::domain_error("divisors: argument must be >= 1");
  auto fac = factorize_u64(to_u64_checked(x, "divisor-enumeration argument"));
  std::vector<Int> out{1};
  for (auto [p, e] : fac) {
    std::size_t sz = out.size();
    Int pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int euler_phi(const Int& m) {
  if (m < 1) throw std::domain_error("euler_phi: argument must be >= 1");
  auto fac = factorize_u64(to_u64_checked(m, "euler_phi argument"));
  Int r = m;
  for (auto [p, e] : fac) {
    (void)e;
    r = r / p * (p - 1);
  }
  return r;
}

Int mod_inverse(const Int& x, const Int& m) {
  // extended Euclid on (x mod m, m)
  Int a = x % m;
  if (a < 0) a += m;
  Int b = m, u = 1, v = 0;
  while (b != 0) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = u - q * v;
    u = v;
    v = t;
  }
  if (a != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  u %= m;
  if (u < 0) u += m;
  return u;
}

}  // namespace qhs
