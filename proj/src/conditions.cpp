#include "qhs/conditions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qhs {

namespace {

constexpr std::size_t kDpLimit = 100'000'000;  // reachability array ceiling

bool two_generator_member(Int a, Int b, Int k) {
  Int g = gcd(a, b);
  if (k % g != 0) return false;
  a /= g;
  b /= g;
  k /= g;
  if (a == 1 || b == 1) return true;
  Int x0 = (k % b) * mod_inverse(a % b, b) % b;
  return x0 * a <= k;
}

std::vector<Int> positive_distinct(const std::vector<Int>& values) {
  std::vector<Int> gens;
  gens.reserve(values.size());
  for (const Int& v : values) {
    if (v < 1) throw std::invalid_argument("semigroup generators must be positive");
    gens.push_back(v);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::vector<char> build_reach(const std::vector<Int>& gens, std::size_t limit) {
  std::vector<char> reach(limit + 1, 0);
  reach[0] = 1;
  for (const Int& gi : gens) {
    std::size_t g = to_u64_checked(gi, "semigroup generator");
    if (g > limit) continue;
    for (std::size_t i = g; i <= limit; ++i) {
      if (reach[i - g]) reach[i] = 1;
    }
  }
  return reach;
}

bool span_member(const std::vector<Int>& gens, const Int& k, const std::vector<char>* reach) {
  if (k < 0) return false;
  if (k == 0) return true;
  if (gens.empty()) return false;
  if (gens.size() == 1) return k % gens[0] == 0;
  if (gens.size() == 2) return two_generator_member(gens[0], gens[1], k);
  return (*reach)[to_u64_checked(k, "semigroup target")] != 0;
}

// Inner existence predicates. Explicit supports get precomputed
// superset-closure tables over the 2^n subsets; the full support memoizes
// per-J semigroup state (one reachability array serves every target d - v_k).
class Predicates {
 public:
  explicit Predicates(const SupportSet& R) : R_(R), n_(R.n()) {
    if (n_ > 16) throw std::domain_error("conditions: n > 16 is not supported");
    if (R_.is_full()) {
      in_r_memo_.assign(std::size_t(1) << n_, -1);
      in_rk_memo_.assign(std::size_t(n_) << n_, -1);
      return;
    }
    const std::size_t size = std::size_t(1) << n_;
    auto close_upward = [&](std::vector<char>& table) {
      for (int b = 0; b < n_; ++b) {
        for (std::size_t j = 0; j < size; ++j) {
          if ((j >> b) & 1) table[j] = table[j] | table[j ^ (std::size_t(1) << b)];
        }
      }
    };
    in_r_table_.assign(size, 0);
    for (const auto& alpha : R_.elements()) {
      unsigned m = 0;
      for (int i = 0; i < n_; ++i) {
        if (alpha[i] > 0) m |= 1u << i;
      }
      in_r_table_[m] = 1;
    }
    close_upward(in_r_table_);
    in_rk_tables_.assign(n_, std::vector<char>(size, 0));
    for (int k = 0; k < n_; ++k) {
      for (const auto& alpha : R_.elements()) {
        if (alpha[k] < 1) continue;
        unsigned m = 0;
        for (int i = 0; i < n_; ++i) {
          Int e = alpha[i] - (i == k ? 1 : 0);
          if (e > 0) m |= 1u << i;
        }
        in_rk_tables_[k][m] = 1;
      }
      close_upward(in_rk_tables_[k]);
    }
  }

  bool in_R(unsigned jmask) {
    if (!R_.is_full()) return in_r_table_[jmask] != 0;
    char& memo = in_r_memo_[jmask];
    if (memo < 0) memo = full_member(jmask, R_.d()) ? 1 : 0;
    return memo != 0;
  }

  bool in_Rk(int k, unsigned jmask) {
    if (!R_.is_full()) return in_rk_tables_[k][jmask] != 0;
    char& memo = in_rk_memo_[(std::size_t(k) << n_) | jmask];
    if (memo < 0) memo = full_member(jmask, R_.d() - R_.v()[k]) ? 1 : 0;
    return memo != 0;
  }

 private:

  bool full_member(unsigned jmask, const Int& target) {
    auto it = gens_.find(jmask);
    if (it == gens_.end()) {
      std::vector<Int> vals;
      for (int i = 0; i < n_; ++i) {
        if (jmask & (1u << i)) vals.push_back(R_.v()[i]);
      }
      it = gens_.emplace(jmask, positive_distinct(vals)).first;
    }
    const std::vector<Int>& gens = it->second;
    const std::vector<char>* reach = nullptr;
    if (gens.size() >= 3) {
      auto rit = reach_.find(jmask);
      if (rit == reach_.end()) {
        std::size_t limit = to_u64_checked(R_.d(), "degree for semigroup DP");
        if (limit > kDpLimit) throw std::domain_error("degree too large for semigroup DP");
        rit = reach_.emplace(jmask, build_reach(gens, limit)).first;
      }
      reach = &rit->second;
    }
    return span_member(gens, target, reach);
  }

  const SupportSet& R_;
  int n_;
  std::vector<char> in_r_memo_;
  std::vector<char> in_rk_memo_;
  std::vector<char> in_r_table_;
  std::vector<std::vector<char>> in_rk_tables_;
  std::map<unsigned, std::vector<Int>> gens_;
  std::map<unsigned, std::vector<char>> reach_;
};

std::vector<int> mask_to_indices(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

void gen_subsets(int n, unsigned prefix, int last, std::vector<unsigned>& out) {
  for (int e = last + 1; e < n; ++e) {
    unsigned m = prefix | (1u << e);
    out.push_back(m);
    gen_subsets(n, m, e, out);
  }
}

}  // namespace

const std::vector<unsigned>& subsets_in_lex_order(int n) {
  if (n < 0 || n > 16) throw std::domain_error("subsets_in_lex_order: n out of range");
  static std::mutex mu;
  static std::map<int, std::vector<unsigned>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<unsigned> subs;
    gen_subsets(n, 0, -1, subs);
    it = cache.emplace(n, std::move(subs)).first;
  }
  return it->second;
}

SupportSet SupportSet::full_support(std::vector<Int> v, Int d) {
  SupportSet R;
  R.v_ = std::move(v);
  R.d_ = std::move(d);
  R.full_ = true;
  return R;
}

SupportSet SupportSet::explicit_set(std::vector<Int> v, Int d,
                                    std::vector<std::vector<Int>> elements) {
  SupportSet R;
  R.v_ = std::move(v);
  R.d_ = std::move(d);
  for (const auto& alpha : elements) {
    if (alpha.size() != R.v_.size()) {
      throw std::invalid_argument("SupportSet: exponent vector has wrong length");
    }
    Int deg = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] < 0) throw std::invalid_argument("SupportSet: negative exponent");
      deg += alpha[i] * R.v_[i];
    }
    if (deg != R.d_) throw std::invalid_argument("SupportSet: element violates the degree equation");
  }
  R.elements_ = std::move(elements);
  return R;
}

bool semigroup_member(const std::vector<Int>& values, const Int& k) {
  if (k < 0) return false;
  if (k == 0) return true;
  std::vector<Int> gens = positive_distinct(values);
  if (gens.size() >= 3) {
    std::size_t limit = to_u64_checked(k, "semigroup target");
    if (limit > kDpLimit) throw std::domain_error("target too large for semigroup DP");
    auto reach = build_reach(gens, limit);
    return reach[limit] != 0;
  }
  return span_member(gens, k, nullptr);
}

ConditionReport check_condition(const SupportSet& R, Cond which) {
  const int n = R.n();
  Predicates pred(R);
  const auto& subsets = subsets_in_lex_order(n);

  auto popcount = [](unsigned m) { return __builtin_popcount(m); };

  if (which == Cond::C3) {
    // all I, J with |I| < |J| need some k outside I with R_k cap N_0^J nonempty
    for (unsigned jmask : subsets) {
      int jsz = popcount(jmask);
      std::vector<unsigned> imasks{0u};
      for (unsigned m : subsets) {
        if (popcount(m) < jsz) imasks.push_back(m);
      }
      // keep lex order: the empty set first, subsets already lex ordered
      for (unsigned imask : imasks) {
        bool ok = false;
        for (int k = 0; k < n && !ok; ++k) {
          if (imask & (1u << k)) continue;
          ok = pred.in_Rk(k, jmask);
        }
        if (!ok) {
          return {false, mask_to_indices(jmask, n), mask_to_indices(imask, n)};
        }
      }
    }
    return {true, {}, {}};
  }

  const bool primed = which == Cond::C1Prime || which == Cond::C2Prime;
  const bool c1 = which == Cond::C1 || which == Cond::C1Prime;
  for (unsigned jmask : subsets) {
    int jsz = popcount(jmask);
    if (primed && 2 * jsz > n + 1) continue;
    if (c1 && pred.in_R(jmask)) continue;
    int count = 0;
    for (int k = 0; k < n; ++k) {
      if (c1 && (jmask & (1u << k))) continue;  // C1 draws K from N - J
      if (pred.in_Rk(k, jmask)) ++count;
    }
    if (count < jsz) return {false, mask_to_indices(jmask, n), {}};
  }
  return {true, {}, {}};
}

bool is_IS3(const std::vector<Int>& v, const Int& d) {
  return check_condition(SupportSet::full_support(v, d), Cond::C1Prime).verdict;
}

bool is_IS3(const WeightSystem& ws) { return is_IS3(ws.weights(), ws.degree()); }

ConditionReport check_gcd_condition(const std::vector<Int>& v, const Int& d) {
  const int n = static_cast<int>(v.size());
  for (unsigned jmask : subsets_in_lex_order(n)) {
    Int g = 0;
    for (int i = 0; i < n; ++i) {
      if (jmask & (1u << i)) g = gcd(g, v[i]);
    }
    int count = 0;
    for (int k = 0; k < n; ++k) {
      if ((d - v[k]) % g == 0) ++count;
    }
    if (count < __builtin_popcount(jmask)) return {false, mask_to_indices(jmask, n), {}};
  }
  return {true, {}, {}};
}

ConditionReport check_gcd_condition(const WeightSystem& ws) {
  return check_gcd_condition(ws.weights(), ws.degree());
}

bool is_IS2(const SupportSet& R) {
  if (R.is_full()) throw std::invalid_argument("is_IS2: requires an explicit support set");
  return check_condition(R, Cond::C2Prime).verdict;
}

}  // namespace qhs
