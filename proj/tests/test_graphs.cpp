#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "qhs/conditions.hpp"
#include "qhs/enumerate.hpp"
#include "qhs/graphs.hpp"

using namespace qhs;

namespace {

std::vector<Int> vi(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

KappaGraph graph(std::vector<int> kappa, std::initializer_list<long long> a) {
  KappaGraph g;
  g.kappa = std::move(kappa);
  g.a.assign(a.begin(), a.end());
  return g;
}

WeightSystem ws(std::initializer_list<long long> v, long long d) {
  std::vector<Int> vv;
  for (long long x : v) vv.emplace_back(x);
  return WeightSystem(std::move(vv), Int(d));
}

// all kappa tables on n vertices, for brute-force cross-checks
void for_all_maps(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> kappa(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(kappa);
      return;
    }
    for (int k = 0; k < n; ++k) {
      kappa[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("rho on integer tuples") {
  CHECK(rho_chain({}) == 1);
  CHECK(rho_chain(vi({5})) == 4);
  CHECK(rho_chain(vi({2, 4})) == 5);
  CHECK(rho_chain(vi({2, 2, 4})) == 11);
  CHECK(rho_chain(vi({2, 2, 2, 6})) == 31);
  // zero exactly for odd length with ones in the odd positions
  CHECK(rho_chain(vi({1, 7, 1})) == 0);
  CHECK(rho_chain(vi({1, 1, 1})) == 0);
  CHECK(rho_chain(vi({2, 1, 1})) != 0);
}

TEST_CASE("type counts") {
  CHECK(enumerate_types(1).size() == 1);
  CHECK(enumerate_types(2).size() == 3);
  CHECK(enumerate_types(3).size() == 7);
  CHECK(enumerate_types(4).size() == 19);
  CHECK(enumerate_types(5).size() == 47);
}

TEST_CASE("constructive enumeration matches brute-force canonicalization") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    std::set<std::vector<int>> canon;
    std::map<std::vector<int>, std::string> canon_to_code;
    bool consistent = true;
    for_all_maps(n, [&](const std::vector<int>& kappa) {
      auto c = min_relabeling(kappa);
      canon.insert(c);
      auto code = type_of(kappa).code;
      auto [it, inserted] = canon_to_code.emplace(c, code);
      if (!inserted && it->second != code) consistent = false;
    });
    CHECK(consistent);  // conjugate maps get one code
    CHECK(canon.size() == enumerate_types(n).size());
    std::set<std::string> codes;
    for (const auto& [c, code] : canon_to_code) {
      (void)c;
      codes.insert(code);
    }
    CHECK(codes.size() == canon.size());  // non-conjugate maps get distinct codes
    std::set<std::string> enumerated;
    for (const auto& t : enumerate_types(n)) enumerated.insert(t.code);
    CHECK(enumerated == codes);
  }
}

TEST_CASE("representative round-trip") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_types(n)) {
      auto kappa = representative_kappa(t);
      CHECK(static_cast<int>(kappa.size()) == n);
      CHECK(type_of(kappa) == t);
    }
  }
}

TEST_CASE("classical labels") {
  CHECK(type_label(type_of({0, 1}), 2) == "I");        // two Fermat points
  CHECK(type_label(type_of({0, 0}), 2) == "II");       // chain
  CHECK(type_label(type_of({1, 0}), 2) == "III");      // cycle
  CHECK(type_label(type_of({0, 0, 0}), 3) == "III");   // star
  CHECK(type_label(type_of({1, 0, 0}), 3) == "VI");    // 2-cycle with tail
  CHECK(type_label(type_of({1, 2, 0}), 3) == "VII");   // 3-cycle
  CHECK(type_label(type_of({0, 0, 1, 2}), 4) == "X");  // chain on 4 vertices
  CHECK(type_label(type_of({0, 0, 1, 0}), 4) == "XII");
  CHECK(type_label(type_of({1, 2, 3, 0}), 4) == "XVIII");

  // labels are assigned bijectively for n <= 4
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> labels;
    for (const auto& t : enumerate_types(n)) labels.insert(type_label(t, n));
    CHECK(labels.size() == enumerate_types(n).size());
  }
}

TEST_CASE("even cycle validation") {
  // 2-cycle with a = (1,2): invalid
  CHECK(validate_even_cycles(graph({1, 0}, {1, 2})) == CycleValidity::Invalid);
  // 2-cycle with a = (1,1): a family
  CHECK(validate_even_cycles(graph({1, 0}, {1, 1})) == CycleValidity::Family);
  // 2-cycle with a = (2,3): unique
  CHECK(validate_even_cycles(graph({1, 0}, {2, 3})) == CycleValidity::Unique);
  // 4-cycle, ones on one alternating half: invalid
  CHECK(validate_even_cycles(graph({1, 2, 3, 0}, {1, 5, 1, 7})) == CycleValidity::Invalid);
  // odd cycles have no constraint
  CHECK(validate_even_cycles(graph({1, 2, 0}, {1, 1, 1})) == CycleValidity::Unique);
}

TEST_CASE("solve_weights on worked examples") {
  // chain x1^4 + x2^2 x1
  auto sol = solve_weights(graph({0, 0}, {3, 2}));
  REQUIRE(sol.status == CycleValidity::Unique);
  CHECK(*sol.system == ws({2, 3}, 8));

  // 2-cycle x1^2 x2 + x2^3 x1
  sol = solve_weights(graph({1, 0}, {2, 3}));
  REQUIRE(sol.status == CycleValidity::Unique);
  CHECK(*sol.system == ws({1, 2}, 5));
  CHECK(milnor_number(*sol.system) == Rat(6));

  // Fermat x1^3 + x2^3 + x3^3
  sol = solve_weights(graph({0, 1, 2}, {2, 2, 2}));
  REQUIRE(sol.status == CycleValidity::Unique);
  CHECK(*sol.system == ws({1, 1, 1}, 3));

  CHECK(solve_weights(graph({1, 0}, {1, 2})).status == CycleValidity::Invalid);
  CHECK(solve_weights(graph({1, 0}, {1, 1})).status == CycleValidity::Family);
}

TEST_CASE("solved weights satisfy their defining equations") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<long long> aa(2, 8);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_types(n)) {
      auto kappa = representative_kappa(t);
      for (int rep = 0; rep < 8; ++rep) {
        KappaGraph g;
        g.kappa = kappa;
        for (int i = 0; i < n; ++i) g.a.emplace_back(aa(rng));
        auto sol = solve_weights(g);
        REQUIRE(sol.status == CycleValidity::Unique);
        for (int j = 0; j < n; ++j) {
          CHECK(Rat(g.a[j]) * sol.normalized[j] + sol.normalized[g.kappa[j]] == Rat(1));
          CHECK(sol.normalized[j] > 0);
          CHECK(sol.normalized[j] < Rat(1, 2));
        }
      }
    }
  }
}

TEST_CASE("pure cycles: Milnor number is the product of the exponents") {
  // exhaustive over all cycles with n <= 5 and 2 <= a_j <= 6
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> kappa(n);
    for (int i = 0; i < n; ++i) kappa[i] = (i + 1) % n;
    std::vector<Int> a(n, Int(2));
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        KappaGraph g{kappa, a};
        Int prod = 1;
        for (const Int& ai : a) prod *= ai;
        auto sol = solve_weights(g);
        REQUIRE(sol.status == CycleValidity::Unique);
        CHECK(milnor_number(*sol.system) == Rat(prod));
        return;
      }
      for (long long v = 2; v <= 6; ++v) {
        a[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
}

TEST_CASE("chains: solved weights match the closed forms") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<long long> aa(2, 7);
  for (int n = 1; n <= 5; ++n) {
    // kappa(0)=0, kappa(i)=i-1
    std::vector<int> kappa(n);
    for (int i = 1; i < n; ++i) kappa[i] = i - 1;
    for (int rep = 0; rep < 30; ++rep) {
      KappaGraph g;
      g.kappa = kappa;
      std::vector<Int> a;
      for (int i = 0; i < n; ++i) a.emplace_back(aa(rng));
      g.a = a;
      auto sol = solve_weights(g);
      REQUIRE(sol.status == CycleValidity::Unique);

      // t_i = a_i...a_2 (a_1 + 1), s_i = rho(a_{i-1},...,a_2,a_1+1)
      Int ti = a[0] + 1;
      std::vector<Int> prefix{a[0] + 1};
      for (int i = 0; i < n; ++i) {
        if (i > 0) {
          ti *= a[i];
          prefix.insert(prefix.begin(), a[i]);
        }
        Int si = rho_chain(std::vector<Int>(prefix.begin() + 1, prefix.end()));
        CHECK(sol.normalized[i] == Rat(si, ti));
      }
      CHECK(chain_weight_system(a).ws == *sol.system);
    }
  }
}

TEST_CASE("fcc detection") {
  CHECK(is_fcc({0, 0, 1, 2}));      // chain
  CHECK(is_fcc({1, 2, 0}));         // cycle
  CHECK(is_fcc({0, 1, 2}));         // Fermat
  CHECK_FALSE(is_fcc({0, 0, 0}));   // star
  CHECK_FALSE(is_fcc({1, 0, 0}));   // 2-cycle with tail
  CHECK_FALSE(is_fcc({0, 0, 1, 0}));
}

TEST_CASE("fcc is equivalent to IS2 of the minimal support") {
  for (int n = 2; n <= 4; ++n) {
    for_all_maps(n, [&](const std::vector<int>& kappa) {
      for (int bits = 0; bits < (1 << n); ++bits) {
        KappaGraph g;
        g.kappa = kappa;
        for (int i = 0; i < n; ++i) g.a.emplace_back((bits >> i & 1) ? 3 : 2);
        auto sol = solve_weights(g);
        REQUIRE(sol.status == CycleValidity::Unique);
        // materialize R = { a_j e_j + e_{kappa(j)} } over the integer system
        const WeightSystem& system = *sol.system;
        Int L = system.degree();
        std::vector<Int> v(n);
        for (int j = 0; j < n; ++j) {
          Rat w = sol.normalized[j];
          v[j] = numerator(w) * (L / denominator(w));
        }
        std::vector<std::vector<Int>> elems;
        for (int j = 0; j < n; ++j) {
          std::vector<Int> alpha(n, Int(0));
          alpha[j] += g.a[j];
          alpha[g.kappa[j]] += 1;
          elems.push_back(std::move(alpha));
        }
        auto R = SupportSet::explicit_set(v, L, elems);
        CHECK(is_fcc(g) == is_IS2(R));
      }
    });
  }
}

TEST_CASE("kappa choices") {
  auto choices = kappa_choices(ws({2, 3}, 8));
  REQUIRE(choices.size() == 1);
  CHECK(choices[0].kappa == std::vector<int>({0, 0}));
  CHECK(choices[0].a == std::vector<Int>({3, 2}));
  CHECK(type_label(type_of(choices[0]), 2) == "II");

  // the minimal-mu system admits every shape
  auto all = kappa_choices(ws({1, 1, 1}, 3));
  CHECK(all.size() == 27);
  std::set<std::string> codes;
  for (const auto& g : all) {
    codes.insert(type_of(g).code);
    for (int j = 0; j < 3; ++j) {
      CHECK(g.a[j] * Int(1) + Int(1) == Int(3));  // a_j v_j + v_{kappa(j)} = d
    }
  }
  CHECK(codes.size() == 7);

  // the classical type-XII representative is among the choices for the
  // four-variable polynomial x1^265 + x2^8 x1 + x3^4 x2 + x4^11 x1
  bool found = false;
  for (const auto& g : kappa_choices(ws({1, 33, 58, 24}, 265))) {
    if (type_label(type_of(g), 4) == "XII") found = true;
  }
  CHECK(found);
}

TEST_CASE("graph structure decomposition") {
  auto gs = graph_structure({1, 0, 0, 3, 3});
  REQUIRE(gs.component_cycles.size() == 2);
  // 2-cycle with a tail, plus a fixed point with one child
  std::multiset<std::size_t> cycle_sizes{gs.component_cycles[0].size(),
                                         gs.component_cycles[1].size()};
  CHECK(cycle_sizes == std::multiset<std::size_t>({1, 2}));
}
