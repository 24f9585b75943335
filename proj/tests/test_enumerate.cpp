#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "qhs/bounds.hpp"
#include "qhs/conditions.hpp"
#include "qhs/enumerate.hpp"

using namespace qhs;

namespace {

std::vector<Int> vi(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

WeightSystem ws(std::initializer_list<long long> v, long long d) {
  std::vector<Int> vv;
  for (long long x : v) vv.emplace_back(x);
  return WeightSystem(std::move(vv), Int(d));
}

std::set<Int> mu_values(const std::vector<EnumerationRecord>& recs) {
  std::set<Int> out;
  for (const auto& r : recs) out.insert(r.mu);
  return out;
}

// chain tuples present among the prime-mu entries for one mu
std::set<std::vector<Int>> tuples_at(const PrimeMuReport& rep, long long mu) {
  std::set<std::vector<Int>> out;
  for (const auto& e : rep.entries) {
    if (e.mu == mu) out.insert(e.chain_tuple);
  }
  return out;
}

}  // namespace

TEST_CASE("engine equals the brute-force oracle on small instances") {
  for (auto [n, mu] : std::vector<std::pair<int, long long>>{{1, 15}, {2, 15}, {3, 12}}) {
    CAPTURE(n);
    auto fast = enumerate_systems(n, mu);
    auto slow = brute_force_enumerate(n, mu);
    CHECK(fast == slow);
  }
}

TEST_CASE("one-variable systems are the A-series") {
  auto recs = enumerate_systems(1, 10);
  REQUIRE(recs.size() == 9);  // mu = 2..10; A_1 has v = d/2 and is excluded
  for (const auto& r : recs) {
    CHECK(r.ws.weights() == std::vector<Int>({1}));
    CHECK(r.ws.degree() == r.mu + 1);
  }
}

TEST_CASE("tiny two-variable scan") {
  auto recs = brute_force_enumerate(2, 4);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].ws == ws({1, 1}, 3));
  CHECK(recs[0].mu == 4);
}

TEST_CASE("record invariants") {
  auto recs = enumerate_systems(3, 30);
  CHECK(!recs.empty());
  for (const auto& rec : recs) {
    CHECK(rec.ws.is_reduced());
    CHECK(rec.ws.all_below_half_degree());
    CHECK(is_IS3(rec.ws));
    CHECK(rec.charpoly.degree() == rec.mu);
    CHECK(!rec.kappa_types.empty());
    CHECK(check_degree_bound(rec.ws));
    CHECK(kreuzer_skarke_injection_exists(rec.ws));

    // exponents agree with the Milnor-Orlik divisor
    auto ex = exponents(rec.ws);
    REQUIRE(ex.has_value());
    CHECK(ex->total() == rec.mu);
    auto from_ex = divisor_from_exponents(*ex);
    REQUIRE(from_ex.has_value());
    CHECK(*from_ex == rec.charpoly);
  }
  // minimal Milnor number is 2^n, attained by (1,...,1;3)
  CHECK(recs.front().mu == 8);
  CHECK(recs.front().ws == ws({1, 1, 1}, 3));
  CHECK(enumerate_systems(2, 10).front().ws == ws({1, 1}, 3));
  CHECK(enumerate_systems(4, 20).front().mu == 16);
}

TEST_CASE("every kappa choice of a record re-solves to the record") {
  for (const auto& rec : enumerate_systems(2, 25)) {
    auto choices = kappa_choices(rec.ws);
    CHECK(!choices.empty());
    for (const auto& g : choices) {
      auto sol = solve_weights(g);
      REQUIRE(sol.status == CycleValidity::Unique);
      CHECK(*sol.system == rec.ws);
    }
  }
}

TEST_CASE("deterministic and thread-count independent") {
  EnumerateOptions opts;
  opts.n = 3;
  opts.mu_max = 40;
  opts.jobs = 1;
  auto a = enumerate_systems(opts);
  opts.jobs = 4;
  auto b = enumerate_systems(opts);
  CHECK(a == b);
}

TEST_CASE("budget is enforced with no partial output") {
  EnumerateOptions opts;
  opts.n = 3;
  opts.mu_max = 60;
  opts.budget = 10;
  CHECK_THROWS_AS(enumerate_systems(opts), BudgetExceeded);
}

TEST_CASE("checkpoint cache round-trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qhs-cache-test";
  fs::remove_all(dir);

  EnumerateOptions opts;
  opts.n = 2;
  opts.mu_max = 30;
  opts.cache_dir = dir.string();
  auto first = enumerate_systems(opts);
  CHECK(fs::exists(dir / "manifest_n2_mu30.json"));
  auto second = enumerate_systems(opts);  // served from shards
  CHECK(first == second);
  CHECK(first == enumerate_systems(2, 30));

  // stale caches are ignored: corrupt one shard and drop the manifest version
  {
    std::ofstream shard(dir / "n2_mu30_t0.shard");
    shard << "qhs-shard other-version 0\n";
  }
  auto third = enumerate_systems(opts);
  CHECK(first == third);
  fs::remove_all(dir);
}

TEST_CASE("gap reports") {
  auto recs3 = enumerate_systems(3, 100);
  GapReport g3 = find_gaps(recs3, 3, 100);
  CHECK(g3.gaps == std::vector<Int>({9, 13, 37, 61, 73}));
  CHECK(g3.sophie_germain == std::vector<bool>({false, true, true, true, true}));

  auto recs4 = enumerate_systems(4, 100);
  GapReport g4 = find_gaps(recs4, 4, 100);
  CHECK(g4.gaps == std::vector<Int>({17, 18, 19, 23, 27, 47, 59, 74, 83}));

  auto recs2 = enumerate_systems(2, 100);
  CHECK(find_gaps(recs2, 2, 100).gaps.empty());
  // the D-series fills every mu >= 4
  for (Int mu = 4; mu <= 100; ++mu) CHECK(mu_values(recs2).count(mu) == 1);
}

TEST_CASE("sophie germain gap sets") {
  CHECK(sophie_germain_gap_set(3, 100) == std::vector<Int>({13, 37, 61, 73}));
  CHECK(sophie_germain_gap_set(4, 100) == std::vector<Int>({23, 47, 59, 83}));
  CHECK(sophie_germain_gap_set(3, 10).empty());  // 9 = 2*5 - 1 is not prime
  CHECK_THROWS_AS(sophie_germain_gap_set(2, 100), std::invalid_argument);

  SUBCASE("contained in the actual gap set") {
    auto g3 = find_gaps(enumerate_systems(3, 300), 3, 300);
    std::set<Int> set3(g3.gaps.begin(), g3.gaps.end());
    auto sg3 = sophie_germain_gap_set(3, 300);
    for (const Int& g : sg3) CHECK(set3.count(g) == 1);
    // and at this scale 9 is the only gap outside the 2p-1 family
    std::set<Int> sg_set(sg3.begin(), sg3.end());
    for (const Int& g : g3.gaps) {
      if (!sg_set.count(g)) CHECK(g == 9);
    }

    auto g4 = find_gaps(enumerate_systems(4, 150), 4, 150);
    std::set<Int> set4(g4.gaps.begin(), g4.gaps.end());
    for (const Int& g : sophie_germain_gap_set(4, 150)) CHECK(set4.count(g) == 1);
  }
}

TEST_CASE("chain closed forms") {
  ChainSystem cs = chain_weight_system(vi({3, 2}));
  CHECK(cs.ws == ws({2, 3}, 8));
  CHECK(cs.mu == 5);

  cs = chain_weight_system(vi({3, 2, 2}));
  CHECK(cs.mu == 11);

  cs = chain_weight_system(vi({5, 2, 2, 2}));
  CHECK(cs.mu == 31);

  CHECK_THROWS_AS(chain_weight_system(vi({1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(chain_weight_system({}), std::invalid_argument);
}

TEST_CASE("chain characteristic polynomial") {
  // (3,2): t = (4,8); Phi_8 Phi_1
  DivisorElement cp = chain_charpoly(vi({3, 2}));
  CHECK(cp.multiplicities() == std::map<Int, Int>{{1, 1}, {8, 1}});
  CHECK(cp == *charpoly_milnor_orlik(ws({2, 3}, 8)));

  // single link: all divisors of a_1 + 1 except 1
  cp = chain_charpoly(vi({6}));
  CHECK(cp.multiplicities() == std::map<Int, Int>{{7, 1}});
  cp = chain_charpoly(vi({5}));
  CHECK(cp.multiplicities() == std::map<Int, Int>{{2, 1}, {3, 1}, {6, 1}});

  // degree always equals mu, multiplicities are all one
  for (auto a : {vi({3, 2, 2}), vi({2, 3, 4}), vi({5, 2, 2, 2}), vi({2, 2})}) {
    DivisorElement c = chain_charpoly(a);
    CHECK(c.degree() == chain_weight_system(a).mu);
    for (const auto& [m, mult] : c.multiplicities()) {
      (void)m;
      CHECK(mult == 1);
    }
  }
}

TEST_CASE("prime-mu classification tables") {
  auto rep2 = classify_prime_mu(enumerate_systems(2, 23));
  CHECK(rep2.violations.empty());
  CHECK(tuples_at(rep2, 5) == std::set<std::vector<Int>>({vi({3, 2})}));
  CHECK(tuples_at(rep2, 7) == std::set<std::vector<Int>>({vi({5, 2}), vi({2, 3})}));
  CHECK(tuples_at(rep2, 11) == std::set<std::vector<Int>>({vi({9, 2}), vi({4, 3})}));
  CHECK(tuples_at(rep2, 13) ==
        std::set<std::vector<Int>>({vi({11, 2}), vi({5, 3}), vi({3, 4}), vi({2, 5})}));
  CHECK(tuples_at(rep2, 17) == std::set<std::vector<Int>>({vi({15, 2}), vi({7, 3}), vi({3, 5})}));
  CHECK(tuples_at(rep2, 19) ==
        std::set<std::vector<Int>>({vi({17, 2}), vi({8, 3}), vi({5, 4}), vi({2, 7})}));
  CHECK(tuples_at(rep2, 23) == std::set<std::vector<Int>>({vi({21, 2}), vi({10, 3})}));

  auto rep3 = classify_prime_mu(enumerate_systems(3, 23));
  CHECK(rep3.violations.empty());
  CHECK(tuples_at(rep3, 5).empty());
  CHECK(tuples_at(rep3, 11) == std::set<std::vector<Int>>({vi({3, 2, 2}), vi({2, 3, 2})}));
  CHECK(tuples_at(rep3, 17) == std::set<std::vector<Int>>({vi({5, 2, 2}), vi({2, 5, 2})}));
  CHECK(tuples_at(rep3, 19) ==
        std::set<std::vector<Int>>({vi({4, 3, 2}), vi({3, 4, 2}), vi({3, 2, 3})}));
  CHECK(tuples_at(rep3, 23) ==
        std::set<std::vector<Int>>({vi({7, 2, 2}), vi({5, 3, 2}), vi({3, 5, 2}), vi({2, 7, 2})}));

  auto rep4 = classify_prime_mu(enumerate_systems(4, 31));
  CHECK(rep4.violations.empty());
  CHECK(tuples_at(rep4, 29) == std::set<std::vector<Int>>({vi({3, 2, 3, 2})}));
  CHECK(tuples_at(rep4, 31) == std::set<std::vector<Int>>({vi({5, 2, 2, 2})}));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_systems(5, 10), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_systems(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_enumerate(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_enumerate(2, 100), std::invalid_argument);
}

TEST_CASE("kreuzer-skarke injection") {
  CHECK(kreuzer_skarke_injection_exists(ws({1, 1, 1}, 3)));
  CHECK(kreuzer_skarke_injection_exists(ws({2, 3}, 8)));  // 3/8 > 1/3 needs 8-6=2, present
  CHECK(kreuzer_skarke_injection_exists(ws({2, 5}, 12)));
  CHECK_FALSE(kreuzer_skarke_injection_exists(ws({3, 5}, 12)));  // needs 12-10=2, absent
}
