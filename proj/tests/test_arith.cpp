#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhs/lambda.hpp"
#include "qhs/poly.hpp"

using namespace qhs;

namespace {

IntPoly poly(std::initializer_list<long long> coeffs_low_to_high) {
  std::vector<Int> c;
  for (long long x : coeffs_low_to_high) c.emplace_back(x);
  return IntPoly(std::move(c));
}

IntPoly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Int> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPoly(std::move(c));
}

LambdaCombination random_lambda(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> idx(1, 24);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  LambdaCombination x;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) x.add_term(idx(rng), Rat(num(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("exact division: worked examples") {
  // (t^4 - 1) / (t^2 - 1) = t^2 + 1
  auto q = poly_exact_div(IntPoly::power_minus_one(4), IntPoly::power_minus_one(2));
  REQUIRE(q.has_value());
  CHECK(*q == poly({1, 0, 1}));

  // (t^3 - t) / (t - 1) = t^2 + t
  q = poly_exact_div(poly({0, -1, 0, 1}), IntPoly::power_minus_one(1));
  REQUIRE(q.has_value());
  CHECK(*q == poly({0, 1, 1}));

  // (t^3 - 1) / (t^2 - 1) has a remainder
  CHECK_FALSE(poly_exact_div(IntPoly::power_minus_one(3), IntPoly::power_minus_one(2)).has_value());
}

TEST_CASE("exact division: round trip on random products") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 300) {
    IntPoly p = random_poly(rng, 6);
    IntPoly q = random_poly(rng, 5);
    if (q.is_zero()) continue;
    ++done;
    auto r = poly_exact_div(p * q, q);
    REQUIRE(r.has_value());
    CHECK(*r == p);
  }
}

TEST_CASE("polynomial basics") {
  CHECK(IntPoly().degree() == -1);
  CHECK(poly({0}).is_zero());
  CHECK(poly({3, 0, 0}).degree() == 0);
  CHECK(poly({1, 2}).to_string() == "2t + 1");
  CHECK((poly({1, 1}) * poly({-1, 1})) == poly({-1, 0, 1}));
  CHECK_THROWS_AS(poly_exact_div(poly({1}), IntPoly()), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly({1, 1}));
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_poly(8) == poly({1, 0, 0, 0, 1}));

  SUBCASE("degree phi(m) and product over divisors of k") {
    for (std::uint64_t k = 1; k <= 64; ++k) {
      IntPoly prod = IntPoly::constant(1);
      Int deg_sum = 0;
      for (const Int& m : divisors(Int(k))) {
        auto mm = m.convert_to<std::uint64_t>();
        CHECK(Int(cyclotomic_poly(mm).degree()) == euler_phi(m));
        prod = prod * cyclotomic_poly(mm);
        deg_sum += euler_phi(m);
      }
      CHECK(prod == IntPoly::power_minus_one(k));
      CHECK(deg_sum == k);
    }
  }
}

TEST_CASE("lambda algebra: generator rule and unit") {
  auto L = [](long long k) { return LambdaCombination::basis(k); };
  // Lambda_4 * Lambda_8 = 4 * Lambda_8
  LambdaCombination expected;
  expected.add_term(8, 4);
  CHECK(lambda_mul(L(4), L(8)) == expected);
  CHECK(lambda_mul(L(1), L(17)) == L(17));

  // (Lambda_2 - 1)(Lambda_3 - 1) = Lambda_6 - Lambda_2 - Lambda_3 + Lambda_1
  LambdaCombination a = L(2) - L(1), b = L(3) - L(1);
  LambdaCombination want;
  want.add_term(6, 1);
  want.add_term(2, -1);
  want.add_term(3, -1);
  want.add_term(1, 1);
  CHECK(lambda_mul(a, b) == want);
}

TEST_CASE("lambda algebra: commutative, associative, unital") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = random_lambda(rng), y = random_lambda(rng), z = random_lambda(rng);
    CHECK(lambda_mul(x, y) == lambda_mul(y, x));
    CHECK(lambda_mul(lambda_mul(x, y), z) == lambda_mul(x, lambda_mul(y, z)));
    CHECK(lambda_mul(x, LambdaCombination::unit()) == x);
    CHECK(lambda_mul(LambdaCombination::unit(), x) == x);
  }
}

TEST_CASE("lambda to divisor") {
  auto L = [](long long k) { return LambdaCombination::basis(k); };

  auto d1 = lambda_to_divisor(L(1));
  REQUIRE(d1.has_value());
  CHECK(d1->multiplicities() == std::map<Int, Int>{{1, 1}});

  auto d6 = lambda_to_divisor(L(6));
  REQUIRE(d6.has_value());
  CHECK(d6->multiplicities() == std::map<Int, Int>{{1, 1}, {2, 1}, {3, 1}, {6, 1}});

  auto d = lambda_to_divisor(L(8) - L(4) + L(1));
  REQUIRE(d.has_value());
  CHECK(d->multiplicities() == std::map<Int, Int>{{1, 1}, {8, 1}});

  SUBCASE("degree of Lambda_k is k") {
    for (long long k = 1; k <= 200; ++k) {
      auto dk = lambda_to_divisor(L(k));
      REQUIRE(dk.has_value());
      CHECK(dk->degree() == k);
    }
  }

  SUBCASE("non-integral multiplicities are rejected") {
    LambdaCombination x;
    x.add_term(3, Rat(1, 2));
    CHECK_FALSE(lambda_to_divisor(x).has_value());
  }
}

TEST_CASE("divisor to polynomial") {
  DivisorElement x;
  x.add(8, 1);
  x.add(1, 1);
  CHECK(divisor_to_poly(x) == cyclotomic_poly(8) * cyclotomic_poly(1));

  CHECK(divisor_to_poly(DivisorElement()) == IntPoly::constant(1));

  DivisorElement sq;
  sq.add(1, 2);
  CHECK(divisor_to_poly(sq) == poly({1, -2, 1}));

  DivisorElement neg;
  neg.add(3, -1);
  CHECK_THROWS_AS(divisor_to_poly(neg), std::domain_error);
}

TEST_CASE("number theory utilities") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(997)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(561)));  // Carmichael
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1

  CHECK(divisors(Int(12)) == std::vector<Int>({1, 2, 3, 4, 6, 12}));
  CHECK(euler_phi(Int(1)) == 1);
  CHECK(euler_phi(Int(8)) == 4);
  CHECK(euler_phi(Int(36)) == 12);
  CHECK(mod_inverse(Int(3), Int(7)) == 5);
}
