#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "adicseq/numtheory.hpp"
#include "test_util.hpp"

using namespace adicseq;

namespace {

// Independent admissibility oracle: trial-division primality plus an
// exhaustive scan for p = x^2 + 4y^2 with y = +-1 and (p-1)/4 odd.
bool admissible_oracle(std::uint64_t p) {
  if (p < 5) return false;
  bool prime = p >= 2;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) prime = false;
  }
  if (!prime) return false;
  if ((p - 1) % 4 != 0 || ((p - 1) / 4) % 2 == 0) return false;
  for (std::uint64_t x = 1; x * x + 4 <= p; ++x) {
    if (x * x + 4 == p) return true;
  }
  return false;
}

// Order of a mod p by naive stepping.
std::uint64_t order_by_stepping(std::uint64_t a, std::uint64_t p) {
  std::uint64_t cur = a % p, k = 1;
  while (cur != 1) {
    cur = cur * a % p;  // fine for the small p used here
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("primality is deterministic on small values") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(293));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(85));       // 5 * 17
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  for (std::uint64_t n = 2; n < 2000; ++n) {
    bool ref = true;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
      if (n % q == 0) ref = false;
    }
    CHECK(is_prime(n) == ref);
  }
}

TEST_CASE("admissible primes") {
  CHECK(is_admissible_prime(13));
  CHECK(is_admissible_prime(5));
  CHECK_FALSE(is_admissible_prime(17));  // 17-4 = 13 is not a square
  CHECK_FALSE(is_admissible_prime(37));  // 37 = 1 + 4*9 forces y = +-3
  CHECK_FALSE(is_admissible_prime(317)); // 317 - 4 = 313 is not a square
  std::vector<std::uint64_t> found;
  for (std::uint64_t p = 0; p <= 1000; ++p) {
    CHECK(is_admissible_prime(p) == admissible_oracle(p));
    if (is_admissible_prime(p)) found.push_back(p);
  }
  CHECK(found == testutil::admissible_under_1000());
}

TEST_CASE("smallest primitive root") {
  CHECK(smallest_primitive_root(5) == 2);
  CHECK(smallest_primitive_root(13) == 2);
  CHECK(smallest_primitive_root(7) == 3);  // ord(2) = 3, ord(3) = 6
  CHECK_THROWS_AS(smallest_primitive_root(12), std::invalid_argument);
  for (std::uint64_t p : {5ULL, 7ULL, 13ULL, 29ULL, 53ULL}) {
    const std::uint64_t g = smallest_primitive_root(p);
    CHECK(order_by_stepping(g, p) == p - 1);
    for (std::uint64_t h = 2; h < g; ++h) CHECK(order_by_stepping(h, p) != p - 1);
  }
  for (std::uint64_t p : testutil::admissible_under_1000()) {
    CHECK(multiplicative_order(smallest_primitive_root(p), p) == p - 1);
  }
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(0, 5) == 0);
  CHECK(legendre(2, 5) == -1);  // squares mod 5 are {1, 4}
  for (std::uint64_t p : testutil::admissible_under_1000()) CHECK(legendre(1, p) == 1);
  CHECK_THROWS_AS(legendre(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);

  for (std::uint64_t p : {5ULL, 13ULL, 29ULL, 53ULL}) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t a = 1; a < p; ++a) squares.insert(a * a % p);
    for (std::uint64_t i = 0; i < p; ++i) {
      const int expected = (i == 0) ? 0 : (squares.count(i) ? 1 : -1);
      CHECK(legendre(static_cast<std::int64_t>(i), p) == expected);
    }
    // negative arguments reduce mod p
    CHECK(legendre(-1, p) == legendre(static_cast<std::int64_t>(p - 1), p));
  }
}

TEST_CASE("cyclotomic classes at p=5 and p=13") {
  const auto d5 = cyclotomic_classes(5, 2);
  CHECK(d5[0] == std::vector<std::uint32_t>{1});
  CHECK(d5[1] == std::vector<std::uint32_t>{2});
  CHECK(d5[2] == std::vector<std::uint32_t>{4});
  CHECK(d5[3] == std::vector<std::uint32_t>{3});

  const auto d13 = cyclotomic_classes(13, 2);
  CHECK(d13[0] == std::vector<std::uint32_t>{1, 3, 9});
  CHECK(d13[1] == std::vector<std::uint32_t>{2, 5, 6});
  CHECK(d13[2] == std::vector<std::uint32_t>{4, 10, 12});
  CHECK(d13[3] == std::vector<std::uint32_t>{7, 8, 11});

  CHECK_THROWS_AS(cyclotomic_classes(13, 3), std::invalid_argument);  // ord(3) = 3
  CHECK_THROWS_AS(cyclotomic_classes(7, 3), std::invalid_argument);   // 7 != 1 mod 4
}

TEST_CASE("classes partition the group and split by quadratic character") {
  for (std::uint64_t p : testutil::admissible_under_1000()) {
    const auto params = build_params(p);
    std::set<std::uint64_t> all;
    for (int j = 0; j < 4; ++j) {
      CHECK(params.classes[j].size() == (p - 1) / 4);
      for (std::uint32_t r : params.classes[j]) all.insert(r);
    }
    CHECK(all.size() == p - 1);
    CHECK(*all.begin() == 1);
    CHECK(*all.rbegin() == p - 1);
    for (std::uint64_t i = 1; i < p; ++i) {
      const int c = params.class_index(i);
      CHECK(legendre(static_cast<std::int64_t>(i), p) == (c % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("build_params assembles the context") {
  const auto p13 = build_params(13);
  CHECK(p13.d == 10);  // 4*10 = 40 == 1 (mod 13)
  CHECK(p13.x == 3);
  CHECK(p13.g == 2);
  CHECK(p13.f == 3);

  const auto p5 = build_params(5);
  CHECK(p5.d == 4);
  CHECK((p5.d + (5 - 1) / 4) % 5 == 0);  // -d == (p-1)/4 (mod p)

  for (std::uint64_t p : testutil::admissible_under_1000()) {
    const auto params = build_params(p);
    CHECK(params.d * 4 % p == 1);
    CHECK((params.d + params.f) % p == 0);
    CHECK(params.x % 2 == 1);
    CHECK(params.x * params.x + 4 == p);
    CHECK(params.y == +1);  // provisional until resolved
  }
}

TEST_CASE("build_params names the violated condition") {
  CHECK_THROWS_WITH_AS(build_params(12), "build_params: p is not prime", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_params(17), "build_params: (p-1)/4 is even", std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_params(37), "build_params: p-4 is not a perfect square (y != +-1)",
                       std::invalid_argument);
  CHECK_THROWS_AS(build_params(7), std::invalid_argument);  // 7 != 1 (mod 4)
}

TEST_CASE("big integer helpers") {
  for (unsigned long p : {5UL, 13UL, 29UL}) {
    // 2^2p == -1 (mod 2^2p + 1): the canonical representative is modulus - 1
    const BigInt m = pow2_plus_1(2 * p);
    CHECK(big_power_mod(2, BigInt(2 * p), m) == m - 1);
  }
  CHECK(big_gcd(0, 42) == 42);
  CHECK(big_gcd(42, 0) == 42);
  CHECK(pow2_plus_1(10) == 1025);
  CHECK(pow2_plus_1(10) == BigInt(25) * 41);
  CHECK(pow2_minus_1(20) == 1048575);
  CHECK(big_gcd(pow2_plus_1(10), 75) == 25);
  CHECK_THROWS_AS(big_power_mod(2, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(big_power_mod(2, -1, 7), std::invalid_argument);
}

TEST_CASE("isqrt is exact at boundaries") {
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(1) == 1);
  CHECK(isqrt_u64(3) == 1);
  CHECK(isqrt_u64(4) == 2);
  for (std::uint64_t x : {3ULL, 17ULL, 1000003ULL, 4294967295ULL}) {
    CHECK(isqrt_u64(x * x) == x);
    CHECK(isqrt_u64(x * x - 1) == x - 1);
    CHECK(isqrt_u64(x * x + 1) == x);
  }
}
