#include <string>
#include <vector>

#include <doctest.h>

#include "semigaps/numbers.hpp"

using namespace semigaps;

TEST_SUITE("numbers") {
  TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
  }

  TEST_CASE("binomial matches an additive triangle") {
    // independent reconstruction through Pascal's rule only
    std::vector<std::vector<Int>> tri(41);
    tri[0] = {Int(1)};
    for (std::size_t n = 1; n <= 40; ++n) {
      tri[n].assign(n + 1, Int(1));
      for (std::size_t k = 1; k < n; ++k) tri[n][k] = tri[n - 1][k - 1] + tri[n - 1][k];
    }
    for (std::size_t n = 0; n <= 40; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(binomial(n, static_cast<long>(k)) == tri[n][k]);
      }
    }
  }

  TEST_CASE("pow_int") {
    CHECK(pow_int(Int(2), 10) == 1024);
    CHECK(pow_int(Int(7), 0) == 1);
    CHECK(pow_int(Int(-3), 3) == -27);
    CHECK(pow_int(Int(10), 20) == Int("100000000000000000000"));
  }

  TEST_CASE("require_integer accepts integral rationals") {
    Rat q(10);
    q /= 5;
    CHECK(require_integer(q, "test") == 2);
    CHECK(is_integer(q));
  }

  TEST_CASE("require_integer names the failing path") {
    Rat q(1);
    q /= 3;
    CHECK(!is_integer(q));
    CHECK_THROWS_AS(require_integer(q, "some_formula"), computation_error);
    try {
      require_integer(q, "some_formula");
    } catch (const computation_error& e) {
      CHECK(std::string(e.what()).find("some_formula") != std::string::npos);
      CHECK(std::string(e.what()).find("1/3") != std::string::npos);
    }
  }

  TEST_CASE("to_u64 bounds") {
    CHECK(to_u64(Int(7), "t") == 7);
    CHECK(to_u64(Int(0), "t") == 0);
    CHECK_THROWS_AS(to_u64(Int(-1), "t"), computation_error);
    CHECK_THROWS_AS(to_u64(pow_int(Int(2), 70), "t"), computation_error);
  }

  TEST_CASE("to_string") {
    CHECK(to_string(Int(-5)) == "-5");
    CHECK(to_string(Int(0)) == "0");
    Rat q(-3);
    q /= 4;
    CHECK(to_string(q) == "-3/4");
    Rat whole(9);
    whole /= 3;
    CHECK(to_string(whole) == "3");
  }
}
