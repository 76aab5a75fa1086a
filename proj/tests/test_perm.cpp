#include <doctest.h>

#include <stdexcept>

#include "brauerlab/perm.hpp"
#include "oracles/brute_group.hpp"

using brauerlab::Parity;
using brauerlab::Permutation;

namespace {
Permutation P(const char* text, int n) { return Permutation::parse(text, n); }
}  // namespace

TEST_CASE("composition applies the right factor first") {
  CHECK(P("(1,2)", 3) * P("(1,3)", 3) == P("(1,3,2)", 3));
  CHECK((P("(1,2)", 3) * P("(1,3)", 3)).to_string() == "(1,3,2)");
  CHECK(brauerlab::compose(Permutation(4), P("(1,2)", 4)) == P("(1,2)", 4));
  CHECK((P("(1,2)(3,4)", 4) * P("(1,2)(3,4)", 4)).is_identity());
  CHECK_THROWS_AS(brauerlab::compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("parity") {
  CHECK(brauerlab::parity(P("(1,2)", 4)) == Parity::odd);
  CHECK(brauerlab::parity(P("(1,2)(3,4)", 4)) == Parity::even);
  CHECK(brauerlab::parity(P("(1,2,3,4)", 4)) == Parity::odd);
  CHECK(Permutation(5).is_even());
}

TEST_CASE("cycle notation round trip") {
  CHECK(Permutation(5).to_string() == "()");
  CHECK(P("()", 5).is_identity());
  CHECK(P("(1,5)(2,6)(3,7)(4,8)", 8).to_string() == "(1,5)(2,6)(3,7)(4,8)");
  CHECK(P("(3,1,2)", 3).to_string() == "(1,2,3)");
  CHECK(P(" (1, 2) (3,4) ", 4).to_string() == "(1,2)(3,4)");
  // juxtaposed cycles multiply like operator*
  CHECK(P("(1,2)(1,3)", 3) == P("(1,3,2)", 3));
  CHECK_THROWS_AS(P("(1,9)", 4), std::invalid_argument);
  CHECK_THROWS_AS(P("(1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(P("(1,1)", 4), std::invalid_argument);
  CHECK_THROWS_AS(P("1,2", 4), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(17), std::invalid_argument);
}

TEST_CASE("inverse, order and cycle type") {
  const Permutation p = P("(1,4,2)(3,5)", 6);
  CHECK((p.inverse() * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 6);
  CHECK(p.cycle_type() == std::vector<int>{3, 2, 1});
  CHECK(p.support() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(p.extended(8).to_string() == p.to_string());
  CHECK(p.extended(8).degree() == 8);
}

TEST_CASE("product agrees with the image-vector oracle") {
  const std::vector<const char*> texts{"(1,2,3,4,5,6)", "(1,3)(2,6)", "(2,5,4)", "()", "(1,6)(2,5)(3,4)"};
  for (const char* a : texts)
    for (const char* b : texts) {
      const auto expected = oracle::compose(P(a, 6).images(), P(b, 6).images());
      CHECK((P(a, 6) * P(b, 6)).images() == expected);
    }
}

TEST_CASE("associativity on a small sample") {
  const auto a = P("(1,2,3)", 5), b = P("(2,4)(3,5)", 5), c = P("(1,5,4)", 5);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("permutation list parsing") {
  auto list = brauerlab::parse_permutation_list("(1,2);(1,3)(2,4); ", 4);
  REQUIRE(list.size() == 2);
  CHECK(list[1].to_string() == "(1,3)(2,4)");
  CHECK(brauerlab::max_point("(1,12)(3,4)") == 12);
}
