#include "helpers.hpp"

#include "sysid/errors.hpp"
#include "sysid/jordan.hpp"

#include <doctest.h>

using namespace sysid;

TEST_CASE("JSON list and object forms") {
  const JordanSpec a = jordan_spec_from_json(R"([{"re": 1, "im": 0, "k": 2}, {"re": 0.5, "k": 1}])");
  REQUIRE(a.blocks.size() == 2);
  CHECK(a.blocks[0].k == 2);
  CHECK(a.blocks[1].lambda == Complex(0.5, 0.0));
  CHECK(a.dimension() == 3);
  CHECK_FALSE(a.cond.has_value());

  const JordanSpec b = jordan_spec_from_json(
      R"({"blocks": [{"re": 0, "im": 1, "k": 1}], "cond": {"M0": 1, "MB": 2, "MC": 3, "MD": 4}})");
  REQUIRE(b.cond.has_value());
  CHECK(b.cond->MC == 3.0);
  const JordanSpec c = jordan_spec_from_json(jordan_spec_to_json(b));
  CHECK(c.blocks[0].lambda == Complex(0.0, 1.0));
  CHECK(c.cond->MD == 4.0);

  CHECK_THROWS_AS(jordan_spec_from_json(R"([{"re": 1}])"), ParseError);
  CHECK_THROWS_AS(jordan_spec_from_json(R"([{"re": 1, "k": 0}])"), ParseError);
  CHECK_THROWS_AS(jordan_spec_from_json("[1, 2]"), ParseError);
}

TEST_CASE("real_jordan_matrix and validation") {
  const JordanSpec spec{{{1.0, 2}, {Complex(0.6, 0.8), 1}, {Complex(0.6, -0.8), 1}, {-0.5, 1}}, {}};
  const Matrix J = real_jordan_matrix(spec);
  CHECK(J.rows() == 5);
  CHECK(J(0, 1) == 1.0);
  CHECK(validate_against(spec, J).ok);

  std::mt19937_64 rng(3);
  const Matrix S = testing::gaussian(rng, 5, 5) + 4.0 * Matrix::Identity(5, 5);
  CHECK(validate_against(spec, S * J * S.inverse()).ok);

  JordanSpec wrong = spec;
  wrong.blocks[3].lambda = -0.4;
  CHECK_FALSE(validate_against(wrong, J).ok);
  JordanSpec too_big = spec;
  too_big.blocks.push_back({0.1, 1});
  CHECK_FALSE(validate_against(too_big, J).ok);

  CHECK_THROWS_AS(real_jordan_matrix(JordanSpec{{{Complex(0, 1), 1}}, {}}), NonRealCoefficients);
}
