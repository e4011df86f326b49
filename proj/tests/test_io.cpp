#include <doctest.h>

#include "gauss_hodge/errors.hpp"
#include "gauss_hodge/io.hpp"
#include "gauss_hodge/potential.hpp"
#include "gauss_hodge/synth.hpp"
#include "oracle.hpp"

using namespace gauss_hodge;
using C = Complex<Rational>;
using CF = ComplexField<Rational>;
using oracle::CPoly;

TEST_CASE("scalars serialize as fractions or numbers") {
  CHECK(real_to_json(Rational(1, 4)) == "1/4");
  CHECK(real_to_json(Rational(-3)) == "-3");
  CHECK(real_from_json<Rational>(Json("2/6")) == Rational(1, 3));
  CHECK(real_from_json<Rational>(Json(0.5)) == Rational(1, 2));
  CHECK(real_from_json<Rational>(Json(7)) == 7);
  CHECK(real_from_json<double>(Json("1/4")) == 0.25);
  CHECK_THROWS(real_from_json<Rational>(Json::array()));
}

TEST_CASE("series round trip") {
  HermiteSeries<Rational> s(5, {Rational(1, 2), 0, Rational(-3)});
  const auto j = series_to_json(s);
  CHECK(j.dump() == R"({"0":"1/2","2":"-3"})");
  CHECK(series_from_json<Rational>(j, 5) == s);
  CHECK_THROWS_AS(series_from_json<Rational>(j, 1), DegreeOverflow);
  CHECK_THROWS_AS(series_from_json<Rational>(Json::parse(R"({"x": 1})"), 3),
                  std::invalid_argument);
}

TEST_CASE("fields, forms and complex forms round trip") {
  auto rng = trial_rng(79, 0, 0);
  const auto f = random_field<Rational>(rng, 3, 4, 5);
  CHECK(field_from_json<Rational>(field_to_json(f)) == f);
  const auto cf = random_field<C>(rng, 4, 4, 5);
  CHECK(field_from_json<C>(field_to_json(cf)) == cf);
  const auto form = random_form<Rational>(rng, 3, 2, 4, 5);
  CHECK(form_from_json<Rational>(form_to_json(form)) == form);
  const auto g = random_complex_form<Rational>(rng, 2, 1, 1, 3, 4);
  CHECK(complex_form_from_json<Rational>(complex_form_to_json(g)) == g);
  const auto h = random_complex_form<Rational>(rng, 2, 0, 1, 3, 4);
  CHECK(complex_form_from_json<Rational>(complex_form_to_json(h)) == h);

  const auto fd = random_form<double>(rng, 3, 1, 4, 5);
  const auto back = form_from_json<double>(Json::parse(form_to_json(fd).dump()));
  CHECK(back == fd);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(field_from_json<Rational>(Json::parse(R"({"m": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(
      field_from_json<Rational>(Json::parse(
          R"({"m": 2, "max_total_degree": 2, "coeffs": [{"deg": [1], "re": "1"}]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      field_from_json<Rational>(Json::parse(
          R"({"m": 1, "max_total_degree": 2, "coeffs": [{"deg": [1], "re": "1", "im": "1"}]})")),
      std::invalid_argument);
  CHECK_THROWS(form_from_json<Rational>(Json::parse(
      R"({"n": 2, "p": 1, "components": [{"index": [2, 1], "field": {"m": 2, "max_total_degree": 1}}]})")));
  CHECK_THROWS(complex_form_from_json<Rational>(Json::parse(R"({"n": 2, "entries": [[]]})")));
}

TEST_CASE("solve reports use fraction strings in exact mode") {
  SolveReport<Rational> r;
  r.ratio = Rational(1, 4);
  r.bound_constant = Rational(1, 4);
  const auto j = report_to_json(r);
  CHECK(j.at("ratio") == "1/4");
  CHECK(j.at("bound_constant") == "1/4");
  CHECK(j.at("bound_satisfied") == true);
}

TEST_CASE("potential parser") {
  const auto z = oracle::z(1, 1), zb = oracle::zbar(1, 1);
  CHECK(oracle::from_field(parse_potential<Rational>("z*conj(z)", 1, 4)) == z * zb);
  CHECK(oracle::from_field(parse_potential<Rational>("zbar", 1, 4)) == zb);
  CHECK(oracle::from_field(parse_potential<Rational>("(z + 1)^2 - 2*z", 1, 4)) ==
        z * z + CPoly::constant(2, C(1)));
  CHECK(oracle::from_field(parse_potential<Rational>("0.5*i*z", 1, 4)) ==
        C(Rational(0), Rational(1, 2)) * z);

  const auto z1 = oracle::z(2, 1), z2 = oracle::z(2, 2), zb2 = oracle::zbar(2, 2);
  CHECK(oracle::from_field(parse_potential<Rational>("z1^2*conj(z2) + (1/2)*i*z2", 2, 4)) ==
        z1 * z1 * zb2 + C(Rational(0), Rational(1, 2)) * z2);
  CHECK(oracle::from_field(parse_potential<Rational>("zbar2*z1", 2, 4)) == zb2 * z1);

  CHECK_THROWS_AS(parse_potential<Rational>("z", 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential<Rational>("z3", 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential<Rational>("z*", 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential<Rational>("(z", 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential<Rational>("z^3", 1, 2), DegreeOverflow);
}

TEST_CASE("random synthesis is reproducible and stream-separated") {
  auto a = trial_rng(5, 3, 1), b = trial_rng(5, 3, 1), c = trial_rng(5, 3, 2);
  const auto fa = random_form<Rational>(a, 3, 1, 5, 6);
  CHECK(fa == random_form<Rational>(b, 3, 1, 5, 6));
  CHECK_FALSE(fa == random_form<Rational>(c, 3, 1, 5, 6));
  for (const auto& [I, field] : fa.components())
    for (const auto& [k, v] : field.coeffs()) {
      CHECK(total_degree(k) <= 5);
      CHECK(v.get_den() == 1);
      CHECK(abs(v) <= 9);
      CHECK(v != 0);
    }
  auto r = trial_rng(1, 1, 1);
  for (int i = 0; i < 200; ++i) {
    const int x = uniform_int(r, -3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
}
