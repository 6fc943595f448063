#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "derlab/serialize.hpp"

using namespace derlab;

TEST_CASE("algebra elements use [re, im] pairs") {
  CVector v(2);
  v << Complex(1.0, 0.0), Complex(0.0, 1.0);
  CHECK(to_json(AlgebraElement(v)).dump() == "[[1.0,0.0],[0.0,1.0]]");
  CHECK(distance(algebra_element_from_json(parse_json("[[1.0,0.0],[0.0,1.0]]")), AlgebraElement(v)) == 0.0);
}

TEST_CASE("round trips are bit exact") {
  Rng rng = Rng::stream(1, "serialize");
  ModuleSpec spec({2, 3});
  auto a = random_operator(rng, spec);
  auto back = operator_from_json(parse_json(to_json(a).dump()));
  for (int t = 0; t < spec.k(); ++t) CHECK(back.block(t) == a.block(t));

  auto x = random_module_element(rng, spec);
  auto xb = module_element_from_json(parse_json(to_json(x).dump()));
  for (int t = 0; t < spec.k(); ++t) CHECK(xb.fiber(t) == x.fiber(t));

  CHECK(module_spec_from_json(to_json(spec)) == spec);

  // Values that do not survive a short decimal representation.
  CMatrix m = rng.complex_matrix(13, 13);
  m(0, 0) = Complex(0.1 + 0.2, 1.0 / 3.0);
  m(1, 0) = Complex(5e-324, -1e308);
  LinearMapOnAlgebra d(m);
  auto path = (std::filesystem::temp_directory_path() / "derlab_roundtrip_map.json").string();
  write_json_file(path, to_json(d));
  auto loaded = map_from_json(read_json_file(path));
  std::remove(path.c_str());
  CHECK(loaded.matrix() == m);

  PointMap table(3);
  table.set(rng.complex_vector(3), rng.complex_vector(3));
  table.set(rng.complex_vector(3), rng.complex_vector(3));
  auto tb = point_map_from_json(parse_json(to_json(table).dump()));
  REQUIRE(tb.size() == 2);
  CHECK(tb.entries()[1].value == table.entries()[1].value);
}

TEST_CASE("malformed input is a parse error") {
  CHECK_THROWS_AS(parse_json("{\"dim\": 4, \"matrix\": [[[1.0, 0.0]"), ParseError);
  CHECK_THROWS_AS(map_from_json(parse_json("{\"dim\": 2, \"matrix\": [[[1,0]]]}")), ParseError);
  CHECK_THROWS_AS(complex_from_json(parse_json("[1.0]")), ParseError);
  CHECK_THROWS_AS(complex_from_json(parse_json("\"one\"")), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/derlab/map.json"), Error);
}
