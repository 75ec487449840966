#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "jacobi/corpus.hpp"
#include "jacobi/io.hpp"

using namespace jacobi;

namespace {

std::string schema_message(const std::string& text) {
  try {
    io::parse_operator_spec(text);
  } catch (const io::SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parses an operator spec") {
  const JacobiOperator op = io::parse_operator_spec(
      R"({"name": "anchor", "b": [{"n": 1, "re": 3, "im": 0}],
          "a": [{"n": 2, "re": 0.5, "im": -1.25}]})");
  CHECK(op.name() == "anchor");
  CHECK(op.b(1) == Complex(3.0));
  CHECK(op.a(2) == Complex(0.5, -1.25));
  CHECK(op.c(2) == Complex(1.0));
  CHECK(io::parse_operator_spec("{}") == fixtures::free_operator());
}

TEST_CASE("schema errors name the offending key") {
  CHECK(schema_message(R"({"b": [], "bb": []})").find("'bb'") != std::string::npos);
  CHECK(schema_message(R"({"b": [{"n": 1, "re": 1, "im": 0, "x": 2}]})").find("b[0].x") !=
        std::string::npos);
  CHECK(schema_message(R"({"b": [{"n": 0, "re": 1, "im": 0}]})").find("b[0].n") !=
        std::string::npos);
  CHECK(schema_message(R"({"b": [{"n": 1.5, "re": 1, "im": 0}]})").find("b[0].n") !=
        std::string::npos);
  CHECK(schema_message(R"({"c": [{"n": 1, "re": "1", "im": 0}]})").find("c[0].re") !=
        std::string::npos);
  CHECK(schema_message(R"({"a": [{"n": 1, "re": 1}]})").find("a[0].im") != std::string::npos);
  CHECK(schema_message(R"({"a": {"n": 1}})").find("'a'") != std::string::npos);
  CHECK(schema_message(R"({"name": 3})").find("'name'") != std::string::npos);
  CHECK(schema_message(R"([1, 2])").find("top level") != std::string::npos);
  CHECK(schema_message(R"({"b": [)").find("malformed JSON") != std::string::npos);
  CHECK(schema_message(R"({"b": [{"n": 2, "re": 1, "im": 0}, {"n": 2, "re": 3, "im": 0}]})")
            .find("duplicate index 2") != std::string::npos);
  CHECK(schema_message(R"({"c": [{"n": 4, "re": 0, "im": 0}]})").find("c[0]") !=
        std::string::npos);
  CHECK(schema_message(R"({"a": [{"n": 4, "re": 0, "im": 0}]})").find("zero off-diagonal") !=
        std::string::npos);
  // A zero diagonal entry is just the background.
  CHECK(schema_message(R"({"b": [{"n": 4, "re": 0, "im": 0}]})").empty());
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    JacobiOperator op = random_operator(rng);
    if (k % 3 == 0) op.set_name("operator " + std::to_string(k));
    const std::string text = io::serialize_operator_spec(op);
    const JacobiOperator back = io::parse_operator_spec(text);
    CHECK(back == op);
    CHECK(back.name() == op.name());
    CHECK(io::serialize_operator_spec(back) == text);
  }
}

TEST_CASE("number formatting round-trips") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng) * std::pow(10.0, k % 40 - 20);
    CHECK(std::stod(io::format_number(x)) == x);
  }
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(-3.0) == "-3");
}

TEST_CASE("grid spec parsing") {
  const GridSpec g = io::parse_grid_spec("-3:3:-1.5:1.5:7");
  CHECK(g.re_min == -3.0);
  CHECK(g.re_max == 3.0);
  CHECK(g.im_min == -1.5);
  CHECK(g.im_max == 1.5);
  CHECK(g.re_resolution == 7);
  CHECK(g.im_resolution == 7);
  CHECK_THROWS_AS(io::parse_grid_spec("1:2:3:4"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid_spec("1:2:3:4:x"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid_spec("1:2:3:4:1"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid_spec("2:1:3:4:5"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid_spec("1:2:3:4:5:6"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_grid_spec("1a:2:3:4:5"), std::invalid_argument);
}

TEST_CASE("grid CSV layout") {
  GridSpec g = io::parse_grid_spec("-1:1:-1:1:3");
  std::ostringstream jost_csv;
  io::write_jost_grid_csv(jost_csv, ComplexPolynomial({1.0, -3.0}), g);
  std::istringstream lines(jost_csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "re,im,abs_v0");
  int rows = 0;
  std::getline(lines, line);
  ++rows;
  CHECK(line == "-1,-1,5");
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 9);

  std::ostringstream region_csv;
  io::write_region_grid_csv(region_csv, region_grid(fixtures::free_operator(),
                                                    io::parse_grid_spec("-4:4:-3:3:9")));
  CHECK(region_csv.str().rfind("re,im,label\n", 0) == 0);
  CHECK(region_csv.str().find("free-region") != std::string::npos);
}

TEST_CASE("SVG schematic") {
  const JacobiOperator op = fixtures::diagonal_one(0.1);
  const std::string svg = io::region_svg(region_report(op), discrete_spectrum(op));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=\"0 0 800 400\"") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("<rect x=\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  const JacobiOperator b3 = fixtures::diagonal_one(3.0);
  const std::string with_marker = io::region_svg(region_report(b3), discrete_spectrum(b3));
  CHECK(with_marker.find("<circle") != std::string::npos);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(io::load_operator_spec("/nonexistent/spec.json"), io::IoError);
}

}
