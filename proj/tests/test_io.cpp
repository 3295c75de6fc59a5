#include <cstdlib>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "ptsb/io.hpp"

using ptsb::io::format_double;
using ptsb::io::Table;

namespace {
Table sample_table() {
  Table t;
  t.params = {{"command", "lambda"}, {"theta", "1.5707963267948966"}, {"note", "x,y"}};
  t.columns = {"t", "lambda", "abs_error"};
  t.rows = {{0.0, 0.0, 0.0}, {2.5, 901.32900916963433, 5.61e-14}};
  return t;
}
}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0, -3.14159265358979323846, 1e300, 5.61e-14, 901.32900916963433}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
}

TEST_CASE("csv layout") {
  std::ostringstream out;
  ptsb::io::write_csv(out, sample_table());
  const std::string text = out.str();

  CHECK(text.find("# command: lambda\n") != std::string::npos);
  CHECK(text.find("# theta: 1.5707963267948966\n") != std::string::npos);
  CHECK(text.find("t,lambda,abs_error\n") != std::string::npos);
  CHECK(text.find("2.5,901.32900916963433,5.6100000000000002e-14\n") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);  // LF only

  // metadata precedes the header, header precedes rows
  CHECK(text.find("# command") < text.find("t,lambda"));
  CHECK(text.find("t,lambda") < text.find("0,0,0"));

  SUBCASE("deterministic") {
    std::ostringstream again;
    ptsb::io::write_csv(again, sample_table());
    CHECK(again.str() == text);
  }
}

TEST_CASE("json mirror parses and matches") {
  std::ostringstream out;
  ptsb::io::write_json(out, sample_table());
  const auto doc = nlohmann::json::parse(out.str());

  CHECK(doc.at("params").at("command") == "lambda");
  CHECK(doc.at("params").at("note") == "x,y");
  REQUIRE(doc.at("columns").size() == 3);
  CHECK(doc.at("columns")[1] == "lambda");
  REQUIRE(doc.at("rows").size() == 2);
  CHECK(doc.at("rows")[1][1].get<double>() == 901.32900916963433);
}
