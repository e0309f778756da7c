#include "doctest.h"

#include "ncop/errors.hpp"
#include "ncop/partition.hpp"
#include "ncop/sums.hpp"
#include "ncop/svg.hpp"
#include "ncop/term.hpp"

#include <nlohmann/json.hpp>

#include <string>

using namespace ncop;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("partition sum text form") {
  FormalSum s(3);
  s.add(one_block(3), 1);
  s.add(gen_ttri(), -1);
  CHECK(s.str() == "+1*{0,1,2,3} -1*{0,1}|{2,3}");
  CHECK(FormalSum(3).str() == "0");
  CHECK(FormalSum::parse(s.str()) == s);
  CHECK(FormalSum::parse("+1*{0,1,2} +1*{0,1,2}").str() == "+2*{0,1,2}");
  CHECK(FormalSum::parse("2*{0,1,2} - 2*{0,1,2}").is_zero());

  const QFormalSum q = QFormalSum::parse("3/2*{0,1,2,3} - 1/2*{0,3}|{1,2}");
  CHECK(q.str() == "+3/2*{0,1,2,3} -1/2*{0,3}|{1,2}");
  CHECK(QFormalSum::parse(q.str()) == q);
  CHECK(to_rational(s).str() == "+1*{0,1,2,3} -1*{0,1}|{2,3}");

  CHECK_THROWS_AS(FormalSum::parse(""), SyntaxError);
  CHECK_THROWS_AS(FormalSum::parse("{0,1,2}"), SyntaxError);       // missing coefficient
  CHECK_THROWS_AS(FormalSum::parse("1*{0,1,2} 1*{0,1,2}"), SyntaxError);
  CHECK_THROWS_AS(FormalSum::parse("1*{0,1,2} + 1*{0,1,2,3}"), ArityMismatch);

  FormalSum t(2);
  CHECK_THROWS_AS(t.add(one_block(3), 1), ArityMismatch);
}

TEST_CASE("partition sum json form") {
  FormalSum s(3);
  s.add(one_block(3), 2);
  s.add(gen_tri(), -1);
  const nlohmann::json j = s.to_json();
  CHECK(j.at("arity") == 3);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms").at(0).at("coeff") == "2");
  CHECK(j.at("terms").at(0).at("blocks") == nlohmann::json({{0, 1, 2, 3}}));
  CHECK(j.at("terms").at(1).at("coeff") == "-1");

  const NCPartition pi = NCPartition::validate(5, {{0, 1, 4, 5}, {2, 3}});
  const nlohmann::json pj = pi.to_json();
  CHECK(pj.at("n") == 5);
  CHECK(pj.at("blocks") == nlohmann::json({{0, 1, 4, 5}, {2, 3}}));
  CHECK(NCPartition::from_json(pj) == pi);
}

TEST_CASE("term sum text and json forms") {
  const TermSum u = TermSum::parse("3/2*(mul a b)");
  CHECK(u.str() == "3/2*(mul a b)");
  const TermSum v = TermSum::parse("1*(mul (mul a b) c) - 1*(tri a b c)");
  CHECK(TermSum::parse(v.str()) == v);

  const nlohmann::json j = v.to_json();
  CHECK(j.at("arity") == 3);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j.at("terms").at(0).at("coeff") == "1");
  CHECK(j.at("terms").at(0).at("term") == "(mul (mul a b) c)");
  CHECK(j.at("terms").at(1).at("coeff") == "-1");
  CHECK(j.at("terms").at(1).at("term") == "(tri a b c)");

  CHECK_THROWS_AS(TermSum::parse(""), SyntaxError);
  CHECK_THROWS_AS(TermSum::parse("1*(mul a b) + 1*(tri a b c)"), ArityMismatch);
}

TEST_CASE("svg rendering") {
  const NCPartition pi = NCPartition::validate(5, {{0, 1, 4, 5}, {2, 3}});
  const std::string svg = render_svg(pi);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<text") == 6);   // labels 0..5
  CHECK(count_occurrences(svg, "<path") == 2);   // one closed region per block
  CHECK(render_svg(pi) == svg);                  // deterministic

  const std::string one = render_svg(unit_partition());
  CHECK(count_occurrences(one, "<text") == 2);
  CHECK(count_occurrences(one, "<path") == 1);
  CHECK(one.find("viewBox=\"0 0 400 400\"") != std::string::npos);
}
