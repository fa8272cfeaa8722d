#include <string>
#include <vector>

#include "ahncut/errors.hpp"
#include "ahncut/generator.hpp"
#include "ahncut/io.hpp"
#include "ahncut/network.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ahncut;

namespace {

const std::string kSmallFile =
    "AHN 1\n"
    "LABELS 2\n"
    "LEVELS 2\n"
    "VARS 1 3\n"
    "VARS 2 1\n"
    "UNARY 1 0 0.5 1   # trailing comment\n"
    "UNARY 2 0 0 0 2\n"
    "EDGE 1 0 1 0.75\n"
    "LINK 2 0 0 1\n"
    "LINK 2 0 1 1\n"
    "LINK 2 0 2 1\n";

}  // namespace

TEST_CASE("parsing a hand-written file recovers the structure") {
  const HierarchicalNetwork net = parse_network(kSmallFile);
  CHECK(net.num_labels() == 2);
  CHECK(net.num_levels() == 2);
  CHECK(net.level_size(0) == 3);
  CHECK(net.level_size(1) == 1);
  CHECK(net.unary_cost(0, 0, Label::base(0)) == 0.5);
  CHECK(net.unary_cost(0, 0, Label::base(1)) == 1.0);
  // Missing UNARY lines default to zero.
  CHECK(net.unary_cost(0, 1, Label::base(0)) == 0.0);
  CHECK(net.unary_cost(1, 0, Label::free()) == 2.0);
  REQUIRE(net.level(0).edges.size() == 1);
  CHECK(net.level(0).edges[0].lambda == 0.75);
  REQUIRE(net.level(1).links.size() == 3);
  CHECK(net.level(1).links[0].weight == 1.0);
}

TEST_CASE("write/parse round trip is lossless") {
  const HierarchicalNetwork net = parse_network(kSmallFile);
  const std::string text = write_network(net);
  CHECK(write_network(parse_network(text)) == text);

  GeneratorSpec spec;
  spec.kind = "random_small";
  spec.seed = 42;
  spec.aux_edges = 2;
  spec.aux2_vars = 1;
  const HierarchicalNetwork generated = generate(spec);
  const std::string gen_text = write_network(generated);
  CHECK(write_network(parse_network(gen_text)) == gen_text);
}

TEST_CASE("parser rejections") {
  CHECK_THROWS_AS(parse_network(""), ParseError);
  CHECK_THROWS_AS(parse_network("MRF 1\n"), ParseError);
  // negative edge strength
  CHECK_THROWS_AS(
      parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 2\nEDGE 1 0 1 -1\n"), ParseError);
  // negative link weight
  CHECK_THROWS_AS(parse_network("AHN 1\nLABELS 2\nLEVELS 2\nVARS 1 2\nVARS 2 1\nLINK 2 0 0 -2\n"),
                  ParseError);
  // out-of-range variable index
  CHECK_THROWS_AS(parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 2\nUNARY 1 5 0 0\n"),
                  ParseError);
  // duplicate UNARY line
  CHECK_THROWS_AS(
      parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 1\nUNARY 1 0 0 0\nUNARY 1 0 1 1\n"),
      ParseError);
  // base-level unary must omit the free cost
  CHECK_THROWS_AS(parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 1\nUNARY 1 0 0 0 0\n"),
                  ParseError);
  // auxiliary unary must include it
  CHECK_THROWS_AS(parse_network("AHN 1\nLABELS 2\nLEVELS 2\nVARS 1 1\nVARS 2 1\nUNARY 2 0 0 0\n"),
                  ParseError);
  // links cannot target the base level
  CHECK_THROWS_AS(parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 2\nLINK 1 0 1 1\n"), ParseError);
  // unknown keyword
  CHECK_THROWS_AS(parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 1\nBOGUS 1\n"), ParseError);
  // aux base-label cost above the free cost violates construction
  CHECK_THROWS_AS(
      parse_network("AHN 1\nLABELS 2\nLEVELS 2\nVARS 1 1\nVARS 2 1\nUNARY 2 0 5 0 2\n"),
      ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_network("AHN 1\nLABELS 2\nLEVELS 1\nVARS 1 2\nEDGE 1 0 1 -1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("labeling rows parse indices and the free marker") {
  const auto rows = parse_labeling_rows("0 1 0\nF 1\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<Label>{Label::base(0), Label::base(1), Label::base(0)});
  CHECK(rows[1] == std::vector<Label>{Label::free(), Label::base(1)});
  CHECK_THROWS_AS(parse_labeling_rows("0 x 1\n"), ParseError);
  CHECK_THROWS_AS(parse_labeling_rows("-2\n"), ParseError);
}

TEST_CASE("labeling write/parse round trip") {
  Labeling x = ahncut::testing::full_labeling({Label::base(0), Label::base(1), Label::base(0)},
                                              {Label::free()});
  const std::string text = write_labeling(x);
  CHECK(text == "0 1 0\nF\n");
  CHECK(parse_labeling_rows(text) == x.levels);
}

TEST_CASE("number formatting is stable and normalizes negative zero") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(13.671875) == "13.671875");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
}
