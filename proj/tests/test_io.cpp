#include <doctest.h>

#include <string>

#include "core/builtin_checks.hpp"
#include "core/errors.hpp"
#include "core/io.hpp"
#include "test_support.hpp"

using namespace stairprune;
using namespace test_support;

TEST_SUITE("rational text") {
  TEST_CASE("valid forms") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("+3") == 3);
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("007") == 7);
    CHECK(parse_rational("0/5") == 0);
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK(parse_rational("4/-6") == rat(-2, 3));
    CHECK(parse_rational("-4/-6") == rat(2, 3));
    CHECK(parse_rational("1000000000000000000000/3") == Rational(BigInt("1000000000000000000000"), 3));
  }

  TEST_CASE("strictness") {
    for (const char* bad : {"", " ", "1 ", " 1", "abc", "1.5", "1/0", "1//2", "/2", "1/", "2e3",
                            "0x10", "+-3", "1/ 2"})
      CHECK_THROWS_AS(parse_rational(bad), parse_error);
  }

  TEST_CASE("canonical serialization") {
    CHECK(rational_to_string(rat(5, 2)) == "5/2");
    CHECK(rational_to_string(rat(-2, 3)) == "-2/3");
    CHECK(rational_to_string(rat(7)) == "7");
    CHECK(rational_to_string(rat(0)) == "0");
    CHECK(rational_to_string(parse_rational("10/4")) == "5/2");
  }
}

TEST_SUITE("module json") {
  TEST_CASE("canonical document bytes") {
    const Module m = mod(2, {{{0, 2}, {2, 0}}, {{1, 1}}});
    CHECK(module_to_json(m) ==
          "{\"dim\":2,\"summands\":[{\"generators\":[[\"0\",\"2\"],[\"2\",\"0\"]]},"
          "{\"generators\":[[\"1\",\"1\"]]}]}\n");
    CHECK(module_to_json(Module(3, {})) == "{\"dim\":3,\"summands\":[]}\n");
  }

  TEST_CASE("parsing inverts serialization") {
    SplitMix64 rng(4100);
    for (int instance = 0; instance < 15; ++instance) {
      const Module m = random_module(rng.next(), 1 + static_cast<int>(rng.next() % 4), 2, 3, 9);
      const std::string text = module_to_json(m);
      const Module back = parse_module_json(text);
      CHECK(back == m);
      CHECK(module_to_json(back) == text);
    }
  }

  TEST_CASE("isomorphic inputs serialize to identical bytes") {
    const std::string permuted =
        "{\"dim\": 2, \"summands\": ["
        "{\"generators\": [[\"1\", \"1\"]]},"
        "{\"generators\": [[\"2\", \"0\"], [\"0\", \"2\"], [\"3\", \"1\"]]}"
        "]}";
    // (3,1) dominates (2,0) and is dropped; summands and generators get sorted
    CHECK(module_to_json(parse_module_json(permuted)) ==
          "{\"dim\":2,\"summands\":[{\"generators\":[[\"0\",\"2\"],[\"2\",\"0\"]]},"
          "{\"generators\":[[\"1\",\"1\"]]}]}\n");
  }

  TEST_CASE("rational coordinates survive the round trip") {
    const Module m(1, {Upset({Point({rat(1, 3)})}), Upset({Point({rat(-5, 2)})})});
    CHECK(module_to_json(m) ==
          "{\"dim\":1,\"summands\":[{\"generators\":[[\"-5/2\"]]},"
          "{\"generators\":[[\"1/3\"]]}]}\n");
    CHECK(parse_module_json(module_to_json(m)) == m);
  }

  TEST_CASE("structural problems are parse errors") {
    for (const char* bad : {"", "not json", "[1,2]", "{\"dim\":2}", "{\"summands\":[]}",
                            "{\"dim\":\"2\",\"summands\":[]}", "{\"dim\":2,\"summands\":{}}",
                            "{\"dim\":2,\"summands\":[{}]}",
                            "{\"dim\":2,\"summands\":[{\"generators\":[[0,0]]}]}",
                            "{\"dim\":2,\"summands\":[{\"generators\":[[\"x\",\"0\"]]}]}"})
      CHECK_THROWS_AS(parse_module_json(bad), parse_error);
  }

  TEST_CASE("semantic problems are validation errors") {
    for (const char* bad : {"{\"dim\":0,\"summands\":[]}",
                            "{\"dim\":2,\"summands\":[{\"generators\":[[\"0\"]]}]}",
                            "{\"dim\":2,\"summands\":[{\"generators\":[]}]}"})
      CHECK_THROWS_AS(parse_module_json(bad), validation_error);
  }
}

TEST_SUITE("dot output") {
  TEST_CASE("isolated summands keep only their self-loops") {
    CHECK(graph_to_dot(mod(2, {{{0, 10}}, {{10, 0}}}), rat(1)) ==
          "digraph G {\n"
          "  \"M1\";\n"
          "  \"M2\";\n"
          "  \"M1\" -> \"M1\" [label=\"t=0\"];\n"
          "  \"M2\" -> \"M2\" [label=\"t=0\"];\n"
          "}\n");
  }

  TEST_CASE("diagonal family of three") {
    CHECK(graph_to_dot(sharp_family_m(3, 2, rat(1)), rat(1)) ==
          "digraph G {\n"
          "  \"M1\";\n"
          "  \"M2\";\n"
          "  \"M3\";\n"
          "  \"M1\" -> \"M1\" [label=\"t=0\"];\n"
          "  \"M1\" -> \"M2\" [label=\"t=2\"];\n"
          "  \"M2\" -> \"M1\" [label=\"t=-2\"];\n"
          "  \"M2\" -> \"M2\" [label=\"t=0\"];\n"
          "  \"M2\" -> \"M3\" [label=\"t=2\"];\n"
          "  \"M3\" -> \"M1\" [label=\"t=-4\"];\n"
          "  \"M3\" -> \"M2\" [label=\"t=-2\"];\n"
          "  \"M3\" -> \"M3\" [label=\"t=0\"];\n"
          "}\n");
  }
}

TEST_SUITE("svg output") {
  TEST_CASE("single corner staircase") {
    CHECK(module_to_svg(mod(2, {{{0, 0}}})) ==
          "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"80.000\" "
          "height=\"80.000\" viewBox=\"0 0 80.000 80.000\">\n"
          "  <rect x=\"0\" y=\"0\" width=\"80.000\" height=\"80.000\" fill=\"white\"/>\n"
          "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
          "points=\"40.000,0.000 40.000,40.000 80.000,40.000\"/>\n"
          "</svg>\n");
  }

  TEST_CASE("two-step staircase walks its corners in order") {
    const std::string svg = module_to_svg(mod(2, {{{0, 2}, {2, 0}}}));
    CHECK(svg.find("points=\"40.000,0.000 40.000,40.000 120.000,40.000 120.000,120.000 "
                   "160.000,120.000\"") != std::string::npos);
  }

  TEST_CASE("fractional coordinates use floor-rounded fixed point") {
    const Module m(2, {Upset({pt({0, 1}), Point({rat(1, 3), rat(0)})})});
    const std::string svg = module_to_svg(m);
    CHECK(svg.find("width=\"93.333\"") != std::string::npos);  // (7/3) * 40
    CHECK(svg.find("53.333") != std::string::npos);            // (4/3) * 40
  }

  TEST_CASE("deterministic bytes and summand palette") {
    const Module m = sharp_family_m(3, 2, rat(1));
    const std::string a = module_to_svg(m);
    CHECK(a == module_to_svg(m));
    CHECK(a.find("#1f77b4") != std::string::npos);
    CHECK(a.find("#d62728") != std::string::npos);
    CHECK(a.find("#2ca02c") != std::string::npos);
  }

  TEST_CASE("zero module plots an empty frame") {
    const std::string svg = module_to_svg(Module(2, {}));
    CHECK(svg.find("<polyline") == std::string::npos);
    CHECK(svg.find("width=\"80.000\"") != std::string::npos);
  }

  TEST_CASE("only dimension two is plottable") {
    CHECK_THROWS_AS(module_to_svg(mod(1, {{{0}}})), validation_error);
    CHECK_THROWS_AS(module_to_svg(mod(3, {{{0, 0, 0}}})), validation_error);
  }
}

TEST_SUITE("format_distance") {
  TEST_CASE("exact, infinite and bracketed forms") {
    CHECK(format_distance(DistanceResult::exact_value(rat(5, 2))) == "5/2");
    CHECK(format_distance(DistanceResult::exact_value(rat(0))) == "0");
    CHECK(format_distance(DistanceResult::infinite()) == "inf");
    CHECK(format_distance(DistanceResult::bracketed(rat(1), rat(2))) == "≈ 3/2 [1, 2]");
    CHECK(format_distance(DistanceResult::bracketed(rat(0), rat(1, 512))) == "≈ 1/1024 [0, 1/512]");
  }
}
