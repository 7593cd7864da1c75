#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgc/io.hpp"
#include "hgc/verify.hpp"

using namespace hgc;

TEST_CASE("examples generate and validate") {
  for (const char* name : {"s3:1", "s3:2", "s3:4", "s1s2", "t3", "sgxs1:1", "sgxs1:2",
                           "sgxs1:3", "lens:2:1", "lens:5:2", "lens:7:3"}) {
    DiagramSpec spec = example_diagram(name);
    HeegaardDiagram d = build_diagram(spec);
    CHECK(d.genus() == spec.genus);
  }
  CHECK(build_diagram(example_diagram("t3")).genus() == 3);
  CHECK(build_diagram(example_diagram("sgxs1:2")).genus() == 5);
  CHECK(example_diagram("s3:1").crossings.size() == 1);
  CHECK_THROWS_AS(example_diagram("nope"), validation_error);
  CHECK_THROWS_AS(example_diagram("lens:4:2"), validation_error);
  CHECK_THROWS_AS(example_diagram("lens:0:1"), validation_error);
}

TEST_CASE("generation is byte-stable and round-trips") {
  for (const char* name : {"t3", "sgxs1:2", "lens:5:1", "s3:3", "s1s2"}) {
    DiagramSpec spec = example_diagram(name);
    std::string a = render_diagram_file(spec);
    std::string b = render_diagram_file(example_diagram(name));
    CHECK(a == b);
    DiagramSpec back = parse_diagram_file(a);
    CHECK(render_diagram_file(back) == a);
    build_diagram(back);

    WordSpec ws = example_words(name);
    std::string wa = render_word_file(ws);
    WordSpec wback = parse_word_file(wa);
    CHECK(render_word_file(wback) == wa);
    CHECK(wback.genus == ws.genus);
    for (int i = 0; i < ws.genus; ++i) CHECK(wback.beta_words[i] == ws.beta_words[i]);
  }
}

TEST_CASE("diagram parser diagnostics carry positions") {
  CHECK_THROWS_AS(parse_diagram_file(""), parse_error);
  CHECK_THROWS_AS(parse_diagram_file("not-a-diagram v1\n"), parse_error);

  try {
    parse_diagram_file("hgc-diagram v1\norientation rot-ccw-v1\ngenus x\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
  }

  // unknown directive with its line number
  try {
    parse_diagram_file(
        "hgc-diagram v1\norientation rot-ccw-v1\ngenus 1\nalpha 0 1\nbeta 0 1\nbogus\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 6);
  }

  // a crossing referencing an undeclared curve is a validation failure
  std::string text =
      "hgc-diagram v1\norientation rot-ccw-v1\ngenus 1\nalpha 0 1\nbeta 0 1\n"
      "crossing 0 9 0 0 0 +1\n";
  CHECK_THROWS_AS(parse_diagram_file(text), validation_error);

  // declared crossing counts must match
  std::string text2 =
      "hgc-diagram v1\norientation rot-ccw-v1\ngenus 1\nalpha 0 2\nbeta 0 1\n"
      "crossing 0 0 0 0 0 +1\n";
  CHECK_THROWS_AS(parse_diagram_file(text2), validation_error);

  // a flipped orientation tag is never silent
  std::string text3 = render_diagram_file(example_diagram("t3"));
  size_t at = text3.find(kOrientationTag);
  text3.replace(at, std::string(kOrientationTag).size(), "rot-cw-v1");
  CHECK_THROWS_AS(parse_diagram_file(text3), parse_error);
}

TEST_CASE("word parser diagnostics") {
  CHECK_THROWS_AS(parse_word_file(""), parse_error);
  CHECK_THROWS_AS(parse_word_file("hgc-words v1\ngenus 2\nx1 y1\n"), parse_error);  // one line short
  try {
    parse_word_file("hgc-words v1\ngenus 1\nx1 z9\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 3);
  }
  WordSpec ws = parse_word_file("hgc-words v1\ngenus 1\n\n");
  CHECK(ws.beta_words[0].is_identity());
  CHECK(looks_like_word_file("hgc-words v1\n"));
  CHECK(!looks_like_word_file("hgc-diagram v1\n"));
}

TEST_CASE("verify battery flags a broken diagram") {
  // lens space whose beta twist was scrambled into an invalid rotation:
  // positions no longer form a permutation
  DiagramSpec spec = example_diagram("lens:5:1");
  spec.crossings[2].bpos = spec.crossings[3].bpos;
  CHECK_THROWS_AS(build_diagram(spec), validation_error);

  VerifyReport r = verify_diagram(example_diagram("lens:5:1"), 4, 9);
  CHECK(r.all_ok());
}
