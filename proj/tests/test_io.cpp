#include "rbsep/io.hpp"

#include "rbsep/rng.hpp"

#include <doctest.h>

using namespace rbsep;

TEST_CASE("instance parsing") {
  const Instance in = parse_instance("R 0 0\nB 2 0\n");
  CHECK(in.red.size() == 1);
  CHECK(in.blue.size() == 1);

  const Instance frac = parse_instance("R 1/3 2/7\n");
  CHECK(frac.red[0].x == Rational(1, 3));
  CHECK(frac.red[0].y == Rational(2, 7));

  const Instance dec = parse_instance("# comment\n\nB -1.25 0.5  # trailing comment\n");
  CHECK(dec.blue[0].x == Rational(-5, 4));
  CHECK(dec.blue[0].y == Rational(1, 2));
}

TEST_CASE("instance parse errors carry line numbers") {
  try {
    parse_instance("R 0 0\nX 1 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 2);
  }
  try {
    parse_instance("R 0 zero\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line_number == 1);
  }
}

TEST_CASE("emit(parse(f)) is canonical and stable") {
  const std::string messy = "# corpus\nB 4/8 -0.75\nR 2 3\n\nR 6/3 1\n";
  const std::string once = emit_instance(parse_instance(messy));
  CHECK(once == "R 2 3\nR 2 1\nB 1/2 -3/4\n");
  CHECK(emit_instance(parse_instance(once)) == once);
}

TEST_CASE("solution round-trip preserves the exact line set") {
  Rng rng(99);
  std::vector<Line> lines;
  for (int i = 0; i < 20; ++i) {
    switch (rng.below(3)) {
      case 0: lines.push_back(Line::vertical(Rational(rng.range(-50, 50), 7))); break;
      case 1: lines.push_back(Line::horizontal(Rational(rng.range(-50, 50), 3))); break;
      default:
        lines.push_back(Line::general(Rational(1), Rational(rng.range(-5, 5)),
                                      Rational(rng.range(-50, 50), 11)));
    }
  }
  lines = dedup_lines(std::move(lines));
  const std::string text = emit_solution(lines, "test");
  CHECK(text.rfind("# cost=" + std::to_string(lines.size()) + " solver=test\n", 0) == 0);
  CHECK(parse_solution(text) == lines);
}

TEST_CASE("s2ths description round-trip") {
  const std::string text =
      "k 2\nt 3\nsigma 2 1\nsigma_j 1 3 2\nsigma_j 2 1 3\nA 1 4\nA 3 6\nB 2 5\n";
  const S2THSInstance inst = parse_s2ths(text);
  CHECK(inst.k == 2);
  CHECK(inst.t == 3);
  CHECK(inst.sigma == std::vector<int>{2, 1});
  CHECK(inst.intervals_a.size() == 2);
  CHECK(inst.intervals_b.size() == 1);
  CHECK(emit_s2ths(inst) == text);
  CHECK_THROWS_AS(parse_s2ths("k 2\nt 2\nsigma 1 1\nsigma_j 1 2\nsigma_j 1 2\n"), ParseError);
}

TEST_CASE("svg output is deterministic and well-formed") {
  const Instance in = parse_instance("R 0 0\nR 2 2\nB 0 2\nB 2 0\n");
  const std::vector<Line> sol = {Line::vertical(Rational(1)), Line::horizontal(Rational(1))};
  const std::string a = render_svg(in, sol);
  const std::string b = render_svg(in, sol);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("circle") != std::string::npos);
  CHECK(a.find("line") != std::string::npos);
  CHECK(a.find("crimson") != std::string::npos);
  CHECK(a.find("royalblue") != std::string::npos);
}

TEST_CASE("generators are seed-deterministic") {
  const Instance a = generate_random_instance(10, 5, 32, 9001);
  const Instance b = generate_random_instance(10, 5, 32, 9001);
  const Instance c = generate_random_instance(10, 5, 32, 9002);
  CHECK(emit_instance(a) == emit_instance(b));
  CHECK(emit_instance(a) != emit_instance(c));
  CHECK(a.red.size() == 10);
  CHECK(a.blue.size() == 5);

  const Instance grid = generate_grid_instance(3, 2);
  CHECK(grid.n() == 6);
  CHECK(grid.inseparable == false);
}
