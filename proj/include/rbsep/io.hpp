#pragma once

#include "rbsep/instance.hpp"
#include "rbsep/reduction.hpp"

#include <string>
#include <vector>

namespace rbsep {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
  int line_number;
};

// Instance files: one record per line, `R <x> <y>` or `B <x> <y>`, with
// coordinates as decimals or `p/q` rationals. `#` starts a comment; blank
// lines are ignored. Emission is canonical, so parse/emit round-trips.
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& instance);

// Solution files: one separator per line, `V <x>`, `H <y>` or `G <a> <b> <c>`,
// preceded by a header comment carrying cost and solver identity.
std::vector<Line> parse_solution(const std::string& text);
std::string emit_solution(const std::vector<Line>& lines, const std::string& solver);

// S2-THS description files:
//   k 2
//   t 3
//   sigma 2 1
//   sigma_j 1 3 2        (one line per class, in class order)
//   sigma_j 2 1 3
//   A 1 4                (track-A interval by positions)
//   B 2 5
S2THSInstance parse_s2ths(const std::string& text);
std::string emit_s2ths(const S2THSInstance& inst);

// Layout sidecar (JSON): parameters, line catalogs and gadget bounding boxes.
std::string emit_layout_sidecar(const LayoutMetadata& layout);

// Deterministic SVG: filled circles colored by class, separators clipped to
// the instance bounding box plus a 5% margin.
std::string render_svg(const Instance& instance, const std::vector<Line>& lines);

// Seeded generators behind `gen`.
Instance generate_random_instance(int reds, int blues, long grid, uint64_t seed);
Instance generate_grid_instance(int width, int height);

}  // namespace rbsep
