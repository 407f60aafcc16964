#pragma once

#include "rbsep/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rbsep {

// Structured 2-Track Hitting Set instance: k color classes of t elements.
// Track A is ordered class by class; track B orders the class blocks by
// sigma and the elements inside class j by sigma_j. All indices are 1-based.
struct S2THSInstance {
  int k = 0;
  int t = 0;
  std::vector<int> sigma;                        // permutation of [k]
  std::vector<std::vector<int>> sigma_j;         // k permutations of [t]
  std::vector<std::pair<int, int>> intervals_a;  // (s, s') positions in <=_A
  std::vector<std::pair<int, int>> intervals_b;  // positions in <=_B

  void validate() const;  // throws std::invalid_argument

  int kt() const { return k * t; }
  // Position of a^j_i on track A.
  int pos_a(int j, int i) const { return (j - 1) * t + i; }
  // Position of b^j_i on track B (block by sigma, inside-block by sigma_j).
  int pos_b(int j, int i) const;
  // Column of the k-by-k crossing that carries class j.
  int column_of_class(int j) const;

  // Given A-intervals plus the k full-class intervals, which are implied and
  // appended automatically by the builder.
  std::vector<std::pair<int, int>> intervals_a_with_classes() const;

  // Does choosing element u_j in class j hit every interval on both tracks?
  bool hits(const std::vector<int>& witness) const;
};

// Exhaustive search over one element per class; lexicographically first
// witness, or nullopt for NO-instances. Throws ResourceLimitError when t^k
// exceeds the budget.
std::optional<std::vector<int>> solve_s2ths_bruteforce(const S2THSInstance& inst);

// Random planted YES-instance: permutations and a witness are drawn first,
// then every interval is chosen to contain the witness.
S2THSInstance plant_s2ths(int k, int t, int num_a, int num_b, uint64_t seed,
                          std::vector<int>* witness_out = nullptr);

enum class GadgetTag { Alley, Interval, Track, Sigma, HalfPerm, Outer };
enum class LayoutFrame { World, TrackB };

struct GadgetInfo {
  GadgetTag tag;
  LayoutFrame frame;
  std::string name;
  // Bounding box in the gadget's own frame.
  Rational x0, y0, x1, y1;
};

struct GadgetPoints {
  std::vector<Point> red;
  std::vector<Point> blue;
  GadgetTag tag = GadgetTag::Alley;
};

// Two parallel runs of `length` consecutive unit-spaced points, `width`
// apart. `origin` is the first point of the lower (horizontal) or left
// (vertical) run; red_low picks which run is red.
GadgetPoints long_alley(const Point& origin, bool horizontal, long length, const Rational& width,
                        bool red_low);

// The red pair encoding the interval [s, s'] against a diagonal anchored at
// (x0, y0). Throws on s > s'.
std::pair<Point, Point> interval_gadget_points(int s, int s_prime, const Rational& x0,
                                               const Rational& y0);

// Blue diagonal of `count` points rising (slope +1) or falling (slope -1)
// from (x0, y0).
std::vector<Point> diagonal_points(int count, const Rational& x0, const Rational& y0, bool rising);

// All candidate line families of the construction plus the geometry needed
// to reproduce or verify it.
struct LayoutMetadata {
  int k = 0, t = 0;
  BigInt ell, ell_b;        // alley length; truncated length of track-B alleys
  BigInt v_hat, h_hat, z;
  Rational eps;             // z^-10 guard distance
  Rational eps_f;           // (kt)^-10 outer alley width
  Rational cos5, sin5;      // exact unit rational rotation, angle ~5 degrees
  Rational x0A, y0A, x0Sigma, y1, y2, xB0, yB0, x1col;

  // Candidate lines indexed by s-1 for s in [kt].
  std::vector<Line> hl, vl, vlp, hlp, sl, slp;
  // The 14 forced lines: verticals west-to-east, then horizontals
  // north-to-south.
  std::vector<Line> forced;

  std::vector<GadgetInfo> gadgets;
  // Anchor points of the slanted line families (q on the axis-parallel line,
  // p at track B's rim).
  std::vector<Point> q_v, p_v, q_h, p_h;
};

struct BuiltReduction {
  Instance instance;
  LayoutMetadata layout;
};

// Materializes the full point set and line catalogs for an S2-THS instance.
// Throws ResourceLimitError when the predicted point count is excessive and
// std::invalid_argument for degenerate parameters (t must be at least 2).
BuiltReduction build_rbs_instance(const S2THSInstance& inst);

// The 6k+14 separating lines induced by a hitting set: the forced lines plus
// HL, VL, VL', HL', SL, SL' of each selected element. The witness is
// validated first.
std::vector<Line> witness_lines(const S2THSInstance& inst, const LayoutMetadata& layout,
                                const std::vector<int>& witness);

}  // namespace rbsep
