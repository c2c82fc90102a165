#pragma once

// Commutative squares, two-square rectangles and cubes of finite algebras,
// with pullback / pushout / right-saturation verdicts.
//
// Square orientation: top: P -> X, left: P -> Z, right: X -> Y,
// bottom: Z -> Y, with right o top = bottom o left.  "left"/"right" are the
// vertical edges; optional sections belong to them.

#include <cstdint>
#include <optional>

#include "ua/congruence.hpp"
#include "ua/report.hpp"

namespace ua {

struct Square {
  Homomorphism top, left, right, bottom;
  std::optional<Homomorphism> left_section, right_section;
};

Square make_square(Homomorphism top, Homomorphism left, Homomorphism right,
                   Homomorphism bottom,
                   std::optional<Homomorphism> left_section = std::nullopt,
                   std::optional<Homomorphism> right_section = std::nullopt);

struct Rectangle {
  Square first, second;  // second.left == first.right (shared middle column)
};
Rectangle make_rectangle(Square first, Square second);
Square outer_square(const Rectangle& rect);

struct PullbackResult {
  AlgebraPtr algebra;   // pairs (x, z) with f(x) = g(z), ordered lexicographically
  Homomorphism proj1;   // to f's source
  Homomorphism proj2;   // to g's source
};
PullbackResult pullback(const Homomorphism& f, const Homomorphism& g);

// Mediating map into a pullback for a cone (to1, to2); throws InputError if
// the cone does not commute into the pullback.
Homomorphism into_pullback(const PullbackResult& pb, const Homomorphism& to1,
                           const Homomorphism& to2);

// A subalgebra of a x b given by an explicit closed list of pairs.
struct PairSubalgebra {
  AlgebraPtr algebra;
  Homomorphism proj1, proj2;
};
PairSubalgebra pair_subalgebra(const AlgebraPtr& a, const AlgebraPtr& b,
                               std::vector<std::pair<int, int>> universe,
                               std::string name);

bool is_pullback(const Square& sq);
// Pushouts of surjections only; throws HypothesisViolated otherwise.
bool is_pushout(const Square& sq);
// Comparison on the kernel pairs of the vertical edges must be surjective.
bool is_right_saturated(const Square& sq);

// Rectangle checks (CLI names "prop41" / "prop42"): given the stated
// hypotheses, both constituent squares must be pullbacks, together with the
// kernel-pair relation identities recorded as facts.
CheckReport rect_split_check(const Rectangle& rect);
CheckReport rect_pushout_check(const Rectangle& rect);

struct Cube {
  // top face P -> X -> U <- A, bottom face Z -> Y -> V <- B
  Homomorphism top_back;      // P -> X
  Homomorphism top_left;      // P -> A
  Homomorphism top_right;     // X -> U
  Homomorphism top_front;     // A -> U
  Homomorphism bottom_back;   // Z -> Y
  Homomorphism bottom_left;   // Z -> B
  Homomorphism bottom_right;  // Y -> V
  Homomorphism bottom_front;  // B -> V
  Homomorphism vert_back_left;    // P -> Z
  Homomorphism vert_back_right;   // X -> Y
  Homomorphism vert_front_left;   // A -> B
  Homomorphism vert_front_right;  // U -> V
  Homomorphism sec_back_left, sec_back_right, sec_front_left, sec_front_right;

  Square back_face() const;
  Square front_face() const;
  Square left_face() const;
  Square right_face() const;
  Square top_face() const;     // verticals of this square are the front-pointing edges
  Square bottom_face() const;
};

// Validates all six faces, the four sections and their compatibility with
// the horizontal edges.
Cube make_cube(Cube c);

CheckReport cube_check(const Cube& cube);

struct GenOptions {
  uint64_t seed = 1;
  int64_t budget = 0;
  bool require_split = true;  // split vertical columns (off for the pushout variant)
};

struct GeneratedRectangles {
  std::vector<Rectangle> instances;
  int64_t attempts = 0;
  bool exhausted = false;  // budget spent without finding any instance
};

GeneratedRectangles generate_rectangles(const GenOptions& opt);

std::vector<Rectangle> handcrafted_split_rectangles();
std::vector<Rectangle> handcrafted_pushout_rectangles();

// all seven edges distinct from identities and the left square properly
// collapsing (its four edges non-bijective)
bool rectangle_nontrivial(const Rectangle& rect);

}  // namespace ua
