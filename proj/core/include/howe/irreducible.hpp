#pragma once

// Absolute irreducibility of sextics f = y^4 + B(x) y^2 + C(x) with
// c42 = -4, c04 = 1, f(x, 0) != 0. Such an f is reducible over the algebraic
// closure iff it factors as
//   (A) (y^2 + q2(x)) (y^2 + q4(x)), or
//   (B) (y^2 + Q y + P)(y^2 - Q y + P), Q = 2x^2 + a1 x + a2,
//       P = a3 x^3 + a4 x^2 + a5 x + a6.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "howe/bipoly.hpp"
#include "howe/sextic.hpp"

namespace howe {

struct ShapeAWitness {
  BiPoly h1, h2;
};

struct ShapeBCase {
  std::string label;               // "B1".."B4", or "B0-1".."B0-4" when a3 = 0
  std::vector<FieldElement> a;     // a1..a6
  std::vector<FieldElement> residuals;  // q1..q5
  bool vanishes() const;
};

struct ShapeBWitness {
  std::string label;
  std::vector<FieldElement> a;  // a1..a6, in the coordinates of the witness
  BiPoly h1, h2;
};

struct ShapeBResult {
  std::optional<ShapeBWitness> witness;
  std::vector<ShapeBCase> cases;
  /// Translation c applied before the case analysis (x -> x + c).
  std::optional<FieldElement> shift;
};

struct IrreducibilityVerdict {
  bool irreducible;
  std::optional<ShapeAWitness> shape_a;
  std::optional<ShapeBWitness> shape_b;
  std::vector<ShapeBCase> cases;
};

/// Throws UnsupportedShape unless f has only the monomials of the sextic
/// model, c42 = -4, c04 = 1 and f(x, 0) != 0.
void check_sextic_shape(const BiPoly& f);

/// Shape (A) via the discriminant 16 phi1 phi2 of the quadratic in y^2.
std::optional<ShapeAWitness> shape_a_test(const RamificationData& rd);
/// Shape (A) for any f of the sextic shape; the witness lives over the base
/// field, or over its quadratic extension when needed (finite fields).
/// Throws Unsupported if it would need an irrational square root over Q.
std::optional<ShapeAWitness> shape_a_test(const BiPoly& f, std::uint64_t seed = 0);

/// Shape (B) after moving alpha1 to 0; a3 = +-(s1-t1), a6 = +-(s4-t4) and,
/// when a3 = 0, a4 = +-(s2-t2). The witness is moved back.
ShapeBResult shape_b_test(const RamificationData& rd);
/// Shape (B) for any f of the sextic shape: a3, a6 (and a4 when a3 = 0) are
/// square roots of c60, c00 (and c40) after shifting x so that c00 != 0.
ShapeBResult shape_b_test(const BiPoly& f, std::uint64_t seed = 0);

IrreducibilityVerdict is_absolutely_irreducible(const RamificationData& rd);
/// Stops after a shape (A) witness; otherwise runs both tests.
IrreducibilityVerdict is_absolutely_irreducible(const BiPoly& f, std::uint64_t seed = 0);

}  // namespace howe
