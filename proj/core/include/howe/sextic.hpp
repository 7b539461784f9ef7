#pragma once

// Plane sextic model of the Howe curve of two genus-1 double covers
// y1^2 = phi1(x), y2^2 = phi2(x) ramified at finite points.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "howe/bipoly.hpp"
#include "howe/field.hpp"
#include "howe/unipoly.hpp"

namespace howe {

struct RamificationData {
  std::vector<FieldElement> alphas;  // 4 roots of phi1
  std::vector<FieldElement> betas;   // 4 roots of phi2
  std::vector<FieldElement> sigma;   // elementary symmetric functions of alphas
  std::vector<FieldElement> tau;     // ... of betas

  const Field& field() const { return alphas.front().field(); }
  /// sigma_i - tau_i, i = 1..4.
  FieldElement diff(int i) const { return sigma[static_cast<std::size_t>(i - 1)] - tau[static_cast<std::size_t>(i - 1)]; }
  UniPoly phi1() const;
  UniPoly phi2() const;
  /// The point names "alpha1".."beta4" in input order.
  static std::string point_name(int index);
};

/// A point of P^1: finite value or infinity.
struct P1Point {
  std::optional<FieldElement> value;
  static P1Point infinity() { return {}; }
};

/// Elementary symmetric functions e1..e4 of four values.
std::vector<FieldElement> elementary_symmetric(const std::vector<FieldElement>& v);

/// Validates four alphas and four betas over one field. Throws
/// DuplicateRamificationPoint naming the first colliding pair.
RamificationData validate(const std::vector<FieldElement>& alphas, const std::vector<FieldElement>& betas);
/// As above; throws InfinityNotSupported when a point is infinite.
RamificationData validate(const std::vector<P1Point>& alphas, const std::vector<P1Point>& betas);

struct SexticCoefficients {
  FieldElement c60, c50, c42, c40, c32, c30, c22, c20, c12, c10, c04, c02, c00;

  /// (name, i, j, value) in graded lexicographic order of x^i y^j.
  struct Entry {
    const char* name;
    int i, j;
    FieldElement value;
  };
  std::vector<Entry> ordered() const;
  BiPoly to_bipoly() const;
};

/// The closed-form coefficients in sigma and tau.
SexticCoefficients sextic_coeffs(const RamificationData& rd);
/// y^4 - 2(phi1 + phi2) y^2 + (phi1 - phi2)^2 by polynomial arithmetic.
BiPoly assemble_sextic(const RamificationData& rd);

struct SexticModel {
  RamificationData source;
  SexticCoefficients coeffs;
  BiPoly f;
  HomPoly F;
};

/// Model built from the coefficient formulas.
SexticModel build_model(const RamificationData& rd);

/// x -> (a x + b) / (c x + d), normalized so that d = 1, or c = 1 when d = 0.
struct MobiusTransform {
  FieldElement a, b, c, d;

  /// nullopt stands for infinity.
  std::optional<FieldElement> apply(const FieldElement& x) const;
  MobiusTransform inverse() const;
  static MobiusTransform identity(const Field& k);
  friend bool operator==(const MobiusTransform&, const MobiusTransform&) = default;
};

struct Normalization {
  RamificationData data;
  MobiusTransform transform;
  std::array<int, 3> triple;  // indices into alpha1..alpha4, beta1..beta4
};

/// Moves the first admissible ordered triple of points (lexicographic over
/// indices 0..7) to (0, 1, -1), keeping every image finite.
Normalization mobius_normalize(const RamificationData& rd);

/// Applies a transform to all eight points; throws NormalizationImpossible
/// if a point goes to infinity.
RamificationData apply_mobius(const RamificationData& rd, const MobiusTransform& m);

/// Point (x, y1, y2) of the fiber product y1^2 = phi1(x), y2^2 = phi2(x).
struct FiberPoint {
  FieldElement x, y1, y2;
  int extension_degree;  // 1 or 2 over the base field
};

/// Thrown by lift_point when several sign choices give the same y.
class IndeterminateLift : public Error {
 public:
  IndeterminateLift(std::vector<FiberPoint> candidates)
      : Error("lift is not unique at this point"), candidates_(std::move(candidates)) {}
  const std::vector<FiberPoint>& candidates() const { return candidates_; }

 private:
  std::vector<FiberPoint> candidates_;
};

/// Plane point (x, y1 + y2) of a fiber product point.
std::pair<FieldElement, FieldElement> fiber_to_plane(const FiberPoint& p);

/// Inverse of fiber_to_plane: finds signs with y1 + y2 = y. Square roots are
/// taken in the base field or its quadratic extension (built from `seed`).
/// Throws NotOnCurve, IndeterminateLift, Unsupported over Q.
FiberPoint lift_point(const SexticModel& model, const FieldElement& x, const FieldElement& y, std::uint64_t seed);

/// A fiber product point over the base field with random x and signs;
/// nullopt if none was found after `attempts` tries.
std::optional<FiberPoint> random_fiber_point(const RamificationData& rd, std::mt19937_64& rng, int attempts = 1000);

/// 2(g1 + g2) + 1 - r.
int genus_of_howe(int g1, int g2, int r);

/// All eight points moved by x -> x + c.
RamificationData translate(const RamificationData& rd, const FieldElement& c);

/// Uniform random valid data over a finite field (rejection on duplicates),
/// or integers in [-bound, bound] over Q.
RamificationData random_ramification(const Field& k, std::mt19937_64& rng, int rational_bound = 50);

}  // namespace howe
