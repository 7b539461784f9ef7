#pragma once

// Singular points of the projective closure of the sextic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "howe/bipoly.hpp"
#include "howe/sextic.hpp"
#include "howe/unipoly.hpp"

namespace howe {

enum class SingularityLabel { I1, I2, I3, II1, II2, II3, II4 };

struct SingularityType {
  SingularityLabel label;
  int affine_count;    // m
  int infinity_count;  // n

  int total() const { return affine_count + infinity_count; }
  /// "I-1", ..., "II-4".
  std::string name() const;
  static SingularityType of(SingularityLabel label);
  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

/// Label from its name; nullopt for unknown names.
std::optional<SingularityLabel> parse_label(std::string_view name);

/// h1 = (s1-t1)x^3 - (s2-t2)x^2 + (s3-t3)x - (s4-t4); f(x, 0) = h1^2.
UniPoly h1_poly(const RamificationData& rd);

struct Classification {
  SingularityType type;
  /// Res(h1, h1') in the branch that needs it (h1 cubic or quadratic).
  std::optional<FieldElement> res_h1_dh1;
  /// Res(h1', h1'') when h1 is a cubic with a repeated root.
  std::optional<FieldElement> res_dh1_ddh1;
};

Classification classify(const RamificationData& rd);

struct Certificate {
  std::string partial;                 // "F_yy" or "F_zz"
  std::optional<FieldElement> value;   // at the point, in the point's field
  std::optional<UniPoly> residue;      // symbolic points: F_yy(x,0,1) mod the minimal polynomial
};

struct SingularPoint {
  enum class Kind { affine, y_infinity, x_infinity };  // (xi:0:1), (0:1:0), (1:0:0)
  Kind kind;
  /// Projective coordinates when explicit; lie in `field` (absent for
  /// symbolic points over Q).
  std::optional<std::vector<FieldElement>> coords;
  /// Degree of the smallest field containing xi over the base field.
  int extension_degree = 1;
  /// Minimal polynomial of xi over the base field (affine points).
  std::optional<UniPoly> minimal_polynomial;
  /// Number of points this entry stands for: 1 unless it is a symbolic
  /// point over Q, where it is the degree of the minimal polynomial.
  int count = 1;
  /// Embedding of the base field into the coordinate field when they differ.
  std::optional<FieldEmbedding> embedding;
  Certificate certificate;

  /// "(24:0:1)", "(0:1:0)", "(x^2 - 2 = 0 : 0 : 1)".
  std::string to_string() const;
};

/// Located singular points: affine points sorted by canonical order, then
/// (0:1:0), then (1:0:0) when present. Each carries a verified certificate.
std::vector<SingularPoint> singular_points(const SexticModel& model, std::uint64_t seed);

/// Checks F = F_x = F_y = F_z = 0 at P and returns the nonzero second partial.
/// Throws NotSingular or MultiplicityExceedsTwo.
Certificate verify_multiplicity_two(const HomPoly& F, const SingularPoint& p);

using ProjectivePoint = std::vector<FieldElement>;

/// Normalized representative: (x:y:1), (x:1:0) or (1:0:0).
ProjectivePoint normalize_point(ProjectivePoint p);
bool projective_less(const ProjectivePoint& a, const ProjectivePoint& b);
std::string point_string(const ProjectivePoint& p);

/// All points of P^2 over the (finite) field of F where F and its partials
/// vanish, in normalized form and sorted. Throws BudgetExceeded when q^2+q+1
/// exceeds `budget`.
std::vector<ProjectivePoint> brute_force_singular_scan(const HomPoly& F, std::uint64_t budget = 1000000, unsigned threads = 1);

/// True when the scan finds no singular point with y != 0 and z != 0 and none
/// at infinity besides (1:0:0), (0:1:0).
bool no_offaxis_singularities_check(const HomPoly& F, std::uint64_t budget = 1000000);

/// Field-independent version of the same statement for a sextic model:
/// eliminates y from f = f_x = f_y = 0 using f_y = 4y(y^2 - (phi1 + phi2)),
/// and checks the line at infinity in the chart x = 1.
bool no_offaxis_singularities_algebraic(const SexticModel& model);

/// 10 - total >= 5.
bool genus_bound_check(const SingularityType& type);

/// 6F = x F_x + y F_y + z F_z as polynomials.
bool euler_relation_holds(const HomPoly& F);

}  // namespace howe
