#pragma once

// Exact arithmetic in F_p (p >= 5 prime), F_{p^k} and Q.
//
// A Field is a cheap, shareable handle to an immutable description of the
// field. Every FieldElement carries the handle of the field it lives in and
// is always stored in canonical form, so equality is representational.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "howe/errors.hpp"

namespace howe {

enum class FieldKind { prime, extension, rational };

namespace detail {
struct FieldSpec;
}

class FieldElement;

class Field {
 public:
  /// F_p. Throws InvalidField unless p is a prime >= 5.
  static Field prime(std::uint64_t p);
  /// Q with arbitrary precision numerators and denominators.
  static Field rational();
  /// F_p[t] / (modulus). `modulus` is monic, constant term first, of degree
  /// k >= 2 and must be irreducible over F_p.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::rational; }
  /// 0 for Q.
  std::uint64_t characteristic() const;
  /// Degree over the prime field (1 for F_p and Q).
  int degree() const;
  /// Defining polynomial of an extension, constant term first.
  const std::vector<std::uint64_t>& modulus() const;
  /// Number of elements; throws Unsupported for Q.
  mpz_class order() const;
  /// "F_31", "F_31^3", "Q".
  std::string name() const;
  /// name() plus the defining polynomial for extensions.
  std::string describe() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  /// Q only, or finite fields when the denominator is invertible.
  FieldElement from_rational(const mpq_class& v) const;
  /// Extension element from its coefficient vector in the power basis.
  FieldElement from_coeffs(std::vector<std::uint64_t> coeffs) const;
  /// Class of t in F_p[t]/(modulus); the element 0 + 1*t.
  FieldElement generator() const;
  /// Bijection [0, q) -> F_q by base-p digits of the index.
  FieldElement element_at(std::uint64_t index) const;
  /// Uniform element of a finite field.
  FieldElement random(std::mt19937_64& rng) const;
  /// Parses "17", "-1" (reduced mod p) or "n/d" (Q, or finite with invertible d).
  FieldElement parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldSpec> spec) : spec_(std::move(spec)) {}
  const detail::FieldSpec& spec() const { return *spec_; }

  std::shared_ptr<const detail::FieldSpec> spec_;

  friend class FieldElement;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// F_{p^k} with a monic irreducible modulus found by seeded random search.
/// k == 1 returns F_p itself.
Field build_extension(std::uint64_t p, int k, std::uint64_t seed);

class FieldElement {
 public:
  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inv() const;
  /// Negative exponents invert first.
  FieldElement pow(const mpz_class& e) const;
  FieldElement pow(std::int64_t e) const { return pow(mpz_class(static_cast<long>(e))); }

  /// Quadratic residuosity: finite fields by Euler's criterion, Q by exact
  /// perfect-square test of numerator and denominator.
  bool is_square() const;
  /// Both square roots in canonical order ({0} for zero), or nullopt for a
  /// non-residue. Tonelli-Shanks with a deterministic non-residue; finite
  /// fields only.
  std::optional<std::vector<FieldElement>> sqrt() const;

  /// Prime field representative in [0, p).
  std::uint64_t value() const;
  /// Extension coefficients (length k, constant first).
  const std::vector<std::uint64_t>& coeffs() const;
  const mpq_class& rational() const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Total order on representatives (numeric for F_p and Q; base-p digits
  /// from the top coefficient down for extensions).
  friend bool canonical_less(const FieldElement& a, const FieldElement& b);

 private:
  using Repr = std::variant<std::uint64_t, std::vector<std::uint64_t>, mpq_class>;
  FieldElement(Field field, Repr repr) : field_(std::move(field)), repr_(std::move(repr)) {}
  void check_same(const FieldElement& o) const;

  Field field_;
  Repr repr_;

  friend class Field;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace howe
