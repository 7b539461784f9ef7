#pragma once

// Dense univariate polynomials over any Field.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "howe/field.hpp"

namespace howe {

class UniPoly {
 public:
  /// The zero polynomial over `field`.
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  /// Coefficients constant term first; trailing zeros are trimmed.
  UniPoly(Field field, std::vector<FieldElement> coeffs);

  static UniPoly constant(const FieldElement& c);
  static UniPoly monomial(const FieldElement& c, int degree);
  static UniPoly x(const Field& field) { return monomial(field.one(), 1); }
  /// Integer coefficients, constant term first.
  static UniPoly from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs);

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero outside the stored range).
  FieldElement coeff(int i) const;
  /// Leading coefficient; throws ZeroPolynomial for zero.
  const FieldElement& leading() const;

  FieldElement operator()(const FieldElement& at) const;

  UniPoly monic() const;
  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const FieldElement& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const FieldElement& c) { return a *= c; }
  friend UniPoly operator*(const FieldElement& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly pow(unsigned e) const;
  /// Substitution x -> x + a.
  UniPoly shift(const FieldElement& a) const;

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& f);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic product of (x - r).
UniPoly from_roots(const Field& field, std::span<const FieldElement> roots);

/// Monic gcd; throws BothZero when both arguments are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly derivative(const UniPoly& f);
UniPoly pow_mod(const UniPoly& base, const mpz_class& e, const UniPoly& modulus);

/// Determinant of the Sylvester matrix of (f, g), rows of f first; equal to
/// lc(f)^deg(g) * prod g(root of f). Over Q the value is obtained by a
/// subresultant PRS on primitive integer parts. Throws ZeroPolynomial.
FieldElement resultant(const UniPoly& f, const UniPoly& g);

struct PolyFactor {
  UniPoly factor;  // monic (finite fields) or primitive integer (factor_rational)
  int multiplicity;
};

/// f = lc(f) * prod factor^multiplicity with pairwise coprime squarefree
/// monic factors; handles p-th powers in characteristic p.
std::vector<PolyFactor> squarefree_decomposition(const UniPoly& f);
/// Product of the distinct monic irreducible factors of f (its radical).
UniPoly squarefree_part(const UniPoly& f);

struct PerfectSquare {
  UniPoly root;        // monic
  FieldElement scale;  // f = scale * root^2
};
/// Monic root r with f = lc(f) * r^2 when every multiplicity is even,
/// regardless of whether lc(f) is a square.
std::optional<UniPoly> square_root_up_to_scalar(const UniPoly& f);
/// As above but additionally requires lc(f) to be a square in the field.
std::optional<PerfectSquare> is_perfect_square(const UniPoly& f);

/// Rabin irreducibility test over a finite field.
bool is_irreducible(const UniPoly& f);

/// Complete factorization over a finite field into monic irreducibles,
/// sorted by (degree, coefficients). Seeded Cantor-Zassenhaus splitting; the
/// result does not depend on the seed.
std::vector<PolyFactor> factor_finite(const UniPoly& f, std::uint64_t seed);

/// Field homomorphism from a finite field into a larger one with the same
/// characteristic. For a prime source the map is canonical; otherwise the
/// generator is sent to the smallest root of the source modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(Field source, Field target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  FieldElement operator()(const FieldElement& a) const;
  UniPoly operator()(const UniPoly& f) const;

 private:
  Field source_;
  Field target_;
  std::optional<FieldElement> generator_image_;
};

/// The degree-d extension of a finite `base`, with its embedding.
struct Extension {
  Field field;
  FieldEmbedding embedding;
};
Extension extend(const Field& base, int d, std::uint64_t seed);

struct Root {
  FieldElement value;         // in an extension of degree `extension_degree`
  int multiplicity;
  int extension_degree;       // minimal d with value in F_{q^d}
  UniPoly minimal_polynomial; // over the base field
};

struct RootSet {
  std::vector<Root> roots;
  /// f = prod(minimal_polynomial^multiplicity over distinct minimal
  /// polynomials of the roots) * cofactor.
  UniPoly cofactor;
};

/// All roots of f in extensions F_{q^d}, d <= up_to_degree, of a finite base
/// field: distinct-degree factorization plus seeded equal-degree splitting.
/// Throws Unsupported over Q.
RootSet roots(const UniPoly& f, int up_to_degree, std::uint64_t seed);

struct RationalFactorization {
  mpq_class content;                // f = content * prod factor^multiplicity
  std::vector<PolyFactor> factors;  // primitive, integral, positive leading coefficient
};

/// Factorization into Q-irreducibles: squarefree decomposition, then
/// modular factorization over a large prime with recombination of factor
/// subsets. Throws Unsupported when the coefficient bound exceeds 62 bits.
RationalFactorization factor_rational(const UniPoly& f);

}  // namespace howe
