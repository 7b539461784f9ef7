#pragma once

// Sparse polynomials in x, y and homogeneous polynomials in x, y, z.

#include <array>
#include <map>
#include <string>
#include <utility>

#include "howe/field.hpp"
#include "howe/unipoly.hpp"

namespace howe {

enum class Var { x, y, z };

/// Graded lexicographic order: higher total degree first, then higher
/// x exponent.
struct GradedLex {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
  bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const {
    if (a[0] != b[0]) return a[0] > b[0];
    return a[1] > b[1];
  }
};

class BiPoly {
 public:
  using Exponent = std::pair<int, int>;  // (deg x, deg y)
  using Terms = std::map<Exponent, FieldElement, GradedLex>;

  explicit BiPoly(Field field) : field_(std::move(field)) {}
  static BiPoly monomial(const FieldElement& c, int i, int j);
  /// p(x) as a polynomial in x alone.
  static BiPoly from_x(const UniPoly& p);
  /// p(x) * y^j.
  static BiPoly from_x(const UniPoly& p, int j);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coeff(int i, int j) const;
  /// Adds c to the coefficient of x^i y^j.
  void add_term(int i, int j, const FieldElement& c);
  /// -1 for zero.
  int total_degree() const;
  int degree_in(Var v) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scale(const FieldElement& c) const;
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  BiPoly partial(Var v) const;
  FieldElement eval(const FieldElement& x, const FieldElement& y) const;
  /// Substitution x -> x + a.
  BiPoly shift_x(const FieldElement& a) const;
  /// Coefficient of y^j as a polynomial in x.
  UniPoly coefficient_in_y(int j) const;
  /// f(x, 0).
  UniPoly at_y_zero() const { return coefficient_in_y(0); }
  BiPoly embed(const FieldEmbedding& e) const;

  /// "16*x^6 + 27*x^4*y^2 + ... + 28"; rationals keep their sign.
  std::string to_string() const;

 private:
  Field field_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& f);

class HomPoly {
 public:
  using Exponent = std::array<int, 3>;
  using Terms = std::map<Exponent, FieldElement, GradedLex>;

  HomPoly(Field field, int degree) : field_(std::move(field)), degree_(degree) {}

  const Field& field() const { return field_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement coeff(int i, int j, int k) const;
  /// Throws std::invalid_argument when i + j + k differs from degree().
  void add_term(int i, int j, int k, const FieldElement& c);

  HomPoly& operator+=(const HomPoly& o);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  HomPoly scale(const FieldElement& c) const;
  /// Multiplication by one of the variables.
  HomPoly times(Var v) const;
  friend bool operator==(const HomPoly& a, const HomPoly& b);

  HomPoly partial(Var v) const;
  FieldElement eval(const FieldElement& x, const FieldElement& y, const FieldElement& z) const;
  /// Sets the given variable to 1.
  BiPoly dehomogenize(Var v) const;
  HomPoly embed(const FieldEmbedding& e) const;

  std::string to_string() const;

 private:
  Field field_;
  int degree_;
  Terms terms_;
};

/// Homogenization with z up to the given total degree; throws
/// std::invalid_argument if f has a term of higher degree.
HomPoly homogenize(const BiPoly& f, int degree);

}  // namespace howe
