#include "howe/bipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace howe {

namespace {

void check_field(const Field& a, const Field& b) {
  if (!(a == b)) throw MixedFields("polynomials over " + a.name() + " and " + b.name());
}

// Renders c*m for a monomial string m; "1*m" collapses to "m".
void append_term(std::string& out, const FieldElement& c, const std::string& mono) {
  const Field& k = c.field();
  bool negative = k.kind() == FieldKind::rational && sgn(c.rational()) < 0;
  std::string cs = negative ? (-c).to_string() : c.to_string();
  if (k.kind() == FieldKind::extension && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
  if (!out.empty()) out += negative ? " - " : " + ";
  else if (negative) out += "-";
  if (mono.empty()) out += cs;
  else if (cs == "1") out += mono;
  else out += cs + "*" + mono;
}

std::string power(const char* v, int e) {
  if (e == 0) return {};
  if (e == 1) return v;
  return std::string(v) + "^" + std::to_string(e);
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::monomial(const FieldElement& c, int i, int j) {
  BiPoly f(c.field());
  f.add_term(i, j, c);
  return f;
}

BiPoly BiPoly::from_x(const UniPoly& p) { return from_x(p, 0); }

BiPoly BiPoly::from_x(const UniPoly& p, int j) {
  BiPoly f(p.field());
  for (int i = 0; i <= p.degree(); ++i) f.add_term(i, j, p.coeff(i));
  return f;
}

FieldElement BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_.zero() : it->second;
}

void BiPoly::add_term(int i, int j, const FieldElement& c) {
  check_field(field_, c.field());
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.first + terms_.begin()->first.second;
}

int BiPoly::degree_in(Var v) const {
  if (v == Var::z) throw std::invalid_argument("BiPoly has no z variable");
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, v == Var::x ? e.first : e.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  check_field(field_, o.field_);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  check_field(field_, o.field_);
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  check_field(a.field_, b.field_);
  BiPoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BiPoly BiPoly::scale(const FieldElement& c) const {
  check_field(field_, c.field());
  BiPoly r(field_);
  for (const auto& [e, v] : terms_) r.add_term(e.first, e.second, v * c);
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

BiPoly BiPoly::partial(Var v) const {
  if (v == Var::z) return BiPoly(field_);
  BiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    const int n = v == Var::x ? e.first : e.second;
    if (n == 0) continue;
    if (v == Var::x) r.add_term(e.first - 1, e.second, c * field_.from_int(n));
    else r.add_term(e.first, e.second - 1, c * field_.from_int(n));
  }
  return r;
}

FieldElement BiPoly::eval(const FieldElement& x, const FieldElement& y) const {
  FieldElement acc = field_.zero();
  for (const auto& [e, c] : terms_) acc += c * x.pow(e.first) * y.pow(e.second);
  return acc;
}

BiPoly BiPoly::shift_x(const FieldElement& a) const {
  BiPoly r(field_);
  const int dy = degree_in(Var::y);
  for (int j = 0; j <= dy; ++j) r += from_x(coefficient_in_y(j).shift(a), j);
  return r;
}

UniPoly BiPoly::coefficient_in_y(int j) const {
  std::vector<FieldElement> c;
  for (const auto& [e, v] : terms_) {
    if (e.second != j) continue;
    if (static_cast<int>(c.size()) <= e.first) c.resize(static_cast<std::size_t>(e.first) + 1, field_.zero());
    c[static_cast<std::size_t>(e.first)] = v;
  }
  return UniPoly(field_, std::move(c));
}

BiPoly BiPoly::embed(const FieldEmbedding& e) const {
  BiPoly r(e.target());
  for (const auto& [ex, c] : terms_) r.add_term(ex.first, ex.second, e(c));
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, join({power("x", e.first), power("y", e.second)}));
  return out;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << f.to_string(); }

// ---------------------------------------------------------------- HomPoly

FieldElement HomPoly::coeff(int i, int j, int k) const {
  auto it = terms_.find({i, j, k});
  return it == terms_.end() ? field_.zero() : it->second;
}

void HomPoly::add_term(int i, int j, int k, const FieldElement& c) {
  check_field(field_, c.field());
  if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("negative exponent");
  if (i + j + k != degree_) throw std::invalid_argument("term degree differs from the form's degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j, k}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  check_field(field_, o.field_);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) degree_ = o.degree_;
  for (const auto& [e, c] : o.terms_) add_term(e[0], e[1], e[2], c);
  return *this;
}

HomPoly HomPoly::scale(const FieldElement& c) const {
  HomPoly r(field_, degree_);
  for (const auto& [e, v] : terms_) r.add_term(e[0], e[1], e[2], v * c);
  return r;
}

HomPoly HomPoly::times(Var v) const {
  HomPoly r(field_, degree_ + 1);
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [key, c] : terms_) {
    auto e = key;
    ++e[idx];
    r.add_term(e[0], e[1], e[2], c);
  }
  return r;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

HomPoly HomPoly::partial(Var v) const {
  HomPoly r(field_, degree_ - 1);
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [key, c] : terms_) {
    auto e = key;
    const int n = e[idx];
    if (n == 0) continue;
    --e[idx];
    r.add_term(e[0], e[1], e[2], c * field_.from_int(n));
  }
  return r;
}

FieldElement HomPoly::eval(const FieldElement& x, const FieldElement& y, const FieldElement& z) const {
  FieldElement acc = field_.zero();
  for (const auto& [e, c] : terms_) acc += c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
  return acc;
}

BiPoly HomPoly::dehomogenize(Var v) const {
  BiPoly r(field_);
  for (const auto& [e, c] : terms_) {
    switch (v) {
      case Var::z: r.add_term(e[0], e[1], c); break;
      case Var::y: r.add_term(e[0], e[2], c); break;
      case Var::x: r.add_term(e[1], e[2], c); break;
    }
  }
  return r;
}

HomPoly HomPoly::embed(const FieldEmbedding& e) const {
  HomPoly r(e.target(), degree_);
  for (const auto& [ex, c] : terms_) r.add_term(ex[0], ex[1], ex[2], e(c));
  return r;
}

std::string HomPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_)
    append_term(out, c, join({power("x", e[0]), power("y", e[1]), power("z", e[2])}));
  return out;
}

HomPoly homogenize(const BiPoly& f, int degree) {
  HomPoly r(f.field(), degree);
  for (const auto& [e, c] : f.terms()) {
    const int k = degree - e.first - e.second;
    if (k < 0) throw std::invalid_argument("term exceeds the homogenization degree");
    r.add_term(e.first, e.second, k, c);
  }
  return r;
}

}  // namespace howe
