#pragma once

// Dense polynomials over F_p with machine-word coefficients. Used to
// implement F_{p^k} arithmetic below the generic UniPoly layer.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace howe::detail::fp {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;
using Poly = std::vector<u64>;  // constant term first, trimmed

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);  // a != 0

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
/// a mod m, m nonzero.
Poly mod(Poly a, const Poly& m, u64 p);
void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly monic(Poly a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
/// Inverse of a modulo irreducible m; a must be nonzero mod m.
Poly inv_mod(const Poly& a, const Poly& m, u64 p);
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m, u64 p);
/// Rabin's test.
bool is_irreducible(const Poly& m, u64 p);
Poly random_monic(int degree, u64 p, std::mt19937_64& rng);

}  // namespace howe::detail::fp
