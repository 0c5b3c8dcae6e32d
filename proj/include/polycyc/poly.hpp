#pragma once

// Univariate polynomials over a GaloisRing, stored ascending (index = degree)
// with trailing zeros trimmed.

#include "polycyc/ring.hpp"

#include <random>
#include <string>
#include <vector>

namespace polycyc {

class Poly {
 public:
  explicit Poly(GaloisRing ring) : ring_(std::move(ring)) {}
  Poly(GaloisRing ring, std::vector<RingElem> coeffs);
  static Poly from_ints(const GaloisRing& ring, std::initializer_list<std::int64_t> coeffs);
  static Poly monomial(const GaloisRing& ring, const RingElem& c, std::size_t degree);
  static Poly x(const GaloisRing& ring) { return monomial(ring, ring.one(), 1); }
  static Poly constant(const GaloisRing& ring, const RingElem& c);

  const GaloisRing& ring() const { return ring_; }
  const std::vector<RingElem>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  RingElem coeff(std::size_t i) const;
  RingElem leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const RingElem& c) const;

  RingElem eval(const RingElem& a) const;
  Poly derivative() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }
  // Degree first, then coefficients from the top down in rank order.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  std::string to_string(char var = 'x') const;

 private:
  GaloisRing ring_;
  std::vector<RingElem> coeffs_;
  void trim();
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// Division by a polynomial whose leading coefficient is a unit.
DivRem divrem(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
// Exact division; throws MathError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);

// Field-only operations (ring.is_field()).
Poly make_monic(const Poly& a);
Poly poly_gcd(Poly a, Poly b);
struct ExtGcd {
  Poly gcd, s, t;  // s*a + t*b = gcd, gcd monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

// Bar map R[x] -> F[x] and the coordinatewise lift back.
Poly residue(const Poly& f);
Poly lift(const GaloisRing& ring, const Poly& fbar);
// Applies a coefficient map (e.g. an Embedding).
template <class Map>
Poly map_coeffs(const Poly& f, const GaloisRing& target, Map&& map) {
  std::vector<RingElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(map(a));
  return Poly(target, std::move(c));
}

Poly random_poly(const GaloisRing& ring, std::size_t degree_bound, std::mt19937_64& rng);

}  // namespace polycyc
