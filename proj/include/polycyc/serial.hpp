#pragma once

// Bivariate serial ambient R[x1, x2]/<f1(x1), f2(x2)>. The basis is
// x1^i x2^j at index i * n2 + j, so the regular representation of x1^i x2^j
// is E_f1^i (x) E_f2^j.

#include "polycyc/codes.hpp"
#include "polycyc/isometry.hpp"

namespace polycyc {

class BivAmbient {
 public:
  BivAmbient(Poly f1, Poly f2);

  const GaloisRing& ring() const { return a1_.ring(); }
  const AmbientSpace& first() const { return a1_; }
  const AmbientSpace& second() const { return a2_; }
  std::size_t n1() const { return a1_.n(); }
  std::size_t n2() const { return a2_.n(); }
  std::size_t dim() const { return n1() * n2(); }

  friend bool operator==(const BivAmbient& a, const BivAmbient& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_;
  }

 private:
  AmbientSpace a1_, a2_;
};

class BivElem {
 public:
  BivElem(BivAmbient ambient, std::vector<RingElem> coeffs);
  static BivElem zero(const BivAmbient& a);
  static BivElem one(const BivAmbient& a);
  static BivElem x1(const BivAmbient& a);
  static BivElem x2(const BivAmbient& a);
  // u(x1) v(x2)
  static BivElem tensor(const BivAmbient& a, const QuotElem& u, const QuotElem& v);

  const BivAmbient& ambient() const { return ambient_; }
  const std::vector<RingElem>& coeffs() const { return coeffs_; }
  const RingElem& at(std::size_t i, std::size_t j) const { return coeffs_[i * ambient_.n2() + j]; }

  BivElem operator+(const BivElem& o) const;
  BivElem operator-(const BivElem& o) const;
  BivElem operator*(const BivElem& o) const;

  friend bool operator==(const BivElem& a, const BivElem& b) { return a.coeffs_ == b.coeffs_; }

 private:
  BivAmbient ambient_;
  std::vector<RingElem> coeffs_;
};

// sum k_ij E_f1^i (x) E_f2^j
RingMatrix biv_regular_rep(const BivAmbient& a, std::span<const RingElem> k);
RingMatrix biv_regular_rep(const BivElem& k);
BivElem biv_mul(const BivElem& a, const BivElem& b);

// Both polynomials split over one extension GR(p^r, m * lcm(l1, l2)).
struct BivSplitting {
  SplittingData first;
  SplittingData second;
  VandermondePair v1, v2;
  RingMatrix V, Vinv;  // V1 (x) V2 and its inverse Vinv1 (x) Vinv2
};
BivSplitting biv_splitting(const BivAmbient& a, std::uint64_t seed = 0);

// Values k(alpha_i, beta_j), i outer, j inner.
std::vector<RingElem> biv_ms(const BivElem& k, const BivSplitting& s);
// Throws MathError when the spectrum is not an image.
BivElem biv_ms_inverse(const BivAmbient& a, const std::vector<RingElem>& values, const BivSplitting& s);

struct BivIdempotents {
  std::vector<BivElem> idems;  // e_i (x) e_j, i outer
  std::vector<std::pair<std::size_t, std::size_t>> index;
  std::vector<Poly> factors1, factors2;
  // e_i (x) e_j splits into gcd(deg f1_i, deg f2_j) primitive idempotents;
  // the grid element is primitive only when that count is 1.
  std::vector<std::size_t> pieces;
  std::size_t primitive_count() const;
};
BivIdempotents biv_idempotents(const BivAmbient& a, std::uint64_t seed = 0);

// The serial ambient as a code algebra (shifts E_f1 (x) Id and Id (x) E_f2,
// tensor idempotents, spectral data from biv_splitting).
AlgebraPtr serial_algebra(const BivAmbient& a, std::uint64_t seed = 0);

struct SerialIsometry {
  int case_id = 0;  // 1: both x^n - l, 2: x^n - l and x^n - l x (either order), 3: both x^n - l x
  IsometryVerdict first, second;
  Poly h1, h2;
  RingMatrix W;  // W1 (x) W2
  bool monomial = false;
};

// Applies the univariate classification in each variable. Throws
// PreconditionError when either side is not an isometric shape case.
SerialIsometry serial_isometry(const Poly& f1, const QuotElem& omega1, const Poly& f2, const QuotElem& omega2);

}  // namespace polycyc
