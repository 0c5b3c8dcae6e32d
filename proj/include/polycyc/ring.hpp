#pragma once

// Finite chain rings of the Galois-ring family GR(p^r, m) = Z_{p^r}[y]/<h(y)>.
// m = 1 gives Z_{p^r}; r = 1 gives the finite field F_{p^m}, which is how
// residue fields are represented throughout the library.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace polycyc {

using Coeff = std::uint32_t;
using CoeffVec = boost::container::small_vector<Coeff, 4>;

// Element of a GaloisRing: coordinates in the power basis 1, y, ..., y^{m-1},
// each reduced into [0, p^r). Elements do not carry their ring; every
// operation goes through the owning GaloisRing.
class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(CoeffVec coeffs) : coeffs_(std::move(coeffs)) {}

  const CoeffVec& coeffs() const { return coeffs_; }
  CoeffVec& coeffs() { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Coeff operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.coeffs_ == b.coeffs_;
  }
  // Rank order: compare as base-(p^r) numbers, highest coordinate first.
  friend std::strong_ordering operator<=>(const RingElem& a, const RingElem& b);

 private:
  CoeffVec coeffs_;
};

// An element of the residue field R/pR. The residue field is itself a
// GaloisRing with r = 1, so its elements share the representation.
using FieldElem = RingElem;

// Minimal interface used by ring-generic algorithms (the DFT check and the
// composite-modulus backend).
template <class R>
concept CommutativeRing = requires(const R& ring, const typename R::Element& a) {
  { ring.zero() } -> std::same_as<typename R::Element>;
  { ring.one() } -> std::same_as<typename R::Element>;
  { ring.add(a, a) } -> std::same_as<typename R::Element>;
  { ring.sub(a, a) } -> std::same_as<typename R::Element>;
  { ring.mul(a, a) } -> std::same_as<typename R::Element>;
  { ring.is_unit(a) } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

// Finite chain ring whose maximal ideal is generated by the prime p.
template <class R>
concept ChainRing = CommutativeRing<R> && requires(const R& ring, const typename R::Element& a) {
  { ring.valuation(a) } -> std::convertible_to<unsigned>;
  { ring.invert(a) } -> std::same_as<typename R::Element>;
  { ring.nilpotency() } -> std::convertible_to<unsigned>;
};

class GaloisRing {
 public:
  using Element = RingElem;

  // GR(p^r, m) with the deterministic modulus: the trivial lift of the
  // rank-smallest monic irreducible of degree m over F_p.
  GaloisRing(unsigned p, unsigned r, unsigned m);
  // GR(p^r, m) with an explicit monic modulus (ascending, leading 1
  // included). The modulus must reduce to an irreducible polynomial mod p.
  GaloisRing(unsigned p, unsigned r, std::vector<Coeff> modulus);

  unsigned p() const;
  unsigned nilpotency() const;  // r
  unsigned degree() const;      // m
  Coeff characteristic() const; // p^r
  // Ascending coefficients of the modulus, leading 1 included.
  const std::vector<Coeff>& modulus() const;
  // p^(r*m), or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> cardinality() const;
  bool is_field() const { return nilpotency() == 1; }

  friend bool operator==(const GaloisRing& a, const GaloisRing& b);
  std::string name() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(std::int64_t v) const;
  // The class of y. For m = 1 this is the root of the linear modulus.
  RingElem generator() const;
  RingElem from_coeffs(std::span<const std::int64_t> coords) const;
  bool contains(const RingElem& a) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem scale(const RingElem& a, std::int64_t k) const;
  RingElem pow(RingElem a, std::uint64_t e) const;
  void add_assign(RingElem& a, const RingElem& b) const;
  void sub_assign(RingElem& a, const RingElem& b) const;
  // a += b * c
  void add_mul(RingElem& a, const RingElem& b, const RingElem& c) const;

  bool is_zero(const RingElem& a) const;
  bool is_one(const RingElem& a) const;
  bool is_unit(const RingElem& a) const;
  // Largest k <= r with a in p^k R; valuation(0) = r.
  unsigned valuation(const RingElem& a) const;
  // Inverse of a unit: inverse of the residue, then Newton lifting
  // v <- v(2 - uv). Throws MathError on a non-unit.
  RingElem invert(const RingElem& u) const;
  // For a with valuation >= k: the element with coordinates a_i / p^k.
  RingElem divide_by_p_power(const RingElem& a, unsigned k) const;
  // Coordinates reduced into [0, p^k): the canonical representative of
  // a + p^k R.
  RingElem reduce_mod_p_power(const RingElem& a, unsigned k) const;
  // Solves a = b * t for t when b divides a (valuation(b) <= valuation(a)).
  RingElem exact_quotient(const RingElem& a, const RingElem& b) const;

  // Residue field F_{p^m}, as GR(p, m) with the reduced modulus.
  GaloisRing residue_field() const;
  FieldElem residue(const RingElem& a) const;
  // Coordinatewise lift of a residue-field element into [0, p).
  RingElem lift(const FieldElem& a) const;

  // Mixed-radix enumeration of all elements, index in [0, |R|).
  RingElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const RingElem& a) const;
  std::vector<RingElem> elements() const;
  std::vector<RingElem> units() const;
  RingElem random(std::mt19937_64& rng) const;

  std::string to_string(const RingElem& a) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
  void init(unsigned p, unsigned r, std::vector<Coeff> modulus);
};

bool is_prime(std::uint64_t n);

// Plain integers modulo a (possibly composite) M. Not a local ring; only
// used where an algorithm is stated for arbitrary commutative rings.
class ModularIntegers {
 public:
  using Element = std::uint64_t;

  explicit ModularIntegers(std::uint64_t modulus);
  std::uint64_t modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % modulus_; }
  Element from_int(std::int64_t v) const;
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_unit(Element a) const;

 private:
  std::uint64_t modulus_;
};

// Unital ring morphism GR(p^r, m) -> GR(p^r, m*l), determined by the image
// of the source generator (a root of the source modulus in the target).
class Embedding {
 public:
  // Chooses the image deterministically: the Hensel lift of the rank-least
  // residue root of the source modulus.
  Embedding(GaloisRing source, GaloisRing target);
  // Uses the given image after checking it is a root of the source modulus.
  Embedding(GaloisRing source, GaloisRing target, RingElem image_of_generator);

  const GaloisRing& source() const { return source_; }
  const GaloisRing& target() const { return target_; }
  const RingElem& image_of_generator() const { return image_; }

  RingElem apply(const RingElem& a) const;
  // The unique source element mapping to b, if any.
  std::optional<RingElem> preimage(const RingElem& b) const;

 private:
  GaloisRing source_;
  GaloisRing target_;
  RingElem image_;
  std::vector<RingElem> powers_;  // image^t, t < m
  // Coordinates of powers_ selected for solving preimages: a square
  // submatrix (over Z_{p^r}) with unit determinant, and its inverse.
  std::vector<std::size_t> pivot_cols_;
  std::vector<std::vector<Coeff>> pivot_inverse_;
  void check_and_prepare();
};

}  // namespace polycyc
