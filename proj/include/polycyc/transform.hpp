#pragma once

// Ring DFT invertibility, Vandermonde matrices over the splitting extension,
// and the Mattson-Solomon transform g -> (g(alpha_1), ..., g(alpha_n)).

#include "polycyc/errors.hpp"
#include "polycyc/factor.hpp"

#include <optional>
#include <string>

namespace polycyc {

template <CommutativeRing R>
struct DftCheck {
  bool invertible = true;
  // Smallest k with xi^k - 1 not a unit, and that element.
  std::optional<unsigned> failing_k;
  std::optional<typename R::Element> witness;
};

// The DFT of length N generated by xi is invertible iff xi^k - 1 is a unit
// for every 0 < k < N. Requires xi^N = 1 and xi != 1.
template <CommutativeRing R>
DftCheck<R> dft_invertible(const R& ring, const typename R::Element& xi, unsigned n) {
  if (n < 2) throw PreconditionError("DFT length must be at least 2");
  using E = typename R::Element;
  E power = ring.one();
  for (unsigned k = 0; k < n; ++k) power = ring.mul(power, xi);
  if (!(power == ring.one())) throw PreconditionError("xi is not an N-th root of unity");
  if (xi == ring.one()) throw PreconditionError("xi must differ from 1");
  DftCheck<R> out;
  power = ring.one();
  for (unsigned k = 1; k < n; ++k) {
    power = ring.mul(power, xi);
    E d = ring.sub(power, ring.one());
    if (!ring.is_unit(d)) {
      out.invertible = false;
      out.failing_k = k;
      out.witness = d;
      return out;
    }
  }
  return out;
}

struct VandermondePair {
  RingMatrix V;     // V(i, j) = alpha_j^i
  RingMatrix Vinv;  // V * Vinv = Id
};

VandermondePair vandermonde(const GaloisRing& ring, const std::vector<RingElem>& roots);
VandermondePair vandermonde(const SplittingData& split);

// Closed form of V^{-1}: row j holds the coefficients of the Lagrange
// polynomial prod_{k != j} (x - alpha_k) / (alpha_j - alpha_k), written with
// elementary symmetric functions of the other roots. Oracle for vandermonde().
RingMatrix vandermonde_inverse_symbolic(const GaloisRing& ring, const std::vector<RingElem>& roots);

// Entrywise image of a matrix under an embedding.
RingMatrix map_matrix(const RingMatrix& m, const Embedding& emb);
RowVector map_vector(std::span<const RingElem> v, const Embedding& emb);

struct Spectrum {
  std::vector<RingElem> values;  // B_i = g(alpha_i), fixed root order
};

// The transform for one ambient, with V and V^{-1} computed once.
class MattsonSolomon {
 public:
  explicit MattsonSolomon(SplittingData split);

  const SplittingData& splitting() const { return split_; }
  const GaloisRing& extension() const { return split_.extension; }
  const VandermondePair& vandermonde() const { return vp_; }

  Spectrum forward(const QuotElem& g) const;
  // Throws MathError when the preimage has coefficients outside the base ring.
  QuotElem inverse(const AmbientSpace& ambient, const Spectrum& b) const;

 private:
  SplittingData split_;
  VandermondePair vp_;
};

Spectrum ms_transform(const QuotElem& g, const SplittingData& split);
QuotElem ms_inverse(const Spectrum& b, const AmbientSpace& ambient, const SplittingData& split);

// Componentwise (Schur) product and the star inner product sum_i a_i b_i.
Spectrum star(const GaloisRing& ext, const Spectrum& a, const Spectrum& b);
RingElem star_inner(const GaloisRing& ext, const Spectrum& a, const Spectrum& b);

}  // namespace polycyc
