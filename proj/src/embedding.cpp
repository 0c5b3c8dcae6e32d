#include "polycyc/errors.hpp"
#include "polycyc/factor.hpp"
#include "polycyc/linalg.hpp"
#include "polycyc/ring.hpp"

namespace polycyc {

namespace {

Poly modulus_poly(const GaloisRing& source, const GaloisRing& target) {
  std::vector<RingElem> c;
  for (Coeff v : source.modulus()) c.push_back(target.from_int(v));
  return Poly(target, std::move(c));
}

void check_compatible(const GaloisRing& source, const GaloisRing& target) {
  if (source.p() != target.p() || source.nilpotency() != target.nilpotency() ||
      target.degree() % source.degree() != 0) {
    throw PreconditionError("no embedding " + source.name() + " -> " + target.name());
  }
}

}  // namespace

Embedding::Embedding(GaloisRing source, GaloisRing target)
    : source_(std::move(source)), target_(std::move(target)) {
  check_compatible(source_, target_);
  if (source_.degree() == 1) {
    image_ = target_.from_int(static_cast<std::int64_t>(source_.characteristic()) -
                              static_cast<std::int64_t>(source_.modulus()[0]));
  } else {
    const Poly h = modulus_poly(source_, target_);
    const auto roots = residue_roots(residue(h));
    if (roots.empty()) throw MathError("source modulus has no root in the target");
    image_ = newton_lift_root(h, target_.lift(roots.front()));
  }
  check_and_prepare();
}

Embedding::Embedding(GaloisRing source, GaloisRing target, RingElem image_of_generator)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image_of_generator)) {
  check_compatible(source_, target_);
  if (!target_.contains(image_)) throw PreconditionError("generator image outside target");
  check_and_prepare();
}

void Embedding::check_and_prepare() {
  if (!target_.is_zero(modulus_poly(source_, target_).eval(image_))) {
    throw PreconditionError("generator image is not a root of the source modulus");
  }
  const unsigned m = source_.degree();
  const unsigned big = target_.degree();
  powers_.clear();
  RingElem cur = target_.one();
  for (unsigned t = 0; t < m; ++t) {
    powers_.push_back(cur);
    cur = target_.mul(cur, image_);
  }

  // Coordinates of the powers over Z_{p^r}; pick m columns whose residue
  // submatrix is invertible, so the square submatrix has unit determinant.
  const GaloisRing zr(source_.p(), source_.nilpotency(), 1u);
  const GaloisRing fp = zr.residue_field();
  RingMatrix coords(zr, m, big), coords_bar(fp, m, big);
  for (unsigned t = 0; t < m; ++t) {
    for (unsigned c = 0; c < big; ++c) {
      coords(t, c) = zr.from_int(powers_[t][c]);
      coords_bar(t, c) = fp.from_int(powers_[t][c]);
    }
  }
  const HowellBasis hb(coords_bar);
  if (hb.rank() != m) throw MathError("embedding is not injective");
  pivot_cols_ = hb.pivot_columns();
  RingMatrix square(zr, m, m);
  for (unsigned t = 0; t < m; ++t) {
    for (unsigned j = 0; j < m; ++j) square(t, j) = coords(t, pivot_cols_[j]);
  }
  const RingMatrix inv = matrix_inverse(square);
  pivot_inverse_.assign(m, std::vector<Coeff>(m));
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) pivot_inverse_[i][j] = inv(i, j)[0];
  }
}

RingElem Embedding::apply(const RingElem& a) const {
  if (!source_.contains(a)) throw PreconditionError("element is not in the embedding source");
  RingElem out = target_.zero();
  for (std::size_t t = 0; t < powers_.size(); ++t) {
    if (a[t] == 0) continue;
    target_.add_assign(out, target_.scale(powers_[t], a[t]));
  }
  return out;
}

std::optional<RingElem> Embedding::preimage(const RingElem& b) const {
  if (!target_.contains(b)) throw PreconditionError("element is not in the embedding target");
  const std::size_t m = powers_.size();
  const std::uint64_t q = source_.characteristic();
  CoeffVec a(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
      acc = (acc + std::uint64_t{b[pivot_cols_[i]]} * pivot_inverse_[i][j]) % q;
    }
    a[j] = static_cast<Coeff>(acc);
  }
  RingElem candidate(std::move(a));
  if (apply(candidate) == b) return candidate;
  return std::nullopt;
}

}  // namespace polycyc
