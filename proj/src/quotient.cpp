#include "polycyc/quotient.hpp"

#include "polycyc/errors.hpp"

namespace polycyc {

AmbientSpace::AmbientSpace(Poly f) {
  if (!f.is_monic()) throw PreconditionError("ambient polynomial must be monic");
  if (f.degree() < 1) throw PreconditionError("ambient polynomial must have degree >= 1");
  const GaloisRing& ring = f.ring();
  const auto n = static_cast<std::size_t>(f.degree());
  std::vector<RingElem> feedback;
  for (std::size_t i = 0; i < n; ++i) feedback.push_back(ring.neg(f.coeff(i)));
  RingMatrix comp(ring, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) comp(i, i + 1) = ring.one();
  for (std::size_t j = 0; j < n; ++j) comp(n - 1, j) = feedback[j];
  d_ = std::make_shared<const Data>(Data{std::move(f), n, std::move(feedback), std::move(comp)});
}

std::optional<std::uint64_t> AmbientSpace::cardinality() const {
  const auto q = ring().cardinality();
  if (!q) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n(); ++i) {
    if (total > UINT64_MAX / *q) return std::nullopt;
    total *= *q;
  }
  return total;
}

QuotElem::QuotElem(AmbientSpace ambient, std::vector<RingElem> coeffs)
    : ambient_(std::move(ambient)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ambient_.n()) {
    throw PreconditionError("element of R_f needs exactly " + std::to_string(ambient_.n()) +
                            " coefficients");
  }
  for (const auto& c : coeffs_) {
    if (!ambient_.ring().contains(c)) throw PreconditionError("coefficient outside base ring");
  }
}

QuotElem QuotElem::from_poly(const AmbientSpace& ambient, const Poly& g) {
  const Poly r = poly_mod(g, ambient.f());
  std::vector<RingElem> c(ambient.n(), ambient.ring().zero());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
  return QuotElem(ambient, std::move(c));
}

QuotElem QuotElem::zero(const AmbientSpace& ambient) {
  return QuotElem(ambient, std::vector<RingElem>(ambient.n(), ambient.ring().zero()));
}

QuotElem QuotElem::one(const AmbientSpace& ambient) {
  return constant(ambient, ambient.ring().one());
}

QuotElem QuotElem::x(const AmbientSpace& ambient) {
  return from_poly(ambient, Poly::x(ambient.ring()));
}

QuotElem QuotElem::constant(const AmbientSpace& ambient, const RingElem& c) {
  std::vector<RingElem> v(ambient.n(), ambient.ring().zero());
  v[0] = c;
  return QuotElem(ambient, std::move(v));
}

QuotElem QuotElem::at_index(const AmbientSpace& ambient, std::uint64_t index) {
  const GaloisRing& ring = ambient.ring();
  const std::uint64_t q = *ring.cardinality();
  std::vector<RingElem> c;
  for (std::size_t i = 0; i < ambient.n(); ++i) {
    c.push_back(ring.element_at(index % q));
    index /= q;
  }
  return QuotElem(ambient, std::move(c));
}

bool QuotElem::is_zero() const { return vec_is_zero(ambient_.ring(), coeffs_); }

QuotElem QuotElem::operator+(const QuotElem& o) const {
  if (!(ambient_ == o.ambient_)) throw PreconditionError("ambient mismatch");
  return QuotElem(ambient_, vec_add(ambient_.ring(), coeffs_, o.coeffs_));
}

QuotElem QuotElem::operator-(const QuotElem& o) const {
  if (!(ambient_ == o.ambient_)) throw PreconditionError("ambient mismatch");
  return QuotElem(ambient_, vec_sub(ambient_.ring(), coeffs_, o.coeffs_));
}

QuotElem QuotElem::operator*(const QuotElem& o) const { return quot_mul(*this, o); }

QuotElem QuotElem::scaled(const RingElem& c) const {
  return QuotElem(ambient_, vec_scale(ambient_.ring(), c, coeffs_));
}

QuotElem QuotElem::pow(std::uint64_t e) const {
  QuotElem result = one(ambient_);
  QuotElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QuotElem QuotElem::times_x() const {
  const GaloisRing& ring = ambient_.ring();
  const std::size_t n = ambient_.n();
  std::vector<RingElem> c(n, ring.zero());
  const RingElem top = coeffs_[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) c[i] = coeffs_[i - 1];
  if (!ring.is_zero(top)) {
    for (std::size_t i = 0; i < n; ++i) ring.add_mul(c[i], top, ambient_.feedback()[i]);
  }
  return QuotElem(ambient_, std::move(c));
}

QuotElem quot_mul(const QuotElem& g, const QuotElem& h) {
  if (!(g.ambient() == h.ambient())) throw PreconditionError("ambient mismatch in product");
  const AmbientSpace& amb = g.ambient();
  const GaloisRing& ring = amb.ring();
  const std::size_t n = amb.n();
  std::vector<RingElem> prod(2 * n - 1, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (ring.is_zero(g.coeffs()[i])) continue;
    for (std::size_t j = 0; j < n; ++j) ring.add_mul(prod[i + j], g.coeffs()[i], h.coeffs()[j]);
  }
  // Leading-term elimination with x^n = sum f_i x^i.
  for (std::size_t k = prod.size(); k-- > n;) {
    const RingElem top = prod[k];
    if (ring.is_zero(top)) continue;
    for (std::size_t i = 0; i < n; ++i) ring.add_mul(prod[k - n + i], top, amb.feedback()[i]);
  }
  prod.resize(n);
  return QuotElem(amb, std::move(prod));
}

RingMatrix companion(const Poly& f) { return AmbientSpace(f).companion(); }

RingMatrix regular_rep(const QuotElem& g) {
  const std::size_t n = g.ambient().n();
  RingMatrix m(g.ambient().ring(), n, n);
  QuotElem cur = g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cur.coeffs()[j];
    if (i + 1 < n) cur = cur.times_x();
  }
  return m;
}

RowVector row_product(std::span<const RingElem> a, std::span<const RingElem> b, const Poly& f) {
  const AmbientSpace amb(f);
  if (a.size() != amb.n() || b.size() != amb.n()) {
    throw PreconditionError("row vectors must have length deg f");
  }
  const QuotElem bq(amb, std::vector<RingElem>(b.begin(), b.end()));
  return vec_mul(amb.ring(), a, regular_rep(bq));
}

bool commutes_with_companion(const RingMatrix& m, const Poly& f) {
  const AmbientSpace amb(f);
  if (m.rows() != amb.n() || m.cols() != amb.n()) throw PreconditionError("matrix must be n x n");
  return m * amb.companion() == amb.companion() * m;
}

RingElem trace_map(const QuotElem& g) {
  const GaloisRing& ring = g.ambient().ring();
  RingElem t = ring.zero();
  QuotElem cur = g;
  for (std::size_t i = 0; i < g.ambient().n(); ++i) {
    ring.add_assign(t, cur.coeffs()[i]);
    cur = cur.times_x();
  }
  return t;
}

RingMatrix eval_at_matrix(const Poly& g, const RingMatrix& m) {
  if (!m.is_square()) throw PreconditionError("polynomial evaluation needs a square matrix");
  const GaloisRing& ring = m.ring();
  RingMatrix acc(ring, m.rows(), m.cols());
  const RingMatrix id = RingMatrix::identity(ring, m.rows());
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    acc = acc * m + id.scaled(g.coeffs()[i]);
  }
  return acc;
}

}  // namespace polycyc
