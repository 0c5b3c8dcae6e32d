#include "polycyc/serial.hpp"

#include <numeric>

namespace polycyc {

BivAmbient::BivAmbient(Poly f1, Poly f2) : a1_(std::move(f1)), a2_(std::move(f2)) {
  if (!(a1_.ring() == a2_.ring())) throw PreconditionError("f1 and f2 must share a base ring");
}

BivElem::BivElem(BivAmbient ambient, std::vector<RingElem> coeffs)
    : ambient_(std::move(ambient)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ambient_.dim()) {
    throw PreconditionError("bivariate element needs exactly n1 * n2 = " + std::to_string(ambient_.dim()) +
                            " coefficients");
  }
  for (const auto& c : coeffs_) {
    if (!ambient_.ring().contains(c)) throw PreconditionError("coefficient outside base ring");
  }
}

BivElem BivElem::zero(const BivAmbient& a) { return BivElem(a, zero_vector(a.ring(), a.dim())); }

BivElem BivElem::one(const BivAmbient& a) {
  return tensor(a, QuotElem::one(a.first()), QuotElem::one(a.second()));
}

BivElem BivElem::x1(const BivAmbient& a) {
  return tensor(a, QuotElem::x(a.first()), QuotElem::one(a.second()));
}

BivElem BivElem::x2(const BivAmbient& a) {
  return tensor(a, QuotElem::one(a.first()), QuotElem::x(a.second()));
}

BivElem BivElem::tensor(const BivAmbient& a, const QuotElem& u, const QuotElem& v) {
  if (!(u.ambient() == a.first()) || !(v.ambient() == a.second())) {
    throw PreconditionError("tensor factors must lie in R_f1 and R_f2");
  }
  const GaloisRing& ring = a.ring();
  std::vector<RingElem> c;
  for (std::size_t i = 0; i < a.n1(); ++i) {
    for (std::size_t j = 0; j < a.n2(); ++j) c.push_back(ring.mul(u.coeffs()[i], v.coeffs()[j]));
  }
  return BivElem(a, std::move(c));
}

BivElem BivElem::operator+(const BivElem& o) const {
  if (!(ambient_ == o.ambient_)) throw PreconditionError("ambient mismatch");
  return BivElem(ambient_, vec_add(ambient_.ring(), coeffs_, o.coeffs_));
}

BivElem BivElem::operator-(const BivElem& o) const {
  if (!(ambient_ == o.ambient_)) throw PreconditionError("ambient mismatch");
  return BivElem(ambient_, vec_sub(ambient_.ring(), coeffs_, o.coeffs_));
}

BivElem BivElem::operator*(const BivElem& o) const { return biv_mul(*this, o); }

RingMatrix biv_regular_rep(const BivAmbient& a, std::span<const RingElem> k) {
  if (k.size() != a.dim()) throw PreconditionError("bivariate element length mismatch");
  const GaloisRing& ring = a.ring();
  RingMatrix out(ring, a.dim(), a.dim());
  RingMatrix e1_power = RingMatrix::identity(ring, a.n1());
  for (std::size_t i = 0; i < a.n1(); ++i) {
    const std::vector<RingElem> slice(k.begin() + static_cast<std::ptrdiff_t>(i * a.n2()),
                                      k.begin() + static_cast<std::ptrdiff_t>((i + 1) * a.n2()));
    if (!vec_is_zero(ring, slice)) {
      out = out + kronecker(e1_power, regular_rep(QuotElem(a.second(), slice)));
    }
    e1_power = e1_power * a.first().companion();
  }
  return out;
}

RingMatrix biv_regular_rep(const BivElem& k) { return biv_regular_rep(k.ambient(), k.coeffs()); }

BivElem biv_mul(const BivElem& a, const BivElem& b) {
  if (!(a.ambient() == b.ambient())) throw PreconditionError("ambient mismatch in product");
  return BivElem(a.ambient(), vec_mul(a.ambient().ring(), a.coeffs(), biv_regular_rep(b)));
}

BivSplitting biv_splitting(const BivAmbient& a, std::uint64_t seed) {
  const Poly& f1 = a.first().f();
  const Poly& f2 = a.second().f();
  if (!in_class_J(f1) || !in_class_J(f2)) throw MathError("serial ambient needs f1, f2 in class J");
  const unsigned m = a.ring().degree();
  const unsigned l1 = splitting_extension(f1, seed).extension.degree() / m;
  const unsigned l2 = splitting_extension(f2, seed).extension.degree() / m;
  const unsigned l = std::lcm(l1, l2);
  SplittingData s1 = splitting_extension(f1, seed, l);
  SplittingData s2 = splitting_extension(f2, seed, l);
  VandermondePair v1 = vandermonde(s1), v2 = vandermonde(s2);
  RingMatrix V = kronecker(v1.V, v2.V);
  RingMatrix Vinv = kronecker(v1.Vinv, v2.Vinv);
  return BivSplitting{std::move(s1), std::move(s2), std::move(v1), std::move(v2), std::move(V), std::move(Vinv)};
}

std::vector<RingElem> biv_ms(const BivElem& k, const BivSplitting& s) {
  return vec_mul(s.first.extension, map_vector(k.coeffs(), s.first.embedding), s.V);
}

BivElem biv_ms_inverse(const BivAmbient& a, const std::vector<RingElem>& values, const BivSplitting& s) {
  if (values.size() != a.dim()) throw PreconditionError("spectrum length must equal n1 * n2");
  const GaloisRing& ext = s.first.extension;
  for (const auto& v : values) {
    if (!ext.contains(v)) throw PreconditionError("spectrum value outside the extension");
  }
  const RowVector g = vec_mul(ext, values, s.Vinv);
  std::vector<RingElem> coeffs;
  for (const auto& c : g) {
    auto pre = s.first.embedding.preimage(c);
    if (!pre) throw MathError("spectrum is not a Mattson-Solomon image: coefficient outside base ring");
    coeffs.push_back(std::move(*pre));
  }
  return BivElem(a, std::move(coeffs));
}

std::size_t BivIdempotents::primitive_count() const { return std::accumulate(pieces.begin(), pieces.end(), std::size_t{0}); }

BivIdempotents biv_idempotents(const BivAmbient& a, std::uint64_t seed) {
  const IdempotentSet i1 = idempotents(a.first().f(), seed);
  const IdempotentSet i2 = idempotents(a.second().f(), seed);
  BivIdempotents out;
  out.factors1 = i1.factorization.factors;
  out.factors2 = i2.factorization.factors;
  for (std::size_t i = 0; i < i1.idems.size(); ++i) {
    for (std::size_t j = 0; j < i2.idems.size(); ++j) {
      out.idems.push_back(BivElem::tensor(a, i1.idems[i], i2.idems[j]));
      out.index.emplace_back(i, j);
      out.pieces.push_back(static_cast<std::size_t>(std::gcd(out.factors1[i].degree(), out.factors2[j].degree())));
    }
  }
  BivElem sum = BivElem::zero(a);
  for (std::size_t s = 0; s < out.idems.size(); ++s) {
    sum = sum + out.idems[s];
    if (!(out.idems[s] * out.idems[s] == out.idems[s])) throw MathError("tensor idempotent is not idempotent");
    for (std::size_t t = s + 1; t < out.idems.size(); ++t) {
      if (!(out.idems[s] * out.idems[t] == BivElem::zero(a))) throw MathError("tensor idempotents not orthogonal");
    }
  }
  if (!(sum == BivElem::one(a))) throw MathError("tensor idempotents do not sum to 1");
  return out;
}

AlgebraPtr serial_algebra(const BivAmbient& a, std::uint64_t seed) {
  auto alg = std::make_shared<AmbientAlgebra>(a.ring());
  alg->dim = a.dim();
  alg->description = "R[x1,x2]/<" + a.first().f().to_string() + ", " + a.second().f().to_string() + ">";
  alg->shifts = {kronecker(a.first().companion(), RingMatrix::identity(a.ring(), a.n2())),
                 kronecker(RingMatrix::identity(a.ring(), a.n1()), a.second().companion())};
  alg->rep = [a](std::span<const RingElem> v) { return biv_regular_rep(a, v); };
  alg->one = BivElem::one(a).coeffs();
  for (std::size_t k = 0; k < alg->dim; ++k) {
    RowVector e = zero_vector(a.ring(), alg->dim);
    e[k] = a.ring().one();
    alg->trace_vector.push_back(trace(alg->rep(e)));
  }
  alg->zero_form = false;
  alg->zero_form_note = "the constant-term form is only offered for univariate ambients";
  if (in_class_J(a.first().f()) && in_class_J(a.second().f())) {
    BivSplitting s = biv_splitting(a, seed);
    alg->spectral = SpectralData{s.first.extension, s.first.embedding, std::move(s.V), std::move(s.Vinv)};
    const BivIdempotents ids = biv_idempotents(a, seed);
    for (std::size_t s2 = 0; s2 < ids.idems.size(); ++s2) {
      alg->idems.push_back(ids.idems[s2].coeffs());
      alg->idem_labels.push_back("(" + std::to_string(ids.index[s2].first + 1) + "," +
                                 std::to_string(ids.index[s2].second + 1) + ")");
    }
  }
  return alg;
}

SerialIsometry serial_isometry(const Poly& f1, const QuotElem& omega1, const Poly& f2, const QuotElem& omega2) {
  IsometryVerdict v1 = classify_monomial(f1, omega1);
  IsometryVerdict v2 = classify_monomial(f2, omega2);
  if (v1.kind != VerdictKind::IsometricWithTarget || v2.kind != VerdictKind::IsometricWithTarget) {
    throw PreconditionError("serial isometry conditions unmet: each variable needs a monomial omega of an "
                            "admissible shape");
  }
  // 0: x^n - l, 1: x^n - l x, -1: other.
  auto shape = [](const Poly& f) {
    const GaloisRing& ring = f.ring();
    for (int k = 2; k < f.degree(); ++k) {
      if (!ring.is_zero(f.coeff(static_cast<std::size_t>(k)))) return -1;
    }
    if (f.degree() >= 2 && !ring.is_zero(f.coeff(1))) return ring.is_zero(f.coeff(0)) ? 1 : -1;
    return 0;
  };
  const int s1 = shape(f1), s2 = shape(f2);
  int case_id = 0;
  if (s1 == 0 && s2 == 0) case_id = 1;
  else if ((s1 == 0 && s2 == 1) || (s1 == 1 && s2 == 0)) case_id = 2;
  else if (s1 == 1 && s2 == 1) case_id = 3;
  RingMatrix w = kronecker(v1.witness->W, v2.witness->W);
  const bool mono = is_monomial(w).monomial;
  Poly h1 = *v1.target_h, h2 = *v2.target_h;
  return SerialIsometry{case_id, std::move(v1), std::move(v2), std::move(h1), std::move(h2), std::move(w), mono};
}

}  // namespace polycyc
