#include "polycyc/poly.hpp"

#include "polycyc/errors.hpp"

#include <sstream>

namespace polycyc {

Poly::Poly(GaloisRing ring, std::vector<RingElem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!ring_.contains(c)) throw PreconditionError("coefficient outside " + ring_.name());
  }
  trim();
}

Poly Poly::from_ints(const GaloisRing& ring, std::initializer_list<std::int64_t> coeffs) {
  std::vector<RingElem> c;
  for (auto v : coeffs) c.push_back(ring.from_int(v));
  return Poly(ring, std::move(c));
}

Poly Poly::monomial(const GaloisRing& ring, const RingElem& c, std::size_t degree) {
  std::vector<RingElem> v(degree + 1, ring.zero());
  v[degree] = c;
  return Poly(ring, std::move(v));
}

Poly Poly::constant(const GaloisRing& ring, const RingElem& c) { return monomial(ring, c, 0); }

void Poly::trim() {
  while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && ring_.is_one(coeffs_.back()); }

RingElem Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ring_.zero();
}

RingElem Poly::leading() const { return coeffs_.empty() ? ring_.zero() : coeffs_.back(); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<RingElem> c(std::max(coeffs_.size(), o.coeffs_.size()), ring_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_.add(coeff(i), o.coeff(i));
  return Poly(ring_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<RingElem> c(std::max(coeffs_.size(), o.coeffs_.size()), ring_.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring_.sub(coeff(i), o.coeff(i));
  return Poly(ring_, std::move(c));
}

Poly Poly::operator-() const {
  std::vector<RingElem> c;
  for (const auto& a : coeffs_) c.push_back(ring_.neg(a));
  return Poly(ring_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(ring_);
  std::vector<RingElem> c(coeffs_.size() + o.coeffs_.size() - 1, ring_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_.is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      ring_.add_mul(c[i + j], coeffs_[i], o.coeffs_[j]);
    }
  }
  return Poly(ring_, std::move(c));
}

Poly Poly::scaled(const RingElem& c) const {
  std::vector<RingElem> v;
  for (const auto& a : coeffs_) v.push_back(ring_.mul(c, a));
  return Poly(ring_, std::move(v));
}

RingElem Poly::eval(const RingElem& a) const {
  RingElem acc = ring_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = ring_.mul(acc, a);
    ring_.add_assign(acc, coeffs_[i]);
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(ring_);
  std::vector<RingElem> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c.push_back(ring_.scale(coeffs_[i], static_cast<std::int64_t>(i)));
  }
  return Poly(ring_, std::move(c));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_.is_zero(coeffs_[i])) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = ring_.to_string(coeffs_[i]);
    const bool compound = c.find(' ') != std::string::npos || c.find('y') != std::string::npos;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << (compound ? "(" + c + ")" : c);
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivRem divrem(const Poly& a, const Poly& b) {
  const GaloisRing& ring = a.ring();
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (!ring.is_unit(b.leading())) throw PreconditionError("divisor leading coefficient is not a unit");
  if (a.degree() < b.degree()) return {Poly(ring), a};
  const RingElem lead_inv = ring.invert(b.leading());
  std::vector<RingElem> rem = a.coeffs();
  std::vector<RingElem> quo(a.coeffs().size() - b.coeffs().size() + 1, ring.zero());
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (ring.is_zero(rem[i])) continue;
    const RingElem c = ring.mul(rem[i], lead_inv);
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      ring.sub_assign(rem[i - db + j], ring.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Poly(ring, std::move(quo)), Poly(ring, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw MathError("polynomial division is not exact");
  return q;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return poly_mod(a * b, mod); }

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = poly_mod(Poly::constant(base.ring(), base.ring().one()), mod);
  base = poly_mod(base, mod);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, mod);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, mod);
  }
  return result;
}

Poly make_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.ring().invert(a.leading()));
}

Poly poly_gcd(Poly a, Poly b) {
  if (!a.ring().is_field()) throw PreconditionError("gcd requires a field");
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const GaloisRing& ring = a.ring();
  if (!ring.is_field()) throw PreconditionError("extended gcd requires a field");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(ring, ring.one()), s1(ring);
  Poly t0(ring), t1 = Poly::constant(ring, ring.one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const RingElem inv = ring.invert(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly residue(const Poly& f) {
  const GaloisRing field = f.ring().residue_field();
  return map_coeffs(f, field, [&](const RingElem& a) { return f.ring().residue(a); });
}

Poly lift(const GaloisRing& ring, const Poly& fbar) {
  return map_coeffs(fbar, ring, [&](const RingElem& a) { return ring.lift(a); });
}

Poly random_poly(const GaloisRing& ring, std::size_t degree_bound, std::mt19937_64& rng) {
  std::vector<RingElem> c;
  for (std::size_t i = 0; i < degree_bound; ++i) c.push_back(ring.random(rng));
  return Poly(ring, std::move(c));
}

}  // namespace polycyc
