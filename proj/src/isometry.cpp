#include "polycyc/isometry.hpp"

#include "polycyc/errors.hpp"

#include <numeric>

namespace polycyc {

OmegaWitness build_theta(const Poly& f, const QuotElem& omega) {
  const AmbientSpace amb(f);
  if (!(omega.ambient() == amb)) throw PreconditionError("omega must lie in R_f");
  const GaloisRing& ring = amb.ring();
  const std::size_t n = amb.n();
  std::vector<RowVector> rows;
  QuotElem pw = QuotElem::one(amb);
  for (std::size_t k = 0; k < n; ++k) {
    rows.push_back(pw.coeffs());
    pw = pw * omega;
  }
  RingMatrix w = RingMatrix::from_rows(ring, n, rows);
  InverseResult inv = try_inverse(w);
  if (!inv.inverse) {
    throw MathError("det W = " + ring.to_string(inv.det) + " is not a unit; omega gives no isomorphism");
  }
  const RowVector hc = vec_mul(ring, pw.coeffs(), *inv.inverse);
  std::vector<RingElem> hpoly;
  for (const auto& c : hc) hpoly.push_back(ring.neg(c));
  hpoly.push_back(ring.one());
  Poly h(ring, std::move(hpoly));

  // Certify h(omega) = 0 in R_f.
  QuotElem acc = QuotElem::zero(amb);
  for (std::size_t i = h.coeffs().size(); i-- > 0;) acc = acc * omega + QuotElem::constant(amb, h.coeffs()[i]);
  if (!acc.is_zero()) throw MathError("internal: h(omega) != 0");
  return OmegaWitness{amb, omega, std::move(w), std::move(inv.det), std::move(*inv.inverse), std::move(h)};
}

QuotElem theta_apply(const OmegaWitness& w, std::span<const RingElem> a) {
  if (a.size() != w.ambient.n()) throw PreconditionError("element length must equal deg h");
  return QuotElem(w.ambient, vec_mul(w.ambient.ring(), a, w.W));
}

std::optional<std::size_t> theta_counterexample(const OmegaWitness& w) {
  for (std::size_t k = 0; k < w.W.rows(); ++k) {
    if (hamming_weight(w.ambient.ring(), w.W.row(k)) != 1) return k;
  }
  return std::nullopt;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::IsometricWithTarget: return "isometric-with-target";
    case VerdictKind::IsomorphicNotMonomial: return "isomorphic-not-monomial";
    case VerdictKind::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

struct MonomialOmega {
  RingElem c;
  std::size_t i;
};

std::optional<MonomialOmega> monomial_form(const QuotElem& omega) {
  const GaloisRing& ring = omega.ambient().ring();
  std::optional<MonomialOmega> out;
  for (std::size_t i = 0; i < omega.coeffs().size(); ++i) {
    if (ring.is_zero(omega.coeffs()[i])) continue;
    if (out) return std::nullopt;
    out = MonomialOmega{omega.coeffs()[i], i};
  }
  return out;
}

enum class Shape { None, Constant, Linear };

// f = x^n - f0 (Constant) or f = x^n - f1 x (Linear); x^n itself is both and
// reported as Constant with f0 = 0.
Shape shape_of(const Poly& f) {
  const GaloisRing& ring = f.ring();
  const int n = f.degree();
  for (int k = 2; k < n; ++k) {
    if (!ring.is_zero(f.coeff(static_cast<std::size_t>(k)))) return Shape::None;
  }
  if (n >= 2 && !ring.is_zero(f.coeff(1))) {
    return ring.is_zero(f.coeff(0)) ? Shape::Linear : Shape::None;
  }
  return Shape::Constant;
}

struct RuleResult {
  bool isometric = false;
  std::string name;
};

RuleResult apply_rule(const Poly& f, const QuotElem& omega) {
  const GaloisRing& ring = f.ring();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 1) return {true, "degree 1"};
  const auto mono = monomial_form(omega);
  if (!mono || !ring.is_unit(mono->c)) return {};
  if (mono->i == 1) return {true, "scaling"};
  const Shape s = shape_of(f);
  if (s == Shape::Constant && ring.is_unit(f.coeff(0)) && std::gcd(n, mono->i) == 1) {
    return {true, "x^n - f0"};
  }
  if (s == Shape::Linear && ring.is_unit(ring.neg(f.coeff(1))) && mono->i >= 1 &&
      std::gcd(n - 1, mono->i) == 1) {
    return {true, "x^n - f1 x"};
  }
  return {};
}

}  // namespace

Poly isometric_target(const Poly& f, const QuotElem& omega) {
  const RuleResult rule = apply_rule(f, omega);
  if (!rule.isometric) throw PreconditionError("omega and f fit none of the monomial shapes");
  const GaloisRing& ring = f.ring();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<RingElem> h(n + 1, ring.zero());
  h[n] = ring.one();
  if (rule.name == "degree 1") {
    h[0] = ring.neg(omega.coeffs()[0]);
    return Poly(ring, std::move(h));
  }
  const auto mono = *monomial_form(omega);
  if (rule.name == "scaling") {
    for (std::size_t k = 0; k < n; ++k) {
      // f_k is the feedback coefficient: f = x^n - sum f_k x^k.
      const RingElem fk = ring.neg(f.coeff(k));
      h[k] = ring.neg(ring.mul(ring.pow(mono.c, n - k), fk));
    }
  } else if (rule.name == "x^n - f0") {
    const RingElem f0 = ring.neg(f.coeff(0));
    h[0] = ring.neg(ring.mul(ring.pow(mono.c, n), ring.pow(f0, mono.i)));
  } else {
    const RingElem f1 = ring.neg(f.coeff(1));
    h[1] = ring.neg(ring.mul(ring.pow(mono.c, n - 1), ring.pow(f1, mono.i)));
  }
  return Poly(ring, std::move(h));
}

IsometryVerdict classify_monomial(const Poly& f, const QuotElem& omega) {
  IsometryVerdict v;
  const RuleResult rule = apply_rule(f, omega);
  v.rule = rule.name;
  v.rule_isometric = rule.isometric;
  OmegaWitness w = [&]() -> OmegaWitness {
    try {
      return build_theta(f, omega);
    } catch (const MathError&) {
      // W is still needed for the monomial cross-check.
      const AmbientSpace amb(f);
      std::vector<RowVector> rows;
      QuotElem pw = QuotElem::one(amb);
      for (std::size_t k = 0; k < amb.n(); ++k) {
        rows.push_back(pw.coeffs());
        pw = pw * omega;
      }
      RingMatrix wm = RingMatrix::from_rows(amb.ring(), amb.n(), rows);
      RingElem det = determinant(wm);
      return OmegaWitness{amb, omega, wm, det, RingMatrix(amb.ring(), 0, 0), Poly(amb.ring())};
    }
  }();
  v.monomial = is_monomial(w.W);
  v.w_monomial = v.monomial.monomial;
  v.agrees = v.rule_isometric == v.w_monomial;
  if (!f.ring().is_unit(w.det)) {
    v.kind = VerdictKind::NotApplicable;
    v.note = "det W is not a unit";
    return v;
  }
  if (v.rule_isometric && v.w_monomial) {
    v.kind = VerdictKind::IsometricWithTarget;
    v.target_h = w.h;
    const Poly closed = isometric_target(f, omega);
    if (!(closed == w.h)) v.note = "closed-form target differs from the computed h";
  } else {
    v.kind = VerdictKind::IsomorphicNotMonomial;
    v.counterexample = theta_counterexample(w);
    if (v.w_monomial) v.note = "W is monomial although no shape rule applies";
  }
  v.witness = std::move(w);
  return v;
}

std::optional<ConstacyclicWitness> constacyclic_to_cyclic(const GaloisRing& ring, const RingElem& lambda,
                                                          unsigned n) {
  if (!ring.contains(lambda)) throw PreconditionError("lambda is not in the ring");
  if (!ring.is_unit(lambda)) throw PreconditionError("lambda must be a unit");
  if (n < 1) throw PreconditionError("length must be positive");
  for (const auto& u : ring.units()) {
    if (!(ring.pow(u, n) == lambda)) continue;
    std::vector<RingElem> fc(n + 1, ring.zero());
    fc[0] = ring.neg(lambda);
    fc[n] = ring.one();
    const Poly f(ring, std::move(fc));
    const AmbientSpace amb(f);
    const QuotElem omega = n == 1 ? QuotElem::constant(amb, ring.one())
                                  : QuotElem::x(amb).scaled(ring.invert(u));
    return ConstacyclicWitness{u, build_theta(f, omega)};
  }
  return std::nullopt;
}

}  // namespace polycyc
