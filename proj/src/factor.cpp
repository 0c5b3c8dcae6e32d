#include "polycyc/factor.hpp"

#include "polycyc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace polycyc {

bool in_class_J(const Poly& f) {
  if (!f.is_monic()) throw PreconditionError("class J membership is defined for monic f");
  if (f.degree() <= 1) return true;
  const Poly fbar = residue(f);
  const Poly g = poly_gcd(fbar, fbar.derivative());
  return g.degree() == 0;
}

namespace {

Poly field_x(const GaloisRing& field) { return Poly::x(field); }

Poly random_below(const GaloisRing& field, int degree, std::mt19937_64& rng) {
  std::vector<RingElem> c;
  for (int i = 0; i < degree; ++i) c.push_back(field.random(rng));
  return Poly(field, std::move(c));
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const GaloisRing& field = g.ring();
  const std::uint64_t q = *field.cardinality();
  const Poly one = Poly::constant(field, field.one());
  for (;;) {
    const Poly a = random_below(field, g.degree(), rng);
    if (a.degree() < 1) continue;
    Poly b(field);
    if (field.p() == 2) {
      // Absolute trace to F_2: sum of a^(2^k), k < m*d.
      Poly term = poly_mod(a, g);
      b = term;
      const unsigned steps = field.degree() * static_cast<unsigned>(d);
      for (unsigned k = 1; k < steps; ++k) {
        term = mulmod(term, term, g);
        b = b + term;
      }
    } else {
      // a^((q^d - 1)/2) as (a^(1 + q + ... + q^(d-1)))^((q - 1)/2).
      Poly frob = poly_mod(a, g);
      Poly norm = frob;
      for (int k = 1; k < d; ++k) {
        frob = powmod(frob, q, g);
        norm = mulmod(norm, frob, g);
      }
      b = powmod(norm, (q - 1) / 2, g) - one;
    }
    const Poly c = poly_gcd(g, b);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      equal_degree_split(c, d, rng, out);
      equal_degree_split(exact_div(g, c), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_residue(const Poly& fbar_in, std::uint64_t seed) {
  const GaloisRing& field = fbar_in.ring();
  if (!field.is_field()) throw PreconditionError("factor_residue needs a polynomial over a field");
  if (fbar_in.degree() < 1) return {};
  Poly f = make_monic(fbar_in);
  if (poly_gcd(f, f.derivative()).degree() != 0) {
    throw PreconditionError("polynomial is not squarefree over the residue field");
  }
  const auto q_opt = field.cardinality();
  if (!q_opt) throw PreconditionError("residue field too large");
  const std::uint64_t q = *q_opt;

  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  const Poly x = field_x(field);
  Poly h = poly_mod(x, f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    const Poly g = poly_gcd(f, h - x);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = exact_div(f, g);
      h = poly_mod(h, f);
    }
  }
  if (f.degree() > 0) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RingElem> residue_roots(const Poly& fbar, std::uint64_t seed) {
  std::vector<RingElem> roots;
  for (const auto& fac : factor_residue(fbar, seed)) {
    if (fac.degree() == 1) roots.push_back(fac.ring().neg(fac.coeff(0)));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

struct LiftedPair {
  Poly g, h;
};

// f = g h with g-bar, h-bar coprime monic; returns the exact monic lifts.
LiftedPair hensel_pair(const Poly& f, const Poly& gbar, const Poly& hbar) {
  const GaloisRing& ring = f.ring();
  const ExtGcd eg = ext_gcd(gbar, hbar);
  if (eg.gcd.degree() != 0) throw PreconditionError("residue factors are not coprime");
  Poly g = lift(ring, gbar), h = lift(ring, hbar);
  Poly s = lift(ring, eg.s), t = lift(ring, eg.t);
  const Poly one = Poly::constant(ring, ring.one());
  for (unsigned prec = 1; prec < ring.nilpotency(); prec *= 2) {
    const Poly e = f - g * h;
    const auto [q, rr] = divrem(s * e, h);
    const Poly g2 = g + t * e + q * g;
    const Poly h2 = h + rr;
    const Poly b = s * g2 + t * h2 - one;
    const auto [c, d] = divrem(s * b, h2);
    s = s - d;
    t = t - t * b - c * g2;
    g = g2;
    h = h2;
  }
  if (!h.is_monic()) throw MathError("Hensel lifting lost monicity");
  g = exact_div(f, h);
  return {g, h};
}

void lift_tree(const Poly& f, std::span<const Poly> residue_factors, std::vector<Poly>& out) {
  if (residue_factors.size() == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t half = residue_factors.size() / 2;
  const GaloisRing field = f.ring().residue_field();
  Poly gbar = Poly::constant(field, field.one());
  Poly hbar = gbar;
  for (std::size_t i = 0; i < half; ++i) gbar = gbar * residue_factors[i];
  for (std::size_t i = half; i < residue_factors.size(); ++i) hbar = hbar * residue_factors[i];
  const LiftedPair pair = hensel_pair(f, gbar, hbar);
  lift_tree(pair.g, residue_factors.subspan(0, half), out);
  lift_tree(pair.h, residue_factors.subspan(half), out);
}

}  // namespace

Factorization hensel_lift_factorization(const Poly& f, const std::vector<Poly>& residue_factors) {
  if (!f.is_monic()) throw PreconditionError("Hensel lifting needs a monic polynomial");
  if (!in_class_J(f)) throw MathError("polynomial is not in class J");
  if (residue_factors.empty()) throw PreconditionError("no residue factors given");
  const GaloisRing field = f.ring().residue_field();
  Poly prod = Poly::constant(field, field.one());
  for (const auto& g : residue_factors) {
    if (!(g.ring() == field) || !g.is_monic()) {
      throw PreconditionError("residue factors must be monic over the residue field");
    }
    prod = prod * g;
  }
  if (!(prod == residue(f))) throw PreconditionError("residue factors do not multiply to f-bar");

  Factorization out{f, {}, residue_factors};
  lift_tree(f, residue_factors, out.factors);
  Poly check = Poly::constant(f.ring(), f.ring().one());
  for (const auto& g : out.factors) check = check * g;
  if (!(check == f)) throw MathError("lifted factors do not multiply to f");
  return out;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (!f.is_monic()) throw PreconditionError("factor needs a monic polynomial");
  if (!in_class_J(f)) throw MathError("polynomial is not in class J");
  return hensel_lift_factorization(f, factor_residue(residue(f), seed));
}

RingElem newton_lift_root(const Poly& f, const RingElem& approx) {
  const GaloisRing& ring = f.ring();
  const Poly df = f.derivative();
  RingElem a = approx;
  for (unsigned iter = 0; iter < 2 * ring.nilpotency() + 8; ++iter) {
    const RingElem fa = f.eval(a);
    if (ring.is_zero(fa)) return a;
    const RingElem d = df.eval(a);
    if (!ring.is_unit(d)) throw MathError("root is not simple; Newton lifting does not apply");
    a = ring.sub(a, ring.mul(fa, ring.invert(d)));
  }
  throw MathError("Newton lifting did not converge");
}

SplittingData splitting_extension(const Poly& f, std::uint64_t seed, unsigned degree_multiple) {
  if (!f.is_monic()) throw PreconditionError("splitting extension needs a monic polynomial");
  if (!in_class_J(f)) throw MathError("polynomial is not in class J");
  const GaloisRing& base = f.ring();
  unsigned l = std::max(degree_multiple, 1u);
  for (const auto& g : factor_residue(residue(f), seed)) {
    l = std::lcm(l, static_cast<unsigned>(g.degree()));
  }
  GaloisRing ext = l == 1 ? base : GaloisRing(base.p(), base.nilpotency(), base.degree() * l);
  Embedding emb = l == 1 ? Embedding(base, base, base.generator()) : Embedding(base, ext);
  const Poly fe = map_coeffs(f, ext, [&](const RingElem& a) { return emb.apply(a); });
  std::vector<RingElem> roots;
  for (const auto& rbar : residue_roots(residue(fe), seed)) {
    roots.push_back(newton_lift_root(fe, ext.lift(rbar)));
  }
  if (roots.size() != static_cast<std::size_t>(f.degree())) {
    throw MathError("polynomial did not split in the constructed extension");
  }
  return SplittingData{f, std::move(ext), std::move(emb), std::move(roots)};
}

IdempotentSet idempotents(const Poly& f, std::uint64_t seed) {
  Factorization fac = factor(f, seed);
  const AmbientSpace amb(f);
  const GaloisRing& ring = f.ring();
  std::vector<QuotElem> idems;
  for (const auto& fi : fac.factors) {
    const Poly fhat = exact_div(f, fi);
    const ExtGcd eg = ext_gcd(residue(fi), residue(fhat));
    const Poly ebar = poly_mod(eg.t * residue(fhat), residue(f));
    QuotElem e = QuotElem::from_poly(amb, lift(ring, ebar));
    for (unsigned iter = 0; iter < 64; ++iter) {
      const QuotElem e2 = e * e;
      const QuotElem next = e2.scaled(ring.from_int(3)) - (e2 * e).scaled(ring.from_int(2));
      if (next == e) break;
      e = next;
    }
    idems.push_back(std::move(e));
  }
  QuotElem sum = QuotElem::zero(amb);
  for (std::size_t i = 0; i < idems.size(); ++i) {
    sum = sum + idems[i];
    if (!(idems[i] * idems[i] == idems[i])) throw MathError("idempotent lifting failed");
    for (std::size_t j = i + 1; j < idems.size(); ++j) {
      if (!(idems[i] * idems[j]).is_zero()) throw MathError("idempotents are not orthogonal");
    }
  }
  if (!(sum == QuotElem::one(amb))) throw MathError("idempotents do not sum to 1");
  return IdempotentSet{amb, std::move(fac), std::move(idems)};
}

}  // namespace polycyc
