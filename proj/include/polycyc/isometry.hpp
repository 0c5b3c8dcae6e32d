#pragma once

// Isomorphisms theta : R_h -> R_f, x -> omega, and when they are Hamming
// isometries (W monomial).

#include "polycyc/quotient.hpp"

#include <optional>
#include <string>

namespace polycyc {

struct OmegaWitness {
  AmbientSpace ambient;  // R_f
  QuotElem omega;
  RingMatrix W;          // rows rho_f(omega^k), k < n
  RingElem det;
  RingMatrix Winv;
  Poly h;                // monic, deg h = deg f, h(omega) = 0
};

// h = x^n - sum h_i x^i with [h_0 ... h_{n-1}] = rho_f(omega^n) W^{-1}.
// Throws MathError when det W is not a unit.
OmegaWitness build_theta(const Poly& f, const QuotElem& omega);

// theta(sum a_i x^i) = sum a_i omega^i, i.e. a * W.
QuotElem theta_apply(const OmegaWitness& w, std::span<const RingElem> a);

// Lowest k with wt(rho_f(omega^k)) != 1: theta moves the weight-1 word x^k.
std::optional<std::size_t> theta_counterexample(const OmegaWitness& w);

enum class VerdictKind { IsometricWithTarget, IsomorphicNotMonomial, NotApplicable };
std::string to_string(VerdictKind k);

struct IsometryVerdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  // Which shape rule fired: "x^n - f0", "x^n - f1 x", "scaling", "degree 1"
  // or empty.
  std::string rule;
  bool rule_isometric = false;
  bool w_monomial = false;
  bool agrees = false;  // rule_isometric == w_monomial
  MonomialWitness monomial;
  std::optional<Poly> target_h;
  std::optional<OmegaWitness> witness;
  std::optional<std::size_t> counterexample;  // power k of x, when not monomial
  std::string note;
};

// Shape rule: omega = c x^i with c a unit, and either f = x^n - f0 with f0 a
// unit and gcd(n, i) = 1, or f = x^n - f1 x with f1 a unit and
// gcd(n - 1, i) = 1. Two further cases always give a diagonal W: i = 1
// (omega = c x, any f) and n = 1. The rule is cross-checked against W.
IsometryVerdict classify_monomial(const Poly& f, const QuotElem& omega);

// Closed-form target for the rule cases:
//   x^n - f0,   omega = c x^i : x^n - c^n f0^i
//   x^n - f1 x, omega = c x^j : x^n - c^(n-1) f1^j x
//   omega = c x, any f        : x^n - sum c^(n-k) f_k x^k
// Throws PreconditionError when no rule applies.
Poly isometric_target(const Poly& f, const QuotElem& omega);

struct ConstacyclicWitness {
  RingElem root;  // w with w^n = lambda
  OmegaWitness witness;  // f = x^n - lambda, omega = w^{-1} x, h = x^n - 1
};

// Searches the units for an n-th root of lambda (least in rank order).
std::optional<ConstacyclicWitness> constacyclic_to_cyclic(const GaloisRing& ring, const RingElem& lambda,
                                                          unsigned n);

}  // namespace polycyc
