#pragma once

// Class-J polynomials: residue factorization, Hensel lifting, splitting
// extensions with an ordered root list, and primitive idempotents of R_f.

#include "polycyc/quotient.hpp"

#include <cstdint>
#include <vector>

namespace polycyc {

// f-bar is squarefree over the residue field (distinct roots in its
// algebraic closure).
bool in_class_J(const Poly& f);

// Complete irreducible factorization of a squarefree polynomial over a
// finite field: distinct-degree splitting, then Cantor-Zassenhaus
// equal-degree splitting driven by `seed`. Factors are monic and sorted
// (degree, then rank order), so the result does not depend on the seed.
std::vector<Poly> factor_residue(const Poly& fbar, std::uint64_t seed = 0);

// Roots of a squarefree polynomial over a finite field, in rank order.
std::vector<RingElem> residue_roots(const Poly& fbar, std::uint64_t seed = 0);

struct Factorization {
  Poly f;
  std::vector<Poly> factors;          // monic, pairwise coprime, product f
  std::vector<Poly> residue_factors;  // irreducible over the residue field
};

// Quadratic Hensel lifting along a balanced factor tree. residue_factors
// must be monic, pairwise coprime, with product f-bar.
Factorization hensel_lift_factorization(const Poly& f, const std::vector<Poly>& residue_factors);
// factor_residue followed by hensel_lift_factorization.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

struct SplittingData {
  Poly f;
  GaloisRing extension;
  Embedding embedding;
  // Roots of f in the extension, ordered by the rank of their residues.
  std::vector<RingElem> roots;
};

// Smallest Galois extension GR(p^r, m*l) in which f splits, where l is the
// lcm of the residue factor degrees (and of `degree_multiple`, used to put
// several polynomials into a common extension).
SplittingData splitting_extension(const Poly& f, std::uint64_t seed = 0,
                                  unsigned degree_multiple = 1);

// Lifts a simple residue root to the unique root of f above it by Newton
// iteration a <- a - f(a)/f'(a).
RingElem newton_lift_root(const Poly& f, const RingElem& approx);

struct IdempotentSet {
  AmbientSpace ambient;
  Factorization factorization;
  std::vector<QuotElem> idems;  // idems[i] belongs to factorization.factors[i]
};

// e_i = v_i * f/f_i: computed over the residue field by extended Euclid,
// lifted by e <- 3e^2 - 2e^3 and verified complete and orthogonal.
IdempotentSet idempotents(const Poly& f, std::uint64_t seed = 0);

}  // namespace polycyc
