#pragma once

// The quotient ring R_f = R[x]/<f> for monic f of degree n, its regular
// representation M : R_f -> M_n(R), and the row algebra M_{1,n}(R, f).

#include "polycyc/linalg.hpp"
#include "polycyc/poly.hpp"

#include <memory>

namespace polycyc {

class AmbientSpace {
 public:
  // f must be monic of degree >= 1.
  explicit AmbientSpace(Poly f);

  const GaloisRing& ring() const { return d_->f.ring(); }
  const Poly& f() const { return d_->f; }
  std::size_t n() const { return d_->n; }
  // Feedback coefficients f_i of f = x^n - sum f_i x^i.
  const std::vector<RingElem>& feedback() const { return d_->feedback; }
  const RingMatrix& companion() const { return d_->companion; }
  std::optional<std::uint64_t> cardinality() const;

  friend bool operator==(const AmbientSpace& a, const AmbientSpace& b) {
    return a.d_ == b.d_ || a.d_->f == b.d_->f;
  }

 private:
  struct Data {
    Poly f;
    std::size_t n;
    std::vector<RingElem> feedback;
    RingMatrix companion;
  };
  std::shared_ptr<const Data> d_;
};

// Element of R_f: exactly n coefficients, ascending.
class QuotElem {
 public:
  QuotElem(AmbientSpace ambient, std::vector<RingElem> coeffs);
  // Reduces an arbitrary polynomial modulo f.
  static QuotElem from_poly(const AmbientSpace& ambient, const Poly& g);
  static QuotElem zero(const AmbientSpace& ambient);
  static QuotElem one(const AmbientSpace& ambient);
  static QuotElem x(const AmbientSpace& ambient);
  static QuotElem constant(const AmbientSpace& ambient, const RingElem& c);
  // The element with index `index` in mixed-radix enumeration of R_f.
  static QuotElem at_index(const AmbientSpace& ambient, std::uint64_t index);

  const AmbientSpace& ambient() const { return ambient_; }
  const std::vector<RingElem>& coeffs() const { return coeffs_; }
  Poly as_poly() const { return Poly(ambient_.ring(), coeffs_); }
  bool is_zero() const;

  QuotElem operator+(const QuotElem& o) const;
  QuotElem operator-(const QuotElem& o) const;
  QuotElem operator*(const QuotElem& o) const;
  QuotElem scaled(const RingElem& c) const;
  QuotElem pow(std::uint64_t e) const;
  // Multiplication by x: one shift with feedback.
  QuotElem times_x() const;

  friend bool operator==(const QuotElem& a, const QuotElem& b) { return a.coeffs_ == b.coeffs_; }
  friend auto operator<=>(const QuotElem& a, const QuotElem& b) { return a.coeffs_ <=> b.coeffs_; }

 private:
  AmbientSpace ambient_;
  std::vector<RingElem> coeffs_;
};

// g * h reduced mod f. Throws PreconditionError on ambient mismatch.
QuotElem quot_mul(const QuotElem& g, const QuotElem& h);
// The companion matrix of monic f (subdiagonal identity block, last row
// f_0, ..., f_{n-1}).
RingMatrix companion(const Poly& f);
// Rows rho_f(g), rho_f(xg), ..., rho_f(x^{n-1}g).
RingMatrix regular_rep(const QuotElem& g);
// a * M(b) in M_{1,n}(R, f).
RowVector row_product(std::span<const RingElem> a, std::span<const RingElem> b, const Poly& f);
bool commutes_with_companion(const RingMatrix& m, const Poly& f);
// sum_i pi_i(x^i g), the trace of the regular representation.
RingElem trace_map(const QuotElem& g);
// g(M) for a square matrix, by Horner's rule.
RingMatrix eval_at_matrix(const Poly& g, const RingMatrix& m);

}  // namespace polycyc
