#pragma once

// Polycyclic codes as ideals of a commutative R-algebra A = R^N with a fixed
// basis: the univariate R_f, or the bivariate serial ambient. Codes are
// R-submodules closed under the shift operators, stored as Howell bases.

#include "polycyc/transform.hpp"

#include <functional>
#include <memory>
#include <string>

namespace polycyc {

// MS(v) = emb(v) * V in the extension; Vinv inverts it.
struct SpectralData {
  GaloisRing extension;
  Embedding embedding;
  RingMatrix V;
  RingMatrix Vinv;
};

struct AmbientAlgebra {
  explicit AmbientAlgebra(GaloisRing r) : ring(std::move(r)) {}

  GaloisRing ring;
  std::size_t dim = 0;
  std::string description;
  // Commuting matrices generating the algebra (E_f, or E_f1 (x) Id and
  // Id (x) E_f2). An R-submodule is an ideal iff it is stable under each.
  std::vector<RingMatrix> shifts;
  // Regular representation: v * rep(w) is the product vw.
  std::function<RingMatrix(std::span<const RingElem>)> rep;
  RowVector one;
  // tr(v) = v . trace_vector, the trace of the regular representation.
  RowVector trace_vector;
  // Present when the defining polynomials are in class J.
  std::optional<SpectralData> spectral;
  std::vector<RowVector> idems;
  std::vector<std::string> idem_labels;
  // The constant-term form <a,b>_0 = (ab)_0; only the univariate ambient
  // with f_0 != 0 offers it.
  bool zero_form = false;
  std::string zero_form_note;

  RowVector mul(std::span<const RingElem> a, std::span<const RingElem> b) const;
  RingElem trace_of(std::span<const RingElem> v) const;
  // Spectrum of v (requires spectral data).
  RowVector transform(std::span<const RingElem> v) const;
};

using AlgebraPtr = std::shared_ptr<const AmbientAlgebra>;

// R_f with its idempotents and spectral data when f is in class J.
AlgebraPtr univariate_algebra(const Poly& f, std::uint64_t seed = 0);

class Code {
 public:
  Code(AlgebraPtr algebra, HowellBasis basis);

  const AmbientAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const HowellBasis& basis() const { return basis_; }
  // Each basis row times each shift stays in the module.
  bool shift_closed() const { return shift_closed_; }
  bool contains(std::span<const RingElem> v) const { return basis_.contains(v); }
  bool is_zero() const { return basis_.rank() == 0; }
  std::uint64_t log_size() const { return basis_.log_size(); }

  friend bool operator==(const Code& a, const Code& b) { return a.basis_ == b.basis_; }

 private:
  AlgebraPtr alg_;
  HowellBasis basis_;
  bool shift_closed_;
};

// The ideal generated by the given elements: the module spanned by all
// products g * b_k over the basis.
Code code_from_generators(const AlgebraPtr& alg, const std::vector<RowVector>& gens);
Code code_from_generators(const AlgebraPtr& alg, const std::vector<QuotElem>& gens);
Code zero_code(const AlgebraPtr& alg);
Code full_code(const AlgebraPtr& alg);
Code code_sum(const Code& a, const Code& b);

Code annihilator(const Code& c);

enum class DualForm { Star, Trace, Zero };
std::string to_string(DualForm form);
DualForm parse_dual_form(const std::string& s);

// Throws PreconditionError for the zero form when the ambient lacks it, and
// MathError for the star form without spectral data.
Code dual(const Code& c, DualForm form);

struct DualityReport {
  Code ann;
  Code trace;
  std::optional<Code> star;
  std::optional<Code> zero;
  bool trace_eq_ann = false;
  bool star_eq_ann = false;
  bool zero_eq_ann = false;
  bool all_equal = false;  // over the forms that were computed
  std::vector<std::string> notes;
};
DualityReport duality_report(const Code& c);

struct Decomposition {
  // conductors[i] = k_i: the e_i-component of the code is p^{k_i} A e_i
  // (k_i = r when the component is absent).
  std::vector<unsigned> conductors;
  bool free = false;  // every k_i is 0 or r
  // The code equals the sum of its components. Always true when each A e_i
  // is a chain ring; can fail on a non-primitive serial grid component.
  bool exact = false;
};
Decomposition decompose(const Code& c);
// The ideal sum of p^{k_i} A e_i.
Code reassemble(const AlgebraPtr& alg, const std::vector<unsigned>& conductors);
// sum of p^{r - k_i} A e_i; for free codes the sum of the absent components.
Code complementary_code(const AlgebraPtr& alg, const Decomposition& d);

RingMatrix generator_matrix(const Code& c);

struct DistanceResult {
  std::size_t distance = 0;
  bool empty = false;  // zero code: distance reported as 0
  std::uint64_t codewords = 0;
};
inline constexpr std::uint64_t kDistanceBudget = std::uint64_t{1} << 24;
// Exhaustive over the Howell parametrization; throws PreconditionError when
// the code has more than `budget` codewords.
DistanceResult min_distance(const Code& c, std::uint64_t budget = kDistanceBudget);

// ker f_i(E_f) as a row module.
HowellBasis component_kernel(const Poly& f, const Poly& fi);

}  // namespace polycyc
