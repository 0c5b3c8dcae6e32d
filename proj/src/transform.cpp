#include "polycyc/transform.hpp"

namespace polycyc {

VandermondePair vandermonde(const GaloisRing& ring, const std::vector<RingElem>& roots) {
  const std::size_t n = roots.size();
  if (n == 0) throw PreconditionError("Vandermonde matrix needs at least one root");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ring.residue(roots[i]) == ring.residue(roots[j])) {
        throw MathError("roots with equal residues: polynomial is not in class J");
      }
    }
  }
  RingMatrix v(ring, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RingElem pw = ring.one();
    for (std::size_t i = 0; i < n; ++i) {
      v(i, j) = pw;
      pw = ring.mul(pw, roots[j]);
    }
  }
  RingMatrix inv = matrix_inverse(v);
  return {std::move(v), std::move(inv)};
}

VandermondePair vandermonde(const SplittingData& split) {
  return vandermonde(split.extension, split.roots);
}

RingMatrix vandermonde_inverse_symbolic(const GaloisRing& ring, const std::vector<RingElem>& roots) {
  const std::size_t n = roots.size();
  RingMatrix out(ring, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // S[k] = k-th elementary symmetric function of the roots other than alpha_j.
    std::vector<RingElem> s(n, ring.zero());
    s[0] = ring.one();
    std::size_t count = 0;
    RingElem denom = ring.one();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      ++count;
      for (std::size_t d = count; d > 0; --d) ring.add_mul(s[d], s[d - 1], roots[k]);
      denom = ring.mul(denom, ring.sub(roots[j], roots[k]));
    }
    if (!ring.is_unit(denom)) throw MathError("roots with equal residues: polynomial is not in class J");
    const RingElem dinv = ring.invert(denom);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t d = n - 1 - i;
      RingElem c = ring.mul(s[d], dinv);
      out(j, i) = d % 2 == 0 ? c : ring.neg(c);
    }
  }
  return out;
}

RingMatrix map_matrix(const RingMatrix& m, const Embedding& emb) {
  RingMatrix out(emb.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = emb.apply(m(i, j));
  }
  return out;
}

RowVector map_vector(std::span<const RingElem> v, const Embedding& emb) {
  RowVector out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(emb.apply(a));
  return out;
}

MattsonSolomon::MattsonSolomon(SplittingData split)
    : split_(std::move(split)), vp_(polycyc::vandermonde(split_)) {}

Spectrum MattsonSolomon::forward(const QuotElem& g) const {
  if (!(g.ambient().f() == split_.f)) throw PreconditionError("element and splitting data disagree on f");
  return {vec_mul(extension(), map_vector(g.coeffs(), split_.embedding), vp_.V)};
}

QuotElem MattsonSolomon::inverse(const AmbientSpace& ambient, const Spectrum& b) const {
  if (!(ambient.f() == split_.f)) throw PreconditionError("ambient and splitting data disagree on f");
  if (b.values.size() != ambient.n()) throw PreconditionError("spectrum length must equal deg f");
  for (const auto& v : b.values) {
    if (!extension().contains(v)) throw PreconditionError("spectrum value outside the extension");
  }
  const RowVector g = vec_mul(extension(), b.values, vp_.Vinv);
  std::vector<RingElem> coeffs;
  for (const auto& c : g) {
    auto pre = split_.embedding.preimage(c);
    if (!pre) throw MathError("spectrum is not a Mattson-Solomon image: coefficient outside base ring");
    coeffs.push_back(std::move(*pre));
  }
  return QuotElem(ambient, std::move(coeffs));
}

Spectrum ms_transform(const QuotElem& g, const SplittingData& split) {
  return MattsonSolomon(split).forward(g);
}

QuotElem ms_inverse(const Spectrum& b, const AmbientSpace& ambient, const SplittingData& split) {
  return MattsonSolomon(split).inverse(ambient, b);
}

Spectrum star(const GaloisRing& ext, const Spectrum& a, const Spectrum& b) {
  if (a.values.size() != b.values.size()) throw PreconditionError("spectrum length mismatch");
  Spectrum out;
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(ext.mul(a.values[i], b.values[i]));
  return out;
}

RingElem star_inner(const GaloisRing& ext, const Spectrum& a, const Spectrum& b) {
  if (a.values.size() != b.values.size()) throw PreconditionError("spectrum length mismatch");
  RingElem s = ext.zero();
  for (std::size_t i = 0; i < a.values.size(); ++i) ext.add_mul(s, a.values[i], b.values[i]);
  return s;
}

}  // namespace polycyc
