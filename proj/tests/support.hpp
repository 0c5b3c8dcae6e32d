#pragma once

// Brute-force oracles shared by the unit tests and the acceptance driver.
// Everything here works by enumeration and never calls the Howell machinery.

#include "polycyc/serial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace polycyc::oracle {

inline GaloisRing Z(unsigned p, unsigned r) { return GaloisRing(p, r, 1u); }

inline Poly P(const GaloisRing& R, std::initializer_list<std::int64_t> c) { return Poly::from_ints(R, c); }

inline QuotElem Q(const AmbientSpace& A, std::initializer_list<std::int64_t> c) {
  return QuotElem::from_poly(A, Poly::from_ints(A.ring(), c));
}

// Vectors of length n over R encoded as mixed-radix integers, with addition
// done digitwise through a table of ring sums.
class VectorCodec {
 public:
  VectorCodec(GaloisRing ring, std::size_t n) : ring_(std::move(ring)), n_(n) {
    q_ = *ring_.cardinality();
    elems_ = ring_.elements();
    add_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b)
        add_[a * q_ + b] = static_cast<std::uint32_t>(ring_.index_of(ring_.add(elems_[a], elems_[b])));
    total_ = 1;
    for (std::size_t i = 0; i < n_; ++i) total_ *= q_;
  }

  std::uint64_t total() const { return total_; }
  std::size_t length() const { return n_; }
  const GaloisRing& ring() const { return ring_; }

  std::uint64_t encode(std::span<const RingElem> v) const {
    std::uint64_t k = 0;
    for (std::size_t i = n_; i-- > 0;) k = k * q_ + ring_.index_of(v[i]);
    return k;
  }
  RowVector decode(std::uint64_t k) const {
    RowVector v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = elems_[k % q_];
      k /= q_;
    }
    return v;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out += scale * add_[(a % q_) * q_ + (b % q_)];
      a /= q_;
      b /= q_;
      scale *= q_;
    }
    return out;
  }

 private:
  GaloisRing ring_;
  std::size_t n_;
  std::uint64_t q_ = 0, total_ = 0;
  std::vector<RingElem> elems_;
  std::vector<std::uint32_t> add_;
};

// A set of vectors as a membership table over all encodings.
struct VecSet {
  std::vector<char> member;
  std::vector<std::uint64_t> elements;
  friend bool operator==(const VecSet& a, const VecSet& b) { return a.member == b.member; }
  friend bool operator<(const VecSet& a, const VecSet& b) { return a.member < b.member; }
};

// The R-span of `gens`, by closing {0} under addition of y^t g.
inline VecSet span_set(const VectorCodec& codec, const std::vector<RowVector>& gens) {
  const GaloisRing& R = codec.ring();
  std::vector<std::uint64_t> steps;
  RingElem yt = R.one();
  for (unsigned t = 0; t < R.degree(); ++t) {
    for (const auto& g : gens) steps.push_back(codec.encode(vec_scale(R, yt, g)));
    yt = R.mul(yt, R.generator());
  }
  VecSet s;
  s.member.assign(codec.total(), 0);
  s.member[0] = 1;
  s.elements.push_back(0);
  for (std::size_t head = 0; head < s.elements.size(); ++head) {
    const std::uint64_t u = s.elements[head];
    for (std::uint64_t g : steps) {
      const std::uint64_t w = codec.add(u, g);
      if (!s.member[w]) {
        s.member[w] = 1;
        s.elements.push_back(w);
      }
    }
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

inline VecSet span_of_matrix(const VectorCodec& codec, const RingMatrix& m) { return span_set(codec, m.row_list()); }

struct BruteIdeal {
  VecSet set;
  std::vector<RowVector> gens;  // additive generators over R
};

// All ideals of R[x]/<f>: distinct principal ideals, closed under sums.
inline std::vector<BruteIdeal> enumerate_ideals(const AmbientSpace& A) {
  const VectorCodec codec(A.ring(), A.n());
  std::map<std::vector<char>, std::vector<RowVector>> found;
  for (std::uint64_t idx = 0; idx < codec.total(); ++idx) {
    QuotElem g(A, codec.decode(idx));
    std::vector<RowVector> gens;
    for (std::size_t k = 0; k < A.n(); ++k) {
      gens.push_back(g.coeffs());
      g = g.times_x();
    }
    VecSet s = span_set(codec, gens);
    found.emplace(std::move(s.member), std::move(gens));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<RowVector>> current;
    for (const auto& [_, gens] : found) current.push_back(gens);
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        std::vector<RowVector> gens = current[a];
        gens.insert(gens.end(), current[b].begin(), current[b].end());
        VecSet s = span_set(codec, gens);
        if (!found.count(s.member)) {
          found.emplace(std::move(s.member), std::move(gens));
          grew = true;
        }
      }
    }
  }
  std::vector<BruteIdeal> out;
  for (auto& [member, gens] : found) {
    BruteIdeal I;
    I.set.member = member;
    for (std::uint64_t k = 0; k < member.size(); ++k)
      if (member[k]) I.set.elements.push_back(k);
    I.gens = gens;
    out.push_back(std::move(I));
  }
  return out;
}

// {h : h g = 0 for every generator g} for the multiplication `mul`.
template <class Mul>
VecSet annihilator_set(const VectorCodec& codec, const std::vector<RowVector>& gens, Mul&& mul) {
  VecSet s;
  s.member.assign(codec.total(), 0);
  for (std::uint64_t k = 0; k < codec.total(); ++k) {
    const RowVector h = codec.decode(k);
    bool kills = true;
    for (const auto& g : gens) {
      if (!vec_is_zero(codec.ring(), mul(h, g))) {
        kills = false;
        break;
      }
    }
    if (kills) {
      s.member[k] = 1;
      s.elements.push_back(k);
    }
  }
  return s;
}

// {h : tr(h g) = 0 for every generator g}, tr the trace of multiplication.
template <class Trace>
VecSet trace_orthogonal_set(const VectorCodec& codec, const std::vector<RowVector>& gens, Trace&& tr) {
  VecSet s;
  s.member.assign(codec.total(), 0);
  for (std::uint64_t k = 0; k < codec.total(); ++k) {
    const RowVector h = codec.decode(k);
    bool orth = true;
    for (const auto& g : gens) {
      if (!codec.ring().is_zero(tr(h, g))) {
        orth = false;
        break;
      }
    }
    if (orth) {
      s.member[k] = 1;
      s.elements.push_back(k);
    }
  }
  return s;
}

// Every e in R_f with e^2 = e.
inline std::vector<QuotElem> all_idempotents(const AmbientSpace& A) {
  const VectorCodec codec(A.ring(), A.n());
  std::vector<QuotElem> out;
  for (std::uint64_t k = 0; k < codec.total(); ++k) {
    QuotElem e(A, codec.decode(k));
    if (e * e == e) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sums over all subsets of `idems`.
inline std::vector<QuotElem> subset_sums(const AmbientSpace& A, const std::vector<QuotElem>& idems) {
  std::vector<QuotElem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idems.size()); ++mask) {
    QuotElem s = QuotElem::zero(A);
    for (std::size_t i = 0; i < idems.size(); ++i)
      if (mask >> i & 1) s = s + idems[i];
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Direct polynomial evaluation g(a) in the extension.
inline RingElem eval_mapped(const QuotElem& g, const Embedding& emb, const RingElem& a) {
  const GaloisRing& E = emb.target();
  RingElem acc = E.zero();
  for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = E.add(E.mul(acc, a), emb.apply(g.coeffs()[i]));
  return acc;
}

// Minimum nonzero weight by listing the span.
inline std::size_t brute_min_weight(const VectorCodec& codec, const VecSet& s) {
  std::size_t best = 0;
  for (std::uint64_t k : s.elements) {
    if (k == 0) continue;
    const std::size_t w = hamming_weight(codec.ring(), codec.decode(k));
    if (best == 0 || w < best) best = w;
  }
  return best;
}

}  // namespace polycyc::oracle
