#include "polycyc/codes.hpp"

#include <algorithm>

namespace polycyc {

RowVector AmbientAlgebra::mul(std::span<const RingElem> a, std::span<const RingElem> b) const {
  return vec_mul(ring, a, rep(b));
}

RingElem AmbientAlgebra::trace_of(std::span<const RingElem> v) const {
  RingElem t = ring.zero();
  for (std::size_t k = 0; k < dim; ++k) ring.add_mul(t, v[k], trace_vector[k]);
  return t;
}

RowVector AmbientAlgebra::transform(std::span<const RingElem> v) const {
  if (!spectral) throw MathError("no Mattson-Solomon transform: ambient is not in class J");
  return vec_mul(spectral->extension, map_vector(v, spectral->embedding), spectral->V);
}

namespace {

RowVector unit_vector(const GaloisRing& ring, std::size_t n, std::size_t k) {
  RowVector v = zero_vector(ring, n);
  v[k] = ring.one();
  return v;
}

void fill_trace_vector(AmbientAlgebra& a) {
  a.trace_vector.clear();
  for (std::size_t k = 0; k < a.dim; ++k) a.trace_vector.push_back(trace(a.rep(unit_vector(a.ring, a.dim, k))));
}

}  // namespace

AlgebraPtr univariate_algebra(const Poly& f, std::uint64_t seed) {
  const AmbientSpace amb(f);
  auto a = std::make_shared<AmbientAlgebra>(f.ring());
  a->dim = amb.n();
  a->description = "R[x]/<" + f.to_string() + ">";
  a->shifts = {amb.companion()};
  a->rep = [amb](std::span<const RingElem> v) {
    return regular_rep(QuotElem(amb, std::vector<RingElem>(v.begin(), v.end())));
  };
  a->one = QuotElem::one(amb).coeffs();
  fill_trace_vector(*a);
  if (f.ring().is_zero(f.coeff(0))) {
    a->zero_form = false;
    a->zero_form_note = "f_0 = 0: the constant-term form is degenerate";
  } else {
    a->zero_form = true;
    if (!f.ring().is_unit(f.coeff(0))) {
      a->zero_form_note = "f_0 is a nonzero non-unit: the constant-term form is degenerate";
    }
  }
  if (in_class_J(f)) {
    SplittingData split = splitting_extension(f, seed);
    VandermondePair vp = vandermonde(split);
    a->spectral = SpectralData{split.extension, split.embedding, std::move(vp.V), std::move(vp.Vinv)};
    const IdempotentSet ids = idempotents(f, seed);
    for (std::size_t i = 0; i < ids.idems.size(); ++i) {
      a->idems.push_back(ids.idems[i].coeffs());
      a->idem_labels.push_back(ids.factorization.factors[i].to_string());
    }
  }
  return a;
}

Code::Code(AlgebraPtr algebra, HowellBasis basis) : alg_(std::move(algebra)), basis_(std::move(basis)) {
  if (basis_.width() != alg_->dim) throw PreconditionError("code width does not match the ambient");
  shift_closed_ = true;
  for (const auto& s : alg_->shifts) {
    for (std::size_t i = 0; i < basis_.rank() && shift_closed_; ++i) {
      if (!basis_.contains(vec_mul(alg_->ring, basis_.matrix().row(i), s))) shift_closed_ = false;
    }
  }
}

Code code_from_generators(const AlgebraPtr& alg, const std::vector<RowVector>& gens) {
  RingMatrix rows(alg->ring, 0, alg->dim);
  for (const auto& g : gens) {
    if (g.size() != alg->dim) throw PreconditionError("generator length does not match the ambient");
    for (const auto& c : g) {
      if (!alg->ring.contains(c)) throw PreconditionError("generator coefficient outside base ring");
    }
    rows = rows.stack(alg->rep(g));
  }
  return Code(alg, HowellBasis(rows));
}

Code code_from_generators(const AlgebraPtr& alg, const std::vector<QuotElem>& gens) {
  std::vector<RowVector> rows;
  for (const auto& g : gens) {
    if (g.coeffs().size() != alg->dim || !(g.ambient().ring() == alg->ring)) {
      throw PreconditionError("generator ambient mismatch");
    }
    rows.push_back(g.coeffs());
  }
  return code_from_generators(alg, rows);
}

Code zero_code(const AlgebraPtr& alg) { return Code(alg, HowellBasis(RingMatrix(alg->ring, 0, alg->dim))); }

Code full_code(const AlgebraPtr& alg) {
  return Code(alg, HowellBasis(RingMatrix::identity(alg->ring, alg->dim)));
}

Code code_sum(const Code& a, const Code& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw PreconditionError("codes live in different ambients");
  return Code(a.algebra_ptr(), HowellBasis(a.basis().matrix().stack(b.basis().matrix())));
}

Code annihilator(const Code& c) {
  const AmbientAlgebra& alg = c.algebra();
  if (c.is_zero()) return full_code(c.algebra_ptr());
  RingMatrix big(alg.ring, alg.dim, 0);
  for (std::size_t i = 0; i < c.basis().rank(); ++i) big = big.concat(alg.rep(c.basis().matrix().row(i)));
  return Code(c.algebra_ptr(), kernel(big));
}

std::string to_string(DualForm form) {
  switch (form) {
    case DualForm::Star: return "star";
    case DualForm::Trace: return "trace";
    case DualForm::Zero: return "zero";
  }
  return "?";
}

DualForm parse_dual_form(const std::string& s) {
  if (s == "star") return DualForm::Star;
  if (s == "trace") return DualForm::Trace;
  if (s == "zero") return DualForm::Zero;
  throw ParseError("unknown dual form '" + s + "' (expected star, trace or zero)");
}

namespace {

// {h : <g, h> = 0 for every basis row g}, where <g, h> = h * column(g).
Code dual_by_columns(const Code& c, const std::function<RowVector(std::span<const RingElem>)>& column) {
  const AmbientAlgebra& alg = c.algebra();
  RingMatrix cols(alg.ring, alg.dim, c.basis().rank());
  for (std::size_t i = 0; i < c.basis().rank(); ++i) {
    const RowVector col = column(c.basis().matrix().row(i));
    for (std::size_t k = 0; k < alg.dim; ++k) cols(k, i) = col[k];
  }
  return Code(c.algebra_ptr(), kernel(cols));
}

// Star dual. The condition sum_k emb(h_k) c_k = 0 in the extension, with
// c_k = sum_i V(k, i) MS(g)_i, is linear over Z_{p^r}; it is solved there
// coordinate by coordinate and the solutions are read back as vectors over R.
Code star_dual(const Code& c) {
  const AmbientAlgebra& alg = c.algebra();
  if (!alg.spectral) throw MathError("star dual needs the Mattson-Solomon transform (class J)");
  const SpectralData& sp = *alg.spectral;
  const GaloisRing& R = alg.ring;
  const GaloisRing& E = sp.extension;
  const GaloisRing Z(R.p(), R.nilpotency(), 1u);
  const std::size_t m = R.degree(), big_m = E.degree(), n = alg.dim;

  std::vector<RingElem> basis_images;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<std::int64_t> coords(m, 0);
    coords[t] = 1;
    basis_images.push_back(sp.embedding.apply(R.from_coeffs(coords)));
  }

  RingMatrix sys(Z, n * m, 0);
  for (std::size_t g = 0; g < c.basis().rank(); ++g) {
    const RowVector spec = alg.transform(c.basis().matrix().row(g));
    const RowVector ck = vec_mul(E, spec, sp.V.transpose());
    RingMatrix block(Z, n * m, big_m);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t t = 0; t < m; ++t) {
        const RingElem v = E.mul(basis_images[t], ck[k]);
        for (std::size_t s = 0; s < big_m; ++s) block(k * m + t, s) = Z.from_int(v[s]);
      }
    }
    sys = sys.concat(block);
  }
  const HowellBasis kz = kernel(sys);
  std::vector<RowVector> rows;
  for (std::size_t i = 0; i < kz.rank(); ++i) {
    RowVector h;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::int64_t> coords;
      for (std::size_t t = 0; t < m; ++t) coords.push_back(kz.matrix()(i, k * m + t)[0]);
      h.push_back(R.from_coeffs(coords));
    }
    rows.push_back(std::move(h));
  }
  return Code(c.algebra_ptr(), HowellBasis(RingMatrix::from_rows(R, n, rows)));
}

}  // namespace

Code dual(const Code& c, DualForm form) {
  const AmbientAlgebra& alg = c.algebra();
  switch (form) {
    case DualForm::Trace:
      return dual_by_columns(c, [&](std::span<const RingElem> g) {
        return vec_mul(alg.ring, alg.trace_vector, alg.rep(g).transpose());
      });
    case DualForm::Zero:
      if (!alg.zero_form) {
        throw PreconditionError("constant-term form unavailable: " +
                                (alg.zero_form_note.empty() ? std::string("not a univariate ambient")
                                                            : alg.zero_form_note));
      }
      return dual_by_columns(c, [&](std::span<const RingElem> g) {
        const RingMatrix m = alg.rep(g);
        RowVector col;
        for (std::size_t k = 0; k < alg.dim; ++k) col.push_back(m(k, 0));
        return col;
      });
    case DualForm::Star:
      return star_dual(c);
  }
  throw PreconditionError("unknown dual form");
}

DualityReport duality_report(const Code& c) {
  const AmbientAlgebra& alg = c.algebra();
  DualityReport rep{annihilator(c), dual(c, DualForm::Trace), std::nullopt, std::nullopt, false, false, false, false, {}};
  rep.trace_eq_ann = rep.trace == rep.ann;
  rep.all_equal = rep.trace_eq_ann;
  if (alg.spectral) {
    rep.star = dual(c, DualForm::Star);
    rep.star_eq_ann = *rep.star == rep.ann;
    rep.all_equal = rep.all_equal && rep.star_eq_ann;
  } else {
    rep.notes.push_back("star dual skipped: ambient is not in class J");
  }
  if (alg.zero_form) {
    rep.zero = dual(c, DualForm::Zero);
    rep.zero_eq_ann = *rep.zero == rep.ann;
    rep.all_equal = rep.all_equal && rep.zero_eq_ann;
  }
  if (!alg.zero_form_note.empty()) rep.notes.push_back(alg.zero_form_note);
  return rep;
}

Decomposition decompose(const Code& c) {
  const AmbientAlgebra& alg = c.algebra();
  if (alg.idems.empty()) throw MathError("decomposition needs idempotents: ambient is not in class J");
  const unsigned r = alg.ring.nilpotency();
  Decomposition d;
  d.free = true;
  for (const auto& e : alg.idems) {
    unsigned k = r;
    for (std::size_t i = 0; i < c.basis().rank(); ++i) {
      const RowVector v = alg.mul(e, c.basis().matrix().row(i));
      for (const auto& x : v) k = std::min(k, alg.ring.valuation(x));
    }
    d.conductors.push_back(k);
    if (k != 0 && k != r) d.free = false;
  }
  d.exact = reassemble(c.algebra_ptr(), d.conductors) == c;
  return d;
}

Code reassemble(const AlgebraPtr& alg, const std::vector<unsigned>& conductors) {
  if (conductors.size() != alg->idems.size()) throw PreconditionError("one conductor per idempotent expected");
  const unsigned r = alg->ring.nilpotency();
  RowVector g = zero_vector(alg->ring, alg->dim);
  for (std::size_t i = 0; i < conductors.size(); ++i) {
    if (conductors[i] > r) throw PreconditionError("conductor exponent exceeds nilpotency");
    if (conductors[i] == r) continue;
    const RingElem pk = alg->ring.pow(alg->ring.from_int(alg->ring.p()), conductors[i]);
    g = vec_add(alg->ring, g, vec_scale(alg->ring, pk, alg->idems[i]));
  }
  return code_from_generators(alg, std::vector<RowVector>{g});
}

Code complementary_code(const AlgebraPtr& alg, const Decomposition& d) {
  std::vector<unsigned> comp;
  for (unsigned k : d.conductors) comp.push_back(alg->ring.nilpotency() - k);
  return reassemble(alg, comp);
}

RingMatrix generator_matrix(const Code& c) { return c.basis().matrix(); }

DistanceResult min_distance(const Code& c, std::uint64_t budget) {
  const AmbientAlgebra& alg = c.algebra();
  const GaloisRing& ring = alg.ring;
  DistanceResult out;
  if (c.is_zero()) {
    out.empty = true;
    out.codewords = 1;
    return out;
  }
  const auto size = c.basis().size();
  if (!size || *size > budget) {
    throw PreconditionError("code too large for exhaustive minimum distance (budget " +
                            std::to_string(budget) + " codewords)");
  }
  out.codewords = *size;

  struct Digit {
    std::uint64_t radix;
    RowVector step;  // y^t b_j
    RowVector wrap;  // radix * step
  };
  std::vector<Digit> digits;
  const auto vals = c.basis().pivot_valuations();
  for (std::size_t j = 0; j < c.basis().rank(); ++j) {
    const unsigned s = ring.nilpotency() - vals[j];
    std::uint64_t radix = 1;
    for (unsigned i = 0; i < s; ++i) radix *= ring.p();
    for (unsigned t = 0; t < ring.degree(); ++t) {
      std::vector<std::int64_t> coords(ring.degree(), 0);
      coords[t] = 1;
      RowVector step = vec_scale(ring, ring.from_coeffs(coords), c.basis().matrix().row(j));
      RowVector wrap = vec_scale(ring, ring.from_int(static_cast<std::int64_t>(radix)), step);
      digits.push_back({radix, std::move(step), std::move(wrap)});
    }
  }

  std::vector<std::uint64_t> counter(digits.size(), 0);
  RowVector word = zero_vector(ring, alg.dim);
  std::size_t best = alg.dim + 1;
  for (std::uint64_t iter = 1; iter < *size; ++iter) {
    for (std::size_t d = 0; d < digits.size(); ++d) {
      word = vec_add(ring, word, digits[d].step);
      if (++counter[d] < digits[d].radix) break;
      counter[d] = 0;
      word = vec_sub(ring, word, digits[d].wrap);
    }
    const std::size_t w = hamming_weight(ring, word);
    if (w < best) {
      best = w;
      if (best == 1) break;
    }
  }
  out.distance = best;
  return out;
}

HowellBasis component_kernel(const Poly& f, const Poly& fi) {
  return kernel(eval_at_matrix(fi, AmbientSpace(f).companion()));
}

}  // namespace polycyc
