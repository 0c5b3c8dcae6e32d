#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace polycyc;
using namespace polycyc::oracle;

TEST(Dft, Examples) {
  const ModularIntegers z15(15);
  const auto bad = dft_invertible(z15, 2, 4);
  EXPECT_FALSE(bad.invertible);
  EXPECT_EQ(*bad.failing_k, 2u);
  EXPECT_EQ(*bad.witness, 3u);
  EXPECT_TRUE(dft_invertible(ModularIntegers(5), 2, 4).invertible);
  const GaloisRing z9 = Z(3, 2);
  EXPECT_TRUE(dft_invertible(z9, z9.from_int(8), 2).invertible);
  EXPECT_THROW(dft_invertible(z15, 2, 3), PreconditionError);
  EXPECT_THROW(dft_invertible(z15, 1, 4), PreconditionError);
}

TEST(Dft, DivisorClosure) {
  // Every xi of order dividing N in Z_M for small M, every divisor L.
  for (std::uint64_t modulus : {5u, 7u, 9u, 13u, 15u, 16u, 17u, 21u, 25u, 27u}) {
    const ModularIntegers zm(modulus);
    for (std::uint64_t xi = 2; xi < modulus; ++xi) {
      for (unsigned n = 2; n <= 16; ++n) {
        if (zm.pow(xi, n) != 1) continue;
        const auto res = dft_invertible(zm, xi, n);
        if (!res.invertible) continue;
        for (unsigned l = 2; l <= n; ++l) {
          if (n % l != 0) continue;
          const std::uint64_t sub = zm.pow(xi, n / l);
          if (sub == 1) continue;
          ASSERT_TRUE(dft_invertible(zm, sub, l).invertible) << modulus << " " << xi << " " << n << " " << l;
        }
      }
    }
  }
}

TEST(Vandermonde, Examples) {
  const GaloisRing gr(2, 2, 2u);
  const RingElem y = gr.generator(), w = gr.from_coeffs(std::vector<std::int64_t>{3, 3});
  const VandermondePair vp = vandermonde(gr, {gr.one(), y, w});
  EXPECT_EQ(vp.V.row(2), (RowVector{gr.one(), w, y}));
  EXPECT_EQ(vp.V * vp.Vinv, RingMatrix::identity(gr, 3));
  EXPECT_EQ(vandermonde_inverse_symbolic(gr, {gr.one(), y, w}), vp.Vinv);
  const GaloisRing z4 = Z(2, 2);
  const VandermondePair one = vandermonde(z4, {z4.from_int(3)});
  EXPECT_EQ(one.V, RingMatrix::identity(z4, 1));
  EXPECT_EQ(one.Vinv, RingMatrix::identity(z4, 1));
  const GaloisRing z9 = Z(3, 2);
  const VandermondePair two = vandermonde(z9, {z9.one(), z9.from_int(8)});
  EXPECT_EQ(two.V.row(1), (RowVector{z9.one(), z9.from_int(8)}));
  EXPECT_EQ(two.V * two.Vinv, RingMatrix::identity(z9, 2));
  EXPECT_EQ(vandermonde_inverse_symbolic(z9, {z9.one(), z9.from_int(8)}), two.Vinv);
  EXPECT_THROW(vandermonde(z9, {z9.one(), z9.from_int(4)}), MathError);
}

TEST(Vandermonde, SymbolicInverseAgrees) {
  for (const Poly& f : {P(Z(2, 2), {3, 0, 0, 0, 0, 0, 0, 1}), P(Z(3, 2), {8, 0, 0, 0, 1}), P(Z(5, 2), {24, 0, 0, 0, 1}),
                        P(GaloisRing(2, 3, 2u), {3, 0, 0, 0, 0, 1})}) {
    const SplittingData s = splitting_extension(f);
    const VandermondePair vp = vandermonde(s);
    ASSERT_EQ(vp.V * vp.Vinv, RingMatrix::identity(s.extension, s.roots.size()));
    ASSERT_EQ(vandermonde_inverse_symbolic(s.extension, s.roots), vp.Vinv);
  }
}

TEST(MattsonSolomon, Examples) {
  const GaloisRing z4 = Z(2, 2);
  const AmbientSpace A(P(z4, {3, 0, 0, 1}));
  const MattsonSolomon ms(splitting_extension(A.f()));
  const GaloisRing& E = ms.extension();
  const RingElem one = E.one(), zero = E.zero();
  EXPECT_EQ(ms.forward(QuotElem::one(A)).values, (RowVector{one, one, one}));
  EXPECT_EQ(ms.forward(QuotElem::x(A)).values, (RowVector{one, E.generator(), E.from_coeffs(std::vector<std::int64_t>{3, 3})}));
  EXPECT_EQ(ms.forward(Q(A, {3, 3, 3})).values, (RowVector{one, zero, zero}));
  EXPECT_EQ(ms.inverse(A, Spectrum{{one, zero, zero}}), Q(A, {3, 3, 3}));
  EXPECT_THROW(ms.inverse(A, Spectrum{{E.generator(), zero, zero}}), MathError);
  EXPECT_EQ(ms_transform(QuotElem::x(A), ms.splitting()).values, ms.forward(QuotElem::x(A)).values);
}

TEST(MattsonSolomon, ExhaustiveSmallAmbients) {
  for (const Poly& f : {P(Z(2, 2), {3, 0, 0, 1}), P(Z(3, 2), {8, 0, 1}), P(Z(2, 2), {3, 3, 2, 1}), P(Z(2, 3), {7, 0, 1, 1})}) {
    const AmbientSpace A(f);
    const MattsonSolomon ms(splitting_extension(f));
    const GaloisRing& E = ms.extension();
    const VectorCodec codec(A.ring(), A.n());
    ASSERT_LE(codec.total(), 4096u);
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<QuotElem> all;
    std::vector<Spectrum> spec;
    for (std::uint64_t k = 0; k < codec.total(); ++k) {
      all.emplace_back(A, codec.decode(k));
      spec.push_back(ms.forward(all.back()));
      std::vector<std::uint64_t> key;
      for (std::size_t i = 0; i < spec.back().values.size(); ++i) {
        ASSERT_EQ(spec.back().values[i], eval_mapped(all.back(), ms.splitting().embedding, ms.splitting().roots[i]));
        key.push_back(E.index_of(spec.back().values[i]));
      }
      ASSERT_TRUE(seen.insert(key).second);
      ASSERT_EQ(ms.inverse(A, spec.back()), all.back());
    }
    if (codec.total() <= 256) {
      for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = 0; b < all.size(); ++b) {
          ASSERT_EQ(ms.forward(all[a] * all[b]).values, star(E, spec[a], spec[b]).values);
          ASSERT_EQ(ms.forward(all[a] + all[b]).values, vec_add(E, spec[a].values, spec[b].values));
        }
      }
    }
  }
}

TEST(MattsonSolomon, IdempotentSpectraPartition) {
  for (const Poly& f : {P(Z(2, 2), {3, 0, 0, 0, 0, 0, 0, 1}), P(Z(3, 2), {8, 0, 0, 0, 1}), P(GaloisRing(2, 2, 2u), {3, 0, 0, 1})}) {
    const IdempotentSet ids = idempotents(f);
    const MattsonSolomon ms(splitting_extension(f));
    const GaloisRing& E = ms.extension();
    std::vector<int> owner(static_cast<std::size_t>(f.degree()), -1);
    for (std::size_t i = 0; i < ids.idems.size(); ++i) {
      const Spectrum b = ms.forward(ids.idems[i]);
      for (std::size_t j = 0; j < b.values.size(); ++j) {
        ASSERT_TRUE(E.is_zero(b.values[j]) || E.is_one(b.values[j]));
        if (E.is_one(b.values[j])) {
          ASSERT_EQ(owner[j], -1);
          owner[j] = static_cast<int>(i);
        }
      }
    }
    for (int o : owner) ASSERT_NE(o, -1);
  }
}

TEST(MattsonSolomon, DiagonalizesTheRegularRepresentation) {
  std::mt19937_64 rng(8);
  for (const Poly& f : {P(Z(2, 2), {3, 0, 0, 1}), P(Z(3, 2), {8, 0, 0, 0, 1}), P(Z(2, 2), {3, 3, 2, 1})}) {
    const AmbientSpace A(f);
    const MattsonSolomon ms(splitting_extension(f));
    const auto& vp = ms.vandermonde();
    for (int t = 0; t < 30; ++t) {
      RowVector c;
      for (std::size_t i = 0; i < A.n(); ++i) c.push_back(A.ring().random(rng));
      const QuotElem g(A, c);
      const RingMatrix D = vp.Vinv * map_matrix(regular_rep(g), ms.splitting().embedding) * vp.V;
      ASSERT_EQ(D, RingMatrix::diagonal(ms.extension(), ms.forward(g).values));
    }
  }
}

TEST(MattsonSolomon, CyclicCaseIsTheDft) {
  // f = x^N - 1 over Z_9 with N = 2 and over Z_25 with N = 4: the roots are
  // the powers of a primitive root xi, and MS is g -> (g(xi^j)).
  for (const auto& [p, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {5, 4}}) {
    const GaloisRing R = Z(p, 2);
    std::vector<RingElem> fc(n + 1, R.zero());
    fc[0] = R.from_int(-1);
    fc[n] = R.one();
    const Poly f(R, fc);
    const AmbientSpace A(f);
    const SplittingData s = splitting_extension(f);
    ASSERT_EQ(s.extension, R);
    // Find a primitive N-th root among the roots.
    RingElem xi = R.one();
    for (const auto& a : s.roots) {
      bool primitive = true;
      RingElem pw = R.one();
      for (unsigned k = 1; k < n; ++k) {
        pw = R.mul(pw, a);
        primitive = primitive && !R.is_one(pw);
      }
      if (primitive) xi = a;
    }
    ASSERT_TRUE(dft_invertible(R, xi, n).invertible);
    const VectorCodec codec(R, n);
    const MattsonSolomon ms(s);
    for (std::uint64_t k = 0; k < codec.total(); k += 7) {
      const QuotElem g(A, codec.decode(k));
      const Spectrum b = ms.forward(g);
      for (unsigned j = 0; j < n; ++j) {
        const RingElem at = R.pow(xi, j);
        const auto pos = std::find(s.roots.begin(), s.roots.end(), at) - s.roots.begin();
        RingElem dft = R.zero();
        for (unsigned i = 0; i < n; ++i) dft = R.add(dft, R.mul(g.coeffs()[i], R.pow(xi, static_cast<std::uint64_t>(i) * j)));
        ASSERT_EQ(b.values[static_cast<std::size_t>(pos)], dft);
      }
    }
  }
}

TEST(MattsonSolomon, StarInner) {
  const GaloisRing z4 = Z(2, 2);
  const Spectrum a{{z4.one(), z4.from_int(2)}}, b{{z4.from_int(3), z4.from_int(2)}};
  EXPECT_EQ(star_inner(z4, a, b), z4.from_int(3));
  EXPECT_EQ(star(z4, a, b).values, (RowVector{z4.from_int(3), z4.zero()}));
}
