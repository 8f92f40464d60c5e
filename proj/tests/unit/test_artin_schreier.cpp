#include <gtest/gtest.h>

#include "aschar/artin_schreier.hpp"
#include "oracles.hpp"

using namespace aschar;

namespace {

BasisPtr power_basis(int f) {
  return std::make_shared<const TraceBasis>(TraceBasis::power_basis(Field::make(f)));
}

LaurentSeries S(const FieldPtr& F, std::map<int, Bits> terms, int prec) {
  return LaurentSeries::from_terms(F, terms, prec);
}

}  // namespace

TEST(ArtinSchreier, WpWorked) {
  const FieldPtr F = Field::make(1);
  EXPECT_TRUE(wp(LaurentSeries::zero(F, 4)).is_zero());
  EXPECT_TRUE(wp(LaurentSeries::one(F, 4)).is_zero());
  EXPECT_EQ(wp(S(F, {{-1, 1}}, 4)).truncated(1), S(F, {{-2, 1}, {-1, 1}}, 1));
}

TEST(ArtinSchreier, UnramifiedRepresentative) {
  EXPECT_EQ(unramified_representative(*Field::make(1)), 1u);
  EXPECT_EQ(unramified_representative(*Field::make(3)), 1u);
  const FieldPtr F4 = Field::make(2);
  EXPECT_EQ(unramified_representative(*F4), 2u);
  EXPECT_TRUE(F4->trace(unramified_representative(*F4)));
}

TEST(ArtinSchreier, PairingWorked) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    for (int n = 0; n <= 3; ++n) {
      const int m = 2 * n + 1;
      for (int j = 1; j <= f; ++j) {
        const auto beta = S(F, {{-m, basis->element(j)}}, 1);
        for (Bits theta = 1; theta < F->order(); ++theta) {
          // Monomials pair trivially with the wild generators.
          for (int k = -3; k <= 3; ++k) EXPECT_FALSE(pairing(S(F, {{k, theta}}, k + m + 2), beta));
          for (int i = 1; i <= m; ++i) {
            const bool got = pairing(S(F, {{0, 1}, {i, theta}}, m + 2), beta);
            if (m % i != 0) {
              EXPECT_FALSE(got);
            } else if (i == m) {
              EXPECT_EQ(got, F->trace(F->mul(basis->element(j), theta)));
            }
          }
        }
      }
    }
  }
}

TEST(ArtinSchreier, PairingMatchesDefinitionOracle) {
  for (int f = 1; f <= 3; ++f) {
    const FieldPtr F = Field::make(f);
    oracle::Gen gen(70 + f);
    for (int s = 0; s < 500; ++s) {
      const auto beta = gen.coset_series(F, gen.range(0, 9));
      const auto alpha = gen.series(F, gen.range(-4, 4), 11);
      ASSERT_EQ(pairing(alpha, beta), oracle::pairing(alpha, beta));
    }
  }
}

TEST(ArtinSchreier, PairingNeedsPrecision) {
  const FieldPtr F = Field::make(1);
  // χ_{2,1} sees θ_5, so α must be known modulo t^6.
  EXPECT_THROW(pairing(S(F, {{0, 1}, {1, 1}}, 4), S(F, {{-5, 1}}, 1)), InsufficientPrecision);
}

TEST(ArtinSchreier, ClosedFormMatchesResidue) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    oracle::Gen gen(80 + f);
    for (int s = 0; s < 300; ++s) {
      const auto alpha = gen.series(basis->field(), gen.range(-4, 4), 14);
      CosetRep rep(basis);
      if (gen.range(0, 1)) rep.toggle_unramified();
      for (int n = 0; n <= 5; ++n) {
        for (int j = 1; j <= f; ++j) {
          if (gen.range(0, 1)) rep.toggle(n, j);
        }
      }
      ASSERT_EQ(char_eval(rep, alpha), oracle::pairing(alpha, rep.to_series()));
    }
  }
}

TEST(ArtinSchreier, WorkedCharacterFormulas) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const Field& F = *basis->field();
    oracle::Gen gen(90 + f);
    for (int s = 0; s < 300; ++s) {
      ProductExpansion e{basis->field(), 0, 1, {}, 7};
      for (int i = 1; i < 7; ++i) e.thetas.push_back(gen.element(F));
      const LaurentSeries alpha = from_product(e);
      const Bits t1 = e.theta(1), t3 = e.theta(3), t5 = e.theta(5);
      const Bits u = basis->element(1);
      const QuadChar c0 = QuadChar::chi(basis, 0, 1), c1 = QuadChar::chi(basis, 1, 1), c2 = QuadChar::chi(basis, 2, 1);
      if (f == 1) ASSERT_EQ(char_eval(c0, alpha), F.trace(t1));
      ASSERT_EQ(char_eval(c0, alpha), F.trace(F.mul(u, t1)));
      ASSERT_EQ(char_eval(c1, alpha), F.trace(F.mul(u, F.pow(t1, 3) ^ t3)));
      ASSERT_EQ(char_eval(c2, alpha), F.trace(F.mul(u, F.pow(t1, 5) ^ t5)));
      ASSERT_EQ(char_eval(c2, alpha), oracle::pairing(alpha, S(basis->field(), {{-5, u}}, 1)));
    }
  }
}

TEST(ArtinSchreier, UnramifiedCharacterIsValuationParity) {
  const BasisPtr basis = power_basis(2);
  const CosetRep unram = CosetRep::unramified(basis);
  oracle::Gen gen(3);
  for (int s = 0; s < 100; ++s) {
    const int v = gen.range(-6, 6);
    const auto alpha = gen.series(basis->field(), v, 4);
    EXPECT_EQ(char_eval(unram, alpha), (v % 2) != 0);
    EXPECT_EQ(pairing(alpha, unram), (v % 2) != 0);
  }
}

TEST(ArtinSchreier, ReduceCosetWorked) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    oracle::Gen gen(100 + f);
    for (int n = 0; n <= 4; ++n) {
      for (int j = 1; j <= f; ++j) {
        EXPECT_EQ(reduce_coset(S(F, {{-(2 * n + 1), basis->element(j)}}, 1), basis),
                  CosetRep::generator(basis, n, j));
      }
    }
    for (int s = 0; s < 200; ++s) {
      const auto gamma = gen.series(F, gen.range(-5, 3), 8);
      ASSERT_TRUE(reduce_coset(wp(gamma), basis).is_zero());
      const Bits theta = gen.nonzero(*F);
      const int m = gen.range(1, 5);
      ASSERT_EQ(reduce_coset(S(F, {{-2 * m, theta}}, 1), basis),
                reduce_coset(S(F, {{-m, F->sqrt(theta)}}, 1), basis));
      const auto beta = gen.coset_series(F, 9);
      const CosetRep rep = reduce_coset(beta, basis);
      ASSERT_EQ(reduce_coset(rep.to_series(), basis), rep);
      ASSERT_EQ(reduce_coset(beta + wp(gamma), basis), rep);
    }
  }
  EXPECT_THROW(reduce_coset(LaurentSeries::zero(Field::make(2), 0), power_basis(2)), InsufficientPrecision);
  EXPECT_THROW(reduce_coset(LaurentSeries::zero(Field::make(3), 1), power_basis(2)), FieldMismatch);
}

TEST(ArtinSchreier, PairingProperties) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    oracle::Gen gen(110 + f);
    for (int s = 0; s < 300; ++s) {
      const auto a1 = gen.series(F, gen.range(-3, 3), 12);
      const auto a2 = gen.series(F, gen.range(-3, 3), 12);
      const auto b1 = gen.coset_series(F, 9);
      const auto b2 = gen.coset_series(F, 9);
      const int vg = gen.range(-4, 0);
      const auto g = gen.series(F, vg, 2 - vg);
      ASSERT_EQ(pairing(a1 * a2, b1), pairing(a1, b1) != pairing(a2, b1));
      ASSERT_EQ(pairing(a1, b1 + b2), pairing(a1, b1) != pairing(a1, b2));
      ASSERT_FALSE(pairing(a1.square(), b1));
      ASSERT_FALSE(pairing(a1, wp(g)));
      ASSERT_EQ(pairing(a1, b1), pairing(a1, reduce_coset(b1, basis).to_series()));
      // Replacing t by c t changes nothing.
      const Bits c = gen.nonzero(*F);
      ASSERT_EQ(pairing(a1.rescaled(c), b1.rescaled(c)), pairing(a1, b1));
    }
  }
}

TEST(ArtinSchreier, Nondegenerate) {
  for (int f = 1; f <= 2; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    // t and the 1 + θ t^i (i <= 5) generate K^× modulo squares and U^6.
    std::vector<LaurentSeries> probes{S(F, {{1, 1}}, 8)};
    for (int i = 1; i <= 5; ++i) {
      for (Bits theta = 1; theta < F->order(); ++theta) probes.push_back(S(F, {{0, 1}, {i, theta}}, 8));
    }
    const int dim = coset_space_dim(5, f);
    for (gf2::Vec v = 1; v < (gf2::Vec{1} << dim); ++v) {
      const CosetRep rep = CosetRep::from_coordinates(basis, v);
      bool found = false;
      for (const auto& a : probes) found = found || pairing(a, rep);
      EXPECT_TRUE(found) << v;
    }
  }
}

TEST(ArtinSchreier, LevelsAndDimensions) {
  const BasisPtr b2 = power_basis(2);
  EXPECT_EQ(char_level(QuadChar::chi(b2, 0, 1)), 1);
  EXPECT_EQ(char_level(QuadChar::chi(b2, 3, 2)), 7);
  EXPECT_EQ(char_level(QuadChar(CosetRep::unramified(b2))), -1);
  EXPECT_THROW(QuadChar(CosetRep(b2)), ZeroCharacter);
  EXPECT_EQ(coset_space_dim(0, 3), 1);
  EXPECT_EQ(coset_space_dim(1, 1), 2);
  EXPECT_EQ(coset_space_dim(5, 2), 7);
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    for (int n = 0; n <= 9; ++n) {
      std::vector<std::uint64_t> vecs;
      for (int i = 0; i <= n; ++i) {
        for (Bits theta : basis->elements()) {
          vecs.push_back(reduce_coset(S(basis->field(), {{-i, theta}}, 1), basis).coordinates());
        }
      }
      EXPECT_EQ(oracle::rank_by_span(vecs), coset_space_dim(n, f)) << f << " " << n;
    }
  }
}

TEST(ArtinSchreier, LevelLawOnUnitGroups) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    oracle::Gen gen(120 + f);
    for (int n = 0; n <= 4; ++n) {
      const int m = 2 * n + 1;
      for (int j = 1; j <= f; ++j) {
        const QuadChar chi = QuadChar::chi(basis, n, j);
        bool nontrivial = false;
        for (Bits theta = 1; theta < F->order(); ++theta) {
          nontrivial = nontrivial || char_eval(chi, S(F, {{0, 1}, {m, theta}}, m + 1));
        }
        EXPECT_TRUE(nontrivial);
        for (int s = 0; s < 50; ++s) {
          const auto alpha = LaurentSeries::one(F, m + 5) + gen.series(F, gen.range(m + 1, m + 4), 8).truncated(m + 5);
          ASSERT_FALSE(char_eval(chi, alpha));
        }
      }
    }
  }
}

TEST(ArtinSchreier, CosetCoordinates) {
  const BasisPtr basis = power_basis(3);
  oracle::Gen gen(9);
  for (int s = 0; s < 200; ++s) {
    const gf2::Vec v = gen.rng() % (1u << 13);
    const CosetRep rep = CosetRep::from_coordinates(basis, v);
    ASSERT_EQ(rep.coordinates(), v);
    ASSERT_EQ(rep.unram_bit(), (v & 1) != 0);
    const CosetRep other = CosetRep::from_coordinates(basis, v ^ 0b1010);
    ASSERT_EQ((rep + other).coordinates(), gf2::Vec{0b1010});
  }
  EXPECT_EQ(CosetRep::generator(basis, 2, 3).coordinates(), gf2::Vec{1} << coset_coordinate(2, 3, 3));
  CosetRep r(basis);
  EXPECT_THROW(r.toggle(0, 4), PreconditionViolated);
  EXPECT_THROW(r.toggle(-1, 1), PreconditionViolated);
}

TEST(ArtinSchreier, NonPowerBasis) {
  const FieldPtr F = Field::make(3);
  const auto basis = std::make_shared<const TraceBasis>(TraceBasis::from_elements(F, {0b011, 0b110, 0b111}));
  oracle::Gen gen(12);
  for (int s = 0; s < 200; ++s) {
    const auto beta = gen.coset_series(F, 7);
    const auto alpha = gen.series(F, gen.range(-3, 3), 10);
    const CosetRep rep = reduce_coset(beta, basis);
    ASSERT_EQ(char_eval(rep, alpha), oracle::pairing(alpha, beta));
  }
}
