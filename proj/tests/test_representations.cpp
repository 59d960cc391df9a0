#include <gtest/gtest.h>

#include <random>

#include "uvbraid/representations.hpp"

using namespace uvb;

namespace {

RatFunc var(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }

Word random_word(std::mt19937_64& rng, const GroupSpec& spec, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.n - 1));
    int exp = rng() % 2 ? 1 : -1;
    if (rng() % 2) {
      w.letters.push_back({Generator::rho(i), exp});
    } else {
      w.letters.push_back({Generator::sigma(i, 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.c))), exp});
    }
  }
  return w;
}

}  // namespace

TEST(BuildLocalRep, UpsilonSymbolic) {
  LocalRep rep = build_local_rep(Family::Upsilon, make_spec("uv", 3, 1));
  RatFunc r2 = var("r2");
  EXPECT_EQ(rep.rho_block(), (RMatrix{{RatFunc(0), r2}, {RatFunc(1) / r2, RatFunc(0)}}));
  EXPECT_EQ(rep.sigma_block(1), (RMatrix{{var("s1_1"), var("s2_1")}, {var("s3_1"), var("s4_1")}}));
  ASSERT_EQ(rep.side_conditions.size(), 2u);
  EXPECT_EQ(rep.side_conditions[0].expr, r2);
  EXPECT_EQ(rep.side_conditions[1].expr, var("s1_1") * var("s4_1") - var("s2_1") * var("s3_1"));
  EXPECT_EQ(rep.degree, 3);
}

TEST(BuildLocalRep, Epsilon3Symbolic) {
  LocalRep rep = build_local_rep(Family::Epsilon3, make_spec("uv", 4, 2));
  RatFunc r6 = var("r6");
  EXPECT_EQ(rep.rho_block(), (RMatrix{{RatFunc(1), RatFunc(0), RatFunc(0)},
                                      {RatFunc(1) / r6, RatFunc(-1), r6},
                                      {RatFunc(0), RatFunc(0), RatFunc(1)}}));
  const RMatrix& s1 = rep.sigma_block(1);
  EXPECT_EQ(s1(1, 0), var("s4_1"));
  EXPECT_EQ(s1(1, 1), var("s5_1"));
  EXPECT_EQ(s1(1, 2), r6 * (RatFunc(1) - r6 * var("s4_1") - var("s5_1")));
  EXPECT_EQ(rep.degree, 5);
}

TEST(BuildLocalRep, Omega2Assignment) {
  Assignment a{{"r2", GaussianRational(1)}, {"s2_1", GaussianRational(1)}, {"s4_1", GaussianRational(2)}};
  LocalRep rep = build_local_rep(Family::Omega2, make_spec("uw", 3, 1), a);
  EXPECT_EQ(rep.sigma_block(1), (RMatrix{{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(2)}}));
}

TEST(BuildLocalRep, Errors) {
  EXPECT_THROW(build_local_rep(Family::Epsilon1, make_spec("uv", 4, 1)), FamilyMismatch);
  EXPECT_THROW(build_local_rep(Family::Omega1, make_spec("uv", 3, 1)), FamilyMismatch);
  EXPECT_THROW(build_local_rep(Family::Burau, make_spec("uv", 3, 1)), FamilyMismatch);
  EXPECT_NO_THROW(build_local_rep(Family::Burau, make_spec("vb", 3)));
  EXPECT_THROW(build_local_rep(Family::Upsilon, make_spec("uv", 3, 1), Assignment{{"r2", GaussianRational(0)}}),
               SideConditionViolation);
  Assignment singular{{"s1_1", GaussianRational(1)}, {"s2_1", GaussianRational(1)},
                      {"s3_1", GaussianRational(1)}, {"s4_1", GaussianRational(1)}};
  EXPECT_THROW(build_local_rep(Family::Upsilon, make_spec("uv", 3, 1), singular), SideConditionViolation);
  EXPECT_THROW(build_local_rep(Family::Epsilon3, make_spec("uv", 4, 2), Assignment{{"s5_1", GaussianRational(0)}}),
               SideConditionViolation);
  EXPECT_THROW(build_local_rep(Family::Upsilon, make_spec("uv", 3, 1), Assignment{{"zz", GaussianRational(1)}}),
               std::invalid_argument);
  EXPECT_THROW(parse_family("lawrence"), std::invalid_argument);
  EXPECT_EQ(parse_family("upsilon_prime"), Family::UpsilonPrime);
  EXPECT_EQ(family_name(Family::FRep), "f-rep");
}

TEST(EvalWord, Examples) {
  GroupSpec uv3 = make_spec("uv", 3, 1);
  LocalRep ups = build_local_rep(Family::Upsilon, uv3);
  EXPECT_EQ(eval_word(ups, parse_word("r1 r1", uv3)), RMatrix::identity(3));

  GroupSpec vb3 = make_spec("vb", 3);
  LocalRep burau = build_local_rep(Family::Burau, vb3);
  EXPECT_EQ(eval_word(burau, parse_word("s1,1 s2,1 s1,1", vb3)), eval_word(burau, parse_word("s2,1 s1,1 s2,1", vb3)));

  Assignment a{{"s1_1", GaussianRational(2)}, {"s2_1", GaussianRational(-1)}, {"s3_1", GaussianRational(3)},
               {"s4_1", GaussianRational(-2)}};
  LocalRep prime = build_local_rep(Family::UpsilonPrime, uv3, a);
  RMatrix ones = RMatrix::column({RatFunc(1), RatFunc(1), RatFunc(1)});
  EXPECT_EQ(eval_word(prime, parse_word("s1,1", uv3)) * ones, ones);
}

TEST(EvalWord, Homomorphic) {
  std::mt19937_64 rng(5);
  GroupSpec spec = make_spec("uv", 4, 2);
  LocalRep rep = build_local_rep(Family::Upsilon, spec);
  for (int k = 0; k < 10; ++k) {
    Word w = random_word(rng, spec, rng() % 4);
    Word v = random_word(rng, spec, rng() % 4);
    EXPECT_EQ(eval_word(rep, w * v), eval_word(rep, w) * eval_word(rep, v));
    EXPECT_EQ(eval_word(rep, w * w.inverse()), RMatrix::identity(4));
  }
}

TEST(EvalWord, ConstantOnFreeReduceClasses) {
  std::mt19937_64 rng(6);
  for (Family f : {Family::Upsilon, Family::Epsilon2, Family::Epsilon4}) {
    GroupSpec spec = make_spec("uv", 4, 2);
    LocalRep rep = build_local_rep(f, spec);
    for (int k = 0; k < 8; ++k) {
      Word w = random_word(rng, spec, rng() % 6);
      EXPECT_EQ(eval_word(rep, w), eval_word(rep, free_reduce(w, spec))) << family_name(f) << " " << w.to_string();
    }
  }
  GroupSpec wt = make_spec("wt", 3);
  LocalRep swap = build_local_rep(Family::UpsilonPrime, make_spec("uv", 3, 1),
                                  Assignment{{"s1_1", GaussianRational(0)}, {"s2_1", GaussianRational(1)},
                                             {"s3_1", GaussianRational(1)}, {"s4_1", GaussianRational(0)}});
  Word w = parse_word("s1,1 s1,1^-1 s2,1 s2,1", wt);
  EXPECT_EQ(eval_word(swap.blocks, wt, 3, w), eval_word(swap.blocks, wt, 3, free_reduce(w, wt)));
}

TEST(EvalWord, Homogeneity) {
  GroupSpec spec = make_spec("uv", 5, 1);
  LocalRep rep = build_local_rep(Family::Upsilon, spec);
  for (int i = 1; i <= 4; ++i) {
    RMatrix m = eval_word(rep, Word{R(i)});
    EXPECT_EQ(m, block_embed(rep.rho_block(), static_cast<std::size_t>(i), 5));
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) EXPECT_EQ(m(i - 1 + a, i - 1 + b), rep.rho_block()(a, b));
  }
}

TEST(ClassicalBlocks, DeterminantsAreMinusT) {
  RatFunc t = var("t");
  EXPECT_EQ(determinant(build_local_rep(Family::Burau, make_spec("vb", 3)).sigma_block(1)), -t);
  EXPECT_EQ(determinant(build_local_rep(Family::FRep, make_spec("vb", 3)).sigma_block(1)), -t);
  EXPECT_EQ(build_local_rep(Family::FRep, make_spec("vb", 4)).degree, 5);
}

TEST(EpsilonBlocks, Epsilon2CornerIsUpsilonShape) {
  LocalRep e2 = build_local_rep(Family::Epsilon2, make_spec("uv", 4, 2));
  RatFunc r2 = var("r2");
  EXPECT_EQ(e2.rho_block()(0, 1), r2);
  EXPECT_EQ(e2.rho_block()(1, 0), RatFunc(1) / r2);
  EXPECT_EQ(e2.rho_block()(2, 2), RatFunc(1));
  for (int t = 1; t <= 2; ++t) {
    const RMatrix& s = e2.sigma_block(t);
    EXPECT_EQ(s(2, 2), RatFunc(1));
    EXPECT_TRUE(s(0, 2).is_zero() && s(1, 2).is_zero() && s(2, 0).is_zero() && s(2, 1).is_zero());
  }
}

TEST(ConjugationEquivalence, UpsilonToUpsilonPrime) {
  GroupSpec spec = make_spec("uv", 4, 2);
  LocalRep ups = build_local_rep(Family::Upsilon, spec);
  LocalRep prime = build_local_rep(Family::UpsilonPrime, spec, upsilon_conjugated_binding(2));
  EquivalenceResult res = conjugation_equivalence(ups, prime);
  ASSERT_TRUE(res.found);
  EXPECT_EQ(res.q_label, "1/r2");
  RatFunc r2 = var("r2");
  EXPECT_EQ((*res.witness)(3, 3), RatFunc(1) / (r2 * r2 * r2));
}

TEST(ConjugationEquivalence, OmegaToOmegaPrime) {
  GroupSpec spec = make_spec("uw", 4, 2);
  RatFunc r2 = var("r2");
  std::vector<std::pair<Family, Family>> pairs = {
      {Family::Omega1, Family::Omega1p}, {Family::Omega2, Family::Omega2p}, {Family::Omega3, Family::Omega3p}};
  for (auto [f, fp] : pairs) {
    LocalRep a = build_local_rep(f, spec);
    LocalRep b = build_local_rep(fp, spec);
    EquivalenceResult res = conjugation_equivalence(a, b);
    EXPECT_TRUE(res.found) << family_name(f);
    EXPECT_EQ(res.q_label, "1/r2");
  }
  LocalRep w1 = build_local_rep(Family::Omega1, spec);
  RMatrix conj = diagonal_conjugate(w1.sigma_block(1), RatFunc(1) / r2);
  EXPECT_EQ(conj, (RMatrix{{RatFunc(0), var("s2_1") / r2}, {r2 * var("s3_1"), RatFunc(0)}}));
}

TEST(ConjugationEquivalence, SelfAndFailure) {
  GroupSpec spec = make_spec("uv", 3, 1);
  LocalRep ups = build_local_rep(Family::Upsilon, spec);
  EquivalenceResult self = conjugation_equivalence(ups, ups);
  ASSERT_TRUE(self.found);
  EXPECT_EQ(self.q_label, "1");
  EXPECT_EQ(*self.witness, RMatrix::identity(3));

  LocalRep prime = build_local_rep(Family::UpsilonPrime, spec);  // unrelabeled entries
  EquivalenceResult fail = conjugation_equivalence(ups, prime);
  EXPECT_FALSE(fail.found);
  EXPECT_FALSE(fail.mismatches.empty());

  EXPECT_THROW(conjugation_equivalence(ups, build_local_rep(Family::Epsilon1, make_spec("uv", 3, 2))),
               DimensionMismatch);
}
