#include <gtest/gtest.h>

#include <random>

#include "uvbraid/presentations.hpp"

using namespace uvb;

namespace {

Word random_word(std::mt19937_64& rng, const GroupSpec& spec, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.n - 1));
    int exp = rng() % 2 ? 1 : -1;
    if (rng() % 3 == 0) {
      w.letters.push_back({Generator::rho(i), exp});
    } else {
      int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.c));
      w.letters.push_back({Generator::sigma(i, t), exp});
    }
  }
  return w;
}

std::size_t count_tag(const std::vector<Relation>& rels, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& r : rels)
    if (r.tag.rfind(prefix + "[", 0) == 0) ++n;
  return n;
}

}  // namespace

TEST(MakeSpec, Examples) {
  GroupSpec uv = make_spec("uv", 3, 1);
  EXPECT_EQ(uv.n, 3);
  EXPECT_EQ(uv.c, 1);
  EXPECT_FALSE(uv.welded);
  EXPECT_TRUE(uv.braid_rel_types.empty());
  EXPECT_TRUE(uv.involutive_types.empty());
  EXPECT_FALSE(uv.singular);

  GroupSpec wt = make_spec("wt", 4, 1);
  EXPECT_TRUE(wt.welded);
  EXPECT_EQ(wt.involutive_types, std::set<int>{1});

  GroupSpec wsg = make_spec("wsg", 4, 2);
  EXPECT_TRUE(wsg.welded);
  EXPECT_EQ(wsg.braid_rel_types, (std::set<int>{1, 2}));
  EXPECT_TRUE(wsg.singular);
  EXPECT_EQ(make_spec("vsg", 3).c, 2);

  EXPECT_THROW(make_spec("xx", 3, 1), std::invalid_argument);
  EXPECT_THROW(make_spec("uv", 1, 1), std::invalid_argument);
  EXPECT_THROW(make_spec("wb", 3, 2), std::invalid_argument);
}

TEST(Relations, Counts) {
  auto uv31 = relations(make_spec("uv", 3, 1));
  EXPECT_EQ(uv31.size(), 4u);
  EXPECT_EQ(count_tag(uv31, "PR1"), 1u);
  EXPECT_EQ(count_tag(uv31, "PR3"), 2u);
  EXPECT_EQ(count_tag(uv31, "MR2"), 1u);

  auto uv42 = relations(make_spec("uv", 4, 2));
  EXPECT_EQ(uv42.size(), 18u);
  EXPECT_EQ(count_tag(uv42, "PR1"), 2u);
  EXPECT_EQ(count_tag(uv42, "PR2"), 1u);
  EXPECT_EQ(count_tag(uv42, "PR3"), 3u);
  EXPECT_EQ(count_tag(uv42, "CR"), 4u);
  EXPECT_EQ(count_tag(uv42, "MR1"), 4u);
  EXPECT_EQ(count_tag(uv42, "MR2"), 4u);

  auto uw31 = relations(make_spec("uw", 3, 1));
  EXPECT_EQ(uw31.size(), 5u);
  EXPECT_EQ(count_tag(uw31, "WR1"), 1u);
  EXPECT_EQ(uw31.back().lhs.to_string(), "r1 s2,1 s1,1");
  EXPECT_EQ(uw31.back().rhs.to_string(), "s2,1 s1,1 r2");
}

TEST(Relations, DuplicateFreeTags) {
  for (const char* name : {"uv", "uw", "mvb", "mwb"}) {
    auto rels = relations(make_spec(name, 5, 3));
    std::set<std::string> tags;
    for (const auto& r : rels) EXPECT_TRUE(tags.insert(r.tag).second) << r.tag;
  }
  auto wsg = relations(make_spec("wsg", 4));
  EXPECT_EQ(count_tag(wsg, "SR1"), 3u);
  EXPECT_EQ(count_tag(wsg, "SR2"), 2u);
  EXPECT_EQ(count_tag(wsg, "BR"), 4u);
}

TEST(ParseWord, Examples) {
  GroupSpec uv31 = make_spec("uv", 3, 1);
  Word w = parse_word("r1 s2,1 s1,1", uv31);
  EXPECT_EQ(w, (Word{R(1), S(2, 1), S(1, 1)}));
  Word v = parse_word("s1,1^-1 r2", uv31);
  EXPECT_EQ(v, (Word{S(1, 1).inverse(), R(2)}));
  EXPECT_EQ(v.to_string(), "s1,1^-1 r2");

  try {
    parse_word("s1,3", make_spec("uv", 3, 2));
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("type index 3 > c = 2"), std::string::npos);
  }
  EXPECT_THROW(parse_word("r3", uv31), ParseError);
  EXPECT_THROW(parse_word("q1", uv31), ParseError);
  EXPECT_THROW(parse_word("s1", uv31), ParseError);
  EXPECT_THROW(parse_word("r1^2", uv31), ParseError);
  EXPECT_TRUE(parse_word("   ", uv31).empty());
}

TEST(FreeReduce, Examples) {
  GroupSpec uv = make_spec("uv", 3, 1);
  EXPECT_TRUE(free_reduce(parse_word("r1 r1", uv), uv).empty());
  EXPECT_TRUE(free_reduce(parse_word("s1,1 s1,1^-1", uv), uv).empty());
  GroupSpec wt = make_spec("wt", 3, 1);
  EXPECT_TRUE(free_reduce(parse_word("s1,1 s1,1", wt), wt).empty());
  EXPECT_EQ(free_reduce(parse_word("s1,1 s1,1", uv), uv).size(), 2u);
  EXPECT_EQ(free_reduce(parse_word("r1^-1 s2,1", uv), uv).to_string(), "r1 s2,1");
}

TEST(FreeReduce, IdempotentAndNonIncreasing) {
  std::mt19937_64 rng(3);
  for (const char* name : {"uv", "wt"}) {
    GroupSpec spec = make_spec(name, 4, 1);
    for (int k = 0; k < 300; ++k) {
      Word w = random_word(rng, spec, rng() % 12);
      Word r = free_reduce(w, spec);
      EXPECT_LE(r.size(), w.size());
      EXPECT_EQ(free_reduce(r, spec), r);
    }
  }
}

TEST(NormalFormN2, Examples) {
  GroupSpec spec = make_spec("uv", 2, 2);
  EXPECT_TRUE(normal_form_n2(parse_word("r1 r1 s1,1 s1,1^-1", spec), spec).empty());
  EXPECT_EQ(normal_form_n2(parse_word("s1,1 r1 r1 s1,2", spec), spec).to_string(), "s1,1 s1,2");
  EXPECT_EQ(normal_form_n2(parse_word("r1 s1,1 r1", spec), spec).to_string(), "r1 s1,1 r1");
  EXPECT_THROW(normal_form_n2(Word{}, make_spec("uv", 3, 1)), std::invalid_argument);
}

TEST(NormalFormN2, DecidesEquality) {
  std::mt19937_64 rng(8);
  GroupSpec spec = make_spec("uv", 2, 2);
  for (int k = 0; k < 300; ++k) {
    Word w = random_word(rng, spec, rng() % 8);
    // v is w with a random trivial insertion, or an unrelated word.
    Word v = w;
    if (rng() % 2) {
      Word junk = random_word(rng, spec, rng() % 3);
      std::size_t at = v.letters.empty() ? 0 : rng() % (v.letters.size() + 1);
      Word trivial = junk * Word{R(1), R(1)} * junk.inverse();
      v.letters.insert(v.letters.begin() + static_cast<long>(at), trivial.letters.begin(), trivial.letters.end());
    } else {
      v = random_word(rng, spec, rng() % 8);
    }
    bool same_nf = normal_form_n2(w, spec) == normal_form_n2(v, spec);
    bool trivial_quotient = free_reduce(w * v.inverse(), spec).empty();
    EXPECT_EQ(same_nf, trivial_quotient);
  }
}

TEST(PermImage, Examples) {
  GroupSpec spec = make_spec("uv", 3, 2);
  Permutation k = perm_image(parse_word("r1 s1,1 r2", spec), PermMap::PiK, 3);
  EXPECT_EQ(k, Permutation::transposition(3, 1) * Permutation::transposition(3, 2));
  EXPECT_EQ(k(0), 1);  // 1 -> 2
  EXPECT_EQ(k.to_string(), "(1 2 3)");
  EXPECT_EQ(perm_image(parse_word("s1,1", spec), PermMap::PiP, 3).to_string(), "(1 2)");
  EXPECT_TRUE(perm_image(parse_word("s1,1 s2,2 s1,2", spec), PermMap::PiK, 3).is_identity());
  EXPECT_EQ(perm_image(parse_word("r1 r2", spec), PermMap::IotaCheck, 3).to_string(), "(1 2 3)");
  EXPECT_THROW(perm_image(parse_word("r1 s1,1", spec), PermMap::IotaCheck, 3), std::invalid_argument);
}

TEST(Phi, Examples) {
  GroupSpec spec = make_spec("uv", 3, 2);
  EXPECT_EQ(phi(parse_word("r1 s2,1 s1,1", spec), 1, spec).to_string(), "(2, (1 2))");
  EXPECT_EQ(phi(parse_word("s2,1 s1,1 r2", spec), 1, spec).to_string(), "(2, (2 3))");
  EXPECT_EQ(phi(parse_word("r1 s2,1 s1,1", spec), 2, spec).to_string(), "(0, (1 2))");
  EXPECT_EQ(phi(parse_word("s1,1^-1 r1^-1", spec), 1, spec).to_string(), "(-1, (1 2))");
  EXPECT_THROW(phi(Word{}, 3, spec), std::invalid_argument);
}

TEST(Abelianize, Examples) {
  GroupSpec uw31 = make_spec("uw", 3, 1);
  EXPECT_TRUE(abelianize(parse_word("r1 s2,1 s1,1 r2^-1 s1,1^-1 s2,1^-1", uw31), uw31).is_zero());
  GroupSpec uw32 = make_spec("uw", 3, 2);
  Abelianization a = abelianize(parse_word("s1,1 s2,1 r1 r2 r1", uw32), uw32);
  EXPECT_EQ(a.sigma_exponents, (std::vector<long>{2, 0}));
  EXPECT_EQ(a.rho_parity, 1);
  EXPECT_EQ(a.to_string(), "((2, 0), 1)");
  EXPECT_TRUE(abelianize(Word{}, uw32).is_zero());
}

TEST(Homomorphisms, MultiplicativeOnRandomPairs) {
  std::mt19937_64 rng(12);
  GroupSpec spec = make_spec("uw", 5, 3);
  for (int k = 0; k < 500; ++k) {
    Word w = random_word(rng, spec, rng() % 10);
    Word v = random_word(rng, spec, rng() % 10);
    for (PermMap m : {PermMap::PiK, PermMap::PiP})
      EXPECT_EQ(perm_image(w * v, m, 5), perm_image(w, m, 5) * perm_image(v, m, 5));
    for (int t0 = 1; t0 <= 3; ++t0) {
      CountedPerm a = phi(w, t0, spec), b = phi(v, t0, spec), ab = phi(w * v, t0, spec);
      EXPECT_EQ(ab.count, a.count + b.count);
      EXPECT_EQ(ab.perm, a.perm * b.perm);
    }
    EXPECT_EQ(abelianize(w * v, spec), abelianize(w, spec) + abelianize(v, spec));
  }
}

TEST(Homomorphisms, RelationsAreCoxeterCompatible) {
  for (const auto& name : spec_names()) {
    for (int n = 3; n <= 5; ++n) {
      GroupSpec spec = (name == "vsg" || name == "wsg") ? make_spec(name, n)
                       : (name == "vb" || name == "wb" || name == "vt" || name == "wt") ? make_spec(name, n)
                                                                                       : make_spec(name, n, 2);
      for (const auto& rel : relations(spec)) {
        // pi^K sends sigma to 1, so the welded relation becomes s_i = s_{i+1}.
        bool welded = rel.tag.rfind("WR1", 0) == 0;
        EXPECT_EQ(perm_image(rel.relator(), PermMap::PiK, n).is_identity(), !welded) << name << " " << rel.tag;
        EXPECT_TRUE(perm_image(rel.relator(), PermMap::PiP, n).is_identity()) << name << " " << rel.tag;
      }
    }
  }
}

TEST(Homomorphisms, PhiSeparatesTheWeldedRelation) {
  for (int n = 3; n <= 5; ++n) {
    GroupSpec spec = make_spec("uv", n, 2);
    for (const auto& rel : relations(spec)) {
      for (int t0 = 1; t0 <= 2; ++t0) EXPECT_EQ(phi(rel.lhs, t0, spec), phi(rel.rhs, t0, spec)) << rel.tag;
    }
    for (int i = 1; i <= n - 2; ++i) {
      CountedPerm img = phi(welded_relation(i, 1).relator(), 1, spec);
      EXPECT_EQ(img.count, 0);
      EXPECT_EQ(img.perm, Permutation::transposition(n, i) * Permutation::transposition(n, i + 1));
    }
  }
}
