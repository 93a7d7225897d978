#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tqft/groups.hpp"

using namespace tqft;

namespace {

std::vector<std::vector<int>> z4_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
  return t;
}

Errc code_of(const std::vector<std::vector<int>>& t) {
  try {
    FiniteGroup::from_table(t);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::BadInput;
}

// Plain count of tuples satisfying the relators, no pruning.
std::size_t brute_force_homs(const Presentation& p, const FiniteGroup& g) {
  std::size_t count = 0;
  std::vector<Element> images(p.num_generators, 0);
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) ok = ok && evaluate_word(g, r, images) == 0;
    count += ok;
    int k = 0;
    while (k < p.num_generators && ++images[k] == g.order()) images[k++] = 0;
    if (k == p.num_generators) break;
  }
  return count;
}

}  // namespace

TEST(GroupFromTable, TrivialGroup) {
  const FiniteGroup g = FiniteGroup::from_table({{0}});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(conjugacy_classes(g).size(), 1u);
}

TEST(GroupFromTable, CyclicTableIsValid) {
  const FiniteGroup g = FiniteGroup::from_table(z4_table());
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g, cyclic_group(4));
}

TEST(GroupFromTable, MutatedTableIsNonAssociative) {
  auto t = z4_table();
  std::swap(t[1][2], t[1][3]);
  EXPECT_EQ(code_of(t), Errc::NonAssociative);
}

TEST(GroupFromTable, RejectsMissingIdentityAndInverse) {
  EXPECT_EQ(code_of({{1, 0}, {0, 1}}), Errc::NoIdentity);
  // Boolean "or": associative with identity 0, but 1 has no inverse.
  EXPECT_EQ(code_of({{0, 1}, {1, 1}}), Errc::NoInverse);
}

TEST(GroupFromTable, RelabelingKeepsValidity) {
  std::mt19937_64 rng(3);
  for (const std::string name : {"S3", "D4", "Q8", "Z/6"}) {
    const FiniteGroup g = preset_group(name);
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<int> back(n);
    for (int i = 0; i < n; ++i) back[perm[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[g.mul(a, b)];
    EXPECT_NO_THROW(FiniteGroup::from_table(t)) << name;
  }
}

TEST(PresetGroup, OrdersAndNames) {
  EXPECT_EQ(preset_group("S3").order(), 6);
  EXPECT_EQ(preset_group("S4").order(), 24);
  EXPECT_EQ(preset_group("D4").order(), 8);
  EXPECT_EQ(preset_group("Z/16").order(), 16);
  EXPECT_FALSE(preset_group("D4").is_abelian());
  for (const char* bad : {"Z/17", "Z/1", "A5", "Z/x"}) {
    try {
      preset_group(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::UnknownName);
    }
  }
}

TEST(PresetGroup, Q8HasOneInvolution) {
  const FiniteGroup q = preset_group("Q8");
  int involutions = 0;
  for (Element a = 0; a < 8; ++a) involutions += q.element_order(a) == 2;
  EXPECT_EQ(involutions, 1);
  EXPECT_EQ(q.element_order(1), 2);  // -1
}

TEST(PresetGroup, D4RotationsThenReflections) {
  const FiniteGroup d = preset_group("D4");
  EXPECT_EQ(d.element_order(1), 4);
  for (Element r = 4; r < 8; ++r) EXPECT_EQ(d.element_order(r), 2);
}

TEST(ConjugacyClasses, Sizes) {
  EXPECT_EQ(conjugacy_classes(cyclic_group(4)).size(), 4u);
  const auto s3 = conjugacy_classes(preset_group("S3"));
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(s3[0].size(), 1u);
  EXPECT_EQ(s3[1].size(), 3u);
  EXPECT_EQ(s3[2].size(), 2u);
}

TEST(ConjugacyClasses, ClassTimesCentralizerIsOrder) {
  for (const std::string& name : preset_group_names()) {
    const FiniteGroup g = preset_group(name);
    for (const auto& cls : conjugacy_classes(g))
      for (Element x : cls) EXPECT_EQ(cls.size() * centralizer(g, {x}).size(), static_cast<std::size_t>(g.order()));
  }
}

TEST(Centralizer, Examples) {
  const FiniteGroup s3 = preset_group("S3");
  // One-line [1,0,2] is the transposition (12) and sits at index 2.
  EXPECT_EQ(s3.element_order(2), 2);
  EXPECT_EQ(centralizer(s3, {2}).size(), 2u);
  EXPECT_EQ(centralizer(s3, {}).size(), 6u);
  EXPECT_EQ(centralizer(cyclic_group(4), {1}).size(), 4u);
}

TEST(EnumerateHoms, Counts) {
  const FiniteGroup s3 = preset_group("S3");
  EXPECT_EQ(enumerate_homs({2, {}}, s3).size(), 36u);
  EXPECT_EQ(enumerate_homs({1, {{1, 1}}}, s3).size(), 4u);
  EXPECT_EQ(enumerate_homs({2, {{1, 2, -1, -2}}}, s3).size(), 18u);
  EXPECT_EQ(enumerate_homs({0, {}}, s3).size(), 1u);
}

TEST(EnumerateHoms, MatchesBruteForce) {
  const std::vector<Presentation> ps{{2, {{1, 2, -1, -2}}}, {1, {{1, 1, 1}}}, {3, {{1, 2, -1, -2}, {2, 3, -2, -3}}},
                                     surface_group(2), times_circle(surface_group(1))};
  for (const std::string name : {"Z/2", "S3", "Q8", "D4"})
    for (const auto& p : ps) {
      const FiniteGroup g = preset_group(name);
      if (std::pow(g.order(), p.num_generators) > 1e6) continue;
      EXPECT_EQ(enumerate_homs(p, g).size(), brute_force_homs(p, g)) << name;
    }
}

TEST(EnumerateHoms, LexicographicOrder) {
  const auto homs = enumerate_homs({2, {{1, 2, -1, -2}}}, preset_group("S3"));
  EXPECT_TRUE(std::is_sorted(homs.begin(), homs.end()));
}

TEST(EnumerateHoms, SizeLimit) {
  try {
    enumerate_homs({6, {}}, preset_group("S4"), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimit);
  }
}

TEST(HomOrbits, CommutingPairsInS3) {
  const FiniteGroup s3 = preset_group("S3");
  const HomClassTable t = hom_orbits(s3, enumerate_homs({2, {{1, 2, -1, -2}}}, s3));
  EXPECT_EQ(t.orbits.size(), 8u);
  for (std::size_t o = 0; o < t.orbits.size(); ++o)
    EXPECT_EQ(t.orbits[o].size() * t.stabilizer_sizes[o], 6u);
}

TEST(HomOrbits, AbelianSingletons) {
  const FiniteGroup z6 = preset_group("Z/6");
  const HomClassTable t = hom_orbits(z6, enumerate_homs({2, {}}, z6));
  EXPECT_EQ(t.orbits.size(), 36u);
  for (int s : t.stabilizer_sizes) EXPECT_EQ(s, 6);
  const HomClassTable trivial = hom_orbits(z6, {{0, 0}});
  EXPECT_EQ(trivial.orbits.size(), 1u);
  EXPECT_EQ(trivial.stabilizer_sizes[0], 6);
}

TEST(HomOrbits, NotClosed) {
  const FiniteGroup s3 = preset_group("S3");
  try {
    hom_orbits(s3, {{2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotClosed);
  }
}

TEST(HomOrbits, GroupoidCardinality) {
  for (const std::string name : {"S3", "Q8", "D4", "Z/5"}) {
    const FiniteGroup g = preset_group(name);
    for (const Presentation& p : {surface_group(1), Presentation{1, {{1, 1}}}, Presentation{2, {{1, 1, 2, 2}}}}) {
      const auto homs = enumerate_homs(p, g);
      const HomClassTable t = hom_orbits(g, homs);
      // sum 1/stab == |Hom| / |G|, cross-multiplied over the lcm of stabilizers.
      long long lcm = 1;
      for (int s : t.stabilizer_sizes) lcm = std::lcm(lcm, static_cast<long long>(s));
      long long num = 0;
      for (int s : t.stabilizer_sizes) num += lcm / s;
      EXPECT_EQ(num * g.order(), static_cast<long long>(homs.size()) * lcm) << name;
    }
  }
}
