#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tqft/gauge.hpp"
#include "tqft/rational.hpp"

using namespace tqft;

namespace {

std::vector<std::int64_t> stabilizers(const std::vector<BundleClass>& cls) {
  std::vector<std::int64_t> s;
  for (const BundleClass& c : cls) s.push_back(c.stabilizer_size);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(FlatColorings, BallWithZ2) {
  const DeltaComplex3 b = preset_manifold("Ball").complex;
  const FiniteGroup g = cyclic_group(2);
  const auto cs = enumerate_flat_colorings(b, g);
  EXPECT_EQ(cs.size(), 8u);  // free on the three edges out of vertex 0
  const auto cls = gauge_orbits(b, g, cs);
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].orbit_size, 8);
  EXPECT_EQ(cls[0].stabilizer_size, 2);
}

TEST(FlatColorings, AllAreFlatAndDistinct) {
  for (const std::string name : {"S2xS1", "T3_6tet", "L(3,1)", "SolidTorus"}) {
    const DeltaComplex3 x = preset_manifold(name).complex;
    const FiniteGroup g = preset_group("S3");
    const auto cs = enumerate_flat_colorings(x, g);
    const FlatnessProblem p = flatness_problem(x);
    for (const auto& c : cs) EXPECT_TRUE(is_flat(p, g, c)) << name;
    EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end())) << name;
    EXPECT_EQ(std::adjacent_find(cs.begin(), cs.end()), cs.end()) << name;
  }
}

TEST(FlatColorings, FixedEdges) {
  const DeltaComplex3 b = preset_manifold("Ball").complex;
  const FiniteGroup g = cyclic_group(3);
  // Edge classes of a lone tetrahedron are its six edges; fix 01 and 12, so 02 is forced.
  const auto cs = enumerate_flat_colorings(b, g, {{b.edge_class(0, 0), 1}, {b.edge_class(0, 3), 1}});
  EXPECT_EQ(cs.size(), 3u);
  for (const auto& c : cs) EXPECT_EQ(c[b.edge_class(0, 1)], 2);
  // Contradictory pins give no colorings.
  EXPECT_TRUE(enumerate_flat_colorings(b, g, {{b.edge_class(0, 0), 1}, {b.edge_class(0, 3), 1}, {b.edge_class(0, 1), 0}})
                  .empty());
  EXPECT_THROW(enumerate_flat_colorings(b, g, {{99, 0}}), Error);
}

TEST(FlatColorings, SearchCap) {
  try {
    enumerate_flat_colorings(preset_manifold("T3_6tet").complex, preset_group("S4"), {}, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeLimit);
  }
}

TEST(GaugeOrbits, ThreeTorusZ2) {
  const DeltaComplex3 x = preset_manifold("T3_6tet").complex;
  const FiniteGroup g = cyclic_group(2);
  const auto cls = gauge_orbits(x, g, enumerate_flat_colorings(x, g));
  EXPECT_EQ(cls.size(), 8u);
  Rational total = 0;
  for (const auto& c : cls) total += Rational(1, c.stabilizer_size);
  EXPECT_EQ(total, Rational(4));
}

TEST(GaugeOrbits, SphereS3) {
  const DeltaComplex3 x = preset_manifold("S3_2tet").complex;
  const FiniteGroup g = preset_group("S3");
  const auto cls = gauge_orbits(x, g, enumerate_flat_colorings(x, g));
  ASSERT_EQ(cls.size(), 1u);
  EXPECT_EQ(cls[0].stabilizer_size, 6);
}

TEST(GaugeOrbits, S2xS1StabilizersAreCentralizers) {
  const DeltaComplex3 x = preset_manifold("S2xS1").complex;
  const FiniteGroup g = preset_group("S3");
  const auto cls = gauge_orbits(x, g, enumerate_flat_colorings(x, g));
  EXPECT_EQ(stabilizers(cls), (std::vector<std::int64_t>{2, 3, 6}));
}

TEST(GaugeOrbits, MatchHomClassesOfFundamentalGroup) {
  for (const std::string name : {"S3_2tet", "S2xS1", "T3_6tet", "L(2,1)", "L(3,1)", "L(4,1)"})
    for (const std::string gname : {"Z/2", "Z/4", "S3", "Q8"}) {
      const Manifold m = preset_manifold(name);
      const FiniteGroup g = preset_group(gname);
      const auto cls = gauge_orbits(m.complex, g, enumerate_flat_colorings(m.complex, g));
      const HomClassTable t = hom_orbits(g, enumerate_homs(*m.pi1, g));
      ASSERT_EQ(cls.size(), t.orbits.size()) << name << " " << gname;
      std::vector<std::int64_t> expect(t.stabilizer_sizes.begin(), t.stabilizer_sizes.end());
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(stabilizers(cls), expect) << name << " " << gname;
    }
}

TEST(GaugeOrbits, NotClosedInput) {
  const DeltaComplex3 x = preset_manifold("Ball").complex;
  const FiniteGroup g = cyclic_group(2);
  try {
    gauge_orbits(x, g, {enumerate_flat_colorings(x, g).front()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotClosed);
  }
}

TEST(GaugeTransform, PreservesFlatness) {
  std::mt19937_64 rng(2);
  const DeltaComplex3 x = preset_manifold("T3_6tet").complex;
  const FiniteGroup g = preset_group("D4");
  const FlatnessProblem p = flatness_problem(x);
  const auto cs = enumerate_flat_colorings(x, g);
  for (int i = 0; i < 50; ++i) {
    std::vector<Element> h(x.num_vertices());
    for (auto& e : h) e = static_cast<Element>(rng() % g.order());
    EXPECT_TRUE(is_flat(p, g, gauge_transform(x, g, cs[rng() % cs.size()], h)));
  }
}

TEST(HolonomyInvariants, ConstantOnOrbits) {
  const Manifold m = preset_manifold("T3_6tet");
  const FiniteGroup g = preset_group("S3");
  const auto cs = enumerate_flat_colorings(m.complex, g);
  for (const auto& cls : gauge_orbits(m.complex, g, cs)) {
    const auto inv = holonomy_class_invariants(m, g, cls.representative);
    EXPECT_EQ(inv.size(), 3u);
    for (int k : cls.members) EXPECT_EQ(holonomy_class_invariants(m, g, cs[k]), inv);
  }
}

TEST(HolonomyInvariants, UnknownLoops) {
  Manifold m = preset_manifold("S3_2tet");
  m.loops.reset();
  try {
    holonomy_class_invariants(m, preset_group("S3"), enumerate_flat_colorings(m.complex, preset_group("S3")).front());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownLoops);
  }
}

TEST(LensSpace, AbelianColoringsSeeFirstHomology) {
  // Hom(Z/k, Z/n) has gcd(k, n) elements; each is its own gauge class.
  for (int k = 2; k <= 6; ++k)
    for (int n = 2; n <= 6; ++n) {
      const DeltaComplex3 x = preset_manifold("L(" + std::to_string(k) + ",1)").complex;
      const FiniteGroup g = cyclic_group(n);
      EXPECT_EQ(gauge_orbits(x, g, enumerate_flat_colorings(x, g)).size(), static_cast<std::size_t>(std::gcd(k, n)))
          << k << " " << n;
    }
}

TEST(SurfaceColorings, TorusCommutingPairs) {
  const DeltaComplex2 t = preset_surface("T2");
  const FiniteGroup g = preset_group("S3");
  // One vertex class: flat colorings are exactly commuting pairs.
  EXPECT_EQ(t.num_vertices(), 1);
  EXPECT_EQ(enumerate_flat_colorings(t, g).size(), 18u);
  EXPECT_EQ(gauge_orbits(t, g, enumerate_flat_colorings(t, g)).size(), 8u);
}
