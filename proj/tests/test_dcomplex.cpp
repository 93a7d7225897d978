#include <gtest/gtest.h>

#include "tqft/presets.hpp"

using namespace tqft;

namespace {

Errc code_of(const GluingTable& t) {
  try {
    DeltaComplex3::from_gluings(t);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::BadInput;
}

Gluing plain(int a, int f, int b, int g) { return {a, f, b, g, kTetFaceVertices[g]}; }

}  // namespace

TEST(DeltaComplex3, SingleTetrahedronIsABall) {
  const DeltaComplex3 b = preset_manifold("Ball").complex;
  EXPECT_EQ(b.num_vertices(), 4);
  EXPECT_EQ(b.num_edges(), 6);
  EXPECT_EQ(b.num_triangles(), 4);
  EXPECT_EQ(b.euler_characteristic(), 1);
  EXPECT_EQ(b.num_boundary_faces(), 4);
  EXPECT_EQ(b.num_interior_vertices(), 0);
  const BoundarySurface s = boundary_surface(b);
  EXPECT_EQ(s.surface.num_triangles(), 4);
  EXPECT_EQ(s.surface.euler_characteristic(), 2);
  EXPECT_TRUE(s.surface.is_closed());
}

TEST(DeltaComplex3, ClosedPresetCounts) {
  struct Expect {
    const char* name;
    int v, e, t, tets;
  };
  for (const Expect& x : {Expect{"S3_2tet", 1, 3, 4, 2}, Expect{"S3_bd4simplex", 5, 10, 10, 5},
                          Expect{"S2xS1", 3, 9, 12, 6}, Expect{"T3_6tet", 1, 7, 12, 6}, Expect{"L(3,1)", 2, 5, 6, 3},
                          Expect{"L(5,1)", 2, 7, 10, 5}, Expect{"BallUnionBall", 4, 6, 4, 2}}) {
    const DeltaComplex3 c = preset_manifold(x.name).complex;
    EXPECT_TRUE(c.is_closed()) << x.name;
    EXPECT_EQ(c.num_vertices(), x.v) << x.name;
    EXPECT_EQ(c.num_edges(), x.e) << x.name;
    EXPECT_EQ(c.num_triangles(), x.t) << x.name;
    EXPECT_EQ(c.num_tets(), x.tets) << x.name;
    EXPECT_EQ(c.euler_characteristic(), 0) << x.name;
  }
}

TEST(DeltaComplex3, EdgesRespectVertexOrder) {
  for (const std::string& name : preset_manifold_names()) {
    const DeltaComplex3 c = preset_manifold(name).complex;
    for (int t = 0; t < c.num_tets(); ++t)
      for (int e = 0; e < 6; ++e) {
        const auto& info = c.edge(c.edge_class(t, e));
        EXPECT_EQ(info.src, c.vertex_class(t, kTetEdgeVertices[e][0])) << name;
        EXPECT_EQ(info.dst, c.vertex_class(t, kTetEdgeVertices[e][1])) << name;
      }
  }
}

TEST(DeltaComplex3, InteriorGluingsReverseOrientation) {
  for (const std::string& name : preset_manifold_names()) {
    const DeltaComplex3 c = preset_manifold(name).complex;
    for (const Gluing& g : c.gluing_table().gluings)
      EXPECT_EQ(c.sign(g.tet) * face_parity(g.face), -c.sign(g.other_tet) * face_parity(g.other_face)) << name;
  }
}

TEST(DeltaComplex3, RejectsBadTables) {
  // Face glued twice.
  EXPECT_EQ(code_of({2, {plain(0, 0, 1, 0), plain(0, 0, 1, 1)}, std::nullopt}), Errc::NotInvolution);
  // Face glued to itself.
  EXPECT_EQ(code_of({1, {plain(0, 0, 0, 0)}, std::nullopt}), Errc::NotInvolution);
  EXPECT_EQ(code_of({1, {plain(0, 0, 3, 1)}, std::nullopt}), Errc::DanglingFace);
  EXPECT_EQ(code_of({1, {plain(0, 5, 0, 1)}, std::nullopt}), Errc::DanglingFace);
  EXPECT_EQ(code_of({2, {{0, 0, 1, 0, {2, 1, 3}}}, std::nullopt}), Errc::NotOrderRespecting);
  // Faces 0 and 2 of one tetrahedron have equal parity, so the gluing cannot reverse orientation.
  EXPECT_EQ(code_of({1, {plain(0, 0, 0, 2)}, std::nullopt}), Errc::NonOrientable);
  // A given orientation that disagrees with a gluing.
  EXPECT_EQ(code_of({2, {plain(0, 0, 1, 0)}, std::vector<int>{1, 1}}), Errc::NonOrientable);
}

TEST(DeltaComplex3, MirrorFlipsSigns) {
  const DeltaComplex3 c = preset_manifold("S2xS1").complex;
  const DeltaComplex3 m = c.mirrored();
  for (int t = 0; t < c.num_tets(); ++t) EXPECT_EQ(m.sign(t), -c.sign(t));
  EXPECT_EQ(m.mirrored().signs(), c.signs());
}

TEST(DeltaComplex3, OrientedFlipTwiceIsIdentity) {
  const Oriented<DeltaComplex3> x{preset_manifold("L(3,1)").complex, 1};
  EXPECT_EQ(x.flipped().flipped().resolve().signs(), x.resolve().signs());
  EXPECT_EQ(x.flipped().resolve().signs(), x.complex.mirrored().signs());
}

TEST(GlueSelf, BallWithItselfClashes) {
  const DeltaComplex3 b = preset_manifold("Ball").complex;
  FaceMatching m;
  for (int f = 0; f < 4; ++f) m.push_back({{0, f}, {0, f}});
  try {
    glue_along_boundary(b, b, m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrientationClash);
  }
  EXPECT_TRUE(glue_along_boundary(b, b.mirrored(), m).is_closed());
}

TEST(GlueSelf, RejectsInteriorFaceAndInconsistentMaps) {
  const DeltaComplex3 t3 = preset_manifold("T3_6tet").complex;
  try {
    glue_self(t3, {{{0, 0}, {1, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IncompatibleMatching);
  }
  // Two balls matched on faces 0 and 1 but with the faces crossed.
  const DeltaComplex3 b = preset_manifold("Ball").complex;
  try {
    glue_along_boundary(b, b.mirrored(), {{{0, 0}, {0, 0}}, {{0, 1}, {0, 3}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == Errc::IncompatibleMatching || e.code() == Errc::OrientationClash);
  }
}

TEST(CutAlong, NothingIsIdentity) {
  const DeltaComplex3 c = preset_manifold("S3_2tet").complex;
  const CutResult r = cut_along(c, {});
  EXPECT_TRUE(r.matching.empty());
  EXPECT_EQ(r.complex.num_edges(), c.num_edges());
  EXPECT_EQ(r.complex.num_vertices(), c.num_vertices());
}

TEST(CutAlong, RejectsNonSurfaces) {
  const DeltaComplex3 c = preset_manifold("T3_6tet").complex;
  try {
    cut_along(c, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASurface);
  }
  try {
    cut_along(preset_manifold("Ball").complex, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASurface);
  }
}

TEST(CutAlong, ThreeTorusAlongATorus) {
  const Manifold m = preset_manifold("T3_6tet");
  const CutResult r = cut_along(m.complex, m.surfaces.at("torus_z"));
  EXPECT_EQ(r.matching.size(), 2u);
  EXPECT_EQ(r.complex.num_vertices(), 2);
  const BoundarySurface s = boundary_surface(r.complex);
  EXPECT_EQ(s.surface.num_components(), 2);
  EXPECT_EQ(s.surface.euler_characteristic(), 0);
  const DeltaComplex3 back = glue_self(r.complex, r.matching);
  EXPECT_TRUE(back.is_closed());
  EXPECT_EQ(back.num_edges(), m.complex.num_edges());
  EXPECT_EQ(back.num_vertices(), m.complex.num_vertices());
}

TEST(BoundarySurface, SolidTorusAndThickenedTorus) {
  const DeltaComplex3 st = preset_manifold("SolidTorus").complex;
  EXPECT_EQ(st.num_vertices(), 2);
  EXPECT_EQ(st.num_edges(), 6);
  EXPECT_EQ(st.num_triangles(), 7);
  const BoundarySurface s = boundary_surface(st);
  EXPECT_EQ(s.surface.euler_characteristic(), 0);
  EXPECT_EQ(s.surface.num_components(), 1);

  const DeltaComplex3 ti = preset_manifold("T2xI").complex;
  EXPECT_EQ(ti.num_vertices(), 2);
  EXPECT_EQ(ti.num_edges(), 10);
  EXPECT_EQ(ti.num_triangles(), 14);
  EXPECT_EQ(boundary_surface(ti).surface.num_components(), 2);
}

TEST(SolidTorusPair, GluesToAClosedManifold) {
  const GluingInstance g = solid_torus_pair();
  const DeltaComplex3 x = glue_along_boundary(g.first, g.second, g.matching);
  EXPECT_TRUE(x.is_closed());
  EXPECT_EQ(x.euler_characteristic(), 0);
  EXPECT_EQ(x.num_vertices(), 3);
  EXPECT_EQ(x.num_edges(), 9);
}

TEST(DeltaComplex2, PresetSurfaces) {
  EXPECT_EQ(preset_surface("S2").euler_characteristic(), 2);
  EXPECT_EQ(preset_surface("T2").euler_characteristic(), 0);
  EXPECT_TRUE(preset_surface("T2").is_closed());
  EXPECT_EQ(preset_surface("Disk").euler_characteristic(), 1);
  EXPECT_EQ(preset_surface("Disk").boundary_circles().size(), 1u);
  EXPECT_EQ(preset_surface("Annulus").euler_characteristic(), 0);
  EXPECT_EQ(preset_surface("Annulus").boundary_circles().size(), 2u);
  try {
    preset_surface("Klein");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownName);
  }
}

TEST(DeltaComplex2, RejectsNonOrientableGluing) {
  // Two triangles glued along all three sides with matching signs: a sphere; flipping one sign clashes.
  const DeltaComplex2 s = preset_surface("S2");
  GluingTable2 t = s.gluing_table();
  std::vector<int> signs = *t.orientation;
  signs[0] = -signs[0];
  t.orientation = signs;
  try {
    DeltaComplex2::from_gluings(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonOrientable);
  }
}
