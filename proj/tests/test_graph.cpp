#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "agw/graph.hpp"

using namespace agw;

namespace {

// The 3-cube on vertices xyz in {0,1}^3. `full` adds all six face tiles;
// otherwise only the three faces meeting corner 101, which breaks the cube
// property at the hexagon pair (x.y.z, z.y.x).
AsyncGraph make_cube(bool full) {
  AsyncGraph g;
  for (int v = 0; v < 8; ++v) {
    std::string name = {char('0' + (v >> 2 & 1)), char('0' + (v >> 1 & 1)), char('0' + (v & 1))};
    g.add_vertex(name);
  }
  auto v = [](int x, int y, int z) { return Vertex(x << 2 | y << 1 | z); };
  auto e = [&](const std::string& n, Vertex a, Vertex b) { return g.add_edge(n, a, b); };
  EdgeId x00 = e("x00", v(0, 0, 0), v(1, 0, 0)), x01 = e("x01", v(0, 0, 1), v(1, 0, 1));
  EdgeId x10 = e("x10", v(0, 1, 0), v(1, 1, 0)), x11 = e("x11", v(0, 1, 1), v(1, 1, 1));
  EdgeId y00 = e("y00", v(0, 0, 0), v(0, 1, 0)), y01 = e("y01", v(0, 0, 1), v(0, 1, 1));
  EdgeId y10 = e("y10", v(1, 0, 0), v(1, 1, 0)), y11 = e("y11", v(1, 0, 1), v(1, 1, 1));
  EdgeId z00 = e("z00", v(0, 0, 0), v(0, 0, 1)), z01 = e("z01", v(0, 1, 0), v(0, 1, 1));
  EdgeId z10 = e("z10", v(1, 0, 0), v(1, 0, 1)), z11 = e("z11", v(1, 1, 0), v(1, 1, 1));
  g.add_tile(x01, y11, y01, x11);  // xy face at z=1
  g.add_tile(x00, z10, z00, x01);  // xz face at y=0
  g.add_tile(y10, z11, z10, y11);  // yz face at x=1
  if (full) {
    g.add_tile(x00, y10, y00, x10);  // xy face at z=0
    g.add_tile(x10, z11, z01, x11);  // xz face at y=1
    g.add_tile(y00, z01, z00, y01);  // yz face at x=0
  }
  return g;
}

Path named_path(const AsyncGraph& g, Vertex start, std::initializer_list<const char*> names) {
  Path p{start, {}};
  for (const char* n : names) p.edges.push_back(*g.find_edge_by_name(n));
  return p;
}

}  // namespace

TEST_CASE("square: tile permutation and homotopy") {
  AsyncGraph g;
  Vertex r = g.add_vertex("r"), a = g.add_vertex("a"), b = g.add_vertex("b"),
         t = g.add_vertex("t");
  EdgeId m = g.add_edge("m", r, a), p = g.add_edge("p", a, t);
  EdgeId n = g.add_edge("n", r, b), q = g.add_edge("q", b, t);
  g.add_tile(m, p, n, q);
  CHECK(g.validate_tiles().ok());
  CHECK(g.permuted(m, p) == TileHalf{n, q});
  CHECK(g.permuted(n, q) == TileHalf{m, p});
  CHECK(!g.permuted(m, q).has_value());
  Path s{r, {m, p}}, u{r, {n, q}};
  CHECK(homotopic(g, s, u));
  CHECK(homotopy_class(g, s).size() == 2);

  auto po = path_order(g, s);
  CHECK(po.labels == std::vector<std::string>{"m", "p"});
  CHECK(!po.lt(0, 1));
  CHECK(!po.lt(1, 0));
  CHECK(po.linear_extensions().size() == 2);
}

TEST_CASE("square without tile: cofinal but not homotopic") {
  AsyncGraph g;
  Vertex r = g.add_vertex("r"), a = g.add_vertex("a"), b = g.add_vertex("b"),
         t = g.add_vertex("t");
  EdgeId m = g.add_edge("m", r, a), p = g.add_edge("p", a, t);
  EdgeId n = g.add_edge("n", r, b), q = g.add_edge("q", b, t);
  CHECK(!homotopic(g, Path{r, {m, p}}, Path{r, {n, q}}));
  CHECK_THROWS_AS(homotopic(g, Path{r, {m}}, Path{r, {n, q}}), precondition_error);
  CHECK_THROWS_AS(homotopic(g, Path{a, {p}}, Path{r, {n, q}}), precondition_error);

  auto po = path_order(g, Path{r, {m, p}});
  CHECK(po.lt(0, 1));
  CHECK(po.covers() == std::vector<std::pair<size_t, size_t>>{{0, 1}});
  CHECK(po.linear_extensions().size() == 1);
}

TEST_CASE("tile validation rejects malformed squares") {
  AsyncGraph g;
  Vertex r = g.add_vertex("r"), a = g.add_vertex("a"), b = g.add_vertex("b"),
         c = g.add_vertex("c"), t = g.add_vertex("t");
  EdgeId m = g.add_edge("m", r, a), p = g.add_edge("p", a, t);
  EdgeId n = g.add_edge("n", r, b), q = g.add_edge("q", b, t);
  EdgeId n2 = g.add_edge("n2", r, c), q2 = g.add_edge("q2", c, t);

  SUBCASE("equal coinitial edges") {
    g.add_tile(m, p, m, p);
    auto rep = g.validate_tiles();
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].find("equal coinitial") != std::string::npos);
  }
  SUBCASE("non-composable half") {
    g.add_tile(m, q, n, q);  // m ends at a, q starts at b
    CHECK(!g.validate_tiles().ok());
  }
  SUBCASE("two tiles complete the same scheduling differently") {
    g.add_tile(m, p, n, q);
    g.add_tile(m, p, n2, q2);
    auto rep = g.validate_tiles();
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].find("two distinct tiles") != std::string::npos);
  }
}

TEST_CASE("duplicate names and bad endpoints are rejected") {
  AsyncGraph g;
  g.add_vertex("v");
  CHECK_THROWS_AS(g.add_vertex("v"), precondition_error);
  Vertex w = g.add_vertex("w");
  g.add_edge("e", 0, w);
  CHECK_THROWS_AS(g.add_edge("e", w, 0), precondition_error);
  CHECK_THROWS_AS(g.add_edge("f", 7, 0), precondition_error);
}

TEST_CASE("full cube: cube property, contractibility, free path order") {
  AsyncGraph g = make_cube(true);
  REQUIRE(g.validate_tiles().ok());
  CHECK(g.acyclic());

  auto cube = check_cube(g);
  CHECK(cube.ok);

  Vertex root = *g.find_vertex("000");
  auto con = check_contractible(g, root);
  CHECK(con.ok);
  CHECK(con.unreachable.empty());

  Path xyz = named_path(g, root, {"x00", "y10", "z11"});
  CHECK(homotopy_class(g, xyz).size() == 6);
  auto po = path_order(g, xyz);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(!po.lt(i, j));
  CHECK(po.linear_extensions().size() == 6);

  // The homotopy class realizes every schedule of the three moves once.
  auto cls = homotopy_class(g, xyz);
  std::set<std::vector<EdgeId>> class_edge_seqs;
  for (auto& p : cls) class_edge_seqs.insert(p.edges);
  CHECK(class_edge_seqs.size() == 6);
}

TEST_CASE("three-face cube: hexagon fillable on one side only") {
  AsyncGraph g = make_cube(false);
  REQUIRE(g.validate_tiles().ok());

  auto cube = check_cube(g);
  REQUIRE(!cube.ok);
  REQUIRE(cube.witness.has_value());
  auto [s, t] = *cube.witness;
  CHECK(s.edges.size() == 3);
  CHECK(g.path_end(s) == g.path_end(t));
  CHECK(s.start == t.start);
  CHECK(cube.detail.find("fillable") != std::string::npos);

  Vertex root = *g.find_vertex("000");
  Path xyz = named_path(g, root, {"x00", "y10", "z11"});
  Path zyx = named_path(g, root, {"z00", "y01", "x11"});
  Path yxz = named_path(g, root, {"y00", "x10", "z11"});
  CHECK(homotopic(g, xyz, zyx));
  CHECK(!homotopic(g, xyz, yxz));
  CHECK(homotopy_class(g, xyz).size() == 4);

  auto con = check_contractible(g, root);
  CHECK(!con.ok);
  REQUIRE(con.witness.has_value());

  // Four permutations of three moves form no linear-extension set.
  CHECK_THROWS_AS(path_order(g, xyz), error);
}

TEST_CASE("position graph of the full cube is the boolean lattice") {
  AsyncGraph g = make_cube(true);
  Vertex root = *g.find_vertex("000");
  auto pg = position_graph(g, root);
  REQUIRE(pg.representative.size() == 8);
  CHECK(pg.g.vertex_count() == 8);
  CHECK(pg.g.edges().size() == 12);
  CHECK(pg.g.tiles().size() == 6);
  CHECK(pg.g.validate_tiles().ok());
  CHECK(pg.representative[pg.root_class].edges.empty());

  Path xy = named_path(g, root, {"x00", "y10"});
  Path yx = named_path(g, root, {"y00", "x10"});
  auto cxy = pg.class_of(g, xy);
  auto cyx = pg.class_of(g, yx);
  REQUIRE(cxy.has_value());
  CHECK(cxy == cyx);
  CHECK(pg.reach[pg.root_class][*cxy]);
  CHECK(!pg.reach[*cxy][pg.root_class]);

  CHECK(check_downset_lattices(pg).ok);
}

TEST_CASE("position graph of the three-face cube splits the top corner") {
  AsyncGraph g = make_cube(false);
  Vertex root = *g.find_vertex("000");
  auto pg = position_graph(g, root);
  // Corner 111 is reached by three distinct classes: {xyz~xzy~zxy~zyx},
  // {yxz}, {yzx}. Corners 110 and 011 also split in two, their faces being
  // absent, so 12 classes cover the 8 corners.
  Vertex top = *g.find_vertex("111");
  size_t top_classes = 0;
  for (Vertex c = 0; c < pg.representative.size(); ++c)
    if (pg.endpoint[c] == top) ++top_classes;
  CHECK(top_classes == 3);
  CHECK(pg.representative.size() == 12);
}

TEST_CASE("downset lattice check rejects a doubled diamond") {
  AsyncGraph g;
  Vertex r = g.add_vertex("r"), m1 = g.add_vertex("m1"), m2 = g.add_vertex("m2"),
         a = g.add_vertex("a"), b = g.add_vertex("b"), t = g.add_vertex("t");
  EdgeId p = g.add_edge("p", r, m1), q = g.add_edge("q", r, m2);
  EdgeId qa = g.add_edge("qa", m1, a), pa = g.add_edge("pa", m2, a);
  EdgeId qb = g.add_edge("qb", m1, b), pb = g.add_edge("pb", m2, b);
  EdgeId ra = g.add_edge("ra", a, t), rb = g.add_edge("rb", b, t);
  g.add_tile(p, qa, q, pa);
  g.add_tile(p, qb, q, pb);
  g.add_tile(qa, ra, qb, rb);
  REQUIRE(g.validate_tiles().ok());

  auto pg = position_graph(g, r);
  // Classes [qa-path] and [qb-path] both sit above the incomparable pair
  // [p], [q], so their meet is not unique.
  auto rep = check_downset_lattices(pg);
  REQUIRE(!rep.ok);
  CHECK(rep.detail.find("meet/join") != std::string::npos);
}

TEST_CASE("path enumeration and cycle guard") {
  AsyncGraph g;
  Vertex r = g.add_vertex("r"), s = g.add_vertex("s");
  g.add_edge("f", r, s);
  g.add_edge("b", s, r);
  CHECK(!g.acyclic());
  CHECK_THROWS_AS(g.all_paths(r), precondition_error);

  AsyncGraph h = make_cube(true);
  auto paths = h.all_paths(*h.find_vertex("000"));
  // 1 empty + 3 + 6 + 6 paths in a 3-cube.
  CHECK(paths.size() == 16);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
}
