#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "agw/events.hpp"

using namespace agw;

TEST_CASE("boolean answer shape: one question, two conflicting answers") {
  EventStructure es;
  size_t q = es.add_event("q");
  size_t t = es.add_event("t", {q});
  size_t f = es.add_event("f", {q});
  es.add_conflict(t, f);
  CHECK(es.validate().ok());
  CHECK(es.leq(q, t));
  CHECK(!es.leq(t, q));
  CHECK(es.in_conflict(t, f));
  CHECK(!es.in_conflict(q, t));

  auto cfg = es.configurations();
  CHECK(cfg == std::vector<Config>{0b000, 0b001, 0b011, 0b101});

  auto game = game_of(es);
  CHECK(game.g.vertex_count() == 4);
  CHECK(game.g.edge_count() == 3);
  CHECK(game.g.tiles().empty());
  CHECK(game.g.vertex_name(game.root) == "{}");
  CHECK(game.g.find_vertex("{q,t}").has_value());
  CHECK(game.g.validate_tiles().ok());
}

TEST_CASE("independent pair yields one tile") {
  EventStructure es;
  es.add_event("a");
  es.add_event("b");
  auto game = game_of(es);
  CHECK(game.g.vertex_count() == 4);
  CHECK(game.g.edge_count() == 4);
  CHECK(game.g.tiles().size() == 1);
  CHECK(check_cube(game.g).ok);
  CHECK(check_contractible(game.g, game.root).ok);

  auto pg = position_graph(game.g, game.root);
  CHECK(pg.representative.size() == 4);
  CHECK(check_downset_lattices(pg).ok);
}

TEST_CASE("joint cause closes transitively") {
  EventStructure es;
  size_t a = es.add_event("a");
  size_t b = es.add_event("b");
  size_t c = es.add_event("c", {a, b});
  size_t d = es.add_event("d", {c});
  CHECK(es.leq(a, d));
  CHECK(es.causes(d) == 0b0111);

  auto cfg = es.configurations();
  CHECK(cfg.size() == 6);  // {}, a, b, ab, abc, abcd

  auto game = game_of(es);
  CHECK(game.g.edge_count() == 6);
  CHECK(game.g.tiles().size() == 1);
}

TEST_CASE("conflict is inherited upward") {
  EventStructure es;
  size_t a = es.add_event("a");
  size_t b = es.add_event("b");
  size_t c = es.add_event("c", {b});
  es.add_conflict(a, b);
  CHECK(es.in_conflict(a, c));
  CHECK(es.validate().ok());
  auto cfg = es.configurations();
  CHECK(cfg == std::vector<Config>{0b000, 0b001, 0b010, 0b110});
  CHECK(!es.is_configuration(0b011));
  CHECK(!es.is_configuration(0b100));  // c without its cause
}

TEST_CASE("an event may not conflict with its own history") {
  EventStructure es;
  size_t a = es.add_event("a");
  size_t b = es.add_event("b", {a});
  es.add_conflict(a, b);
  auto rep = es.validate();
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].find("conflicts with its cause") != std::string::npos);
  CHECK_THROWS_AS(game_of(es), precondition_error);
}

TEST_CASE("construction guards") {
  EventStructure es;
  es.add_event("a");
  CHECK_THROWS_AS(es.add_event("a"), precondition_error);
  CHECK_THROWS_AS(es.add_event("b", {5}), precondition_error);
  CHECK_THROWS_AS(es.add_conflict(0, 0), precondition_error);
  CHECK_THROWS_AS(es.add_conflict(0, 9), precondition_error);
  for (int i = 1; i < 31; ++i) es.add_event("e" + std::to_string(i));
  CHECK_THROWS_AS(es.add_event("overflow"), precondition_error);
}

TEST_CASE("linearizations respect causality") {
  EventStructure es;
  size_t a = es.add_event("a");
  size_t b = es.add_event("b", {a});
  size_t c = es.add_event("c");
  CHECK(linearizations(es, 0b011).size() == 1);
  CHECK(linearizations(es, 0b101).size() == 2);
  auto lin = linearizations(es, 0b111);
  CHECK(lin.size() == 3);  // c may go in any of three slots around a<b
  std::set<std::vector<size_t>> got(lin.begin(), lin.end());
  CHECK(got.count({a, b, c}));
  CHECK(got.count({a, c, b}));
  CHECK(got.count({c, a, b}));
}

TEST_CASE("configuration-graph positions recover the configurations") {
  EventStructure es;
  size_t q = es.add_event("q");
  es.add_event("t", {q});
  es.add_event("u");
  auto game = game_of(es);
  REQUIRE(game.g.validate_tiles().ok());
  CHECK(check_cube(game.g).ok);
  auto pg = position_graph(game.g, game.root);
  CHECK(pg.representative.size() == es.configurations().size());
  CHECK(check_downset_lattices(pg).ok);
}
