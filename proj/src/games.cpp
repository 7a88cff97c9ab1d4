#include "agw/games.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace agw {

TileLabel flip(TileLabel l) {
  switch (l) {
    case TileLabel::tensor: return TileLabel::par;
    case TileLabel::par: return TileLabel::tensor;
    default: return TileLabel::plain;
  }
}

namespace {

uint64_t step_key(Vertex v, size_t move) { return (uint64_t(v) << 32) | move; }

}  // namespace

void Game::finish() {
  if (edge_move.size() != g.edge_count() || position.size() != g.vertex_count() ||
      tile_label.size() != g.tiles().size() || polarity.size() != moves.size())
    throw precondition_error("game tables out of sync");
  by_position_.clear();
  by_step_.clear();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!by_position_.emplace(position[v], v).second)
      throw precondition_error("two vertices share the position " + position_name(position[v]));
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!by_step_.emplace(step_key(g.edge(e).src, edge_move[e]), e).second)
      throw precondition_error("two edges play one move at one position");
}

std::optional<size_t> Game::find_move(const Address& a) const {
  for (size_t i = 0; i < moves.size(); ++i)
    if (moves[i] == a) return i;
  return std::nullopt;
}

std::optional<Vertex> Game::vertex_of(Config mask) const {
  auto it = by_position_.find(mask);
  if (it == by_position_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Game::edge_at(Vertex v, size_t move) const {
  auto it = by_step_.find(step_key(v, move));
  if (it == by_step_.end()) return std::nullopt;
  return it->second;
}

std::string Game::position_name(Config mask) const {
  std::vector<std::string> names;
  for (size_t m = 0; m < moves.size(); ++m)
    if ((mask >> m) & 1) names.push_back(display(m));
  std::sort(names.begin(), names.end());
  std::string s = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) s += ", ";
    s += names[i];
  }
  return s + "}";
}

Game game_from_events(const EventStructure& es, const std::vector<Polarity>& pol) {
  if (pol.size() != es.size())
    throw precondition_error("one polarity per event required");
  ESGame eg = game_of(es);
  Game res;
  res.g = std::move(eg.g);
  res.root = eg.root;
  for (size_t e = 0; e < es.size(); ++e) res.moves.push_back(Address{{es.name(e)}});
  res.polarity = pol;
  res.position = eg.config;
  res.edge_move = eg.edge_event;
  res.tile_label.assign(res.g.tiles().size(), TileLabel::plain);
  res.finish();
  return res;
}

Game empty_game() {
  Game res;
  res.root = res.g.add_vertex("{}");
  res.position = {0};
  res.finish();
  return res;
}

Game dual(const Game& a) {
  Game res = a;
  for (auto& p : res.polarity) p = flip(p);
  for (auto& l : res.tile_label) l = flip(l);
  for (auto& [prefix, l] : res.groups) l = flip(l);
  res.kind = Game::Kind::dual;
  res.parts = {std::make_shared<const Game>(a)};
  res.marker.clear();
  res.finish();
  return res;
}

Game product(const Game& a, const Game& b, TileLabel label) {
  if (label == TileLabel::plain)
    throw precondition_error("products are labeled tensor or par");
  if (a.move_count() + b.move_count() > 31)
    throw precondition_error("games are capped at 31 moves");
  Game res;
  res.kind = Game::Kind::product;
  res.parts = {std::make_shared<const Game>(a), std::make_shared<const Game>(b)};
  for (const auto& m : a.moves) res.moves.push_back(m.prefixed("L"));
  for (const auto& m : b.moves) res.moves.push_back(m.prefixed("R"));
  res.polarity = a.polarity;
  res.polarity.insert(res.polarity.end(), b.polarity.begin(), b.polarity.end());

  size_t nb = b.g.vertex_count();
  auto vid = [&](Vertex va, Vertex vb) { return Vertex(va * nb + vb); };
  for (Vertex va = 0; va < a.g.vertex_count(); ++va)
    for (Vertex vb = 0; vb < nb; ++vb) {
      res.g.add_vertex("(" + a.g.vertex_name(va) + "," + b.g.vertex_name(vb) + ")");
      res.position.push_back(a.position[va] | (b.position[vb] << a.move_count()));
    }
  res.root = vid(a.root, b.root);

  std::vector<std::vector<EdgeId>> amap(a.g.edge_count(), std::vector<EdgeId>(nb));
  std::vector<std::vector<EdgeId>> bmap(b.g.edge_count(),
                                        std::vector<EdgeId>(a.g.vertex_count()));
  for (EdgeId e = 0; e < a.g.edge_count(); ++e)
    for (Vertex vb = 0; vb < nb; ++vb) {
      size_t move = a.edge_move[e];
      Vertex src = vid(a.g.edge(e).src, vb);
      amap[e][vb] = res.g.add_edge(res.moves[move].dotted() + "@" + res.g.vertex_name(src),
                                   src, vid(a.g.edge(e).dst, vb));
      res.edge_move.push_back(move);
    }
  for (EdgeId f = 0; f < b.g.edge_count(); ++f)
    for (Vertex va = 0; va < a.g.vertex_count(); ++va) {
      size_t move = a.move_count() + b.edge_move[f];
      Vertex src = vid(va, b.g.edge(f).src);
      bmap[f][va] = res.g.add_edge(res.moves[move].dotted() + "@" + res.g.vertex_name(src),
                                   src, vid(va, b.g.edge(f).dst));
      res.edge_move.push_back(move);
    }

  for (size_t t = 0; t < a.g.tiles().size(); ++t) {
    const Tile& tile = a.g.tiles()[t];
    for (Vertex vb = 0; vb < nb; ++vb) {
      res.g.add_tile(amap[tile.a.first][vb], amap[tile.a.second][vb], amap[tile.b.first][vb],
                     amap[tile.b.second][vb]);
      res.tile_label.push_back(a.tile_label[t]);
    }
  }
  for (size_t t = 0; t < b.g.tiles().size(); ++t) {
    const Tile& tile = b.g.tiles()[t];
    for (Vertex va = 0; va < a.g.vertex_count(); ++va) {
      res.g.add_tile(bmap[tile.a.first][va], bmap[tile.a.second][va], bmap[tile.b.first][va],
                     bmap[tile.b.second][va]);
      res.tile_label.push_back(b.tile_label[t]);
    }
  }
  for (EdgeId e = 0; e < a.g.edge_count(); ++e)
    for (EdgeId f = 0; f < b.g.edge_count(); ++f) {
      Vertex sa = a.g.edge(e).src, da = a.g.edge(e).dst;
      Vertex sb = b.g.edge(f).src, db = b.g.edge(f).dst;
      res.g.add_tile(amap[e][sb], bmap[f][da], bmap[f][sa], amap[e][db]);
      res.tile_label.push_back(label);
    }

  res.groups.push_back({Address{}, label});
  for (const auto& [prefix, l] : a.groups) res.groups.push_back({prefix.prefixed("L"), l});
  for (const auto& [prefix, l] : b.groups) res.groups.push_back({prefix.prefixed("R"), l});
  res.finish();
  return res;
}

Game limp(const Game& a, const Game& b) { return product(dual(a), b, TileLabel::par); }

Game lift(const Game& a, const std::string& marker, Polarity pol) {
  if (a.move_count() + 1 > 31) throw precondition_error("games are capped at 31 moves");
  Game res;
  res.kind = Game::Kind::lift;
  res.parts = {std::make_shared<const Game>(a)};
  res.marker = marker;
  res.moves.push_back(Address{{marker}});
  res.polarity.push_back(pol);
  for (const auto& m : a.moves) res.moves.push_back(m.prefixed(marker));
  for (Polarity p : a.polarity) res.polarity.push_back(p);

  res.root = res.g.add_vertex("(" + marker + ")");
  res.position.push_back(0);
  for (Vertex v = 0; v < a.g.vertex_count(); ++v) {
    res.g.add_vertex(marker + ":" + a.g.vertex_name(v));
    res.position.push_back((a.position[v] << 1) | 1);
  }
  res.g.add_edge(marker + "@" + res.g.vertex_name(res.root), res.root, a.root + 1);
  res.edge_move.push_back(0);
  for (EdgeId e = 0; e < a.g.edge_count(); ++e) {
    Vertex src = a.g.edge(e).src + 1;
    size_t move = a.edge_move[e] + 1;
    res.g.add_edge(res.moves[move].dotted() + "@" + res.g.vertex_name(src), src,
                   a.g.edge(e).dst + 1);
    res.edge_move.push_back(move);
  }
  for (size_t t = 0; t < a.g.tiles().size(); ++t) {
    const Tile& tile = a.g.tiles()[t];
    res.g.add_tile(tile.a.first + 1, tile.a.second + 1, tile.b.first + 1, tile.b.second + 1);
    res.tile_label.push_back(a.tile_label[t]);
  }
  for (const auto& [prefix, l] : a.groups) res.groups.push_back({prefix.prefixed(marker), l});
  res.finish();
  return res;
}

std::optional<std::pair<std::shared_ptr<const Game>, std::shared_ptr<const Game>>> limp_parts(
    const Game& g) {
  if (g.kind != Game::Kind::product || g.groups.empty() ||
      g.groups[0].second != TileLabel::par)
    return std::nullopt;
  if (g.parts[0]->kind != Game::Kind::dual) return std::nullopt;
  return std::pair{g.parts[0]->parts[0], g.parts[1]};
}

bool move_causes(const Game& game, size_t m, size_t n) {
  if (m == n) return false;
  Config mb = Config(1) << m, nb = Config(1) << n;
  for (Config pos : game.position)
    if ((pos & nb) && !(pos & mb)) return false;
  return true;
}

Game restrict_edges(const Game& game, const std::function<bool(Config, size_t)>& keep) {
  std::vector<char> edge_alive(game.g.edge_count(), 0);
  std::vector<char> vertex_alive(game.g.vertex_count(), 0);
  std::vector<Vertex> queue{game.root};
  vertex_alive[game.root] = 1;
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (EdgeId e : game.g.out_edges(v)) {
      if (!keep(game.position[v], game.edge_move[e])) continue;
      edge_alive[e] = 1;
      Vertex w = game.g.edge(e).dst;
      if (!vertex_alive[w]) {
        vertex_alive[w] = 1;
        queue.push_back(w);
      }
    }
  }

  Game r;
  r.moves = game.moves;
  r.polarity = game.polarity;
  r.groups = game.groups;
  r.kind = game.kind;
  r.parts = game.parts;
  r.marker = game.marker;
  std::vector<Vertex> vmap(game.g.vertex_count());
  for (Vertex v = 0; v < game.g.vertex_count(); ++v) {
    if (!vertex_alive[v]) continue;
    vmap[v] = r.g.add_vertex(game.g.vertex_name(v));
    r.position.push_back(game.position[v]);
  }
  r.root = vmap[game.root];
  std::vector<EdgeId> emap(game.g.edge_count());
  for (EdgeId e = 0; e < game.g.edge_count(); ++e) {
    if (!edge_alive[e]) continue;
    const Edge& ed = game.g.edge(e);
    emap[e] = r.g.add_edge(ed.name, vmap[ed.src], vmap[ed.dst]);
    r.edge_move.push_back(game.edge_move[e]);
  }
  for (size_t t = 0; t < game.g.tiles().size(); ++t) {
    const Tile& tile = game.g.tiles()[t];
    if (!edge_alive[tile.a.first] || !edge_alive[tile.a.second] || !edge_alive[tile.b.first] ||
        !edge_alive[tile.b.second])
      continue;
    r.g.add_tile(emap[tile.a.first], emap[tile.a.second], emap[tile.b.first],
                 emap[tile.b.second]);
    r.tile_label.push_back(game.tile_label[t]);
  }
  r.finish();
  return r;
}

Game sequentialize(const Game& a, const Game& b, bool right_first) {
  Game prod = product(a, b, TileLabel::tensor);
  Config first_half = (Config(1) << a.move_count()) - 1;
  Config late = right_first ? first_half : ~first_half;
  // No late-component move may precede an early one, so an early move is
  // legal only while no late move has been played. Cross tiles cannot
  // survive the filter; inherited ones keep their labels.
  return restrict_edges(prod, [late](Config at, size_t move) {
    if ((Config(1) << move) & late) return true;
    return (at & late) == 0;
  });
}

bool same_game(const Game& a, const Game& b) {
  if (a.moves != b.moves || a.polarity != b.polarity || a.groups != b.groups) return false;
  auto positions = [](const Game& g) {
    std::set<Config> s(g.position.begin(), g.position.end());
    return s;
  };
  if (positions(a) != positions(b)) return false;
  auto edges = [](const Game& g) {
    std::set<std::pair<Config, size_t>> s;
    for (EdgeId e = 0; e < g.g.edge_count(); ++e)
      s.insert({g.position[g.g.edge(e).src], g.edge_move[e]});
    return s;
  };
  if (edges(a) != edges(b)) return false;
  auto tiles = [](const Game& g) {
    std::set<std::tuple<Config, size_t, size_t, int>> s;
    for (size_t t = 0; t < g.g.tiles().size(); ++t) {
      const Tile& tile = g.g.tiles()[t];
      size_t m = g.edge_move[tile.a.first], n = g.edge_move[tile.b.first];
      s.insert({g.position[g.g.edge(tile.a.first).src], std::min(m, n), std::max(m, n),
                int(g.tile_label[t])});
    }
    return s;
  };
  return tiles(a) == tiles(b);
}

GameReport check_game(const Game& game) {
  GameReport rep;
  rep.tiles = game.g.validate_tiles();
  rep.cube = check_cube(game.g);
  rep.contract = check_contractible(game.g, game.root);
  rep.lattice = check_downset_lattices(position_graph(game.g, game.root));
  if (game.position[game.root] != 0) {
    rep.positional = false;
    rep.positional_detail = "root plays no moves";
  }
  for (EdgeId e = 0; e < game.g.edge_count() && rep.positional; ++e) {
    Config src = game.position[game.g.edge(e).src];
    Config dst = game.position[game.g.edge(e).dst];
    Config bit = Config(1) << game.edge_move[e];
    if ((src & bit) || dst != (src | bit)) {
      rep.positional = false;
      rep.positional_detail = "edge " + game.g.edge(e).name + " does not add its move";
    }
  }
  return rep;
}

}  // namespace agw
