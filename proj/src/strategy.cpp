#include "agw/strategy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace agw {

namespace {

std::optional<Play> play_of_path(const Game& g, const Path& p) {
  if (p.start != g.root) return std::nullopt;
  Play s;
  for (EdgeId e : p.edges) s.push_back(g.edge_move[e]);
  return s;
}

std::optional<Path> path_of_play(const Game& g, const Play& s) {
  Path p;
  p.start = g.root;
  Vertex v = g.root;
  for (size_t m : s) {
    auto e = g.edge_at(v, m);
    if (!e) return std::nullopt;
    p.edges.push_back(*e);
    v = g.g.edge(*e).dst;
  }
  return p;
}

// Closing edges of the tile over two coinitial edges, and openers of the
// tile under two cofinal edges.
struct TileIndex {
  std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> close;
  std::map<std::pair<EdgeId, EdgeId>, std::pair<EdgeId, EdgeId>> open;

  explicit TileIndex(const AsyncGraph& g) {
    for (const Tile& t : g.tiles()) {
      close[{t.a.first, t.b.first}] = {t.a.second, t.b.second};
      close[{t.b.first, t.a.first}] = {t.b.second, t.a.second};
      open[{t.a.second, t.b.second}] = {t.a.first, t.b.first};
      open[{t.b.second, t.a.second}] = {t.b.first, t.a.first};
    }
  }
};

}  // namespace

Strategy Strategy::from_events(std::shared_ptr<const Game> game, LabeledES pres) {
  ESReport es_ok = pres.es.validate();
  if (!es_ok.ok()) throw precondition_error("invalid event structure: " + es_ok.violations[0]);
  if (pres.label.size() != pres.es.size())
    throw precondition_error("one label per event required");
  for (size_t l : pres.label)
    if (l >= game->move_count()) throw precondition_error("label is not a move of the game");

  Strategy s;
  s.game_ = std::move(game);
  const Game& g = *s.game_;
  for (Config x : pres.es.configurations()) {
    bool alive = false;
    for (const auto& lin : linearizations(pres.es, x)) {
      Play p;
      for (size_t ev : lin) p.push_back(pres.label[ev]);
      if (path_of_play(g, p)) {
        s.plays_.insert(std::move(p));
        alive = true;
      }
    }
    if (!alive) {
      std::string names;
      for (size_t e = 0; e < pres.es.size(); ++e)
        if (x & (Config(1) << e)) names += (names.empty() ? "" : ", ") + pres.es.name(e);
      throw precondition_error("dead configuration {" + names + "}");
    }
  }
  s.pres_ = std::move(pres);
  for (const Play& p : s.plays_) {
    Vertex v = g.root;
    s.verts_.insert(v);
    for (size_t m : p) {
      EdgeId e = *g.edge_at(v, m);
      s.edges_.insert(e);
      v = g.g.edge(e).dst;
      s.verts_.insert(v);
    }
  }
  return s;
}

Strategy Strategy::from_plays(std::shared_ptr<const Game> game, std::set<Play> plays) {
  Strategy s;
  s.game_ = std::move(game);
  const Game& g = *s.game_;
  plays.insert(Play{});
  for (const Play& p : plays) {
    if (!path_of_play(g, p)) {
      Play bad = p;
      std::ostringstream os;
      for (size_t m : bad) os << " " << (m < g.move_count() ? g.display(m) : "?");
      throw precondition_error("not a play of the game:" + os.str());
    }
    for (size_t k = 0; k <= p.size(); ++k) s.plays_.insert(Play(p.begin(), p.begin() + k));
  }
  for (const Play& p : s.plays_) {
    Vertex v = g.root;
    s.verts_.insert(v);
    for (size_t m : p) {
      EdgeId e = *g.edge_at(v, m);
      s.edges_.insert(e);
      v = g.g.edge(e).dst;
      s.verts_.insert(v);
    }
  }
  return s;
}

Vertex Strategy::end_vertex(const Play& s) const {
  Vertex v = game_->root;
  for (size_t m : s) v = game_->g.edge(*game_->edge_at(v, m)).dst;
  return v;
}

Config Strategy::end_position(const Play& s) const { return game_->position[end_vertex(s)]; }

std::string Strategy::play_name(const Play& s) const {
  if (s.empty()) return "ε";
  std::string r;
  for (size_t m : s) {
    if (!r.empty()) r += "·";
    r += game_->display(m);
  }
  return r;
}

IngenuityReport check_ingenuous(const Strategy& sigma) {
  const Game& g = sigma.game();
  IngenuityReport rep;
  TileIndex tiles(g.g);

  // positionality: within each homotopy class of cofinal plays, membership of
  // a one-move extension is a class property
  std::map<Config, std::vector<Play>> by_pos;
  for (const Play& s : sigma.plays()) by_pos[sigma.end_position(s)].push_back(s);
  for (auto& [pos, group] : by_pos) {
    (void)pos;
    std::set<Play> remaining(group.begin(), group.end());
    while (!remaining.empty() && rep.positional) {
      Play seed = *remaining.begin();
      std::vector<Play> members;
      for (const Path& p : homotopy_class(g.g, *path_of_play(g, seed))) {
        auto s = play_of_path(g, p);
        if (s && remaining.count(*s)) members.push_back(*s);
      }
      for (const Play& s : members) remaining.erase(s);
      if (members.size() > 1) {
        Vertex v = sigma.end_vertex(members.front());
        for (EdgeId e : g.g.out_edges(v)) {
          size_t m = g.edge_move[e];
          std::vector<const Play*> with, without;
          for (const Play& s : members) {
            Play ext = s;
            ext.push_back(m);
            (sigma.contains(ext) ? with : without).push_back(&s);
          }
          if (!with.empty() && !without.empty()) {
            rep.positional = false;
            rep.positional_witness = "plays " + sigma.play_name(*with.front()) + " and " +
                                     sigma.play_name(*without.front()) +
                                     " are homotopic but only the first extends by " +
                                     g.display(m);
            break;
          }
        }
      }
    }
  }

  // per-vertex in/out σ-edges
  std::map<Vertex, std::vector<EdgeId>> out_at, in_at;
  for (EdgeId e : sigma.sub_edges()) {
    out_at[g.g.edge(e).src].push_back(e);
    in_at[g.g.edge(e).dst].push_back(e);
  }

  auto tile_name = [&](EdgeId m, EdgeId n) {
    return "moves " + g.display(g.edge_move[m]) + ", " + g.display(g.edge_move[n]) + " at " +
           g.position_name(g.position[g.g.edge(m).src]);
  };

  for (auto& [v, outs] : out_at) {
    (void)v;
    for (size_t i = 0; i < outs.size(); ++i)
      for (size_t j = i + 1; j < outs.size(); ++j) {
        EdgeId m = outs[i], n = outs[j];
        auto it = tiles.close.find({m, n});
        if (it != tiles.close.end()) {
          auto [p, q] = it->second;
          if (rep.forward_preservation && (!sigma.has_edge(p) || !sigma.has_edge(q))) {
            rep.forward_preservation = false;
            rep.forward_witness = "tile over " + tile_name(m, n) + " not closed in the strategy";
          }
        }
        bool m_prop = g.edge_polarity(m) == Polarity::proponent;
        bool n_prop = g.edge_polarity(n) == Polarity::proponent;
        if ((m_prop || n_prop) && rep.deterministic) {
          bool closed = it != tiles.close.end() && sigma.has_edge(it->second.first) &&
                        sigma.has_edge(it->second.second);
          if (!closed) {
            rep.deterministic = false;
            rep.deterministic_witness = "coinitial Proponent pair " + tile_name(m, n) +
                                        " has no completing tile in the strategy";
          }
        }
      }
  }

  for (auto& [v, ins] : in_at) {
    (void)v;
    if (!rep.backward_preservation) break;
    for (size_t i = 0; i < ins.size(); ++i)
      for (size_t j = i + 1; j < ins.size(); ++j) {
        auto it = tiles.open.find({ins[i], ins[j]});
        if (it == tiles.open.end()) continue;
        auto [m, n] = it->second;
        if (!sigma.has_edge(m) || !sigma.has_edge(n)) {
          rep.backward_preservation = false;
          rep.backward_witness = "tile under " + tile_name(m, n) + " not opened in the strategy";
          break;
        }
      }
  }

  for (const Tile& t : g.g.tiles()) {
    if (!rep.courteous) break;
    for (auto [first, second, of, os] :
         {std::tuple{t.a.first, t.a.second, t.b.first, t.b.second},
          std::tuple{t.b.first, t.b.second, t.a.first, t.a.second}}) {
      if (g.edge_polarity(first) != Polarity::proponent) continue;
      if (!sigma.has_edge(first) || !sigma.has_edge(second)) continue;
      if (!sigma.has_edge(of) || !sigma.has_edge(os)) {
        rep.courteous = false;
        rep.courteous_witness = "Proponent move " + g.display(g.edge_move[first]) +
                                " at " + g.position_name(g.position[g.g.edge(first).src]) +
                                " is not delayed past its independent Opponent move";
        break;
      }
    }
  }

  return rep;
}

bool playset_characterization(const Strategy& sigma) {
  const Game& g = sigma.game();
  TileIndex tiles(g.g);

  // Eq-style closure: homotopic plays of the set extend by the same moves
  std::map<Config, std::vector<Play>> by_pos;
  for (const Play& s : sigma.plays()) by_pos[sigma.end_position(s)].push_back(s);
  for (auto& [pos, group] : by_pos) {
    (void)pos;
    std::set<Play> remaining(group.begin(), group.end());
    while (!remaining.empty()) {
      Play seed = *remaining.begin();
      std::vector<Play> members;
      for (const Path& p : homotopy_class(g.g, *path_of_play(g, seed))) {
        auto s = play_of_path(g, p);
        if (s && remaining.count(*s)) members.push_back(*s);
      }
      for (const Play& s : members) remaining.erase(s);
      Vertex v = sigma.end_vertex(seed);
      for (EdgeId e : g.g.out_edges(v)) {
        size_t m = g.edge_move[e];
        size_t hits = 0;
        for (const Play& s : members) {
          Play ext = s;
          ext.push_back(m);
          if (sigma.contains(ext)) ++hits;
        }
        if (hits != 0 && hits != members.size()) return false;
      }
    }
  }

  // forward closure on plays
  for (const Play& s : sigma.plays()) {
    Vertex v = sigma.end_vertex(s);
    std::vector<EdgeId> exts;
    for (EdgeId e : g.g.out_edges(v)) {
      Play ext = s;
      ext.push_back(g.edge_move[e]);
      if (sigma.contains(ext)) exts.push_back(e);
    }
    for (size_t i = 0; i < exts.size(); ++i)
      for (size_t j = i + 1; j < exts.size(); ++j) {
        auto it = tiles.close.find({exts[i], exts[j]});
        if (it == tiles.close.end()) continue;
        Play a = s, b = s;
        a.push_back(g.edge_move[exts[i]]);
        a.push_back(g.edge_move[it->second.first]);
        b.push_back(g.edge_move[exts[j]]);
        b.push_back(g.edge_move[it->second.second]);
        if (!sigma.contains(a) || !sigma.contains(b)) return false;
      }
  }
  return true;
}

ReceptivityReport is_receptive(const Strategy& sigma) {
  const Game& g = sigma.game();
  for (const Play& s : sigma.plays()) {
    Vertex v = sigma.end_vertex(s);
    for (EdgeId e : g.g.out_edges(v)) {
      if (g.edge_polarity(e) != Polarity::opponent) continue;
      Play ext = s;
      ext.push_back(g.edge_move[e]);
      if (!sigma.contains(ext))
        return {false, "Opponent move " + g.display(g.edge_move[e]) + " refused after " +
                           sigma.play_name(s)};
    }
  }
  return {};
}

PartialOrder causality_order(const Strategy& sigma, Config x) {
  const Game& g = sigma.game();
  std::vector<Play> plays;
  for (const Play& s : sigma.plays())
    if (sigma.end_position(s) == x) plays.push_back(s);
  if (plays.empty())
    throw precondition_error("position " + g.position_name(x) + " is not reached");

  std::vector<size_t> moves;
  for (size_t m = 0; m < g.move_count(); ++m)
    if (x & (Config(1) << m)) moves.push_back(m);
  size_t n = moves.size();
  std::vector<size_t> slot(g.move_count());

  PartialOrder po;
  for (size_t m : moves) po.labels.push_back(g.display(m));
  po.leq.assign(n, std::vector<bool>(n, true));
  for (const Play& s : plays) {
    for (size_t k = 0; k < s.size(); ++k) slot[s[k]] = k;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j && slot[moves[i]] >= slot[moves[j]]) po.leq[i][j] = false;
  }

  std::set<std::vector<size_t>> expected;
  for (const Play& s : plays) {
    std::vector<size_t> seq;
    for (size_t m : s) seq.push_back(size_t(std::lower_bound(moves.begin(), moves.end(), m) -
                                            moves.begin()));
    expected.insert(seq);
  }
  std::set<std::vector<size_t>> got;
  for (auto& lin : po.linear_extensions()) got.insert(lin);
  if (got != expected)
    throw error("the plays reaching " + g.position_name(x) +
                " are not the linearizations of a partial order");
  return po;
}

InducedEvents induced_events(const Strategy& sigma) {
  const Game& g = sigma.game();

  std::map<EdgeId, EdgeId> parent;
  for (EdgeId e : sigma.sub_edges()) parent[e] = e;
  std::function<EdgeId(EdgeId)> find = [&](EdgeId e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  auto unite = [&](EdgeId a, EdgeId b) { parent[find(a)] = find(b); };

  for (const Tile& t : g.g.tiles()) {
    if (!sigma.has_edge(t.a.first) || !sigma.has_edge(t.a.second) || !sigma.has_edge(t.b.first) ||
        !sigma.has_edge(t.b.second))
      continue;
    unite(t.a.first, t.b.second);  // both play the same move
    unite(t.b.first, t.a.second);
  }

  // classes in order of least member
  std::map<EdgeId, size_t> cls;
  std::map<EdgeId, size_t> edge_event;
  for (EdgeId e : sigma.sub_edges()) {
    EdgeId r = find(e);
    if (!cls.count(r)) {
      size_t id = cls.size();
      cls[r] = id;
    }
  }
  for (EdgeId e : sigma.sub_edges()) edge_event[e] = cls[find(e)];
  size_t n = cls.size();

  std::vector<size_t> label(n);
  for (EdgeId e : sigma.sub_edges()) label[edge_event[e]] = g.edge_move[e];

  // events present at each traversed position
  std::map<Vertex, Config> at;
  at[g.root] = 0;
  std::vector<Vertex> queue{g.root};
  std::set<Vertex> seen{g.root};
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    for (EdgeId e : g.g.out_edges(v)) {
      if (!sigma.has_edge(e)) continue;
      Vertex w = g.g.edge(e).dst;
      Config mask = at[v] | (Config(1) << edge_event[e]);
      auto it = at.find(w);
      if (it == at.end()) {
        at[w] = mask;
      } else if (it->second != mask) {
        throw error("transitions of the strategy subgraph do not determine events");
      }
      if (seen.insert(w).second) queue.push_back(w);
    }
  }

  std::vector<std::vector<bool>> together(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, true));
  for (auto& [v, mask] : at) {
    (void)v;
    for (size_t e = 0; e < n; ++e) {
      if (!(mask & (Config(1) << e))) continue;
      for (size_t f = 0; f < n; ++f) {
        if (mask & (Config(1) << f))
          together[e][f] = true;
        else
          leq[f][e] = false;  // an occurrence of e without f
      }
    }
  }

  InducedEvents out;
  // topological insertion
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    size_t ca = 0, cb = 0;
    for (size_t i = 0; i < n; ++i) {
      ca += leq[i][a];
      cb += leq[i][b];
    }
    return ca < cb;
  });
  std::vector<size_t> pos_in_es(n);
  std::vector<size_t> es_label(n);
  for (size_t idx : order) {
    std::vector<size_t> cs;
    for (size_t i = 0; i < n; ++i)
      if (i != idx && leq[i][idx]) cs.push_back(pos_in_es[i]);
    pos_in_es[idx] = out.les.es.add_event("e" + std::to_string(idx), cs);
    es_label[pos_in_es[idx]] = label[idx];
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (!together[a][b]) out.les.es.add_conflict(pos_in_es[a], pos_in_es[b]);
  out.les.label.assign(es_label.begin(), es_label.begin() + n);
  for (auto& [e, c] : edge_event) out.edge_event[e] = pos_in_es[c];
  return out;
}

Strategy copycat(std::shared_ptr<const Game> a) {
  const Game& base = *a;
  size_t na = base.move_count();
  if (2 * na > 31) throw precondition_error("too many moves for a copycat presentation");
  auto game = std::make_shared<Game>(limp(base, base));

  // insertion order: causes of the base game first
  std::vector<size_t> order(na);
  for (size_t i = 0; i < na; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    size_t cx = 0, cy = 0;
    for (size_t c = 0; c < na; ++c) {
      cx += move_causes(base, c, x);
      cy += move_causes(base, c, y);
    }
    return cx < cy;
  });

  LabeledES les;
  std::vector<size_t> first_ev(na), second_ev(na);
  for (size_t k : order) {
    bool opp = base.polarity[k] == Polarity::opponent;
    size_t left = k, right = na + k;
    size_t lead = opp ? right : left;    // Opponent side of a -o a moves first
    size_t follow = opp ? left : right;
    // each event also waits for the same-copy events of its base causes
    std::vector<size_t> lead_causes, follow_causes;
    for (size_t c = 0; c < na; ++c) {
      if (!move_causes(base, c, k)) continue;
      bool c_opp = base.polarity[c] == Polarity::opponent;
      size_t c_left = c_opp ? second_ev[c] : first_ev[c];
      size_t c_right = c_opp ? first_ev[c] : second_ev[c];
      lead_causes.push_back(opp ? c_right : c_left);
      follow_causes.push_back(opp ? c_left : c_right);
    }
    first_ev[k] = les.es.add_event((opp ? "r_" : "l_") + base.moves[k].display(), lead_causes);
    les.label.push_back(lead);
    follow_causes.push_back(first_ev[k]);
    second_ev[k] = les.es.add_event((opp ? "l_" : "r_") + base.moves[k].display(), follow_causes);
    les.label.push_back(follow);
  }

  for (size_t i = 0; i < na; ++i)
    for (size_t j = i + 1; j < na; ++j) {
      bool compatible = false;
      for (Config pos : base.position)
        if ((pos & (Config(1) << i)) && (pos & (Config(1) << j))) {
          compatible = true;
          break;
        }
      if (compatible) continue;
      les.es.add_conflict(first_ev[i], first_ev[j]);
      les.es.add_conflict(first_ev[i], second_ev[j]);
      les.es.add_conflict(second_ev[i], first_ev[j]);
      les.es.add_conflict(second_ev[i], second_ev[j]);
    }

  return Strategy::from_events(std::move(game), std::move(les));
}

}  // namespace agw
