#include "agw/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace agw {

namespace {

uint64_t pair_key(EdgeId a, EdgeId b) { return (uint64_t(a) << 32) | b; }

struct PathHash {
  size_t operator()(const Path& p) const {
    size_t h = 1469598103934665603ULL ^ p.start;
    for (EdgeId e : p.edges) h = (h ^ (e + 1)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace

Vertex AsyncGraph::add_vertex(const std::string& name) {
  auto it = vertex_index_.find(name);
  if (it != vertex_index_.end()) throw precondition_error("duplicate vertex " + name);
  Vertex v = static_cast<Vertex>(vertex_names_.size());
  vertex_names_.push_back(name);
  vertex_index_.emplace(name, v);
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeId AsyncGraph::add_edge(const std::string& name, Vertex src, Vertex dst) {
  if (src >= vertex_count() || dst >= vertex_count())
    throw precondition_error("edge endpoint out of range: " + name);
  if (edge_index_.count(name)) throw precondition_error("duplicate edge " + name);
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({name, src, dst});
  edge_index_.emplace(name, e);
  out_[src].push_back(e);
  in_[dst].push_back(e);
  return e;
}

void AsyncGraph::add_tile(EdgeId m, EdgeId p, EdgeId n, EdgeId q) {
  for (EdgeId e : {m, p, n, q})
    if (e >= edges_.size()) throw precondition_error("tile edge out of range");
  tiles_.push_back({{m, p}, {n, q}});
  // First writer wins; conflicting squares surface in validate_tiles().
  residual_.emplace(pair_key(m, p), TileHalf{n, q});
  residual_.emplace(pair_key(n, q), TileHalf{m, p});
}

std::optional<Vertex> AsyncGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> AsyncGraph::find_edge_by_name(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<TileHalf> AsyncGraph::permuted(EdgeId a, EdgeId b) const {
  auto it = residual_.find(pair_key(a, b));
  if (it == residual_.end()) return std::nullopt;
  return it->second;
}

bool AsyncGraph::valid_path(const Path& p) const {
  if (p.start >= vertex_count()) return false;
  Vertex at = p.start;
  for (EdgeId e : p.edges) {
    if (e >= edges_.size() || edges_[e].src != at) return false;
    at = edges_[e].dst;
  }
  return true;
}

Vertex AsyncGraph::path_end(const Path& p) const {
  return p.edges.empty() ? p.start : edges_[p.edges.back()].dst;
}

bool AsyncGraph::acyclic() const {
  std::vector<int> state(vertex_count(), 0);
  std::vector<std::pair<Vertex, size_t>> stack;
  for (Vertex s = 0; s < vertex_count(); ++s) {
    if (state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out_[v].size()) {
        Vertex w = edges_[out_[v][i++]].dst;
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<Path> AsyncGraph::all_paths(Vertex from) const {
  if (!acyclic()) throw precondition_error("path enumeration requires an acyclic graph");
  std::vector<Path> out;
  Path cur{from, {}};
  // Iterative DFS over extension choices.
  std::vector<size_t> choice{0};
  out.push_back(cur);
  while (!choice.empty()) {
    Vertex at = path_end(cur);
    size_t& i = choice.back();
    if (i < out_[at].size()) {
      EdgeId e = out_[at][i++];
      cur.edges.push_back(e);
      out.push_back(cur);
      choice.push_back(0);
    } else {
      choice.pop_back();
      if (!cur.edges.empty()) cur.edges.pop_back();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TileReport AsyncGraph::validate_tiles() const {
  TileReport rep;
  auto tile_str = [&](const Tile& t) {
    return edges_[t.a.first].name + "." + edges_[t.a.second].name + " ~ " +
           edges_[t.b.first].name + "." + edges_[t.b.second].name;
  };
  std::unordered_map<uint64_t, TileHalf> seen;
  for (const Tile& t : tiles_) {
    const Edge& m = edges_[t.a.first];
    const Edge& p = edges_[t.a.second];
    const Edge& n = edges_[t.b.first];
    const Edge& q = edges_[t.b.second];
    if (m.dst != p.src || n.dst != q.src) {
      rep.violations.push_back("tile halves not composable: " + tile_str(t));
      continue;
    }
    if (m.src != n.src) rep.violations.push_back("tile halves not coinitial: " + tile_str(t));
    if (p.dst != q.dst) rep.violations.push_back("tile halves not cofinal: " + tile_str(t));
    if (t.a.first == t.b.first)
      rep.violations.push_back("tile with equal coinitial edges: " + tile_str(t));
    if (t.a.second == t.b.second)
      rep.violations.push_back("tile with equal cofinal edges: " + tile_str(t));
    for (auto [h, o] : {std::pair{t.a, t.b}, std::pair{t.b, t.a}}) {
      auto [it, fresh] = seen.emplace(pair_key(h.first, h.second), o);
      if (!fresh && !(it->second == o))
        rep.violations.push_back("scheduling " + edges_[h.first].name + "." +
                                 edges_[h.second].name + " completed by two distinct tiles");
    }
  }
  return rep;
}

namespace {

// Single-tile permutation at slot i of a path, if a tile covers it.
std::optional<Path> permute_at(const AsyncGraph& g, const Path& s, size_t i) {
  auto other = g.permuted(s.edges[i], s.edges[i + 1]);
  if (!other) return std::nullopt;
  Path t = s;
  t.edges[i] = other->first;
  t.edges[i + 1] = other->second;
  return t;
}

void check_pair_shape(const AsyncGraph& g, const Path& s, const Path& t) {
  if (!g.valid_path(s) || !g.valid_path(t)) throw precondition_error("invalid path");
  if (s.start != t.start) throw precondition_error("paths are not coinitial");
  if (g.path_end(s) != g.path_end(t)) throw precondition_error("paths are not cofinal");
}

}  // namespace

std::vector<Path> homotopy_class(const AsyncGraph& g, const Path& s) {
  if (!g.valid_path(s)) throw precondition_error("invalid path");
  std::vector<Path> order;
  std::unordered_set<Path, PathHash> seen;
  std::deque<Path> queue{s};
  seen.insert(s);
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    order.push_back(p);
    for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
      if (auto n = permute_at(g, p, i); n && seen.insert(*n).second) queue.push_back(*n);
    }
  }
  return order;
}

bool homotopic(const AsyncGraph& g, const Path& s, const Path& t) {
  check_pair_shape(g, s, t);
  if (s.edges.size() != t.edges.size()) return false;
  if (s == t) return true;
  std::unordered_set<Path, PathHash> seen{s};
  std::deque<Path> queue{s};
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
      auto n = permute_at(g, p, i);
      if (!n) continue;
      if (*n == t) return true;
      if (seen.insert(*n).second) queue.push_back(*n);
    }
  }
  return false;
}

CubeReport check_cube(const AsyncGraph& g) {
  CubeReport rep;
  // Length-3 paths grouped by (start, end).
  std::map<std::pair<Vertex, Vertex>, std::vector<Path>> hexes;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId a : g.out_edges(v))
      for (EdgeId b : g.out_edges(g.edge(a).dst))
        for (EdgeId c : g.out_edges(g.edge(b).dst))
          hexes[{v, g.edge(c).dst}].push_back(Path{v, {a, b, c}});
  }
  // The two fillings permute at slots 1,0,1 (one side of the cube) and 0,1,0
  // (the other side); each step is forced, so fillability is a single chase.
  auto fill = [&](const Path& s, const Path& t, std::initializer_list<size_t> slots) {
    Path cur = s;
    for (size_t i : slots) {
      auto n = permute_at(g, cur, i);
      if (!n) return false;
      cur = *n;
    }
    return cur == t;
  };
  for (auto& [key, paths] : hexes) {
    for (const Path& s : paths) {
      for (const Path& t : paths) {
        if (s == t) continue;
        bool left = fill(s, t, {1, 0, 1});
        bool right = fill(s, t, {0, 1, 0});
        if (left != right) {
          rep.ok = false;
          rep.witness = {s, t};
          rep.detail = std::string("hexagon fillable on the ") + (left ? "left" : "right") +
                       " side only";
          return rep;
        }
      }
    }
  }
  return rep;
}

ContractReport check_contractible(const AsyncGraph& g, Vertex root) {
  ContractReport rep;
  auto paths = g.all_paths(root);
  std::vector<char> reached(g.vertex_count(), 0);
  std::map<Vertex, std::vector<Path>> by_end;
  for (const Path& p : paths) {
    Vertex e = g.path_end(p);
    reached[e] = 1;
    by_end[e].push_back(p);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!reached[v]) rep.unreachable.push_back(g.vertex_name(v));
  for (auto& [v, group] : by_end) {
    if (group.size() < 2) continue;
    auto cls = homotopy_class(g, group.front());
    std::unordered_set<Path, PathHash> in_class(cls.begin(), cls.end());
    for (const Path& p : group) {
      if (!in_class.count(p)) {
        rep.ok = false;
        rep.witness = {group.front(), p};
        return rep;
      }
    }
  }
  return rep;
}

std::vector<std::pair<size_t, size_t>> PartialOrder::covers() const {
  std::vector<std::pair<size_t, size_t>> out;
  size_t n = size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool cover = true;
      for (size_t k = 0; k < n && cover; ++k)
        if (lt(i, k) && lt(k, j)) cover = false;
      if (cover) out.push_back({i, j});
    }
  return out;
}

std::vector<std::vector<size_t>> PartialOrder::linear_extensions() const {
  size_t n = size();
  if (n > 20) throw precondition_error("linear extension enumeration is capped at 20 elements");
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool ready = true;
      for (size_t j = 0; j < n && ready; ++j)
        if (!used[j] && lt(j, i)) ready = false;
      if (!ready) continue;
      used[i] = 1;
      cur.push_back(i);
      self(self);
      cur.pop_back();
      used[i] = 0;
    }
  };
  rec(rec);
  return out;
}

PartialOrder path_order(const AsyncGraph& g, const Path& s) {
  if (!g.valid_path(s)) throw precondition_error("invalid path");
  size_t n = s.edges.size();
  // BFS over the class, tracking which original occurrence sits at each slot:
  // a tile permutation exchanges the two occurrences it reschedules.
  using Occ = std::vector<uint8_t>;
  std::unordered_map<Path, Occ, PathHash> seen;
  Occ id(n);
  for (size_t i = 0; i < n; ++i) id[i] = static_cast<uint8_t>(i);
  seen.emplace(s, id);
  std::deque<Path> queue{s};
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    Occ occ = seen.at(p);
    for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
      auto np = permute_at(g, p, i);
      if (!np) continue;
      Occ nocc = occ;
      std::swap(nocc[i], nocc[i + 1]);
      auto [it, fresh] = seen.emplace(*np, nocc);
      if (fresh)
        queue.push_back(*np);
      else if (it->second != nocc)
        throw error("path visits its homotopy class with two occurrence trackings; "
                    "the graph fails the cube property");
    }
  }
  PartialOrder po;
  po.labels.resize(n);
  for (size_t i = 0; i < n; ++i) po.labels[i] = g.edge(s.edges[i]).name;
  po.leq.assign(n, std::vector<bool>(n, true));
  for (auto& [p, occ] : seen) {
    std::vector<size_t> slot(n);
    for (size_t k = 0; k < n; ++k) slot[occ[k]] = k;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j && slot[i] > slot[j]) po.leq[i][j] = false;
  }
  // The class must be exactly the linear extensions of the extracted order.
  std::set<std::vector<size_t>> seqs;
  for (auto& [p, occ] : seen) {
    std::vector<size_t> seq(n);
    for (size_t k = 0; k < n; ++k) seq[k] = occ[k];
    seqs.insert(seq);
  }
  auto exts = po.linear_extensions();
  std::set<std::vector<size_t>> ext_set(exts.begin(), exts.end());
  if (ext_set != seqs)
    throw error("homotopy class of the path is not the linear-extension set of any "
                "partial order; the graph fails the cube property");
  return po;
}

PositionGraph position_graph(const AsyncGraph& g, Vertex root) {
  auto paths = g.all_paths(root);  // sorted
  std::unordered_map<Path, Vertex, PathHash> cls;
  PositionGraph pg;
  for (const Path& p : paths) {
    if (cls.count(p)) continue;
    Vertex id = static_cast<Vertex>(pg.representative.size());
    auto members = homotopy_class(g, p);
    Path rep = *std::min_element(members.begin(), members.end());
    pg.representative.push_back(rep);
    pg.endpoint.push_back(g.path_end(p));
    for (const Path& m : members) cls.emplace(m, id);
  }
  for (Vertex c = 0; c < pg.representative.size(); ++c)
    pg.g.add_vertex("c" + std::to_string(c));
  pg.root_class = cls.at(Path{root, {}});
  // Class edges, named after the move they perform.
  std::set<std::pair<Vertex, EdgeId>> edge_seen;
  std::map<std::pair<Vertex, EdgeId>, EdgeId> class_edge;
  for (const Path& p : paths) {
    Vertex c = cls.at(p);
    Vertex at = g.path_end(p);
    for (EdgeId e : g.out_edges(at)) {
      if (!edge_seen.insert({c, e}).second) continue;
      Path q = p;
      q.edges.push_back(e);
      Vertex c2 = cls.at(q);
      EdgeId ce = pg.g.add_edge(g.edge(e).name + "@c" + std::to_string(c), c, c2);
      class_edge[{c, e}] = ce;
    }
  }
  // Tiles transport along classes: one per (class, base tile at its endpoint).
  for (Vertex c = 0; c < pg.representative.size(); ++c) {
    Vertex x = pg.endpoint[c];
    for (const Tile& t : g.tiles()) {
      if (g.edge(t.a.first).src != x) continue;
      auto m = class_edge.find({c, t.a.first});
      auto n = class_edge.find({c, t.b.first});
      if (m == class_edge.end() || n == class_edge.end()) continue;
      Vertex cm = pg.g.edge(m->second).dst;
      Vertex cn = pg.g.edge(n->second).dst;
      auto p = class_edge.find({cm, t.a.second});
      auto q = class_edge.find({cn, t.b.second});
      if (p == class_edge.end() || q == class_edge.end()) continue;
      pg.g.add_tile(m->second, p->second, n->second, q->second);
    }
  }
  // Reflexive reachability order.
  size_t n = pg.representative.size();
  pg.reach.assign(n, std::vector<bool>(n, false));
  for (Vertex c = 0; c < n; ++c) {
    std::deque<Vertex> queue{c};
    pg.reach[c][c] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (EdgeId e : pg.g.out_edges(v)) {
        Vertex w = pg.g.edge(e).dst;
        if (!pg.reach[c][w]) {
          pg.reach[c][w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return pg;
}

std::optional<Vertex> PositionGraph::class_of(const AsyncGraph& base, const Path& p) const {
  for (Vertex c = 0; c < representative.size(); ++c)
    if (endpoint[c] == base.path_end(p) && homotopic(base, representative[c], p)) return c;
  return std::nullopt;
}

LatticeReport check_downset_lattices(const PositionGraph& pg) {
  LatticeReport rep;
  size_t n = pg.representative.size();
  auto leq = [&](Vertex a, Vertex b) { return pg.reach[a][b]; };
  auto name = [&](Vertex c) { return pg.g.vertex_name(c); };
  std::vector<Vertex> tops;
  for (Vertex x = 0; x < n; ++x) {
    bool maximal = true;
    for (Vertex y = 0; y < n && maximal; ++y)
      if (y != x && leq(x, y)) maximal = false;
    if (maximal) tops.push_back(x);
  }
  for (Vertex x : tops) {
    std::vector<Vertex> d;
    for (Vertex y = 0; y < n; ++y)
      if (leq(y, x)) d.push_back(y);
    auto bound = [&](Vertex a, Vertex b, bool lower) -> std::optional<Vertex> {
      std::vector<Vertex> cand;
      for (Vertex z : d) {
        bool in = lower ? (leq(z, a) && leq(z, b)) : (leq(a, z) && leq(b, z));
        if (in) cand.push_back(z);
      }
      std::vector<Vertex> extreme;
      for (Vertex z : cand) {
        bool ext = true;
        for (Vertex w : cand)
          if (w != z && (lower ? leq(z, w) : leq(w, z))) {
            ext = false;
            break;
          }
        if (ext) extreme.push_back(z);
      }
      if (extreme.size() != 1) return std::nullopt;
      return extreme[0];
    };
    size_t m = d.size();
    std::vector<std::vector<Vertex>> meet(m, std::vector<Vertex>(m)),
        join(m, std::vector<Vertex>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        auto mo = bound(d[i], d[j], true);
        auto jo = bound(d[i], d[j], false);
        if (!mo || !jo) {
          rep.ok = false;
          rep.detail = "no unique meet/join for " + name(d[i]) + ", " + name(d[j]) +
                       " below " + name(x);
          return rep;
        }
        meet[i][j] = *mo;
        join[i][j] = *jo;
      }
    std::vector<size_t> pos(n);
    for (size_t i = 0; i < m; ++i) pos[d[i]] = i;
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b)
        for (size_t c = 0; c < m; ++c) {
          Vertex lhs = meet[a][pos[join[b][c]]];
          Vertex rhs = join[pos[meet[a][b]]][pos[meet[a][c]]];
          if (lhs != rhs) {
            rep.ok = false;
            rep.detail = "distributivity fails on " + name(d[a]) + ", " + name(d[b]) + ", " +
                         name(d[c]) + " below " + name(x);
            return rep;
          }
        }
  }
  return rep;
}

}  // namespace agw
