#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "agw/base.hpp"

namespace agw {

using Vertex = uint32_t;
using EdgeId = uint32_t;

struct Edge {
  std::string name;
  Vertex src = 0, dst = 0;
};

// One scheduling of a tile: two composable edges.
struct TileHalf {
  EdgeId first = 0, second = 0;
  bool operator==(const TileHalf&) const = default;
};

// An independence square {(m,p),(n,q)}: two coinitial, cofinal length-2 paths
// identified up to order of execution.
struct Tile {
  TileHalf a, b;
};

struct Path {
  Vertex start = 0;
  std::vector<EdgeId> edges;
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct TileReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct CubeReport {
  bool ok = true;
  // On failure: the hexagon whose two fillings disagree.
  std::optional<std::pair<Path, Path>> witness;
  std::string detail;
};

struct ContractReport {
  bool ok = true;
  std::optional<std::pair<Path, Path>> witness;  // cofinal, non-homotopic
  std::vector<std::string> unreachable;
};

// Finite partial order with displayable carrier labels.
struct PartialOrder {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;  // reflexive

  size_t size() const { return labels.size(); }
  bool lt(size_t i, size_t j) const { return i != j && leq[i][j]; }
  // Covering pairs (i,j): i < j with nothing strictly between.
  std::vector<std::pair<size_t, size_t>> covers() const;
  // All linear extensions, each a sequence of carrier indices.
  std::vector<std::vector<size_t>> linear_extensions() const;
};

class AsyncGraph {
 public:
  Vertex add_vertex(const std::string& name);
  EdgeId add_edge(const std::string& name, Vertex src, Vertex dst);
  void add_tile(EdgeId m, EdgeId p, EdgeId n, EdgeId q);  // halves (m,p) and (n,q)

  size_t vertex_count() const { return vertex_names_.size(); }
  size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Tile>& tiles() const { return tiles_; }
  const std::string& vertex_name(Vertex v) const { return vertex_names_[v]; }
  std::optional<Vertex> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge_by_name(const std::string& name) const;
  const std::vector<EdgeId>& out_edges(Vertex v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(Vertex v) const { return in_[v]; }

  // The other scheduling of the square through (a,b), if a tile covers it.
  std::optional<TileHalf> permuted(EdgeId a, EdgeId b) const;

  bool valid_path(const Path& p) const;
  Vertex path_end(const Path& p) const;

  // Every directed path starting at `from` (the graph must be acyclic).
  std::vector<Path> all_paths(Vertex from) const;

  // Tile well-formedness: composable coinitial/cofinal halves, the two axioms,
  // and determinism of the permutation across all tiles.
  TileReport validate_tiles() const;

  bool acyclic() const;

 private:
  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<Tile> tiles_;
  std::vector<std::vector<EdgeId>> out_, in_;
  std::unordered_map<uint64_t, TileHalf> residual_;  // (a,b) -> other half
};

// Homotopy: the congruence generated by single-tile permutations.
// Both paths must be coinitial and cofinal (else precondition_error).
bool homotopic(const AsyncGraph& g, const Path& s, const Path& t);

// Every path homotopic to s, s included, in BFS discovery order.
std::vector<Path> homotopy_class(const AsyncGraph& g, const Path& s);

// Hexagon fillability: for every pair of coinitial cofinal length-3 paths,
// the left-hand filling exists iff the right-hand filling does.
CubeReport check_cube(const AsyncGraph& g);

// All paths from root into a common endpoint fall in one homotopy class.
ContractReport check_contractible(const AsyncGraph& g, Vertex root);

// The partial order on the edge occurrences of s whose linear extensions are
// exactly the homotopy class of s. Carrier label i is the name of s.edges[i].
// Throws error with a diagnostic when no such order exists (cube failure).
PartialOrder path_order(const AsyncGraph& g, const Path& s);

// The graph [G] of homotopy classes of paths from root.
struct PositionGraph {
  AsyncGraph g;                      // one vertex per class, inherited tiles
  std::vector<Path> representative;  // lexicographically least member
  std::vector<Vertex> endpoint;      // endpoint in the underlying graph
  Vertex root_class = 0;
  std::vector<std::vector<bool>> reach;  // reflexive reachability order on classes

  std::optional<Vertex> class_of(const AsyncGraph& base, const Path& p) const;
};

PositionGraph position_graph(const AsyncGraph& g, Vertex root);

// Below every class of [G], reachability must form a distributive lattice.
struct LatticeReport {
  bool ok = true;
  std::string detail;
};
LatticeReport check_downset_lattices(const PositionGraph& pg);

}  // namespace agw
