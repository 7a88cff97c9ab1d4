#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "agw/events.hpp"   // Config
#include "agw/graph.hpp"

namespace agw {

// Independence tiles remember which connective produced them; cross tiles of a
// product carry its label, inherited tiles keep their own.
enum class TileLabel : uint8_t { plain, tensor, par };

TileLabel flip(TileLabel l);

// A game: an asynchronous graph whose vertices are positions (sets of moves),
// each edge playing one move, with a polarity per move. Products also record
// their connective groups for the scheduling criteria, and every constructed
// game keeps the parts it was built from.
class Game {
 public:
  enum class Kind : uint8_t { base, dual, product, lift };

  AsyncGraph g;
  Vertex root = 0;
  std::vector<Address> moves;        // index = move id
  std::vector<Polarity> polarity;    // per move
  std::vector<Config> position;      // per vertex: mask of moves played
  std::vector<size_t> edge_move;     // per edge
  std::vector<TileLabel> tile_label;
  // Connective groups, outermost first: (component prefix, tensor/par).
  std::vector<std::pair<Address, TileLabel>> groups;

  Kind kind = Kind::base;
  std::vector<std::shared_ptr<const Game>> parts;
  std::string marker;  // lift step

  size_t move_count() const { return moves.size(); }
  std::optional<size_t> find_move(const Address& a) const;
  std::string display(size_t move) const { return moves[move].display(); }
  Polarity edge_polarity(EdgeId e) const { return polarity[edge_move[e]]; }

  std::optional<Vertex> vertex_of(Config position_mask) const;
  std::optional<EdgeId> edge_at(Vertex v, size_t move) const;

  // Names a position mask like "{q_L, q_R}", moves sorted by display name.
  std::string position_name(Config mask) const;

  void finish();  // index positions; call after hand-assembly

 private:
  std::unordered_map<Config, Vertex> by_position_;
  std::unordered_map<uint64_t, EdgeId> by_step_;
};

Game game_from_events(const EventStructure& es, const std::vector<Polarity>& pol);
Game empty_game();
Game dual(const Game& a);
Game product(const Game& a, const Game& b, TileLabel label);
Game limp(const Game& a, const Game& b);
Game lift(const Game& a, const std::string& marker, Polarity pol);

// The A and B of a game built as A -o B, i.e. dual(A) par B.
std::optional<std::pair<std::shared_ptr<const Game>, std::shared_ptr<const Game>>> limp_parts(
    const Game& g);

bool same_game(const Game& a, const Game& b);

// Causality of the game itself: m is required before n, i.e. every position
// containing n contains m.
bool move_causes(const Game& game, size_t m, size_t n);

// Subgame induced by the edges satisfying `keep(source position, move)`:
// vertices reachable from the root through kept edges, tiles whose four edges
// all survive. Moves, polarities and groups are carried over unchanged.
Game restrict_edges(const Game& game,
                    const std::function<bool(Config, size_t)>& keep);

// Sequential composition of independent components: the restriction of
// product(a, b, tensor) to plays where no second-component move precedes a
// first-component move (or the mirror image when right_first is set).
Game sequentialize(const Game& a, const Game& b, bool right_first);

struct GameReport {
  TileReport tiles;
  CubeReport cube;
  ContractReport contract;
  LatticeReport lattice;
  bool positional = true;  // edges add one fresh move; positions are distinct
  std::string positional_detail;
  bool ok() const {
    return tiles.ok() && cube.ok && contract.ok && lattice.ok && positional;
  }
};

GameReport check_game(const Game& game);

}  // namespace agw
