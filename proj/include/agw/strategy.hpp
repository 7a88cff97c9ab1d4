#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agw/events.hpp"
#include "agw/games.hpp"

namespace agw {

// A play is the sequence of moves from the root; in a positional game it
// determines its path.
using Play = std::vector<size_t>;

// Event structure whose events are labeled by game moves. Several events may
// carry the same label (one per causal history).
struct LabeledES {
  EventStructure es;
  std::vector<size_t> label;  // per event: move id
};

// A prefix-closed set of plays of one game, with the subgraph it traverses.
// Canonical input is a labeled event structure; composition produces raw play
// sets.
class Strategy {
 public:
  // Throws precondition_error on label range errors and on dead
  // configurations (configurations none of whose linearizations is a play).
  static Strategy from_events(std::shared_ptr<const Game> game, LabeledES pres);

  // Plays are validated against the game and closed under prefix.
  static Strategy from_plays(std::shared_ptr<const Game> game, std::set<Play> plays);

  const Game& game() const { return *game_; }
  std::shared_ptr<const Game> game_ptr() const { return game_; }
  const std::optional<LabeledES>& presentation() const { return pres_; }
  const std::set<Play>& plays() const { return plays_; }

  bool contains(const Play& s) const { return plays_.count(s) != 0; }
  Config end_position(const Play& s) const;
  Vertex end_vertex(const Play& s) const;

  // The subgraph traversed by the play set.
  const std::set<Vertex>& sub_vertices() const { return verts_; }
  const std::set<EdgeId>& sub_edges() const { return edges_; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }

  std::string play_name(const Play& s) const;

 private:
  std::shared_ptr<const Game> game_;
  std::optional<LabeledES> pres_;
  std::set<Play> plays_;
  std::set<Vertex> verts_;
  std::set<EdgeId> edges_;
};

struct IngenuityReport {
  bool positional = true;
  bool forward_preservation = true;
  bool backward_preservation = true;
  bool deterministic = true;
  bool courteous = true;
  std::string positional_witness, forward_witness, backward_witness, deterministic_witness,
      courteous_witness;
  bool ingenuous() const {
    return positional && forward_preservation && backward_preservation && deterministic &&
           courteous;
  }
};

IngenuityReport check_ingenuous(const Strategy& sigma);

// Play-level reformulation of positionality with the preservation properties:
// closure of the play set under single tile permutations, plus the forward
// closure "s·m, s·n present implies both tile completions present". Agrees
// with the first three flags of check_ingenuous.
bool playset_characterization(const Strategy& sigma);

struct ReceptivityReport {
  bool receptive = true;
  std::string witness;
};

ReceptivityReport is_receptive(const Strategy& sigma);

// The unique partial order on the moves of x whose linearizations are exactly
// the plays of sigma reaching x. Carrier in ascending move order. Throws
// error when no such order exists, precondition_error when x is unreached.
PartialOrder causality_order(const Strategy& sigma, Config x);

// Transitions of the traversed subgraph modulo the zig-zag identification of
// parallel edges across its tiles.
struct InducedEvents {
  LabeledES les;
  std::map<EdgeId, size_t> edge_event;
};

InducedEvents induced_events(const Strategy& sigma);

// Identity behaviour on a -o a: each move of `a` is answered by its copy in
// the other component, Opponent side first.
Strategy copycat(std::shared_ptr<const Game> a);

}  // namespace agw
