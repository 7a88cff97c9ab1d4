#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agw/graph.hpp"

namespace agw {

// Configurations are bitmasks over event indices, so structures are capped at
// 31 events.
using Config = uint32_t;

struct ESReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

class EventStructure {
 public:
  // Causes must already exist; causality is closed transitively on insertion,
  // so it is acyclic by construction.
  size_t add_event(const std::string& name, const std::vector<size_t>& causes = {});
  void add_conflict(size_t a, size_t b);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<size_t> find(const std::string& name) const;

  Config causes(size_t e) const { return cause_[e]; }     // strict, closed
  bool leq(size_t a, size_t b) const { return a == b || (cause_[b] >> a) & 1; }

  // Conflict closed under inheritance: a#b and b<=c gives a#c.
  Config conflicts(size_t e) const;
  bool in_conflict(size_t a, size_t b) const { return (conflicts(a) >> b) & 1; }

  // Irreflexivity of the closed conflict, i.e. no event at odds with its own
  // causal history.
  ESReport validate() const;

  bool is_configuration(Config x) const;
  std::vector<size_t> enabled(Config x) const;
  // All configurations, ascending as integers; the empty one comes first.
  std::vector<Config> configurations() const;

 private:
  void close_conflicts() const;

  std::vector<std::string> names_;
  std::vector<Config> cause_;
  std::vector<Config> direct_conflict_;
  mutable std::vector<Config> closed_conflict_;
  mutable bool conflicts_dirty_ = true;
};

// Every order of the events of x consistent with causality.
std::vector<std::vector<size_t>> linearizations(const EventStructure& es, Config x);

// The asynchronous graph of configurations: one vertex per configuration, an
// edge per (configuration, enabled event), a tile per pair of events enabled
// together.
struct ESGame {
  AsyncGraph g;
  Vertex root = 0;                  // the empty configuration
  std::vector<Config> config;      // per vertex
  std::vector<size_t> edge_event;  // per edge
};

ESGame game_of(const EventStructure& es);

}  // namespace agw
