#include "agw/events.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace agw {

size_t EventStructure::add_event(const std::string& name, const std::vector<size_t>& causes) {
  if (size() >= 31) throw precondition_error("event structures are capped at 31 events");
  if (find(name)) throw precondition_error("duplicate event " + name);
  Config c = 0;
  for (size_t e : causes) {
    if (e >= size()) throw precondition_error("unknown cause of " + name);
    c |= cause_[e] | (Config(1) << e);
  }
  names_.push_back(name);
  cause_.push_back(c);
  direct_conflict_.push_back(0);
  conflicts_dirty_ = true;
  return size() - 1;
}

void EventStructure::add_conflict(size_t a, size_t b) {
  if (a >= size() || b >= size()) throw precondition_error("unknown event in conflict");
  if (a == b) throw precondition_error("self-conflict on " + names_[a]);
  direct_conflict_[a] |= Config(1) << b;
  direct_conflict_[b] |= Config(1) << a;
  conflicts_dirty_ = true;
}

std::optional<size_t> EventStructure::find(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void EventStructure::close_conflicts() const {
  if (!conflicts_dirty_) return;
  closed_conflict_ = direct_conflict_;
  // a#b propagates to everything above b.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < size(); ++c)
      for (size_t b = 0; b < size(); ++b) {
        if (!((cause_[c] >> b) & 1)) continue;
        Config add = closed_conflict_[b] & ~closed_conflict_[c];
        add &= ~(Config(1) << c);  // self-conflict checked by validate(), not hidden here
        if (!add) continue;
        // keep symmetry
        for (size_t a = 0; a < size(); ++a)
          if ((add >> a) & 1) closed_conflict_[a] |= Config(1) << c;
        closed_conflict_[c] |= add;
        changed = true;
      }
  }
  conflicts_dirty_ = false;
}

Config EventStructure::conflicts(size_t e) const {
  close_conflicts();
  return closed_conflict_[e];
}

ESReport EventStructure::validate() const {
  ESReport rep;
  for (size_t e = 0; e < size(); ++e) {
    Config bad = conflicts(e) & cause_[e];
    if ((conflicts(e) >> e) & 1) bad |= Config(1) << e;
    for (size_t c = 0; c < size(); ++c)
      if ((bad >> c) & 1)
        rep.violations.push_back("event " + names_[e] + " conflicts with its cause " +
                                 names_[c]);
  }
  return rep;
}

bool EventStructure::is_configuration(Config x) const {
  if (x >> size()) return false;
  for (size_t e = 0; e < size(); ++e) {
    if (!((x >> e) & 1)) continue;
    if ((cause_[e] & x) != cause_[e]) return false;
    if (conflicts(e) & x) return false;
  }
  return true;
}

std::vector<size_t> EventStructure::enabled(Config x) const {
  std::vector<size_t> out;
  for (size_t e = 0; e < size(); ++e) {
    if ((x >> e) & 1) continue;
    if ((cause_[e] & x) == cause_[e] && !(conflicts(e) & x)) out.push_back(e);
  }
  return out;
}

std::vector<Config> EventStructure::configurations() const {
  std::set<Config> seen{0};
  std::deque<Config> queue{0};
  while (!queue.empty()) {
    Config x = queue.front();
    queue.pop_front();
    for (size_t e : enabled(x)) {
      Config y = x | (Config(1) << e);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<size_t>> linearizations(const EventStructure& es, Config x) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, Config done) -> void {
    if (done == x) {
      out.push_back(cur);
      return;
    }
    for (size_t e = 0; e < es.size(); ++e) {
      if (!((x >> e) & 1) || ((done >> e) & 1)) continue;
      if ((es.causes(e) & x & ~done) != 0) continue;
      cur.push_back(e);
      self(self, done | (Config(1) << e));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ESGame game_of(const EventStructure& es) {
  auto rep = es.validate();
  if (!rep.ok()) throw precondition_error("invalid event structure: " + rep.violations[0]);
  ESGame out;
  auto configs = es.configurations();
  auto config_name = [&](Config x) {
    std::string s = "{";
    bool first = true;
    for (size_t e = 0; e < es.size(); ++e)
      if ((x >> e) & 1) {
        if (!first) s += ",";
        s += es.name(e);
        first = false;
      }
    return s + "}";
  };
  std::unordered_map<Config, Vertex> vtx;
  for (Config x : configs) vtx[x] = out.g.add_vertex(config_name(x));
  out.config = configs;
  out.root = vtx.at(0);
  std::map<std::pair<Config, size_t>, EdgeId> edge_at;
  for (Config x : configs)
    for (size_t e : es.enabled(x)) {
      Config y = x | (Config(1) << e);
      EdgeId id = out.g.add_edge(es.name(e) + "@" + config_name(x), vtx.at(x), vtx.at(y));
      out.edge_event.push_back(e);
      edge_at[{x, e}] = id;
    }
  for (Config x : configs) {
    auto en = es.enabled(x);
    for (size_t i = 0; i < en.size(); ++i)
      for (size_t j = i + 1; j < en.size(); ++j) {
        size_t e = en[i], f = en[j];
        Config xe = x | (Config(1) << e), xf = x | (Config(1) << f);
        if (!es.is_configuration(xe | xf)) continue;
        out.g.add_tile(edge_at.at({x, e}), edge_at.at({xe, f}), edge_at.at({x, f}),
                       edge_at.at({xf, e}));
      }
  }
  return out;
}

}  // namespace agw
