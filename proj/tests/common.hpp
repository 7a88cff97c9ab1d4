#pragma once

#include "agw/games.hpp"
#include "agw/strategy.hpp"

namespace agw::testing {

// One question, two mutually exclusive answers.
inline EventStructure bool_events() {
  EventStructure es;
  size_t q = es.add_event("q");
  size_t t = es.add_event("t", {q});
  size_t f = es.add_event("f", {q});
  es.add_conflict(t, f);
  return es;
}

inline Game bool_game() {
  return game_from_events(
      bool_events(), {Polarity::opponent, Polarity::proponent, Polarity::proponent});
}

inline Config mask_of(const Game& g, std::initializer_list<const char*> dotted) {
  Config m = 0;
  for (const char* d : dotted) {
    Address a;
    std::string s = d;
    size_t pos = 0;
    while (pos != std::string::npos) {
      size_t dot = s.find('.', pos);
      a.parts.push_back(s.substr(pos, dot == std::string::npos ? dot : dot - pos));
      pos = dot == std::string::npos ? dot : dot + 1;
    }
    auto mv = g.find_move(a);
    if (!mv) throw error(std::string("no move ") + d);
    m |= Config(1) << *mv;
  }
  return m;
}

inline Game bb_game() { return product(bool_game(), bool_game(), TileLabel::tensor); }
inline Game bb_imp_b_game() { return limp(bb_game(), bool_game()); }

inline Address addr_of(const char* dotted) {
  Address a;
  std::string s = dotted;
  size_t pos = 0;
  while (pos != std::string::npos) {
    size_t dot = s.find('.', pos);
    a.parts.push_back(s.substr(pos, dot == std::string::npos ? dot : dot - pos));
    pos = dot == std::string::npos ? dot : dot + 1;
  }
  return a;
}

inline size_t move_of(const Game& g, const char* dotted) {
  auto m = g.find_move(addr_of(dotted));
  if (!m) throw error(std::string("no move ") + dotted);
  return *m;
}

inline Play play_of(const Game& g, std::initializer_list<const char*> dotted) {
  Play p;
  for (const char* d : dotted) p.push_back(move_of(g, d));
  return p;
}

// Compact presentation builder for in-code strategy fixtures.
class ESBuilder {
 public:
  explicit ESBuilder(std::shared_ptr<const Game> g) : game_(std::move(g)) {}

  ESBuilder& ev(const char* name, const char* addr,
                std::initializer_list<const char*> deps = {}) {
    std::vector<size_t> causes;
    for (const char* d : deps) causes.push_back(idx_.at(d));
    idx_[name] = les_.es.add_event(name, causes);
    les_.label.push_back(move_of(*game_, addr));
    return *this;
  }

  ESBuilder& conflict(const char* a, const char* b) {
    les_.es.add_conflict(idx_.at(a), idx_.at(b));
    return *this;
  }

  Strategy build() { return Strategy::from_events(game_, les_); }
  const LabeledES& les() const { return les_; }

 private:
  std::shared_ptr<const Game> game_;
  LabeledES les_;
  std::map<std::string, size_t> idx_;
};

// Left answer true, right answer false, the right answer waiting for the
// left question (diagram-11 behaviour).
inline Strategy sigma_on_bb() {
  auto g = std::make_shared<Game>(bb_game());
  return ESBuilder(g)
      .ev("qL", "L.q")
      .ev("tL", "L.t", {"qL"})
      .ev("qR", "R.q")
      .ev("fR", "R.f", {"qR", "qL"})
      .build();
}

// Same answers with the two sides fully independent.
inline Strategy indep_on_bb() {
  auto g = std::make_shared<Game>(bb_game());
  return ESBuilder(g)
      .ev("qL", "L.q")
      .ev("tL", "L.t", {"qL"})
      .ev("qR", "R.q")
      .ev("fR", "R.f", {"qR"})
      .build();
}

// Strict conjunctions on (B*B) -o B: left-first, right-first, parallel.
inline Strategy and_l_strategy() {
  auto g = std::make_shared<Game>(bb_imp_b_game());
  return ESBuilder(g)
      .ev("q", "R.q")
      .ev("aL", "L.L.q", {"q"})
      .ev("tL", "L.L.t", {"aL"})
      .ev("fL", "L.L.f", {"aL"})
      .ev("aR", "L.R.q", {"tL"})
      .ev("tR", "L.R.t", {"aR"})
      .ev("fR", "L.R.f", {"aR"})
      .ev("o_f1", "R.f", {"fL"})
      .ev("o_t", "R.t", {"tR"})
      .ev("o_f2", "R.f", {"fR"})
      .conflict("tL", "fL")
      .conflict("tR", "fR")
      .build();
}

inline Strategy and_r_strategy() {
  auto g = std::make_shared<Game>(bb_imp_b_game());
  return ESBuilder(g)
      .ev("q", "R.q")
      .ev("aR", "L.R.q", {"q"})
      .ev("tR", "L.R.t", {"aR"})
      .ev("fR", "L.R.f", {"aR"})
      .ev("aL", "L.L.q", {"tR"})
      .ev("tL", "L.L.t", {"aL"})
      .ev("fL", "L.L.f", {"aL"})
      .ev("o_f1", "R.f", {"fR"})
      .ev("o_t", "R.t", {"tL"})
      .ev("o_f2", "R.f", {"fL"})
      .conflict("tR", "fR")
      .conflict("tL", "fL")
      .build();
}

inline Strategy and_p_strategy() {
  auto g = std::make_shared<Game>(bb_imp_b_game());
  return ESBuilder(g)
      .ev("q", "R.q")
      .ev("qL", "L.L.q", {"q"})
      .ev("qR", "L.R.q", {"q"})
      .ev("tL", "L.L.t", {"qL"})
      .ev("fL", "L.L.f", {"qL"})
      .ev("tR", "L.R.t", {"qR"})
      .ev("fR", "L.R.f", {"qR"})
      .ev("o_tt", "R.t", {"tL", "tR"})
      .ev("o_ff", "R.f", {"fL", "fR"})
      .ev("o_tf", "R.f", {"tL", "fR"})
      .ev("o_ft", "R.f", {"fL", "tR"})
      .conflict("tL", "fL")
      .conflict("tR", "fR")
      .build();
}

}  // namespace agw::testing
