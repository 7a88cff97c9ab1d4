#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agw {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violation of a documented operation precondition (wrong shapes, mismatched games, ...).
struct precondition_error : error {
  using error::error;
};

// Malformed input text; carries a 1-based line number when known.
struct parse_error : error {
  int line = 0;
  parse_error(const std::string& msg, int line_no = 0)
      : error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
};

enum class Polarity : int8_t { opponent = -1, proponent = +1 };

inline Polarity flip(Polarity p) {
  return p == Polarity::proponent ? Polarity::opponent : Polarity::proponent;
}

inline const char* to_string(Polarity p) {
  return p == Polarity::proponent ? "+" : "-";
}

// Hierarchical move/component address. Steps are "L"/"R" (product components),
// "u"/"d" (lifting markers), or an event name from an environment-bound game as
// the final part.
struct Address {
  std::vector<std::string> parts;

  bool operator==(const Address&) const = default;
  auto operator<=>(const Address&) const = default;

  bool has_prefix(const Address& p) const {
    if (p.parts.size() > parts.size()) return false;
    for (size_t i = 0; i < p.parts.size(); ++i)
      if (parts[i] != p.parts[i]) return false;
    return true;
  }

  Address prefixed(const std::string& step) const {
    Address a;
    a.parts.reserve(parts.size() + 1);
    a.parts.push_back(step);
    a.parts.insert(a.parts.end(), parts.begin(), parts.end());
    return a;
  }

  // Canonical textual form, e.g. "L.R.q".
  std::string dotted() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += '.';
      s += parts[i];
    }
    return s;
  }

  // Human form: an address whose steps are all L/R renders as name with a side
  // subscript ("L.q" -> "q_L"); anything else keeps the dotted form.
  std::string display() const {
    if (parts.empty()) return "?";
    if (parts.size() == 1) return parts.back();
    std::string sub;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      if (parts[i] != "L" && parts[i] != "R") return dotted();
      sub += parts[i];
    }
    return parts.back() + "_" + sub;
  }
};

struct AddressHash {
  size_t operator()(const Address& a) const {
    size_t h = 1469598103934665603ULL;
    for (const auto& p : a.parts) {
      for (char c : p) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
      h = (h ^ 0x2eu) * 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace agw
