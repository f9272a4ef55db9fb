#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"

namespace latowa {

/// A finite lattice given by element names and cover relations. Construction
/// closes the covers into the full order, verifies the lattice laws (rejecting
/// posets with a named offending pair), and precomputes join/meet tables, so
/// every later operation is a table lookup.
class FiniteLattice {
 public:
  struct Element {
    std::uint32_t index;
    friend bool operator==(const Element&, const Element&) = default;
  };

  static FiniteLattice build(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);

  /// Text format: `elements: n1 n2 ...` and `cover: lower upper` lines,
  /// `#` starts a comment.
  static FiniteLattice parse_spec(std::istream& in);
  static FiniteLattice parse_spec_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_spec(in);
  }

  std::size_t size() const { return t_->names.size(); }

  Element element(std::string_view name) const {
    auto it = t_->index.find(name);
    if (it == t_->index.end())
      throw Error("unknown element '" + std::string(name) + "'");
    return Element{it->second};
  }

  const std::string& name(const Element& e) const {
    check(e);
    return t_->names[e.index];
  }

  std::vector<Element> carrier() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) out.push_back(Element{i});
    return out;
  }

  bool leq(const Element& a, const Element& b) const {
    check(a);
    check(b);
    return t_->leq[a.index * size() + b.index] != 0;
  }
  bool equal(const Element& a, const Element& b) const {
    check(a);
    check(b);
    return a.index == b.index;
  }
  Element join(const Element& a, const Element& b) const {
    check(a);
    check(b);
    return Element{t_->join[a.index * size() + b.index]};
  }
  Element meet(const Element& a, const Element& b) const {
    check(a);
    check(b);
    return Element{t_->meet[a.index * size() + b.index]};
  }
  Element top() const { return Element{t_->top}; }
  Element bottom() const { return Element{t_->bottom}; }

  std::string format(const Element& e) const { return name(e); }
  Element parse(std::string_view text) const {
    auto it = t_->index.find(text);
    if (it == t_->index.end())
      throw ParseError("unknown element '" + std::string(text) + "'");
    return Element{it->second};
  }

 private:
  struct Tables {
    std::vector<std::string> names;
    std::map<std::string, std::uint32_t, std::less<>> index;
    std::vector<std::uint8_t> leq;    // n*n, row-major
    std::vector<std::uint32_t> join;  // n*n
    std::vector<std::uint32_t> meet;  // n*n
    std::uint32_t top = 0;
    std::uint32_t bottom = 0;
  };

  explicit FiniteLattice(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  void check(const Element& e) const {
    if (e.index >= size()) throw Error("element not in carrier");
  }

  std::shared_ptr<const Tables> t_;
};

inline FiniteLattice FiniteLattice::build(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  if (elements.empty()) throw Error("empty element list");
  auto t = std::make_shared<Tables>();
  t->names = elements;
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    if (!t->index.emplace(elements[i], i).second)
      throw Error("duplicate element name '" + elements[i] + "'");
  }
  const std::size_t n = elements.size();
  auto at = [n](std::vector<std::uint8_t>& m, std::size_t i, std::size_t j) -> std::uint8_t& {
    return m[i * n + j];
  };

  t->leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) at(t->leq, i, i) = 1;
  for (const auto& [lower, upper] : covers) {
    auto li = t->index.find(lower);
    auto ui = t->index.find(upper);
    if (li == t->index.end()) throw Error("unknown element '" + lower + "' in cover");
    if (ui == t->index.end()) throw Error("unknown element '" + upper + "' in cover");
    if (li->second == ui->second) throw Error("cycle (" + lower + "," + upper + ")");
    at(t->leq, li->second, ui->second) = 1;
  }

  // Reflexive-transitive closure, then antisymmetry.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (at(t->leq, i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (at(t->leq, k, j)) at(t->leq, i, j) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (at(t->leq, i, j) && at(t->leq, j, i))
        throw Error("cycle (" + elements[i] + "," + elements[j] + ")");

  // Unique least upper bound and greatest lower bound for every pair.
  t->join.assign(n * n, 0);
  t->meet.assign(n * n, 0);
  auto bound = [&](std::size_t a, std::size_t b, bool upper) -> std::optional<std::uint32_t> {
    std::vector<std::uint32_t> bounds;
    for (std::uint32_t c = 0; c < n; ++c) {
      bool ok = upper ? (at(t->leq, a, c) && at(t->leq, b, c))
                      : (at(t->leq, c, a) && at(t->leq, c, b));
      if (ok) bounds.push_back(c);
    }
    for (std::uint32_t c : bounds) {
      bool extreme = true;
      for (std::uint32_t d : bounds) {
        bool rel = upper ? at(t->leq, c, d) : at(t->leq, d, c);
        if (!rel) {
          extreme = false;
          break;
        }
      }
      if (extreme) return c;
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto lub = bound(i, j, true);
      if (!lub)
        throw Error("no unique lub (" + elements[i] + "," + elements[j] + ")");
      auto glb = bound(i, j, false);
      if (!glb)
        throw Error("no unique glb (" + elements[i] + "," + elements[j] + ")");
      t->join[i * n + j] = t->join[j * n + i] = *lub;
      t->meet[i * n + j] = t->meet[j * n + i] = *glb;
    }
  }

  std::uint32_t top = 0, bottom = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    top = t->join[top * n + i];
    bottom = t->meet[bottom * n + i];
  }
  t->top = top;
  t->bottom = bottom;
  return FiniteLattice(std::move(t));
}

inline FiniteLattice FiniteLattice::parse_spec(std::istream& in) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    if (head == "elements:") {
      std::string name;
      while (words >> name) elements.push_back(name);
    } else if (head == "cover:") {
      std::string lower, upper, extra;
      if (!(words >> lower >> upper) || (words >> extra))
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected 'cover: lower upper'");
      covers.emplace_back(lower, upper);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" +
                       head + "'");
    }
  }
  return build(elements, covers);
}

inline bool equal_within(const FiniteLattice& lat, const FiniteLattice::Element& a,
                         const FiniteLattice::Element& b, double) {
  return lat.equal(a, b);
}

inline bool has_unit_bridge(const FiniteLattice&) { return false; }

}  // namespace latowa
