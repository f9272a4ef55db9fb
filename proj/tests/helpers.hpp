#pragma once

#include <vector>

#include "latowa/latowa.hpp"

namespace latowa::test {

inline FiniteLattice make_m3() {
  return FiniteLattice::build({"bot", "a", "b", "c", "top"},
                              {{"bot", "a"},
                               {"bot", "b"},
                               {"bot", "c"},
                               {"a", "top"},
                               {"b", "top"},
                               {"c", "top"}});
}

inline FiniteLattice make_diamond() {
  return FiniteLattice::build(
      {"bot", "a", "b", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

inline FiniteLattice make_chain2() {
  return FiniteLattice::build({"zero", "one"}, {{"zero", "one"}});
}

template <CompleteLattice L>
std::vector<typename L::Element> random_vector(const L& lat, std::size_t n,
                                               SeededRng& rng) {
  std::vector<typename L::Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_element(lat, rng));
  return out;
}

}  // namespace latowa::test
