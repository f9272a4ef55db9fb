#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"

// Brute-force baselines for differential testing. Nothing here may share a
// code path with the implementations under audit: the chain oracle below is
// a literal bitmask transcription, independent of lm.hpp.

namespace latowa {

inline constexpr std::size_t kOracleArityCap = 8;
inline constexpr std::size_t kEnumerationBudget = 1'000'000;

/// Literal subset enumeration of the decreasing chain: for each k, joins the
/// meets of all k-of-n index masks in increasing mask order. No fast paths.
template <CompleteLattice L>
std::vector<typename L::Element> oracle_lm(const L& lat,
                                           std::span<const typename L::Element> a) {
  using El = typename L::Element;
  const std::size_t n = a.size();
  if (n == 0) throw Error("empty input vector");
  if (n > kOracleArityCap)
    throw Error("oracle arity cap is " + std::to_string(kOracleArityCap));
  std::vector<El> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::optional<El> acc;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != static_cast<int>(k)) continue;
      std::optional<El> m;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        m = m ? lat.meet(*m, a[i]) : a[i];
      }
      acc = acc ? lat.join(*acc, *m) : *m;
    }
    out.push_back(*acc);
  }
  return out;
}

/// A lattice, a finite probe set inside its carrier, and an arity.
template <CompleteLattice L>
struct EnumerationDomain {
  L lattice;
  std::vector<typename L::Element> elements;
  std::size_t arity;
};

inline EnumerationDomain<UnitLattice> grid_domain(const UnitLattice& lat,
                                                  std::size_t arity) {
  return {lat, unit_grid(lat, 0.25), arity};
}

inline EnumerationDomain<FiniteLattice> carrier_domain(const FiniteLattice& lat,
                                                       std::size_t arity) {
  return {lat, lat.carrier(), arity};
}

/// Seeded interval probes with endpoints drawn as an ordered pair of grid
/// values, so enumeration stays inside the carrier and reproducible.
inline EnumerationDomain<IntervalLattice> interval_grid_domain(
    const IntervalLattice& lat, std::size_t arity, std::size_t count,
    std::uint64_t seed) {
  auto grid = unit_grid(lat.endpoints(), 0.05);
  SeededRng rng(seed);
  std::vector<IntervalValue> elements;
  elements.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double a = grid[rng.index(grid.size())].value();
    double b = grid[rng.index(grid.size())].value();
    if (a > b) std::swap(a, b);
    elements.push_back(lat.make(a, b));
  }
  return {lat, std::move(elements), arity};
}

inline EnumerationDomain<AnyLattice> auto_domain(const AnyLattice& lat,
                                                 std::size_t arity, std::size_t samples,
                                                 std::uint64_t seed) {
  RegimeSpec r;
  r.samples = samples;
  r.seed = seed;
  r.grid_step = 0.25;
  return {lat, element_set(lat, r), arity};
}

/// Visits elements^arity lexicographically; throws if the tuple count exceeds
/// the budget. `fn` returns false to stop.
template <CompleteLattice L, class Fn>
void enumerate_tuples(const EnumerationDomain<L>& dom, Fn&& fn,
                      std::size_t budget = kEnumerationBudget) {
  double total = 1;
  for (std::size_t i = 0; i < dom.arity; ++i)
    total *= static_cast<double>(dom.elements.size());
  if (total > static_cast<double>(budget))
    throw Error("enumeration budget exceeded: " + std::to_string(total) + " > " +
                std::to_string(budget));
  for_each_tuple(std::span<const typename L::Element>(dom.elements), dom.arity,
                 std::forward<Fn>(fn));
}

template <CompleteLattice L>
struct Divergence {
  std::vector<typename L::Element> input;
  std::string left, right;
  std::size_t index = 0;
};

template <CompleteLattice L>
struct EquivalenceReport {
  std::size_t compared = 0;
  std::optional<Divergence<L>> divergence;
  bool pass() const { return !divergence.has_value(); }
};

namespace detail {
template <CompleteLattice L>
std::string format_output(const L& lat, const typename L::Element& x) {
  return lat.format(x);
}
template <CompleteLattice L>
std::string format_output(const L& lat, const std::vector<typename L::Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += lat.format(xs[i]);
  }
  return out;
}
}  // namespace detail

/// Compares two functions over an explicit tuple list. `eq` decides output
/// equality (exact on discrete carriers, tolerance-based on numeric ones).
template <CompleteLattice L, class FnA, class FnB, class Eq>
EquivalenceReport<L> equivalence_over(
    const L& lat, std::span<const std::vector<typename L::Element>> tuples, FnA&& fa,
    FnB&& fb, Eq&& eq) {
  EquivalenceReport<L> report;
  for (const auto& tuple : tuples) {
    auto ra = fa(std::span<const typename L::Element>(tuple));
    auto rb = fb(std::span<const typename L::Element>(tuple));
    if (!eq(ra, rb)) {
      report.divergence = Divergence<L>{tuple, detail::format_output(lat, ra),
                                        detail::format_output(lat, rb), report.compared};
      return report;
    }
    ++report.compared;
  }
  return report;
}

/// Streams the domain's tuple power and compares the two functions on each.
template <CompleteLattice L, class FnA, class FnB, class Eq>
EquivalenceReport<L> equivalence_report(const EnumerationDomain<L>& dom, FnA&& fa,
                                        FnB&& fb, Eq&& eq,
                                        std::size_t budget = kEnumerationBudget) {
  EquivalenceReport<L> report;
  enumerate_tuples(
      dom,
      [&](std::span<const typename L::Element> tuple) {
        auto ra = fa(tuple);
        auto rb = fb(tuple);
        if (!eq(ra, rb)) {
          report.divergence = Divergence<L>{
              std::vector<typename L::Element>(tuple.begin(), tuple.end()),
              detail::format_output(dom.lattice, ra),
              detail::format_output(dom.lattice, rb), report.compared};
          return false;
        }
        ++report.compared;
        return true;
      },
      budget);
  return report;
}

/// Output comparators for equivalence checks.
template <CompleteLattice L>
auto element_eq(const L& lat, double tol) {
  return [lat, tol](const typename L::Element& a, const typename L::Element& b) {
    return equal_within(lat, a, b, tol);
  };
}

template <CompleteLattice L>
auto chain_eq(const L& lat, double tol) {
  return [lat, tol](const std::vector<typename L::Element>& a,
                    const std::vector<typename L::Element>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!equal_within(lat, a[i], b[i], tol)) return false;
    return true;
  };
}

}  // namespace latowa
