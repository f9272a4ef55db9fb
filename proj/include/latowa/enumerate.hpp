#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "any.hpp"
#include "core.hpp"
#include "finite.hpp"
#include "interval.hpp"
#include "unit.hpp"

namespace latowa {

/// mt19937_64 with explicit scaling so streams are identical across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : g_(seed) {}
  double unit() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(g_() % n); }

 private:
  std::mt19937_64 g_;
};

/// How a check picks its probe elements. `Auto` resolves per lattice:
/// exhaustive carriers on finite lattices, a step grid on the unit lattice,
/// seeded samples on intervals and large products.
struct RegimeSpec {
  enum class Kind { Auto, Exhaustive, Grid, Sampled };
  Kind kind = Kind::Auto;
  double grid_step = 0.05;
  std::size_t samples = 256;
  std::uint64_t seed = 1;

  static RegimeSpec exhaustive() { return {Kind::Exhaustive}; }
  static RegimeSpec grid(double step) { return {Kind::Grid, step}; }
  static RegimeSpec sampled(std::size_t k, std::uint64_t seed) {
    return {Kind::Sampled, 0.05, k, seed};
  }
};

inline std::vector<UnitValue> unit_grid(const UnitLattice& lat, double step) {
  std::vector<UnitValue> out;
  long n = std::lround(1.0 / step);
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i < n; ++i) out.push_back(lat.make(std::min(i * step, 1.0)));
  out.push_back(lat.make(1.0));
  return out;
}

inline UnitValue random_element(const UnitLattice& lat, SeededRng& rng) {
  return lat.make(rng.unit());
}

inline IntervalValue random_element(const IntervalLattice& lat, SeededRng& rng) {
  double a = rng.unit(), b = rng.unit();
  if (a > b) std::swap(a, b);
  return lat.make(a, b);
}

inline FiniteLattice::Element random_element(const FiniteLattice& lat, SeededRng& rng) {
  return FiniteLattice::Element{static_cast<std::uint32_t>(rng.index(lat.size()))};
}

inline Value random_element(const AnyLattice& lat, SeededRng& rng) {
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit: return Value(random_element(lat.as_unit(), rng));
    case AnyLattice::Kind::Interval:
      return Value(random_element(lat.as_interval(), rng));
    case AnyLattice::Kind::Finite: return Value(random_element(lat.as_finite(), rng));
    case AnyLattice::Kind::Product: {
      Value::Tuple coords;
      for (const auto& f : lat.factors()) coords.push_back(random_element(f, rng));
      return Value(std::move(coords));
    }
  }
  throw Error("unreachable");
}

inline std::vector<UnitValue> element_set(const UnitLattice& lat, const RegimeSpec& r) {
  if (r.kind == RegimeSpec::Kind::Sampled) {
    SeededRng rng(r.seed);
    std::vector<UnitValue> out;
    out.reserve(r.samples);
    for (std::size_t i = 0; i < r.samples; ++i) out.push_back(random_element(lat, rng));
    return out;
  }
  return unit_grid(lat, r.grid_step);
}

inline std::vector<IntervalValue> element_set(const IntervalLattice& lat,
                                              const RegimeSpec& r) {
  SeededRng rng(r.seed);
  std::vector<IntervalValue> out;
  out.reserve(r.samples);
  for (std::size_t i = 0; i < r.samples; ++i) out.push_back(random_element(lat, rng));
  return out;
}

inline std::vector<FiniteLattice::Element> element_set(const FiniteLattice& lat,
                                                       const RegimeSpec&) {
  return lat.carrier();
}

inline std::vector<Value> element_set(const AnyLattice& lat, const RegimeSpec& r) {
  constexpr std::size_t kProductCap = 4096;
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit: {
      std::vector<Value> out;
      for (const auto& v : element_set(lat.as_unit(), r)) out.push_back(Value(v));
      return out;
    }
    case AnyLattice::Kind::Interval: {
      std::vector<Value> out;
      for (const auto& v : element_set(lat.as_interval(), r)) out.push_back(Value(v));
      return out;
    }
    case AnyLattice::Kind::Finite: {
      std::vector<Value> out;
      for (const auto& v : element_set(lat.as_finite(), r)) out.push_back(Value(v));
      return out;
    }
    case AnyLattice::Kind::Product: {
      std::vector<std::vector<Value>> per_factor;
      double total = 1;
      for (const auto& f : lat.factors()) {
        per_factor.push_back(element_set(f, r));
        total *= static_cast<double>(per_factor.back().size());
      }
      if (total <= kProductCap) {
        std::vector<Value> out;
        std::vector<std::size_t> idx(per_factor.size(), 0);
        while (true) {
          Value::Tuple coords;
          for (std::size_t i = 0; i < per_factor.size(); ++i)
            coords.push_back(per_factor[i][idx[i]]);
          out.push_back(Value(std::move(coords)));
          std::size_t pos = per_factor.size();
          bool done = true;
          while (pos-- > 0) {
            if (++idx[pos] < per_factor[pos].size()) {
              done = false;
              break;
            }
            idx[pos] = 0;
          }
          if (done) return out;
        }
      }
      SeededRng rng(r.seed);
      std::vector<Value> out;
      out.reserve(r.samples);
      for (std::size_t i = 0; i < r.samples; ++i)
        out.push_back(random_element(lat, rng));
      return out;
    }
  }
  throw Error("unreachable");
}

inline std::string describe_regime(const UnitLattice&, const RegimeSpec& r) {
  if (r.kind == RegimeSpec::Kind::Sampled)
    return "sampled(" + std::to_string(r.samples) + ",seed=" + std::to_string(r.seed) + ")";
  char buf[32];
  std::snprintf(buf, sizeof buf, "grid(%g)", r.grid_step);
  return buf;
}
inline std::string describe_regime(const IntervalLattice&, const RegimeSpec& r) {
  return "sampled(" + std::to_string(r.samples) + ",seed=" + std::to_string(r.seed) + ")";
}
inline std::string describe_regime(const FiniteLattice&, const RegimeSpec&) {
  return "exhaustive";
}
inline std::string describe_regime(const AnyLattice& lat, const RegimeSpec& r) {
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit: return describe_regime(lat.as_unit(), r);
    case AnyLattice::Kind::Interval: return describe_regime(lat.as_interval(), r);
    case AnyLattice::Kind::Finite: return describe_regime(lat.as_finite(), r);
    case AnyLattice::Kind::Product: {
      bool finite = true;
      for (const auto& f : lat.factors())
        finite = finite && f.kind() == AnyLattice::Kind::Finite;
      if (finite) return "exhaustive";
      return "sampled(" + std::to_string(r.samples) + ",seed=" + std::to_string(r.seed) +
             ")";
    }
  }
  return "?";
}

/// Visits elements^arity in lexicographic order (rightmost coordinate varies
/// fastest). `fn` returns false to stop early.
template <class El, class Fn>
inline void for_each_tuple(std::span<const El> elements, std::size_t arity, Fn&& fn) {
  if (elements.empty() || arity == 0) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<El> tuple(arity, elements[0]);
  while (true) {
    if (!fn(std::span<const El>(tuple.data(), tuple.size()))) return;
    std::size_t pos = arity;
    bool done = true;
    while (pos-- > 0) {
      if (++idx[pos] < elements.size()) {
        tuple[pos] = elements[idx[pos]];
        done = false;
        break;
      }
      idx[pos] = 0;
      tuple[pos] = elements[0];
    }
    if (done) return;
  }
}

template <CompleteLattice L>
inline std::vector<std::vector<typename L::Element>> sample_tuples(const L& lat,
                                                                   std::size_t arity,
                                                                   std::size_t count,
                                                                   std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<std::vector<typename L::Element>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<typename L::Element> tuple;
    tuple.reserve(arity);
    for (std::size_t j = 0; j < arity; ++j) tuple.push_back(random_element(lat, rng));
    out.push_back(std::move(tuple));
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::vector<std::size_t>> sampled_permutations(std::size_t n,
                                                                  std::size_t count,
                                                                  SeededRng& rng) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.index(i)]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace latowa
