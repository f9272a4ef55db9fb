#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"
#include "lm.hpp"
#include "triangular.hpp"

namespace latowa {

/// Outcome of a weight-vector or weight-family audit. `regime` stays "none"
/// until a check has run; `detail` carries the failed condition and witness.
struct CheckRecord {
  std::string regime = "none";
  bool passed = false;
  std::string detail;
};

template <CompleteLattice L>
struct WeightVector {
  TriangularPair<L> pair;
  std::vector<typename L::Element> weights;
  CheckRecord distributive_checked;
};

template <CompleteLattice L>
WeightVector<L> make_weight_vector(TriangularPair<L> pair,
                                   std::vector<typename L::Element> weights) {
  if (weights.empty()) throw Error("weight vector must be nonempty");
  return {std::move(pair), std::move(weights), {}};
}

template <CompleteLattice L>
std::string format_tuple(const L& lat, std::span<const typename L::Element> xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += lat.format(xs[i]);
  }
  return out + ")";
}

/// Verifies (i) the t-conorm fold of the weights is top and (ii) the weights
/// distribute: a (x) (fold) = fold of (a (x) w_i) for every probe a. Failures
/// are recorded with a witness, never thrown.
template <CompleteLattice L>
CheckRecord check_weight_vector(WeightVector<L>& w, const RegimeSpec& regime = {}) {
  const L& lat = w.pair.lattice();
  CheckRecord rec;
  rec.regime = describe_regime(lat, regime);
  auto fold = w.pair.fold_tconorm(std::span<const typename L::Element>(w.weights));
  if (!lat.equal(fold, lat.top())) {
    rec.detail = "condition (i): fold of weights is " + lat.format(fold) + ", not top";
    w.distributive_checked = rec;
    return rec;
  }
  std::vector<typename L::Element> terms;
  for (const auto& a : element_set(lat, regime)) {
    terms.clear();
    for (const auto& wi : w.weights) terms.push_back(w.pair.tnorm(a, wi));
    auto lhs = w.pair.tnorm(a, fold);
    auto rhs = w.pair.fold_tconorm(std::span<const typename L::Element>(terms));
    if (!lat.equal(lhs, rhs)) {
      rec.detail = "condition (ii): witness a=" + lat.format(a) + " gives " +
                   lat.format(lhs) + " vs " + lat.format(rhs);
      w.distributive_checked = rec;
      return rec;
    }
  }
  rec.passed = true;
  w.distributive_checked = rec;
  return rec;
}

/// Sum of w_i * x_(i) with x_(i) the i-th largest input; weights must sum
/// to 1 within the lattice tolerance.
inline UnitValue yager_owa(const UnitLattice& lat, std::span<const UnitValue> w,
                           std::span<const UnitValue> x) {
  if (w.empty() || w.size() != x.size())
    throw Error("arity mismatch: " + std::to_string(w.size()) + " weights vs " +
                std::to_string(x.size()) + " inputs");
  double sum = 0;
  for (const auto& v : w) sum += v.value();
  if (std::fabs(sum - 1.0) > lat.tolerance())
    throw Error("weights sum to " + std::to_string(sum) + ", not 1");
  auto sorted = detail::descending_sort(lat, x);
  double acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i].value() * sorted[i].value();
  return lat.make(acc);
}

inline UnitValue yager_owa(const WeightVector<UnitLattice>& w,
                           std::span<const UnitValue> x) {
  return yager_owa(w.pair.lattice(), std::span<const UnitValue>(w.weights), x);
}

template <CompleteLattice L>
struct AggregationResult {
  typename L::Element value;
  std::vector<typename L::Element> chain;
  std::vector<typename L::Element> weights_used;
};

/// t-conorm fold of (w_i (x) b_i) over the decreasing chain (b_i) of the
/// input. Weight w_i always multiplies b_i, positionally.
template <CompleteLattice L>
AggregationResult<L> lmowa(const WeightVector<L>& w,
                           std::span<const typename L::Element> a,
                           std::size_t cap = kLmSubsetCap) {
  using El = typename L::Element;
  const L& lat = w.pair.lattice();
  if (a.size() != w.weights.size())
    throw Error("arity mismatch: " + std::to_string(w.weights.size()) + " weights vs " +
                std::to_string(a.size()) + " inputs");
  auto fold = w.pair.fold_tconorm(std::span<const El>(w.weights));
  if (!lat.equal(fold, lat.top()))
    throw Error("invalid weight vector: fold of weights is " + lat.format(fold) +
                ", not top");
  auto chain = lm_transform(lat, a, cap);
  std::vector<El> terms;
  terms.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    terms.push_back(w.pair.tnorm(w.weights[i], chain[i]));
  El value = w.pair.fold_tconorm(std::span<const El>(terms));
  return {std::move(value), std::move(chain), w.weights};
}

/// A rule producing one weight vector per input vector.
template <CompleteLattice L>
struct WeightFamily {
  std::string name;
  std::size_t arity = 0;
  TriangularPair<L> pair;
  bool symmetric = false;  // claim: evaluate(a o sigma) == evaluate(a)
  std::function<std::vector<typename L::Element>(std::span<const typename L::Element>)>
      evaluate;
};

/// Built-in families: `gamma1` puts top on the first weight (the aggregation
/// becomes the join of the inputs), `gamma2` on the last (the meet), and
/// `proportional` weighs the i-th largest input by its share of the input sum
/// (1/n when all coordinates are equal).
template <CompleteLattice L>
WeightFamily<L> builtin_family(std::string_view name, std::size_t n,
                               TriangularPair<L> pair) {
  using El = typename L::Element;
  if (n == 0) throw Error("family arity must be positive");
  if (name == "gamma1" || name == "gamma2") {
    if (!pair.is_meet_join())
      throw Error(std::string(name) + " requires the (meet, join) pair");
    const bool first = name == "gamma1";
    const L lat = pair.lattice();
    auto eval = [lat, n, first](std::span<const El>) {
      std::vector<El> w;
      w.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        bool here = first ? i == 0 : i + 1 == n;
        w.push_back(here ? lat.top() : lat.bottom());
      }
      return w;
    };
    return {std::string(name), n, std::move(pair), true, std::move(eval)};
  }
  if (name == "proportional") {
    if constexpr (requires(const L& l, const El& e) {
                    to_unit(l, e);
                    from_unit(l, 0.5);
                  }) {
      const L lat = pair.lattice();
      if (!has_unit_bridge(lat))
        throw Error("proportional family requires the unit lattice");
      if (pair.tnorm_name() != "prod" || pair.tconorm_name() != "luk")
        throw Error("proportional family requires the (prod, luk) pair");
      auto eval = [lat, n](std::span<const El> a) {
        bool all_equal = true;
        for (std::size_t i = 1; i < a.size(); ++i)
          if (!lat.equal(a[0], a[i])) {
            all_equal = false;
            break;
          }
        std::vector<El> w;
        w.reserve(n);
        if (all_equal) {
          for (std::size_t i = 0; i < n; ++i)
            w.push_back(from_unit(lat, 1.0 / static_cast<double>(n)));
          return w;
        }
        auto chain = lm_transform(lat, a);
        double sum = 0;
        for (const auto& x : a) sum += to_unit(lat, x);
        for (std::size_t i = 0; i < n; ++i)
          w.push_back(from_unit(lat, to_unit(lat, chain[i]) / sum));
        return w;
      };
      return {"proportional", n, std::move(pair), true, std::move(eval)};
    } else {
      throw Error("proportional family requires the unit lattice");
    }
  }
  throw Error("unknown weight family '" + std::string(name) +
              "' (expected gamma1, gamma2, proportional, or constant)");
}

/// Fixed weights for every input. Rejects weight vectors whose t-conorm fold
/// is not top.
template <CompleteLattice L>
WeightFamily<L> constant_family(TriangularPair<L> pair,
                                std::vector<typename L::Element> weights) {
  using El = typename L::Element;
  if (weights.empty()) throw Error("weight vector must be nonempty");
  const L lat = pair.lattice();
  auto fold = pair.fold_tconorm(std::span<const El>(weights));
  if (!lat.equal(fold, lat.top()))
    throw Error("invalid weight vector: fold of weights is " + lat.format(fold) +
                ", not top");
  std::size_t n = weights.size();
  auto eval = [weights](std::span<const El>) { return weights; };
  return {"constant", n, std::move(pair), true, std::move(eval)};
}

inline constexpr std::size_t kFamilyTupleCap = 20000;

/// Audits a family over sampled or enumerated inputs: each produced vector
/// must fold to top, distribute over every probe c, and (when claimed)
/// be invariant under input permutations.
template <CompleteLattice L>
CheckRecord check_weight_family(WeightFamily<L>& family, const RegimeSpec& regime = {}) {
  using El = typename L::Element;
  const L& lat = family.pair.lattice();
  CheckRecord rec;
  rec.regime = describe_regime(lat, regime);

  std::vector<std::vector<El>> inputs;
  if (regime.kind == RegimeSpec::Kind::Sampled) {
    inputs = sample_tuples(lat, family.arity, regime.samples, regime.seed);
  } else {
    auto set = element_set(lat, regime);
    double total = 1;
    for (std::size_t i = 0; i < family.arity; ++i)
      total *= static_cast<double>(set.size());
    if (total <= kFamilyTupleCap) {
      for_each_tuple(std::span<const El>(set), family.arity,
                     [&](std::span<const El> tuple) {
                       inputs.emplace_back(tuple.begin(), tuple.end());
                       return true;
                     });
    } else {
      inputs = sample_tuples(lat, family.arity, regime.samples, regime.seed);
      rec.regime = "sampled(" + std::to_string(regime.samples) +
                   ",seed=" + std::to_string(regime.seed) + ")";
    }
  }

  auto probes = element_set(lat, regime);
  if (probes.size() > 32) {
    std::vector<El> thinned;
    std::size_t stride = (probes.size() + 31) / 32;
    for (std::size_t i = 0; i < probes.size(); i += stride) thinned.push_back(probes[i]);
    probes = std::move(thinned);
  }
  SeededRng perm_rng(regime.seed + 1);
  std::vector<std::vector<std::size_t>> perms;
  if (family.symmetric)
    perms = family.arity <= 4 ? all_permutations(family.arity)
                              : sampled_permutations(family.arity, 8, perm_rng);

  std::vector<El> terms, permuted;
  for (const auto& input : inputs) {
    auto w = family.evaluate(std::span<const El>(input));
    if (w.size() != family.arity) {
      rec.detail = "family returned " + std::to_string(w.size()) + " weights at a=" +
                   format_tuple(lat, std::span<const El>(input));
      return rec;
    }
    auto fold = family.pair.fold_tconorm(std::span<const El>(w));
    if (!lat.equal(fold, lat.top())) {
      rec.detail = "condition (i): fold is " + lat.format(fold) + " at a=" +
                   format_tuple(lat, std::span<const El>(input));
      return rec;
    }
    for (const auto& c : probes) {
      terms.clear();
      for (const auto& wi : w) terms.push_back(family.pair.tnorm(c, wi));
      auto lhs = family.pair.tnorm(c, fold);
      auto rhs = family.pair.fold_tconorm(std::span<const El>(terms));
      if (!lat.equal(lhs, rhs)) {
        rec.detail = "condition (ii): witness (a=" +
                     format_tuple(lat, std::span<const El>(input)) +
                     ", c=" + lat.format(c) + ")";
        return rec;
      }
    }
    for (const auto& sigma : perms) {
      permuted.clear();
      for (std::size_t i : sigma) permuted.push_back(input[i]);
      auto w2 = family.evaluate(std::span<const El>(permuted));
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!lat.equal(w[i], w2[i])) {
          std::string s;
          for (std::size_t j : sigma) s += std::to_string(j) + " ";
          rec.detail = "symmetry: witness (a=" +
                       format_tuple(lat, std::span<const El>(input)) + ", sigma=[" + s +
                       "])";
          return rec;
        }
      }
    }
  }
  rec.passed = true;
  return rec;
}

/// t-conorm fold of (f_i(a) (x) b_i): the weights are recomputed from the
/// input. The produced vector must fold to top at this input; the result
/// carries the chain and weights used.
template <CompleteLattice L>
AggregationResult<L> dyowa(const WeightFamily<L>& family,
                           std::span<const typename L::Element> a,
                           std::size_t cap = kLmSubsetCap) {
  using El = typename L::Element;
  const L& lat = family.pair.lattice();
  if (a.size() != family.arity)
    throw Error("arity mismatch: family '" + family.name + "' expects " +
                std::to_string(family.arity) + " inputs, got " +
                std::to_string(a.size()));
  auto w = family.evaluate(a);
  auto fold = family.pair.fold_tconorm(std::span<const El>(w));
  if (!lat.equal(fold, lat.top()))
    throw Error("family '" + family.name + "' produced an invalid weight vector at " +
                format_tuple(lat, a) + ": fold is " + lat.format(fold) + ", not top");
  auto chain = lm_transform(lat, a, cap);
  std::vector<El> terms;
  terms.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    terms.push_back(family.pair.tnorm(w[i], chain[i]));
  El value = family.pair.fold_tconorm(std::span<const El>(terms));
  return {std::move(value), std::move(chain), std::move(w)};
}

}  // namespace latowa
