#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "any.hpp"
#include "core.hpp"
#include "interval.hpp"
#include "unit.hpp"

namespace latowa {

/// Cap on the naive subset enumeration (2^n meets/joins).
inline constexpr std::size_t kLmSubsetCap = 20;

/// Reference computation of the totally decreasing chain (b_1,...,b_n):
/// b_k is the join over all k-element subsets of the meet of the selected
/// inputs. Subsets are visited in lexicographic index order so results are
/// deterministic on floating carriers.
template <CompleteLattice L>
std::vector<typename L::Element> lm_naive(const L& lat,
                                          std::span<const typename L::Element> a,
                                          std::size_t cap = kLmSubsetCap) {
  using El = typename L::Element;
  const std::size_t n = a.size();
  if (n == 0) throw Error("empty input vector");
  if (n > cap)
    throw Error("input size " + std::to_string(n) + " exceeds subset cap " +
                std::to_string(cap));
  std::vector<El> out;
  out.reserve(n);
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= n; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    bool first = true;
    El acc = a[0];
    while (true) {
      El m = a[idx[0]];
      for (std::size_t i = 1; i < k; ++i) m = lat.meet(m, a[idx[i]]);
      acc = first ? m : lat.join(acc, m);
      first = false;
      // next k-combination of {0..n-1}
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    out.push_back(acc);
  }
  return out;
}

namespace detail {
template <CompleteLattice L>
bool pairwise_comparable(const L& lat, std::span<const typename L::Element> a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!lat.leq(a[i], a[j]) && !lat.leq(a[j], a[i])) return false;
  return true;
}

template <CompleteLattice L>
std::vector<typename L::Element> descending_sort(const L& lat,
                                                 std::span<const typename L::Element> a) {
  std::vector<typename L::Element> out(a.begin(), a.end());
  std::stable_sort(out.begin(), out.end(),
                   [&lat](const auto& x, const auto& y) {
                     return lat.leq(y, x) && !lat.leq(x, y);
                   });
  return out;
}
}  // namespace detail

/// Same value as `lm_naive`, computed by dispatch: a stable descending sort
/// when every pair of coordinates is comparable, coordinatewise recursion on
/// interval/product carriers (join and meet act per coordinate, so each b_k
/// factors), and the subset enumeration otherwise.
template <CompleteLattice L>
std::vector<typename L::Element> lm_transform(const L& lat,
                                              std::span<const typename L::Element> a,
                                              std::size_t cap = kLmSubsetCap) {
  using El = typename L::Element;
  const std::size_t n = a.size();
  if (n == 0) throw Error("empty input vector");
  if (detail::pairwise_comparable(lat, a)) return detail::descending_sort(lat, a);

  if constexpr (std::same_as<L, IntervalLattice>) {
    std::vector<UnitValue> lo, hi;
    lo.reserve(n);
    hi.reserve(n);
    for (const auto& x : a) {
      lo.push_back(x.lo_value());
      hi.push_back(x.hi_value());
    }
    auto blo = lm_transform(lat.endpoints(), std::span<const UnitValue>(lo), cap);
    auto bhi = lm_transform(lat.endpoints(), std::span<const UnitValue>(hi), cap);
    std::vector<El> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(El(blo[k], bhi[k]));
    return out;
  } else if constexpr (std::same_as<L, AnyLattice>) {
    if (lat.kind() == AnyLattice::Kind::Interval) {
      std::vector<IntervalValue> xs;
      xs.reserve(n);
      for (const auto& x : a) xs.push_back(x.as_interval());
      auto b = lm_transform(lat.as_interval(), std::span<const IntervalValue>(xs), cap);
      std::vector<El> out;
      for (auto& x : b) out.push_back(Value(x));
      return out;
    }
    if (lat.kind() == AnyLattice::Kind::Product) {
      auto fs = lat.factors();
      std::vector<std::vector<Value>> columns(fs.size());
      for (const auto& x : a) {
        const auto& coords = x.as_tuple();
        if (coords.size() != fs.size())
          throw Error("element not in carrier (tuple arity mismatch)");
        for (std::size_t i = 0; i < fs.size(); ++i) columns[i].push_back(coords[i]);
      }
      std::vector<std::vector<Value>> per_factor;
      per_factor.reserve(fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i)
        per_factor.push_back(
            lm_transform(fs[i], std::span<const Value>(columns[i]), cap));
      std::vector<El> out;
      for (std::size_t k = 0; k < n; ++k) {
        Value::Tuple coords;
        for (std::size_t i = 0; i < fs.size(); ++i) coords.push_back(per_factor[i][k]);
        out.push_back(Value(std::move(coords)));
      }
      return out;
    }
    return lm_naive(lat, a, cap);
  } else {
    return lm_naive(lat, a, cap);
  }
}

}  // namespace latowa
