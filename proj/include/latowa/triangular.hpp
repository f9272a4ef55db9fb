#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "any.hpp"
#include "core.hpp"
#include "interval.hpp"
#include "unit.hpp"

namespace latowa {

enum class UnitNorm { Min, Product, Lukasiewicz, Drastic };
enum class UnitConorm { Max, ProbabilisticSum, Lukasiewicz, Drastic };

inline const char* name_of(UnitNorm t) {
  switch (t) {
    case UnitNorm::Min: return "min";
    case UnitNorm::Product: return "prod";
    case UnitNorm::Lukasiewicz: return "luk";
    case UnitNorm::Drastic: return "drastic";
  }
  return "?";
}
inline const char* name_of(UnitConorm s) {
  switch (s) {
    case UnitConorm::Max: return "max";
    case UnitConorm::ProbabilisticSum: return "probsum";
    case UnitConorm::Lukasiewicz: return "luk";
    case UnitConorm::Drastic: return "drastic";
  }
  return "?";
}

inline double apply_norm(UnitNorm t, double x, double y, double tol) {
  switch (t) {
    case UnitNorm::Min: return std::min(x, y);
    case UnitNorm::Product: return x * y;
    case UnitNorm::Lukasiewicz: return std::max(x + y - 1.0, 0.0);
    case UnitNorm::Drastic:
      return (x < 1.0 - tol && y < 1.0 - tol) ? 0.0 : std::min(x, y);
  }
  return 0.0;
}
inline double apply_conorm(UnitConorm s, double x, double y, double tol) {
  switch (s) {
    case UnitConorm::Max: return std::max(x, y);
    case UnitConorm::ProbabilisticSum: return x + y - x * y;
    case UnitConorm::Lukasiewicz: return std::min(x + y, 1.0);
    case UnitConorm::Drastic:
      return (x > tol && y > tol) ? 1.0 : std::max(x, y);
  }
  return 0.0;
}

/// A t-norm/t-conorm pair bound to one lattice, with n-ary left folds.
template <CompleteLattice L>
class TriangularPair {
 public:
  using Element = typename L::Element;
  using BinaryOp = std::function<Element(const Element&, const Element&)>;

  TriangularPair(L lattice, BinaryOp tnorm, BinaryOp tconorm, std::string tnorm_name,
                 std::string tconorm_name, bool is_meet_join)
      : lattice_(std::move(lattice)),
        tnorm_(std::move(tnorm)),
        tconorm_(std::move(tconorm)),
        tnorm_name_(std::move(tnorm_name)),
        tconorm_name_(std::move(tconorm_name)),
        is_meet_join_(is_meet_join) {}

  const L& lattice() const { return lattice_; }
  const std::string& tnorm_name() const { return tnorm_name_; }
  const std::string& tconorm_name() const { return tconorm_name_; }
  /// True when the pair is exactly (meet, join) on its lattice.
  bool is_meet_join() const { return is_meet_join_; }

  Element tnorm(const Element& a, const Element& b) const { return tnorm_(a, b); }
  Element tconorm(const Element& a, const Element& b) const { return tconorm_(a, b); }

  Element fold_tnorm(std::span<const Element> xs) const { return fold(tnorm_, xs); }
  Element fold_tconorm(std::span<const Element> xs) const { return fold(tconorm_, xs); }

 private:
  static Element fold(const BinaryOp& op, std::span<const Element> xs) {
    if (xs.empty()) throw Error("fold over empty vector");
    Element acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = op(acc, xs[i]);
    return acc;
  }

  L lattice_;
  BinaryOp tnorm_;
  BinaryOp tconorm_;
  std::string tnorm_name_;
  std::string tconorm_name_;
  bool is_meet_join_;
};

/// (meet, join) is a triangular pair on every lattice.
template <CompleteLattice L>
inline TriangularPair<L> meet_join_pair(const L& lat) {
  using El = typename L::Element;
  return TriangularPair<L>(
      lat, [lat](const El& a, const El& b) { return lat.meet(a, b); },
      [lat](const El& a, const El& b) { return lat.join(a, b); }, "meet", "join", true);
}

inline TriangularPair<UnitLattice> unit_pair(const UnitLattice& lat, UnitNorm t,
                                             UnitConorm s) {
  double tol = lat.tolerance();
  bool mj = t == UnitNorm::Min && s == UnitConorm::Max;
  return TriangularPair<UnitLattice>(
      lat,
      [tol, t](const UnitValue& a, const UnitValue& b) {
        return UnitValue(apply_norm(t, a.value(), b.value(), tol), tol);
      },
      [tol, s](const UnitValue& a, const UnitValue& b) {
        return UnitValue(apply_conorm(s, a.value(), b.value(), tol), tol);
      },
      name_of(t), name_of(s), mj);
}

/// Applies a unit-lattice pair to interval endpoints coordinatewise. The
/// lifted t-norm keeps [1,1] neutral and the lifted t-conorm keeps [0,0]
/// neutral; isotonicity of the base operations keeps lo <= hi.
inline TriangularPair<IntervalLattice> lift_componentwise(const IntervalLattice& lat,
                                                          UnitNorm t, UnitConorm s) {
  double tol = lat.tolerance();
  bool mj = t == UnitNorm::Min && s == UnitConorm::Max;
  return TriangularPair<IntervalLattice>(
      lat,
      [tol, t](const IntervalValue& a, const IntervalValue& b) {
        return IntervalValue(apply_norm(t, a.lo(), b.lo(), tol),
                             apply_norm(t, a.hi(), b.hi(), tol), tol);
      },
      [tol, s](const IntervalValue& a, const IntervalValue& b) {
        return IntervalValue(apply_conorm(s, a.lo(), b.lo(), tol),
                             apply_conorm(s, a.hi(), b.hi(), tol), tol);
      },
      std::string("cw:") + name_of(t), std::string("cw:") + name_of(s), mj);
}

namespace detail {
inline Value lift_walk_norm(const AnyLattice& lat, UnitNorm t, const Value& a,
                            const Value& b);
inline Value lift_walk_conorm(const AnyLattice& lat, UnitConorm s, const Value& a,
                              const Value& b);

inline Value lift_walk_norm(const AnyLattice& lat, UnitNorm t, const Value& a,
                            const Value& b) {
  double tol = lat.tolerance();
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit:
      return Value(UnitValue(
          apply_norm(t, a.as_unit().value(), b.as_unit().value(), tol), tol));
    case AnyLattice::Kind::Interval:
      return Value(IntervalValue(
          apply_norm(t, a.as_interval().lo(), b.as_interval().lo(), tol),
          apply_norm(t, a.as_interval().hi(), b.as_interval().hi(), tol), tol));
    case AnyLattice::Kind::Product: {
      auto fs = lat.factors();
      const auto& xs = a.as_tuple();
      const auto& ys = b.as_tuple();
      Value::Tuple out;
      for (std::size_t i = 0; i < fs.size(); ++i)
        out.push_back(lift_walk_norm(fs[i], t, xs[i], ys[i]));
      return Value(std::move(out));
    }
    case AnyLattice::Kind::Finite:
      throw Error("componentwise lifting is not defined on finite factors");
  }
  throw Error("unreachable");
}

inline Value lift_walk_conorm(const AnyLattice& lat, UnitConorm s, const Value& a,
                              const Value& b) {
  double tol = lat.tolerance();
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit:
      return Value(UnitValue(
          apply_conorm(s, a.as_unit().value(), b.as_unit().value(), tol), tol));
    case AnyLattice::Kind::Interval:
      return Value(IntervalValue(
          apply_conorm(s, a.as_interval().lo(), b.as_interval().lo(), tol),
          apply_conorm(s, a.as_interval().hi(), b.as_interval().hi(), tol), tol));
    case AnyLattice::Kind::Product: {
      auto fs = lat.factors();
      const auto& xs = a.as_tuple();
      const auto& ys = b.as_tuple();
      Value::Tuple out;
      for (std::size_t i = 0; i < fs.size(); ++i)
        out.push_back(lift_walk_conorm(fs[i], s, xs[i], ys[i]));
      return Value(std::move(out));
    }
    case AnyLattice::Kind::Finite:
      throw Error("componentwise lifting is not defined on finite factors");
  }
  throw Error("unreachable");
}
}  // namespace detail

inline TriangularPair<AnyLattice> lift_componentwise(const AnyLattice& lat, UnitNorm t,
                                                     UnitConorm s) {
  bool mj = t == UnitNorm::Min && s == UnitConorm::Max;
  return TriangularPair<AnyLattice>(
      lat,
      [lat, t](const Value& a, const Value& b) {
        return detail::lift_walk_norm(lat, t, a, b);
      },
      [lat, s](const Value& a, const Value& b) {
        return detail::lift_walk_conorm(lat, s, a, b);
      },
      std::string("cw:") + name_of(t), std::string("cw:") + name_of(s), mj);
}

inline UnitNorm norm_from_name(std::string_view name) {
  if (name == "min") return UnitNorm::Min;
  if (name == "prod") return UnitNorm::Product;
  if (name == "luk") return UnitNorm::Lukasiewicz;
  if (name == "drastic") return UnitNorm::Drastic;
  throw Error("unknown t-norm '" + std::string(name) + "'");
}
inline UnitConorm conorm_from_name(std::string_view name) {
  if (name == "max") return UnitConorm::Max;
  if (name == "probsum") return UnitConorm::ProbabilisticSum;
  if (name == "luk") return UnitConorm::Lukasiewicz;
  if (name == "drastic") return UnitConorm::Drastic;
  throw Error("unknown t-conorm '" + std::string(name) + "'");
}

/// Resolves the CLI operator names: `meet`/`join` on any lattice, the unit
/// names on the unit lattice, and `cw:<name>` lifts elsewhere. Both names
/// must pick the same route.
inline TriangularPair<AnyLattice> pair_from_names(const AnyLattice& lat,
                                                  std::string_view tnorm,
                                                  std::string_view tconorm) {
  bool meet_join = tnorm == "meet" || tconorm == "join";
  if (meet_join) {
    if (tnorm != "meet" || tconorm != "join")
      throw Error("'meet'/'join' must be used together");
    return meet_join_pair(lat);
  }
  bool cw = tnorm.starts_with("cw:") || tconorm.starts_with("cw:");
  if (cw) {
    if (!tnorm.starts_with("cw:") || !tconorm.starts_with("cw:"))
      throw Error("componentwise prefix 'cw:' must be used on both operators");
    return lift_componentwise(lat, norm_from_name(tnorm.substr(3)),
                              conorm_from_name(tconorm.substr(3)));
  }
  if (lat.kind() != AnyLattice::Kind::Unit)
    throw Error("operators '" + std::string(tnorm) + "'/'" + std::string(tconorm) +
                "' need the unit lattice; use meet/join or the cw: prefix");
  UnitNorm t = norm_from_name(tnorm);
  UnitConorm s = conorm_from_name(tconorm);
  auto base = unit_pair(lat.as_unit(), t, s);
  return TriangularPair<AnyLattice>(
      lat,
      [base](const Value& a, const Value& b) {
        return Value(base.tnorm(a.as_unit(), b.as_unit()));
      },
      [base](const Value& a, const Value& b) {
        return Value(base.tconorm(a.as_unit(), b.as_unit()));
      },
      base.tnorm_name(), base.tconorm_name(), base.is_meet_join());
}

}  // namespace latowa
