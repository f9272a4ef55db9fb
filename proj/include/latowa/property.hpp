#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"
#include "owa.hpp"

namespace latowa {

enum class Prop {
  Boundary,  // A1A2
  Isotone,   // ISO
  IP,
  SP,
  NP,
  AP,
  HP,
  ZD,
  OD,
  ASP,
  Averaging,
  Conjunctive,
  Disjunctive,
};

inline const char* name_of(Prop p) {
  switch (p) {
    case Prop::Boundary: return "A1A2";
    case Prop::Isotone: return "ISO";
    case Prop::IP: return "IP";
    case Prop::SP: return "SP";
    case Prop::NP: return "NP";
    case Prop::AP: return "AP";
    case Prop::HP: return "HP";
    case Prop::ZD: return "ZD";
    case Prop::OD: return "OD";
    case Prop::ASP: return "ASP";
    case Prop::Averaging: return "averaging";
    case Prop::Conjunctive: return "conjunctive";
    case Prop::Disjunctive: return "disjunctive";
  }
  return "?";
}

inline Prop prop_from_name(std::string_view name) {
  if (name == "A1A2" || name == "boundary") return Prop::Boundary;
  if (name == "ISO" || name == "iso") return Prop::Isotone;
  if (name == "IP") return Prop::IP;
  if (name == "SP") return Prop::SP;
  if (name == "NP") return Prop::NP;
  if (name == "AP") return Prop::AP;
  if (name == "HP") return Prop::HP;
  if (name == "ZD") return Prop::ZD;
  if (name == "OD") return Prop::OD;
  if (name == "ASP") return Prop::ASP;
  if (name == "averaging") return Prop::Averaging;
  if (name == "conjunctive") return Prop::Conjunctive;
  if (name == "disjunctive") return Prop::Disjunctive;
  throw Error("unknown property '" + std::string(name) + "'");
}

/// An n-ary operator under audit. `domain_filter`, when set, excludes inputs
/// the operator leaves undefined (they are skipped by every regime).
template <CompleteLattice L>
struct LatticeOp {
  L lattice;
  std::size_t arity = 0;
  std::string name;
  std::function<typename L::Element(std::span<const typename L::Element>)> fn;
  std::function<bool(std::span<const typename L::Element>)> domain_filter;
};

/// Outcome of one property check. `holds` is always qualified by `regime`;
/// for the existential properties (ZD, OD) a HOLDS verdict carries the
/// witness that exhibits the divisor, for the universal ones a FAIL verdict
/// carries the counterexample.
struct PropertyVerdict {
  std::string property;
  std::string regime;
  bool holds = false;
  std::string note;
  std::vector<std::string> witness;

  std::string to_line() const {
    std::string out = "PROP " + property + " " + regime + (holds ? " HOLDS" : " FAIL");
    if (!note.empty()) out += " " + note;
    for (const auto& w : witness) out += " " + w;
    return out;
  }
};

inline constexpr std::size_t kPropertyTupleCap = 20000;

template <CompleteLattice L>
PropertyVerdict check_isotone(
    const LatticeOp<L>& op, const RegimeSpec& regime,
    std::span<const std::pair<std::vector<typename L::Element>,
                              std::vector<typename L::Element>>>
        probe_pairs);

namespace detail {

inline void certify(bool violation_reproduced) {
  if (!violation_reproduced) throw Error("witness failed re-certification");
}

template <CompleteLattice L>
bool in_domain(const LatticeOp<L>& op, std::span<const typename L::Element> xs) {
  return !op.domain_filter || op.domain_filter(xs);
}

/// All tuples of E^arity when that is small enough, seeded samples otherwise.
template <CompleteLattice L>
std::vector<std::vector<typename L::Element>> probe_tuples(
    const L& lat, std::span<const typename L::Element> elements, std::size_t arity,
    const RegimeSpec& regime) {
  using El = typename L::Element;
  double total = 1;
  for (std::size_t i = 0; i < arity; ++i)
    total *= static_cast<double>(elements.size());
  std::vector<std::vector<El>> out;
  if (total <= kPropertyTupleCap) {
    for_each_tuple(elements, arity, [&](std::span<const El> t) {
      out.emplace_back(t.begin(), t.end());
      return true;
    });
    return out;
  }
  return sample_tuples(lat, arity, regime.samples, regime.seed);
}

template <CompleteLattice L>
bool tuple_leq(const L& lat, std::span<const typename L::Element> a,
               std::span<const typename L::Element> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!lat.leq(a[i], b[i])) return false;
  return true;
}

}  // namespace detail

template <CompleteLattice L>
PropertyVerdict check_property(const LatticeOp<L>& op, Prop prop,
                               const RegimeSpec& regime = {}) {
  using El = typename L::Element;
  const L& lat = op.lattice;
  PropertyVerdict v;
  v.property = name_of(prop);
  v.regime = describe_regime(lat, regime);
  auto E = element_set(lat, regime);
  auto eval = [&op](std::span<const El> xs) { return op.fn(xs); };
  auto wit = [&lat](std::string role, const El& x) { return role + "=" + lat.format(x); };
  auto wit_tuple = [&lat](std::string role, std::span<const El> xs) {
    return role + "=" + format_tuple(lat, xs);
  };

  switch (prop) {
    case Prop::IP: {
      std::vector<El> tuple;
      for (const auto& x : E) {
        tuple.assign(op.arity, x);
        if (!detail::in_domain(op, tuple)) continue;
        El y = eval(tuple);
        if (!lat.equal(y, x)) {
          detail::certify(!lat.equal(eval(tuple), x));
          v.holds = false;
          v.witness = {wit("x", x), wit("got", y)};
          return v;
        }
      }
      v.holds = true;
      return v;
    }

    case Prop::SP: {
      auto tuples = detail::probe_tuples(lat, std::span<const El>(E), op.arity, regime);
      SeededRng rng(regime.seed + 17);
      auto perms = op.arity <= 4 ? all_permutations(op.arity)
                                 : sampled_permutations(op.arity, 8, rng);
      std::vector<El> permuted;
      for (const auto& t : tuples) {
        if (!detail::in_domain(op, t)) continue;
        El base = eval(t);
        for (const auto& sigma : perms) {
          permuted.clear();
          for (std::size_t i : sigma) permuted.push_back(t[i]);
          if (!detail::in_domain(op, permuted)) continue;
          El y = eval(permuted);
          if (!lat.equal(y, base)) {
            detail::certify(!lat.equal(eval(permuted), eval(t)));
            v.holds = false;
            v.witness = {wit_tuple("x", t), wit_tuple("x.sigma", permuted)};
            return v;
          }
        }
      }
      v.holds = true;
      return v;
    }

    case Prop::NP:
    case Prop::AP: {
      // Search the regime's element set for the neutral/absorbing element.
      const bool neutral = prop == Prop::NP;
      std::vector<El> tuple;
      for (const auto& cand : E) {
        bool ok = true;
        for (const auto& t : E) {
          for (std::size_t pos = 0; pos < op.arity && ok; ++pos) {
            tuple.assign(op.arity, cand);
            tuple[pos] = t;
            if (!detail::in_domain(op, tuple)) continue;
            El y = eval(tuple);
            const El& expect = neutral ? t : cand;
            if (!lat.equal(y, expect)) ok = false;
          }
          if (!ok) break;
        }
        if (ok) {
          v.holds = true;
          v.note = wit(neutral ? "e" : "a", cand);
          return v;
        }
      }
      v.holds = false;
      v.note = neutral ? "no neutral element on regime" : "no absorbing element on regime";
      return v;
    }

    case Prop::HP: {
      if constexpr (requires(const L& l, const El& e) {
                      to_unit(l, e);
                      from_unit(l, 0.5);
                    }) {
        if (!has_unit_bridge(lat))
          throw Error("property HP requires the unit lattice");
        auto tuples = detail::probe_tuples(lat, std::span<const El>(E), op.arity, regime);
        std::vector<El> scaled;
        for (const auto& lambda : E) {
          double lv = to_unit(lat, lambda);
          for (const auto& t : tuples) {
            if (!detail::in_domain(op, t)) continue;
            scaled.clear();
            for (const auto& x : t) scaled.push_back(from_unit(lat, lv * to_unit(lat, x)));
            if (!detail::in_domain(op, scaled)) continue;
            El lhs = eval(scaled);
            El rhs = from_unit(lat, lv * to_unit(lat, eval(t)));
            if (!lat.equal(lhs, rhs)) {
              detail::certify(!lat.equal(eval(scaled), rhs));
              v.holds = false;
              v.witness = {wit("lambda", lambda), wit_tuple("x", t)};
              return v;
            }
          }
        }
        v.holds = true;
        return v;
      } else {
        throw Error("property HP requires the unit lattice");
      }
    }

    case Prop::ZD:
    case Prop::OD: {
      // Existential: HOLDS means a divisor witness was found on the regime.
      const bool zero = prop == Prop::ZD;
      const El limit = zero ? lat.bottom() : lat.top();
      auto tuples = detail::probe_tuples(lat, std::span<const El>(E), op.arity, regime);
      for (const auto& t : tuples) {
        bool interior = true;
        for (const auto& x : t)
          if (lat.equal(x, limit)) {
            interior = false;
            break;
          }
        if (!interior || !detail::in_domain(op, t)) continue;
        if (lat.equal(eval(t), limit)) {
          detail::certify(lat.equal(eval(t), limit));
          v.holds = true;
          v.witness = {wit_tuple("x", t)};
          return v;
        }
      }
      v.holds = false;
      v.note = "no witness on regime";
      return v;
    }

    case Prop::ASP: {
      if (op.arity != 2) throw Error("ASP applies to binary operators only");
      auto triple_set = E;
      if (triple_set.size() > 27) {
        std::vector<El> thinned;
        std::size_t stride = (triple_set.size() + 26) / 27;
        for (std::size_t i = 0; i < triple_set.size(); i += stride)
          thinned.push_back(triple_set[i]);
        triple_set = std::move(thinned);
      }
      std::vector<El> ab(2, E.front()), bc(2, E.front());
      for (const auto& x : triple_set)
        for (const auto& y : triple_set)
          for (const auto& z : triple_set) {
            bc = {y, z};
            if (!detail::in_domain(op, bc)) continue;
            ab = {x, eval(bc)};
            if (!detail::in_domain(op, ab)) continue;
            El lhs = eval(ab);
            ab = {x, y};
            if (!detail::in_domain(op, ab)) continue;
            bc = {eval(ab), z};
            if (!detail::in_domain(op, bc)) continue;
            El rhs = eval(bc);
            if (!lat.equal(lhs, rhs)) {
              detail::certify(!lat.equal(lhs, rhs));
              v.holds = false;
              v.witness = {wit("x", x), wit("y", y), wit("z", z)};
              return v;
            }
          }
      v.holds = true;
      return v;
    }

    case Prop::Boundary: {
      std::vector<El> bots(op.arity, lat.bottom());
      std::vector<El> tops(op.arity, lat.top());
      if (detail::in_domain(op, bots) && !lat.equal(eval(bots), lat.bottom())) {
        detail::certify(!lat.equal(eval(bots), lat.bottom()));
        v.holds = false;
        v.witness = {wit("got", eval(bots))};
        v.note = "A1 fails at bottom";
        return v;
      }
      if (detail::in_domain(op, tops) && !lat.equal(eval(tops), lat.top())) {
        detail::certify(!lat.equal(eval(tops), lat.top()));
        v.holds = false;
        v.witness = {wit("got", eval(tops))};
        v.note = "A2 fails at top";
        return v;
      }
      v.holds = true;
      return v;
    }

    case Prop::Isotone:
      return check_isotone(op, regime, {});

    case Prop::Averaging:
    case Prop::Conjunctive:
    case Prop::Disjunctive: {
      auto tuples = detail::probe_tuples(lat, std::span<const El>(E), op.arity, regime);
      for (const auto& t : tuples) {
        if (!detail::in_domain(op, t)) continue;
        El lo = t[0], hi = t[0];
        for (std::size_t i = 1; i < t.size(); ++i) {
          lo = lat.meet(lo, t[i]);
          hi = lat.join(hi, t[i]);
        }
        El y = eval(t);
        bool ok = true;
        if (prop == Prop::Averaging) ok = lat.leq(lo, y) && lat.leq(y, hi);
        if (prop == Prop::Conjunctive) ok = lat.leq(y, lo);
        if (prop == Prop::Disjunctive) ok = lat.leq(hi, y);
        if (!ok) {
          El y2 = eval(t);
          bool again = prop == Prop::Averaging ? lat.leq(lo, y2) && lat.leq(y2, hi)
                       : prop == Prop::Conjunctive ? lat.leq(y2, lo)
                                                   : lat.leq(hi, y2);
          detail::certify(!again);
          v.holds = false;
          v.witness = {wit_tuple("x", t), wit("got", y)};
          return v;
        }
      }
      v.holds = true;
      return v;
    }
  }
  throw Error("unreachable");
}

/// Isotonicity over comparable pairs: exhaustive when the tuple square fits,
/// otherwise single-coordinate bumps plus seeded join-pairs. `probe_pairs`
/// are always checked first, so known suspects surface verbatim.
template <CompleteLattice L>
PropertyVerdict check_isotone(
    const LatticeOp<L>& op, const RegimeSpec& regime,
    std::span<const std::pair<std::vector<typename L::Element>,
                              std::vector<typename L::Element>>>
        probe_pairs) {
  using El = typename L::Element;
  const L& lat = op.lattice;
  PropertyVerdict v;
  v.property = "ISO";
  v.regime = describe_regime(lat, regime);

  auto fail = [&](std::span<const El> x, std::span<const El> y, const El& fx,
                  const El& fy) {
    detail::certify(!lat.leq(fx, fy));
    v.holds = false;
    v.witness = {"x=" + format_tuple(lat, x), "y=" + format_tuple(lat, y),
                 "f(x)=" + lat.format(fx), "f(y)=" + lat.format(fy)};
  };

  auto check_pair = [&](std::span<const El> x, std::span<const El> y) {
    if (!detail::in_domain(op, x) || !detail::in_domain(op, y)) return true;
    if (!detail::tuple_leq(lat, x, y)) return true;
    El fx = op.fn(x);
    El fy = op.fn(y);
    if (!lat.leq(fx, fy)) {
      fail(x, y, fx, fy);
      return false;
    }
    return true;
  };

  for (const auto& [x, y] : probe_pairs)
    if (!check_pair(x, y)) return v;

  auto E = element_set(lat, regime);
  double total = 1;
  for (std::size_t i = 0; i < op.arity; ++i) total *= static_cast<double>(E.size());

  if (total * total <= 250000.0) {
    std::vector<std::vector<El>> tuples;
    std::vector<El> outs;
    std::vector<bool> usable;
    for_each_tuple(std::span<const El>(E), op.arity, [&](std::span<const El> t) {
      tuples.emplace_back(t.begin(), t.end());
      bool in = detail::in_domain(op, t);
      usable.push_back(in);
      outs.push_back(in ? op.fn(t) : lat.bottom());
      return true;
    });
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (!usable[i]) continue;
      for (std::size_t j = 0; j < tuples.size(); ++j) {
        if (i == j || !usable[j]) continue;
        if (!detail::tuple_leq(lat, tuples[i], tuples[j])) continue;
        if (!lat.leq(outs[i], outs[j])) {
          fail(tuples[i], tuples[j], outs[i], outs[j]);
          return v;
        }
      }
    }
    v.holds = true;
    return v;
  }

  if (total <= kPropertyTupleCap) {
    bool violated = false;
    std::vector<El> bumped;
    for_each_tuple(std::span<const El>(E), op.arity, [&](std::span<const El> t) {
      for (std::size_t pos = 0; pos < op.arity; ++pos) {
        for (const auto& e : E) {
          if (!lat.leq(t[pos], e) || lat.equal(t[pos], e)) continue;
          bumped.assign(t.begin(), t.end());
          bumped[pos] = e;
          if (!check_pair(t, bumped)) {
            violated = true;
            return false;
          }
          break;  // one bump per coordinate keeps the pass linear
        }
      }
      return true;
    });
    if (violated) return v;
  }

  SeededRng rng(regime.seed + 29);
  std::vector<El> x, y;
  for (std::size_t k = 0; k < regime.samples; ++k) {
    x.clear();
    y.clear();
    for (std::size_t i = 0; i < op.arity; ++i) {
      El a = random_element(lat, rng);
      El b = random_element(lat, rng);
      x.push_back(a);
      y.push_back(lat.join(a, b));
    }
    if (!check_pair(x, y)) return v;
  }
  v.holds = true;
  return v;
}

template <CompleteLattice L>
struct BoundaryIsoReport {
  PropertyVerdict boundary;
  PropertyVerdict isotone;
};

/// Verifies A1/A2 and isotonicity in one pass over the regime.
template <CompleteLattice L>
BoundaryIsoReport<L> check_boundary_isotone(
    const LatticeOp<L>& op, const RegimeSpec& regime = {},
    std::span<const std::pair<std::vector<typename L::Element>,
                              std::vector<typename L::Element>>>
        probe_pairs = {}) {
  return {check_property(op, Prop::Boundary, regime),
          check_isotone(op, regime, probe_pairs)};
}

/// Tests min <= fn <= max, fn <= min and fn >= max over the regime and
/// reports the classes consistent with every tested input, or "mixed" with
/// one witness breaking each inequality.
template <CompleteLattice L>
PropertyVerdict classify_aggregation(const LatticeOp<L>& op,
                                     const RegimeSpec& regime = {}) {
  auto avg = check_property(op, Prop::Averaging, regime);
  auto con = check_property(op, Prop::Conjunctive, regime);
  auto dis = check_property(op, Prop::Disjunctive, regime);
  PropertyVerdict v;
  v.property = "class";
  v.regime = avg.regime;
  v.holds = true;
  std::string classes;
  auto add = [&classes](const char* name) {
    if (!classes.empty()) classes += ",";
    classes += name;
  };
  if (avg.holds) add("averaging");
  if (con.holds) add("conjunctive");
  if (dis.holds) add("disjunctive");
  if (classes.empty()) {
    v.note = "mixed";
    for (auto* failed : {&avg, &con, &dis})
      for (const auto& w : failed->witness)
        v.witness.push_back(std::string(failed->property) + ":" + w);
  } else {
    v.note = classes;
  }
  return v;
}

/// The aggregation functions used by the classification and property tables.
enum class UnitAggregate { Min, Max, Arith, Product, ProbabilisticSum, OddsRatio };

inline LatticeOp<UnitLattice> unit_aggregate_op(const UnitLattice& lat,
                                                UnitAggregate which,
                                                std::size_t arity) {
  LatticeOp<UnitLattice> op;
  op.lattice = lat;
  op.arity = arity;
  switch (which) {
    case UnitAggregate::Min:
      op.name = "min";
      op.fn = [lat](std::span<const UnitValue> xs) {
        double m = xs[0].value();
        for (const auto& x : xs) m = std::min(m, x.value());
        return lat.make(m);
      };
      break;
    case UnitAggregate::Max:
      op.name = "max";
      op.fn = [lat](std::span<const UnitValue> xs) {
        double m = xs[0].value();
        for (const auto& x : xs) m = std::max(m, x.value());
        return lat.make(m);
      };
      break;
    case UnitAggregate::Arith:
      op.name = "arith";
      op.fn = [lat](std::span<const UnitValue> xs) {
        double s = 0;
        for (const auto& x : xs) s += x.value();
        return lat.make(s / static_cast<double>(xs.size()));
      };
      break;
    case UnitAggregate::Product:
      op.name = "tp";
      op.fn = [lat](std::span<const UnitValue> xs) {
        double p = 1;
        for (const auto& x : xs) p *= x.value();
        return lat.make(p);
      };
      break;
    case UnitAggregate::ProbabilisticSum:
      op.name = "sp";
      op.fn = [lat](std::span<const UnitValue> xs) {
        double p = 1;
        for (const auto& x : xs) p *= 1.0 - x.value();
        return lat.make(1.0 - p);
      };
      break;
    case UnitAggregate::OddsRatio:
      op.name = "odds";
      op.fn = [lat](std::span<const UnitValue> xs) {
        double p = 1, q = 1;
        for (const auto& x : xs) {
          p *= x.value();
          q *= 1.0 - x.value();
        }
        if (p + q == 0.0) return lat.make(0.0);  // input held both a 0 and a 1
        return lat.make(p / (p + q));
      };
      // Inputs containing both endpoints make the ratio 0/0; they are
      // excluded from every regime.
      op.domain_filter = [lat](std::span<const UnitValue> xs) {
        bool zero = false, one = false;
        for (const auto& x : xs) {
          zero = zero || lat.equal(x, lat.bottom());
          one = one || lat.equal(x, lat.top());
        }
        return !(zero && one);
      };
      break;
  }
  return op;
}

}  // namespace latowa
