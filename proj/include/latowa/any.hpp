#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"
#include "finite.hpp"
#include "interval.hpp"
#include "unit.hpp"

namespace latowa {

/// Element of an AnyLattice: a unit scalar, an interval, a named finite
/// element, or a tuple of coordinates (one per product factor).
class Value {
 public:
  using Tuple = std::vector<Value>;

  Value(UnitValue v) : v_(std::move(v)) {}
  Value(IntervalValue v) : v_(std::move(v)) {}
  Value(FiniteLattice::Element e) : v_(e) {}
  Value(Tuple coords) : v_(std::move(coords)) {}

  bool is_tuple() const { return std::holds_alternative<Tuple>(v_); }

  const UnitValue& as_unit() const {
    if (auto* p = std::get_if<UnitValue>(&v_)) return *p;
    throw Error("element not in carrier (expected unit value)");
  }
  const IntervalValue& as_interval() const {
    if (auto* p = std::get_if<IntervalValue>(&v_)) return *p;
    throw Error("element not in carrier (expected interval)");
  }
  const FiniteLattice::Element& as_finite() const {
    if (auto* p = std::get_if<FiniteLattice::Element>(&v_)) return *p;
    throw Error("element not in carrier (expected named element)");
  }
  const Tuple& as_tuple() const {
    if (auto* p = std::get_if<Tuple>(&v_)) return *p;
    throw Error("element not in carrier (expected tuple)");
  }

 private:
  std::variant<UnitValue, IntervalValue, FiniteLattice::Element, Tuple> v_;
};

/// Runtime lattice handle: one of the concrete carriers, or a product of
/// other handles with coordinatewise order. Copies share immutable state.
class AnyLattice {
 public:
  using Element = Value;

  enum class Kind { Unit, Interval, Finite, Product };

  static AnyLattice unit(double tol = kDefaultTolerance) {
    return AnyLattice(UnitLattice(tol));
  }
  static AnyLattice interval(double tol = kDefaultTolerance) {
    return AnyLattice(IntervalLattice(tol));
  }
  static AnyLattice finite(FiniteLattice lat) { return AnyLattice(std::move(lat)); }

  Kind kind() const { return static_cast<Kind>(rep_.index()); }

  const UnitLattice& as_unit() const {
    if (auto* p = std::get_if<UnitLattice>(&rep_)) return *p;
    throw Error("lattice is not the unit lattice");
  }
  const IntervalLattice& as_interval() const {
    if (auto* p = std::get_if<IntervalLattice>(&rep_)) return *p;
    throw Error("lattice is not the interval lattice");
  }
  const FiniteLattice& as_finite() const {
    if (auto* p = std::get_if<FiniteLattice>(&rep_)) return *p;
    throw Error("lattice is not a finite lattice");
  }
  std::span<const AnyLattice> factors() const {
    if (auto* p = std::get_if<Factors>(&rep_)) return **p;
    throw Error("lattice is not a product lattice");
  }

  double tolerance() const {
    switch (kind()) {
      case Kind::Unit: return as_unit().tolerance();
      case Kind::Interval: return as_interval().tolerance();
      case Kind::Finite: return 0.0;
      case Kind::Product: return factors().front().tolerance();
    }
    return 0.0;
  }

  bool leq(const Element& a, const Element& b) const {
    switch (kind()) {
      case Kind::Unit: return as_unit().leq(a.as_unit(), b.as_unit());
      case Kind::Interval: return as_interval().leq(a.as_interval(), b.as_interval());
      case Kind::Finite: return as_finite().leq(a.as_finite(), b.as_finite());
      case Kind::Product: {
        auto fs = factors();
        const auto& xs = coords(a);
        const auto& ys = coords(b);
        for (std::size_t i = 0; i < fs.size(); ++i)
          if (!fs[i].leq(xs[i], ys[i])) return false;
        return true;
      }
    }
    return false;
  }

  bool equal(const Element& a, const Element& b) const {
    switch (kind()) {
      case Kind::Unit: return as_unit().equal(a.as_unit(), b.as_unit());
      case Kind::Interval: return as_interval().equal(a.as_interval(), b.as_interval());
      case Kind::Finite: return as_finite().equal(a.as_finite(), b.as_finite());
      case Kind::Product: {
        auto fs = factors();
        const auto& xs = coords(a);
        const auto& ys = coords(b);
        for (std::size_t i = 0; i < fs.size(); ++i)
          if (!fs[i].equal(xs[i], ys[i])) return false;
        return true;
      }
    }
    return false;
  }

  Element join(const Element& a, const Element& b) const { return combine(a, b, true); }
  Element meet(const Element& a, const Element& b) const { return combine(a, b, false); }

  Element top() const { return extreme(true); }
  Element bottom() const { return extreme(false); }

  std::string format(const Element& a) const {
    switch (kind()) {
      case Kind::Unit: return as_unit().format(a.as_unit());
      case Kind::Interval: return as_interval().format(a.as_interval());
      case Kind::Finite: return as_finite().format(a.as_finite());
      case Kind::Product: {
        auto fs = factors();
        const auto& xs = coords(a);
        std::string out = "(";
        for (std::size_t i = 0; i < fs.size(); ++i) {
          if (i) out += "|";
          out += fs[i].format(xs[i]);
        }
        return out + ")";
      }
    }
    return {};
  }

  /// Cell grammar: unit `0.375`, interval `lo:hi`, finite element by name,
  /// product `(e1|e2|...)`.
  Element parse(std::string_view text) const {
    switch (kind()) {
      case Kind::Unit: return Element(as_unit().parse(text));
      case Kind::Interval: return Element(as_interval().parse(text));
      case Kind::Finite: return Element(as_finite().parse(text));
      case Kind::Product: {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
          throw ParseError("product cell '" + std::string(text) +
                           "' must be parenthesized");
        auto fs = factors();
        std::string_view body = text.substr(1, text.size() - 2);
        Value::Tuple out;
        std::size_t depth = 0, start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i) {
          if (i < body.size() && body[i] == '(') ++depth;
          if (i < body.size() && body[i] == ')') --depth;
          if (i == body.size() || (body[i] == '|' && depth == 0)) {
            if (out.size() >= fs.size())
              throw ParseError("product cell has more coordinates than factors");
            out.push_back(fs[out.size()].parse(body.substr(start, i - start)));
            start = i + 1;
          }
        }
        if (out.size() != fs.size())
          throw ParseError("product cell has " + std::to_string(out.size()) +
                           " coordinates, expected " + std::to_string(fs.size()));
        return Element(std::move(out));
      }
    }
    throw ParseError("unreachable");
  }

  friend AnyLattice product_lattice(std::vector<AnyLattice> factors);

 private:
  using Factors = std::shared_ptr<const std::vector<AnyLattice>>;

  explicit AnyLattice(UnitLattice l) : rep_(std::move(l)) {}
  explicit AnyLattice(IntervalLattice l) : rep_(std::move(l)) {}
  explicit AnyLattice(FiniteLattice l) : rep_(std::move(l)) {}
  explicit AnyLattice(Factors f) : rep_(std::move(f)) {}

  const Value::Tuple& coords(const Element& a) const {
    const auto& xs = a.as_tuple();
    if (xs.size() != factors().size())
      throw Error("element not in carrier (tuple arity mismatch)");
    return xs;
  }

  Element combine(const Element& a, const Element& b, bool up) const {
    switch (kind()) {
      case Kind::Unit: {
        const auto& l = as_unit();
        return Element(up ? l.join(a.as_unit(), b.as_unit())
                          : l.meet(a.as_unit(), b.as_unit()));
      }
      case Kind::Interval: {
        const auto& l = as_interval();
        return Element(up ? l.join(a.as_interval(), b.as_interval())
                          : l.meet(a.as_interval(), b.as_interval()));
      }
      case Kind::Finite: {
        const auto& l = as_finite();
        return Element(up ? l.join(a.as_finite(), b.as_finite())
                          : l.meet(a.as_finite(), b.as_finite()));
      }
      case Kind::Product: {
        auto fs = factors();
        const auto& xs = coords(a);
        const auto& ys = coords(b);
        Value::Tuple out;
        out.reserve(fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i)
          out.push_back(up ? fs[i].join(xs[i], ys[i]) : fs[i].meet(xs[i], ys[i]));
        return Element(std::move(out));
      }
    }
    throw Error("unreachable");
  }

  Element extreme(bool up) const {
    switch (kind()) {
      case Kind::Unit: return Element(up ? as_unit().top() : as_unit().bottom());
      case Kind::Interval:
        return Element(up ? as_interval().top() : as_interval().bottom());
      case Kind::Finite: return Element(up ? as_finite().top() : as_finite().bottom());
      case Kind::Product: {
        Value::Tuple out;
        for (const auto& f : factors()) out.push_back(up ? f.top() : f.bottom());
        return Element(std::move(out));
      }
    }
    throw Error("unreachable");
  }

  std::variant<UnitLattice, IntervalLattice, FiniteLattice, Factors> rep_;
};

/// Coordinatewise product of the given factor lattices.
inline AnyLattice product_lattice(std::vector<AnyLattice> factors) {
  if (factors.empty()) throw Error("product lattice needs at least one factor");
  return AnyLattice(
      std::make_shared<const std::vector<AnyLattice>>(std::move(factors)));
}

inline bool equal_within(const AnyLattice& lat, const Value& a, const Value& b,
                         double tol) {
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit:
      return equal_within(lat.as_unit(), a.as_unit(), b.as_unit(), tol);
    case AnyLattice::Kind::Interval:
      return equal_within(lat.as_interval(), a.as_interval(), b.as_interval(), tol);
    case AnyLattice::Kind::Finite:
      return lat.as_finite().equal(a.as_finite(), b.as_finite());
    case AnyLattice::Kind::Product: {
      auto fs = lat.factors();
      const auto& xs = a.as_tuple();
      const auto& ys = b.as_tuple();
      if (xs.size() != fs.size() || ys.size() != fs.size())
        throw Error("element not in carrier (tuple arity mismatch)");
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (!equal_within(fs[i], xs[i], ys[i], tol)) return false;
      return true;
    }
  }
  return false;
}

inline bool has_unit_bridge(const AnyLattice& lat) {
  return lat.kind() == AnyLattice::Kind::Unit;
}
inline double to_unit(const AnyLattice& lat, const Value& v) {
  return to_unit(lat.as_unit(), v.as_unit());
}
inline Value from_unit(const AnyLattice& lat, double v) {
  return Value(from_unit(lat.as_unit(), v));
}

}  // namespace latowa
