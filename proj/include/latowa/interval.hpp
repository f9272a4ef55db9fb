#pragma once

#include <string>
#include <string_view>

#include "core.hpp"
#include "unit.hpp"

namespace latowa {

/// A closed subinterval [lo, hi] of [0,1].
class IntervalValue {
 public:
  IntervalValue(UnitValue lo, UnitValue hi) : lo_(lo), hi_(hi) {
    if (lo_.value() > hi_.value())
      throw Error("interval bounds out of order: [" + std::to_string(lo.value()) +
                  ", " + std::to_string(hi.value()) + "]");
  }
  IntervalValue(double lo, double hi, double tol = kDefaultTolerance)
      : IntervalValue(UnitValue(lo, tol), UnitValue(hi, tol)) {}

  double lo() const { return lo_.value(); }
  double hi() const { return hi_.value(); }
  UnitValue lo_value() const { return lo_; }
  UnitValue hi_value() const { return hi_; }

 private:
  UnitValue lo_;
  UnitValue hi_;
};

/// Subintervals of [0,1] under the Kulisch-Miranker order:
/// [a,b] <= [c,d] iff a<=c and b<=d. Join and meet are endpointwise max/min.
class IntervalLattice {
 public:
  using Element = IntervalValue;

  explicit IntervalLattice(double tol = kDefaultTolerance) : unit_(tol) {}

  double tolerance() const { return unit_.tolerance(); }
  const UnitLattice& endpoints() const { return unit_; }
  Element make(double lo, double hi) const {
    return Element(unit_.make(lo), unit_.make(hi));
  }

  bool leq(const Element& a, const Element& b) const {
    return unit_.leq(a.lo_value(), b.lo_value()) && unit_.leq(a.hi_value(), b.hi_value());
  }
  bool equal(const Element& a, const Element& b) const {
    return unit_.equal(a.lo_value(), b.lo_value()) && unit_.equal(a.hi_value(), b.hi_value());
  }
  Element join(const Element& a, const Element& b) const {
    return Element(unit_.join(a.lo_value(), b.lo_value()),
                   unit_.join(a.hi_value(), b.hi_value()));
  }
  Element meet(const Element& a, const Element& b) const {
    return Element(unit_.meet(a.lo_value(), b.lo_value()),
                   unit_.meet(a.hi_value(), b.hi_value()));
  }
  Element top() const { return Element(1.0, 1.0); }
  Element bottom() const { return Element(0.0, 0.0); }

  std::string format(const Element& a) const {
    return unit_.format(a.lo_value()) + ":" + unit_.format(a.hi_value());
  }

  Element parse(std::string_view text) const {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("interval cell '" + std::string(text) + "' lacks ':'");
    UnitValue lo = unit_.parse(text.substr(0, colon));
    UnitValue hi = unit_.parse(text.substr(colon + 1));
    try {
      return Element(lo, hi);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }

 private:
  UnitLattice unit_;
};

inline bool equal_within(const IntervalLattice& lat, const IntervalValue& a,
                         const IntervalValue& b, double tol) {
  return equal_within(lat.endpoints(), a.lo_value(), b.lo_value(), tol) &&
         equal_within(lat.endpoints(), a.hi_value(), b.hi_value(), tol);
}

inline bool has_unit_bridge(const IntervalLattice&) { return false; }

}  // namespace latowa
