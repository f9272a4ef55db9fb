#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "core.hpp"

namespace latowa {

/// A scalar in [0,1]. Values within `tol` of the carrier are clamped onto it;
/// anything further out is rejected.
class UnitValue {
 public:
  explicit UnitValue(double v, double tol = kDefaultTolerance) : v_(v) {
    if (!(v_ >= -tol && v_ <= 1.0 + tol))
      throw Error("unit value out of range: " + std::to_string(v));
    v_ = std::clamp(v_, 0.0, 1.0);
  }

  double value() const { return v_; }

 private:
  double v_;
};

/// The chain ([0,1], <=) with numeric comparisons at tolerance `tol`.
class UnitLattice {
 public:
  using Element = UnitValue;

  explicit UnitLattice(double tol = kDefaultTolerance) : tol_(tol) {}

  double tolerance() const { return tol_; }
  Element make(double v) const { return Element(v, tol_); }

  bool leq(const Element& a, const Element& b) const {
    return a.value() <= b.value() + tol_;
  }
  bool equal(const Element& a, const Element& b) const {
    return std::fabs(a.value() - b.value()) <= tol_;
  }
  Element join(const Element& a, const Element& b) const {
    return Element(std::max(a.value(), b.value()));
  }
  Element meet(const Element& a, const Element& b) const {
    return Element(std::min(a.value(), b.value()));
  }
  Element top() const { return Element(1.0); }
  Element bottom() const { return Element(0.0); }

  std::string format(const Element& a) const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", a.value());
    return buf;
  }

  Element parse(std::string_view text) const {
    std::string cell(text);
    if (cell.empty()) throw ParseError("empty unit cell");
    char* end = nullptr;
    double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size())
      throw ParseError("malformed unit value '" + cell + "'");
    try {
      return make(v);
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }

 private:
  double tol_;
};

inline bool equal_within(const UnitLattice&, const UnitValue& a, const UnitValue& b,
                         double tol) {
  return std::fabs(a.value() - b.value()) <= tol;
}

// Bridge between lattice elements and raw scalars, for the few operations
// that need arithmetic on the carrier (homogeneity, proportional weights).
inline bool has_unit_bridge(const UnitLattice&) { return true; }
inline double to_unit(const UnitLattice&, const UnitValue& v) { return v.value(); }
inline UnitValue from_unit(const UnitLattice& lat, double v) { return lat.make(v); }

}  // namespace latowa
