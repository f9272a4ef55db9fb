#pragma once

#include <concepts>
#include <stdexcept>
#include <string>

namespace latowa {

/// Absolute tolerance used for all scalar comparisons on the unit carrier.
inline constexpr double kDefaultTolerance = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax errors in textual inputs (lattice spec files, CSV rows, PGM headers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A bounded lattice with decidable order and total join/meet.
///
/// `equal` is the carrier's equality: exact on discrete carriers, within the
/// lattice's tolerance on numeric ones. `format` renders an element in the
/// same grammar `parse` members accept.
template <typename L>
concept CompleteLattice =
    std::copy_constructible<L> &&
    requires(const L& lat, const typename L::Element& a, const typename L::Element& b) {
      { lat.leq(a, b) } -> std::convertible_to<bool>;
      { lat.equal(a, b) } -> std::convertible_to<bool>;
      { lat.join(a, b) } -> std::same_as<typename L::Element>;
      { lat.meet(a, b) } -> std::same_as<typename L::Element>;
      { lat.top() } -> std::same_as<typename L::Element>;
      { lat.bottom() } -> std::same_as<typename L::Element>;
      { lat.format(a) } -> std::same_as<std::string>;
    };

}  // namespace latowa
