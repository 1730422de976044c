#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triquad {

enum class RingKind { ZMod, GaussianMod, QuaternionMod };

/// Element of a finite ring backend. Coordinates are residues in
/// [0, modulus); slots past the ring's arity stay zero, so equality and
/// ordering are plain tuple comparisons regardless of backend.
struct Element {
  std::array<std::uint32_t, 4> c{0, 0, 0, 0};

  friend constexpr bool operator==(const Element&, const Element&) = default;
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

struct RingDescriptor {
  RingKind kind;
  std::uint64_t modulus;

  friend constexpr bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Finite associative unital ring with full element iteration.
///
/// Backends: integers mod m (`zmod:<m>`, any m >= 2), Gaussian integers mod
/// an odd prime p (`gaussian:<p>`, arity 2, x + yi), and quaternion integers
/// mod an odd prime p (`quaternion:<p>`, arity 4, x + yi + zj + wk). The
/// quaternion backend is noncommutative.
///
/// Unit and zero-divisor queries scan every element; they are meant for the
/// small rings this library targets (cardinality up to a few thousand).
class Ring {
 public:
  /// Parses `zmod:<m>` | `gaussian:<p>` | `quaternion:<p>`.
  static Ring from_descriptor(std::string_view text);
  static Ring zmod(std::uint64_t m);
  static Ring gaussian(std::uint64_t p);
  static Ring quaternion(std::uint64_t p);

  RingKind kind() const { return desc_.kind; }
  std::uint64_t modulus() const { return desc_.modulus; }
  int arity() const { return arity_; }
  std::uint64_t cardinality() const { return cardinality_; }
  std::string descriptor() const;
  bool same_ring(const Ring& other) const { return desc_ == other.desc_; }

  Element zero() const { return Element{}; }
  Element one() const;
  /// Scalar embedding: v mod m in the first coordinate.
  Element from_int(std::int64_t v) const;
  /// Builds an element from exactly arity() coordinates, validating ranges.
  Element from_coords(const std::vector<std::uint64_t>& coords) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;

  /// Two-sided inverse found by exhaustive scan; absence is a value.
  std::optional<Element> inverse(const Element& x) const;
  bool is_unit(const Element& x) const { return inverse(x).has_value(); }
  /// True iff some x != 0 has x*d = 0, by exhaustive scan.
  bool is_right_zero_divisor(const Element& d) const;
  /// True iff some x != 0 has d*x = 0, by exhaustive scan.
  bool is_left_zero_divisor(const Element& d) const;

  /// Canonical order is lexicographic on coordinate tuples.
  std::uint64_t index_of(const Element& x) const;
  Element element_at(std::uint64_t index) const;
  std::vector<Element> all_elements() const;

  /// Text encoding, e.g. "[3]", "[2,1]", "[0,1,0,2]".
  std::string to_string(const Element& x) const;
  Element parse_element(std::string_view text) const;

  /// Validates that x is a well-formed element of this ring.
  void check(const Element& x) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.desc_ == b.desc_; }

 private:
  explicit Ring(RingDescriptor desc);

  RingDescriptor desc_;
  int arity_;
  std::uint64_t cardinality_;
};

}  // namespace triquad
