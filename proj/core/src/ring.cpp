#include "triquad/ring.hpp"

#include <charconv>

#include "triquad/errors.hpp"

namespace triquad {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_norm(std::int64_t v, std::uint64_t m) {
  const std::int64_t sm = static_cast<std::int64_t>(m);
  std::int64_t r = v % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint32_t>(r);
}

std::uint64_t parse_decimal(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw DomainError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

const char* kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::ZMod: return "zmod";
    case RingKind::GaussianMod: return "gaussian";
    case RingKind::QuaternionMod: return "quaternion";
  }
  return "?";
}

}  // namespace

Ring::Ring(RingDescriptor desc) : desc_(desc) {
  const std::uint64_t m = desc_.modulus;
  switch (desc_.kind) {
    case RingKind::ZMod:
      if (m < 2) throw DomainError("zmod modulus must be >= 2");
      if (m > 0xFFFFFFFFull) throw DomainError("zmod modulus exceeds 2^32-1");
      arity_ = 1;
      cardinality_ = m;
      break;
    case RingKind::GaussianMod:
      if (m == 2 || !is_prime(m)) throw DomainError("gaussian modulus must be an odd prime");
      if (m > 65521) throw DomainError("gaussian modulus exceeds supported range");
      arity_ = 2;
      cardinality_ = m * m;
      break;
    case RingKind::QuaternionMod:
      if (m == 2 || !is_prime(m)) throw DomainError("quaternion modulus must be an odd prime");
      if (m > 251) throw DomainError("quaternion modulus exceeds supported range");
      arity_ = 4;
      cardinality_ = m * m * m * m;
      break;
  }
}

Ring Ring::zmod(std::uint64_t m) { return Ring({RingKind::ZMod, m}); }
Ring Ring::gaussian(std::uint64_t p) { return Ring({RingKind::GaussianMod, p}); }
Ring Ring::quaternion(std::uint64_t p) { return Ring({RingKind::QuaternionMod, p}); }

Ring Ring::from_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("malformed ring descriptor '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const std::uint64_t m = parse_decimal(text.substr(colon + 1), "ring modulus");
  if (head == "zmod") return zmod(m);
  if (head == "gaussian") return gaussian(m);
  if (head == "quaternion") return quaternion(m);
  throw DomainError("unknown ring kind '" + std::string(head) + "'");
}

std::string Ring::descriptor() const {
  return std::string(kind_name(desc_.kind)) + ":" + std::to_string(desc_.modulus);
}

Element Ring::one() const { return Element{{1, 0, 0, 0}}; }

Element Ring::from_int(std::int64_t v) const {
  return Element{{mod_norm(v, desc_.modulus), 0, 0, 0}};
}

Element Ring::from_coords(const std::vector<std::uint64_t>& coords) const {
  if (static_cast<int>(coords.size()) != arity_)
    throw DomainError("expected " + std::to_string(arity_) + " coordinates for " + descriptor());
  Element e;
  for (int t = 0; t < arity_; ++t) {
    if (coords[t] >= desc_.modulus)
      throw DomainError("coordinate " + std::to_string(coords[t]) + " out of range [0," +
                        std::to_string(desc_.modulus) + ")");
    e.c[t] = static_cast<std::uint32_t>(coords[t]);
  }
  return e;
}

void Ring::check(const Element& x) const {
  for (int t = 0; t < 4; ++t) {
    const bool in_use = t < arity_;
    if ((in_use && x.c[t] >= desc_.modulus) || (!in_use && x.c[t] != 0))
      throw DomainError("element " + to_string(x) + " does not belong to " + descriptor());
  }
}

Element Ring::add(const Element& x, const Element& y) const {
  check(x);
  check(y);
  const std::uint64_t m = desc_.modulus;
  Element e;
  for (int t = 0; t < arity_; ++t)
    e.c[t] = static_cast<std::uint32_t>((std::uint64_t(x.c[t]) + y.c[t]) % m);
  return e;
}

Element Ring::neg(const Element& x) const {
  check(x);
  const std::uint64_t m = desc_.modulus;
  Element e;
  for (int t = 0; t < arity_; ++t)
    e.c[t] = static_cast<std::uint32_t>((m - x.c[t]) % m);
  return e;
}

Element Ring::sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

Element Ring::mul(const Element& x, const Element& y) const {
  check(x);
  check(y);
  const std::uint64_t m = desc_.modulus;
  switch (desc_.kind) {
    case RingKind::ZMod:
      return Element{{static_cast<std::uint32_t>((std::uint64_t(x.c[0]) * y.c[0]) % m), 0, 0, 0}};
    case RingKind::GaussianMod: {
      // (x0 + x1 i)(y0 + y1 i) with i^2 = -1
      const std::int64_t x0 = x.c[0], x1 = x.c[1], y0 = y.c[0], y1 = y.c[1];
      return Element{{mod_norm(x0 * y0 - x1 * y1, m), mod_norm(x0 * y1 + x1 * y0, m), 0, 0}};
    }
    case RingKind::QuaternionMod: {
      // Hamilton product, i^2 = j^2 = k^2 = -1, ij = k
      const std::int64_t x0 = x.c[0], x1 = x.c[1], x2 = x.c[2], x3 = x.c[3];
      const std::int64_t y0 = y.c[0], y1 = y.c[1], y2 = y.c[2], y3 = y.c[3];
      return Element{{mod_norm(x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3, m),
                      mod_norm(x0 * y1 + x1 * y0 + x2 * y3 - x3 * y2, m),
                      mod_norm(x0 * y2 - x1 * y3 + x2 * y0 + x3 * y1, m),
                      mod_norm(x0 * y3 + x1 * y2 - x2 * y1 + x3 * y0, m)}};
    }
  }
  throw DomainError("unreachable ring kind");
}

std::optional<Element> Ring::inverse(const Element& x) const {
  check(x);
  const Element unit = one();
  for (std::uint64_t idx = 0; idx < cardinality_; ++idx) {
    const Element y = element_at(idx);
    if (mul(x, y) == unit && mul(y, x) == unit) return y;
  }
  return std::nullopt;
}

bool Ring::is_right_zero_divisor(const Element& d) const {
  check(d);
  const Element z = zero();
  for (std::uint64_t idx = 1; idx < cardinality_; ++idx)
    if (mul(element_at(idx), d) == z) return true;
  return false;
}

bool Ring::is_left_zero_divisor(const Element& d) const {
  check(d);
  const Element z = zero();
  for (std::uint64_t idx = 1; idx < cardinality_; ++idx)
    if (mul(d, element_at(idx)) == z) return true;
  return false;
}

std::uint64_t Ring::index_of(const Element& x) const {
  check(x);
  std::uint64_t idx = 0;
  for (int t = 0; t < arity_; ++t) idx = idx * desc_.modulus + x.c[t];
  return idx;
}

Element Ring::element_at(std::uint64_t index) const {
  if (index >= cardinality_)
    throw DomainError("element index " + std::to_string(index) + " out of range for " + descriptor());
  Element e;
  for (int t = arity_ - 1; t >= 0; --t) {
    e.c[t] = static_cast<std::uint32_t>(index % desc_.modulus);
    index /= desc_.modulus;
  }
  return e;
}

std::vector<Element> Ring::all_elements() const {
  std::vector<Element> out;
  out.reserve(cardinality_);
  for (std::uint64_t idx = 0; idx < cardinality_; ++idx) out.push_back(element_at(idx));
  return out;
}

std::string Ring::to_string(const Element& x) const {
  std::string out = "[";
  for (int t = 0; t < arity_; ++t) {
    if (t > 0) out += ',';
    out += std::to_string(x.c[t]);
  }
  out += ']';
  return out;
}

Element Ring::parse_element(std::string_view text) const {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw DomainError("malformed element '" + std::string(text) + "', expected e.g. " +
                      to_string(zero()));
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::uint64_t> coords;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view token = body.substr(0, comma);
    coords.push_back(parse_decimal(token, "element coordinate"));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return from_coords(coords);
}

}  // namespace triquad
