#ifndef CKGEO_ELEMENT_HPP_
#define CKGEO_ELEMENT_HPP_

// Normal form (k, m, n) of cK: k is the Dehn area (exponent of the central
// t = aba^-1b), (m, n) is the endpoint of the projected lattice path.
// Generators: a = (0,0,1), b = (0,1,0), t = (1,0,0).

#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "words.hpp"

namespace ckgeo {

struct Element {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kIdentity{0, 0, 0};
inline constexpr Element kCentralT{1, 0, 0};

struct ElementHash {
  std::size_t operator()(const Element& g) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(g.k);
    h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(g.m);
    h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::int64_t>{}(g.n);
    return h;
  }
};

// (k1 + k2 + m2 par(n1), m1 + m2 (-1)^n1, n1 + n2)
inline Element multiply(const Element& g, const Element& h) {
  using namespace detail;
  const std::int64_t twist = alternating(g.n);
  const std::int64_t m2 = twist < 0 ? neg(h.m) : h.m;
  const std::int64_t area = parity(g.n) ? h.m : 0;
  return {add(add(g.k, h.k), area), add(g.m, m2), add(g.n, h.n)};
}

inline Element inverse(const Element& g) {
  using namespace detail;
  const std::int64_t n = neg(g.n);
  const std::int64_t m = alternating(g.n) < 0 ? g.m : neg(g.m);
  const std::int64_t k = sub(neg(g.k), parity(g.n) ? m : 0);
  return {k, m, n};
}

inline Element generator(Letter x) {
  switch (x) {
    case Letter::a:
      return {0, 0, 1};
    case Letter::a_inv:
      return {0, 0, -1};
    case Letter::b:
      return {0, 1, 0};
    case Letter::b_inv:
      return {0, -1, 0};
  }
  return kIdentity;
}

// Right multiplication by one generator, g * x.
inline Element step(const Element& g, Letter x) {
  using namespace detail;
  if (is_a_axis(x)) return {g.k, g.m, add(g.n, sign(x))};
  const std::int64_t s = sign(x);
  return {add(g.k, parity(g.n) ? s : 0), add(g.m, s * alternating(g.n)), g.n};
}

inline Element evaluate(const Word& w) {
  Element g = kIdentity;
  for (Letter x : w) g = multiply(g, generator(x));
  return g;
}

enum class IsometryKind : std::uint8_t {
  n_flip,     // (k,m,n) -> (k,m,-n); induced by LetterMap::flip_a
  full_flip,  // (k,m,n) -> (-k,-m,-n); induced by LetterMap::flip_both
};

inline Element apply_isometry(IsometryKind kind, const Element& g) {
  using detail::neg;
  if (kind == IsometryKind::n_flip) return {g.k, g.m, neg(g.n)};
  return {neg(g.k), neg(g.m), neg(g.n)};
}

constexpr LetterMap letter_map_of(IsometryKind kind) noexcept {
  return kind == IsometryKind::n_flip ? LetterMap::flip_a : LetterMap::flip_both;
}

constexpr IsometryKind isometry_of(LetterMap map) noexcept {
  return map == LetterMap::flip_a ? IsometryKind::n_flip : IsometryKind::full_flip;
}

struct NormalizationRecord {
  Element original;
  Element normalized;
  std::vector<IsometryKind> applied;
};

inline bool is_normalized(const Element& g) noexcept { return g.m >= 0 && g.n >= 0; }

// Preference order: [], [n_flip], [full_flip], [full_flip, n_flip].
inline NormalizationRecord normalize_quadrant(const Element& g) {
  NormalizationRecord rec{g, g, {}};
  if (is_normalized(g)) return rec;
  const Element n_flipped = apply_isometry(IsometryKind::n_flip, g);
  if (is_normalized(n_flipped)) {
    rec.normalized = n_flipped;
    rec.applied = {IsometryKind::n_flip};
    return rec;
  }
  const Element full = apply_isometry(IsometryKind::full_flip, g);
  if (is_normalized(full)) {
    rec.normalized = full;
    rec.applied = {IsometryKind::full_flip};
    return rec;
  }
  rec.normalized = apply_isometry(IsometryKind::n_flip, full);
  rec.applied = {IsometryKind::full_flip, IsometryKind::n_flip};
  return rec;
}

struct KleinElement {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const KleinElement&, const KleinElement&) = default;
  friend auto operator<=>(const KleinElement&, const KleinElement&) = default;
};

inline KleinElement project_to_klein(const Element& g) noexcept { return {g.m, g.n}; }

struct LatticePoint {
  std::int64_t x = 0;  // a-coordinate
  std::int64_t y = 0;  // b-coordinate

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticePath {
  std::vector<LatticePoint> points;  // points.size() == |w| + 1
  std::int64_t area = 0;

  LatticePoint end() const { return points.back(); }
};

// Geometric walk in the pi_1(K) lattice: b-steps run upward in even columns
// and downward in odd ones, and only odd-column b-steps accumulate area.
inline LatticePath lattice_path(const Word& w) {
  using namespace detail;
  LatticePath path;
  path.points.reserve(w.size() + 1);
  LatticePoint p;
  path.points.push_back(p);
  for (Letter x : w) {
    const std::int64_t s = sign(x);
    if (is_a_axis(x)) {
      p.x = add(p.x, s);
    } else {
      p.y = add(p.y, alternating(p.x) * s);
      if (parity(p.x)) path.area = add(path.area, s);
    }
    path.points.push_back(p);
  }
  return path;
}

inline std::string to_string(const Element& g) {
  return "(" + std::to_string(g.k) + "," + std::to_string(g.m) + "," + std::to_string(g.n) + ")";
}

// Accepts "(k,m,n)" with optional whitespace and signed decimal integers.
inline Element parse_element(std::string_view text) {
  std::size_t i = 0;
  const std::size_t len = text.size();
  auto skip = [&] {
    while (i < len && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= len || text[i] != c) {
      throw ParseError(std::string("expected '") + c + "'", i + 1);
    }
    ++i;
  };
  auto integer = [&]() -> std::int64_t {
    skip();
    const std::size_t start = i;
    bool negative = false;
    if (i < len && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected integer", start + 1);
    }
    std::int64_t v = 0;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::int64_t digit = text[i] - '0';
      std::int64_t next;
      if (__builtin_mul_overflow(v, 10, &next) || __builtin_add_overflow(next, digit, &next)) {
        throw ParseError("integer out of range", start + 1);
      }
      v = next;
      ++i;
    }
    return negative ? -v : v;
  };
  expect('(');
  Element g;
  g.k = integer();
  expect(',');
  g.m = integer();
  expect(',');
  g.n = integer();
  expect(')');
  skip();
  if (i != len) throw ParseError("trailing characters", i + 1);
  return g;
}

}  // namespace ckgeo

#endif  // CKGEO_ELEMENT_HPP_
