#ifndef CKGEO_GROUP_MODEL_HPP_
#define CKGEO_GROUP_MODEL_HPP_

// A GroupModel supplies an identity state, right multiplication by a
// generator, and a canonical hashable key. The Cayley-ball oracle is written
// against this concept so the same code runs over cK, pi_1(K) and Z^2.

#include <array>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "checked.hpp"
#include "element.hpp"
#include "words.hpp"

namespace ckgeo {

template <class M>
concept GroupModel = requires(const M& model, const typename M::State& s, Letter x) {
  typename M::State;
  typename M::Key;
  { model.identity() } -> std::same_as<typename M::State>;
  { model.step(s, x) } -> std::same_as<typename M::State>;
  { model.key(s) } -> std::same_as<typename M::Key>;
  { M::name() } -> std::convertible_to<std::string_view>;
};

template <std::size_t N>
struct ArrayKeyHash {
  std::size_t operator()(const std::array<std::int64_t, N>& key) const noexcept {
    std::size_t h = 0;
    for (std::int64_t v : key) {
      h ^= std::hash<std::int64_t>{}(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct CkModel {
  using State = Element;
  using Key = std::array<std::int64_t, 3>;
  using KeyHash = ArrayKeyHash<3>;

  static constexpr std::string_view name() { return "ck"; }
  State identity() const { return kIdentity; }
  State step(const State& g, Letter x) const { return ckgeo::step(g, x); }
  Key key(const State& g) const { return {g.k, g.m, g.n}; }
  static State from_key(const Key& key) { return {key[0], key[1], key[2]}; }
};

// pi_1(K) = Z x| Z with (m1,n1)(m2,n2) = (m1 + m2 (-1)^n1, n1 + n2).
struct KleinModel {
  using State = KleinElement;
  using Key = std::array<std::int64_t, 2>;
  using KeyHash = ArrayKeyHash<2>;

  static constexpr std::string_view name() { return "klein"; }
  State identity() const { return {}; }
  State step(const State& s, Letter x) const {
    using namespace detail;
    if (is_a_axis(x)) return {s.m, add(s.n, sign(x))};
    return {add(s.m, sign(x) * alternating(s.n)), s.n};
  }
  Key key(const State& s) const { return {s.m, s.n}; }
  static State from_key(const Key& key) { return {key[0], key[1]}; }
};

struct Z2Element {
  std::int64_t m = 0;  // b-exponent
  std::int64_t n = 0;  // a-exponent

  friend bool operator==(const Z2Element&, const Z2Element&) = default;
};

struct Z2Model {
  using State = Z2Element;
  using Key = std::array<std::int64_t, 2>;
  using KeyHash = ArrayKeyHash<2>;

  static constexpr std::string_view name() { return "z2"; }
  State identity() const { return {}; }
  State step(const State& s, Letter x) const {
    using detail::add;
    if (is_a_axis(x)) return {s.m, add(s.n, sign(x))};
    return {add(s.m, sign(x)), s.n};
  }
  Key key(const State& s) const { return {s.m, s.n}; }
  static State from_key(const Key& key) { return {key[0], key[1]}; }
};

template <GroupModel M>
typename M::State evaluate_in(const M& model, const Word& w) {
  auto s = model.identity();
  for (Letter x : w) s = model.step(s, x);
  return s;
}

}  // namespace ckgeo

#endif  // CKGEO_GROUP_MODEL_HPP_
