#ifndef CKGEO_GEODESICS_HPP_
#define CKGEO_GEODESICS_HPP_

// Closed-form word length, standard representatives and geodesic
// continuations in cK with respect to {a, b}.

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "checked.hpp"
#include "element.hpp"
#include "words.hpp"

namespace ckgeo {

namespace detail {

inline void append_power(std::vector<Letter>& out, Axis axis, std::int64_t exponent) {
  const Letter x = make_letter(axis, exponent > 0 ? 1 : -1);
  out.insert(out.end(), static_cast<std::size_t>(abs(exponent)), x);
}

// Standard word of a normalized element (m, n >= 0).
inline Word normalized_std_rep(const Element& g) {
  std::vector<Letter> out;
  if (g.n == 0) {
    // a b^k a^-1 b^(k+m); extends by b-letters inside the language
    out.push_back(Letter::a);
    append_power(out, Axis::b, g.k);
    out.push_back(Letter::a_inv);
    append_power(out, Axis::b, add(g.k, g.m));
  } else {
    // b^(k+m) a b^k a^(n-1)
    append_power(out, Axis::b, add(g.k, g.m));
    out.push_back(Letter::a);
    append_power(out, Axis::b, g.k);
    append_power(out, Axis::a, sub(g.n, 1));
  }
  return free_reduce(Word(std::move(out)));
}

}  // namespace detail

// Standard representative. For unnormalized g the normalized word is pulled
// back through the letter maps of the normalizing isometries.
inline Word std_rep(const Element& g) {
  NormalizationRecord rec = normalize_quadrant(g);
  // n_flip fixes elements with n = 0; pulling back through it as well keeps
  // the n = 0, m < 0 words prefixes of their b-extensions.
  if (g.n == 0 && g.m < 0) rec.applied = {IsometryKind::full_flip, IsometryKind::n_flip};
  Word w = detail::normalized_std_rep(rec.normalized);
  for (auto it = rec.applied.rbegin(); it != rec.applied.rend(); ++it) {
    w = apply_letter_map(letter_map_of(*it), w);
  }
  return w;
}

// Word length l(g). Equal to |std_rep(g)| without building the word.
inline std::int64_t length(const Element& g) {
  using namespace detail;
  const Element h = normalize_quadrant(g).normalized;
  if (h.k == 0) return add(h.m, h.n);
  return add(add(abs(add(h.k, h.m)), abs(h.k)), add(1, abs(sub(h.n, 1))));
}

inline bool is_geodesic(const Word& w) {
  return static_cast<std::int64_t>(w.size()) == length(evaluate(w));
}

// Letters s with l(gs) = l(g) + 1, in alphabet order a, a^-1, b, b^-1.
inline std::vector<Letter> continuations(const Element& g) {
  const std::int64_t l = length(g);
  std::vector<Letter> out;
  for (Letter s : kAlphabet) {
    if (length(step(g, s)) == l + 1) out.push_back(s);
  }
  return out;
}

enum class RegionCase : std::uint8_t {
  neg_k_dominant,   // k < 0, |k| > m
  neg_k_small_even, // k < 0, |k| <= m, n even
  neg_k_small_odd,  // k < 0, |k| <= m, n odd
  pos_k,            // k > 0
  zero_k,           // k = 0 (no named letters)
  unnormalized,
};

inline std::string to_string(RegionCase c) {
  switch (c) {
    case RegionCase::neg_k_dominant:
      return "NEG_K_DOMINANT";
    case RegionCase::neg_k_small_even:
      return "NEG_K_SMALL_EVEN";
    case RegionCase::neg_k_small_odd:
      return "NEG_K_SMALL_ODD";
    case RegionCase::pos_k:
      return "POS_K";
    case RegionCase::zero_k:
      return "ZERO_K";
    case RegionCase::unnormalized:
      return "UNNORMALIZED";
  }
  return "?";
}

inline RegionCase classify_region(const Element& g) {
  const Element h = normalize_quadrant(g).normalized;
  if (h.k > 0) return RegionCase::pos_k;
  if (h.k == 0) return RegionCase::zero_k;
  if (detail::abs(h.k) > h.m) return RegionCase::neg_k_dominant;
  return detail::parity(h.n) == 0 ? RegionCase::neg_k_small_even
                                  : RegionCase::neg_k_small_odd;
}

// Letters expected to extend geodesics in each case (normalized
// coordinates). Empty for zero_k.
inline std::vector<Letter> region_letters(RegionCase c) {
  switch (c) {
    case RegionCase::neg_k_dominant:
    case RegionCase::neg_k_small_odd:
      return {Letter::a, Letter::b_inv};
    case RegionCase::neg_k_small_even:
    case RegionCase::pos_k:
      return {Letter::a, Letter::b};
    case RegionCase::zero_k:
    case RegionCase::unnormalized:
      break;
  }
  return {};
}

inline bool is_dead_end(const Element& g) { return continuations(g).empty(); }

// Smallest r such that some element within distance r + 1 of g is longer
// than g; 0 unless g is a dead end. Searches at most max_radius steps.
inline std::int64_t depth(const Element& g, std::int64_t max_radius = 64) {
  if (!is_dead_end(g)) return 0;
  const std::int64_t l = length(g);
  std::unordered_map<Element, std::int64_t, ElementHash> dist{{g, 0}};
  std::deque<Element> queue{g};
  while (!queue.empty()) {
    const Element h = queue.front();
    queue.pop_front();
    const std::int64_t d = dist[h];
    if (d >= max_radius) break;
    for (Letter s : kAlphabet) {
      const Element next = step(h, s);
      if (dist.contains(next)) continue;
      if (length(next) > l) return d;
      dist.emplace(next, d + 1);
      queue.push_back(next);
    }
  }
  throw ResourceError("depth search exceeded radius " + std::to_string(max_radius));
}

}  // namespace ckgeo

#endif  // CKGEO_GEODESICS_HPP_
