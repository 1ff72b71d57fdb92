#ifndef CKGEO_TESTS_ORACLES_HPP_
#define CKGEO_TESTS_ORACLES_HPP_

// Reference implementations used only by the tests. None of them call into
// the library's multiplication: they work from the lattice picture or from
// plain enumeration.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ckgeo/element.hpp"
#include "ckgeo/words.hpp"

namespace oracle {

using ckgeo::Element;
using ckgeo::Letter;
using ckgeo::Word;

struct Edge {
  std::int64_t col;  // left end of a horizontal unit edge
  std::int64_t y;
  int dir;           // +1 rightward, -1 leftward
};

// Normal form from the picture: walk the word in the plane (b-steps flip
// direction in odd columns), close the path back to the origin along
// (x, y) -> (0, y) -> (0, 0), and sum the clockwise winding number of every
// cell with sign (-1)^column. The end point gives (m, n).
inline Element geometric_normal_form(const Word& w) {
  std::int64_t x = 0, y = 0;
  std::vector<Edge> edges;
  auto odd = [](std::int64_t v) { return (v % 2 + 2) % 2 == 1; };
  for (Letter l : w) {
    switch (l) {
      case Letter::a:
        edges.push_back({x, y, +1});
        ++x;
        break;
      case Letter::a_inv:
        --x;
        edges.push_back({x, y, -1});
        break;
      case Letter::b:
        y += odd(x) ? -1 : 1;
        break;
      case Letter::b_inv:
        y += odd(x) ? 1 : -1;
        break;
    }
  }
  const std::int64_t end_x = x, end_y = y;
  while (x > 0) {
    --x;
    edges.push_back({x, y, -1});
  }
  while (x < 0) {
    edges.push_back({x, y, +1});
    ++x;
  }
  if (edges.empty()) return {0, end_y, end_x};
  std::int64_t ylo = edges.front().y;
  for (const auto& e : edges) ylo = std::min(ylo, e.y);
  // Cell (c, r) spans [c, c+1] x [r, r+1]; edges at height > r lie above it.
  std::int64_t k = 0;
  for (const auto& e : edges) {
    const std::int64_t cells_below = e.y - ylo;  // rows ylo .. e.y - 1
    const std::int64_t s = odd(e.col) ? -1 : 1;
    k += s * e.dir * cells_below;
  }
  return {k, end_y, end_x};
}

// Letters of a word built from exponent pairs, with no reduction.
inline Word power(Letter x, std::int64_t e) {
  if (e < 0) {
    x = ckgeo::inverse(x);
    e = -e;
  }
  return Word(std::vector<Letter>(static_cast<std::size_t>(e), x));
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out = out + p;
  return out;
}

class RandomWords {
 public:
  explicit RandomWords(std::uint64_t seed) : rng_(seed) {}

  Word next(std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, 3);
    std::vector<Letter> out(len(rng_));
    for (Letter& x : out) x = static_cast<Letter>(letter(rng_));
    return Word(std::move(out));
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // CKGEO_TESTS_ORACLES_HPP_
