#ifndef CKGEO_MOVES_HPP_
#define CKGEO_MOVES_HPP_

// Basic moves on geodesic words. Every generator proposes local rewrites and
// keeps only candidates that represent the same element with the same
// (geodesic) length.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "element.hpp"
#include "geodesics.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace ckgeo {

enum class MoveKind : std::uint8_t {
  even_castling,  // a^2 b^s <-> b^s a^2
  detowering,     // trade one unit of b-height between two a-corners
  clipping,       // two boundary transpositions with cancelling area
  reflection,     // flip a pair of opposite a-letters
};

inline std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::even_castling:
      return "EVEN_CASTLING";
    case MoveKind::detowering:
      return "DETOWERING";
    case MoveKind::clipping:
      return "CLIPPING";
    case MoveKind::reflection:
      return "REFLECTION";
  }
  return "?";
}

struct MoveEdge {
  Word from;
  Word to;
  MoveKind kind;
  std::string site;  // letter indices (0-based) touched by the rewrite
};

inline bool is_valid_move(const Word& from, const Word& to) {
  return from != to && from.size() == to.size() && evaluate(from) == evaluate(to) &&
         is_geodesic(from) && is_geodesic(to);
}

class OrbitCapError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

namespace detail {

inline void require_geodesic(const Word& w) {
  if (!is_geodesic(w)) throw std::invalid_argument("word is not geodesic: " + format_word(w));
}

// Keeps the first valid edge per target word.
class EdgeCollector {
 public:
  explicit EdgeCollector(const Word& from) : from_(from), element_(evaluate(from)) {}

  void offer(std::vector<Letter> letters, MoveKind kind, const std::string& site) {
    Word to(std::move(letters));
    if (to == from_ || seen_.contains(to)) return;
    if (to.size() != from_.size() || !to.is_reduced() || evaluate(to) != element_ ||
        !is_geodesic(to)) {
      return;
    }
    seen_.insert(to);
    edges_.push_back({from_, std::move(to), kind, site});
  }

  std::vector<MoveEdge> take() && {
    std::sort(edges_.begin(), edges_.end(), [](const MoveEdge& x, const MoveEdge& y) {
      return format_word(x.to) < format_word(y.to);
    });
    return std::move(edges_);
  }

 private:
  Word from_;
  Element element_;
  std::unordered_set<Word, WordHash> seen_;
  std::vector<MoveEdge> edges_;
};

inline void castling_candidates(const Word& w, EdgeCollector& out) {
  const auto& xs = w.letters();
  for (std::size_t p = 0; p + 1 < xs.size(); ++p) {
    if (!is_a_axis(xs[p]) || xs[p + 1] != xs[p]) continue;
    if (p > 0 && !is_a_axis(xs[p - 1])) {
      // b^s a^2 -> a^2 b^s
      auto ys = xs;
      std::rotate(ys.begin() + static_cast<std::ptrdiff_t>(p - 1),
                  ys.begin() + static_cast<std::ptrdiff_t>(p),
                  ys.begin() + static_cast<std::ptrdiff_t>(p + 2));
      out.offer(std::move(ys), MoveKind::even_castling,
                std::to_string(p - 1) + "," + std::to_string(p) + "," + std::to_string(p + 1));
    }
    if (p + 2 < xs.size() && !is_a_axis(xs[p + 2])) {
      // a^2 b^s -> b^s a^2
      auto ys = xs;
      std::rotate(ys.begin() + static_cast<std::ptrdiff_t>(p),
                  ys.begin() + static_cast<std::ptrdiff_t>(p + 2),
                  ys.begin() + static_cast<std::ptrdiff_t>(p + 3));
      out.offer(std::move(ys), MoveKind::even_castling,
                std::to_string(p) + "," + std::to_string(p + 1) + "," + std::to_string(p + 2));
    }
  }
}

// Word as a-letters interleaved with net b-exponents:
// b^e0 x1 b^e1 x2 ... xr b^er.
struct Interleaved {
  std::vector<Letter> a_letters;
  std::vector<std::int64_t> b_exponents;  // size a_letters.size() + 1

  static Interleaved of(const Word& w) {
    Interleaved out;
    out.b_exponents.push_back(0);
    for (Letter x : w) {
      if (is_a_axis(x)) {
        out.a_letters.push_back(x);
        out.b_exponents.push_back(0);
      } else {
        out.b_exponents.back() += sign(x);
      }
    }
    return out;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    for (std::size_t i = 0; i < b_exponents.size(); ++i) {
      append_power(out, Axis::b, b_exponents[i]);
      if (i < a_letters.size()) out.push_back(a_letters[i]);
    }
    return out;
  }
};

inline void detowering_candidates(const Word& w, EdgeCollector& out) {
  const Interleaved base = Interleaved::of(w);
  const std::size_t r = base.a_letters.size();
  static constexpr int kDeltas[] = {-1, 0, 1};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (int d0 : kDeltas) {
        for (int d1 : kDeltas) {
          for (int d2 : kDeltas) {
            for (int d3 : kDeltas) {
              Interleaved c = base;
              c.b_exponents[i] += d0;
              c.b_exponents[i + 1] += d1;
              c.b_exponents[j] += d2;
              c.b_exponents[j + 1] += d3;
              if (c.b_exponents == base.b_exponents) continue;
              out.offer(c.letters(), MoveKind::detowering,
                        "a" + std::to_string(i) + ",a" + std::to_string(j));
            }
          }
        }
      }
    }
  }
}

// a^e b^s -> b^-s a^e and b^s a^e -> a^e b^-s at every adjacent pair; each
// shifts the area by one unit.
inline std::vector<std::pair<std::vector<Letter>, std::size_t>> boundary_transpositions(
    const std::vector<Letter>& xs) {
  std::vector<std::pair<std::vector<Letter>, std::size_t>> out;
  for (std::size_t p = 0; p + 1 < xs.size(); ++p) {
    const Letter x = xs[p];
    const Letter y = xs[p + 1];
    if (is_a_axis(x) == is_a_axis(y)) continue;
    auto ys = xs;
    if (is_a_axis(x)) {
      ys[p] = inverse(y);
      ys[p + 1] = x;
    } else {
      ys[p] = y;
      ys[p + 1] = inverse(x);
    }
    out.emplace_back(std::move(ys), p);
  }
  return out;
}

inline void clipping_candidates(const Word& w, EdgeCollector& out) {
  for (auto& [once, p] : boundary_transpositions(w.letters())) {
    for (auto& [twice, q] : boundary_transpositions(once)) {
      out.offer(std::move(twice), MoveKind::clipping, std::to_string(p) + ";" + std::to_string(q));
    }
  }
}

inline void reflection_candidates(const Word& w, EdgeCollector& out) {
  const auto& xs = w.letters();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!is_a_axis(xs[i])) continue;
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[j] != inverse(xs[i])) continue;
      auto ys = xs;
      ys[i] = inverse(ys[i]);
      ys[j] = inverse(ys[j]);
      out.offer(std::move(ys), MoveKind::reflection, std::to_string(i) + "," + std::to_string(j));
    }
  }
}

inline std::vector<Word> targets(std::vector<MoveEdge> edges) {
  std::vector<Word> out;
  out.reserve(edges.size());
  for (auto& e : edges) out.push_back(std::move(e.to));
  return out;
}

}  // namespace detail

inline std::vector<MoveEdge> castling_moves(const Word& w) {
  detail::require_geodesic(w);
  detail::EdgeCollector out(w);
  detail::castling_candidates(w, out);
  return std::move(out).take();
}

inline std::vector<MoveEdge> detowering_moves(const Word& w) {
  detail::require_geodesic(w);
  detail::EdgeCollector out(w);
  detail::detowering_candidates(w, out);
  return std::move(out).take();
}

inline std::vector<MoveEdge> clipping_moves(const Word& w) {
  detail::require_geodesic(w);
  detail::EdgeCollector out(w);
  detail::clipping_candidates(w, out);
  return std::move(out).take();
}

inline std::vector<MoveEdge> reflection_moves(const Word& w) {
  detail::require_geodesic(w);
  detail::EdgeCollector out(w);
  detail::reflection_candidates(w, out);
  return std::move(out).take();
}

inline std::vector<Word> castling_neighbors(const Word& w) {
  return detail::targets(castling_moves(w));
}
inline std::vector<Word> detowering_neighbors(const Word& w) {
  return detail::targets(detowering_moves(w));
}
inline std::vector<Word> clipping_neighbors(const Word& w) {
  return detail::targets(clipping_moves(w));
}
inline std::vector<Word> reflection_neighbors(const Word& w) {
  return detail::targets(reflection_moves(w));
}

// Union of all generators, one edge per target word; when several kinds
// reach the same target the first of castling, clipping, detowering,
// reflection is kept.
inline std::vector<MoveEdge> neighbors(const Word& w) {
  detail::require_geodesic(w);
  detail::EdgeCollector out(w);
  detail::castling_candidates(w, out);
  detail::clipping_candidates(w, out);
  detail::detowering_candidates(w, out);
  detail::reflection_candidates(w, out);
  return std::move(out).take();
}

inline constexpr std::size_t kDefaultOrbitCap = 100'000;

// Breadth-first closure under neighbors, sorted by formatted word.
inline std::vector<Word> orbit(const Word& w, std::size_t cap = kDefaultOrbitCap) {
  detail::require_geodesic(w);
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (MoveEdge& e : neighbors(u)) {
      if (seen.insert(e.to).second) {
        if (seen.size() > cap) {
          throw OrbitCapError("orbit of " + format_word(w) + " exceeds " + std::to_string(cap) +
                              " words");
        }
        queue.push_back(std::move(e.to));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  sort_by_format(out);
  return out;
}

struct Theorem2Report {
  Element element;
  std::size_t geodesic_count = 0;
  std::size_t orbit_size = 0;
  bool connected = false;
  bool contains_std_rep = false;
  std::vector<MoveEdge> edges;  // undirected, listed once with from < to
};

// connected iff the move orbit of std_rep(g) is the full geodesic set of g.
inline Theorem2Report check_theorem2(const BallIndex<CkModel>& ball, const Element& g,
                                     std::size_t geodesic_cap = kDefaultGeodesicCap,
                                     std::size_t orbit_cap = kDefaultOrbitCap) {
  Theorem2Report report;
  report.element = g;
  const std::vector<Word> geodesics = enumerate_geodesics(ball, g, geodesic_cap);
  const Word standard = std_rep(g);
  const std::vector<Word> reach = orbit(standard, orbit_cap);
  report.geodesic_count = geodesics.size();
  report.orbit_size = reach.size();
  report.connected = reach == geodesics;
  report.contains_std_rep = std::binary_search(geodesics.begin(), geodesics.end(), standard,
                                               format_less);
  for (const Word& u : reach) {
    const std::string fu = format_word(u);
    for (MoveEdge& e : neighbors(u)) {
      if (fu < format_word(e.to)) report.edges.push_back(std::move(e));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Young decomposition

struct RectanglePoint {
  std::int64_t x = 0;  // a-displacement
  std::int64_t y = 0;  // b-displacement

  friend bool operator==(const RectanglePoint&, const RectanglePoint&) = default;
};

struct Rectangle {
  RectanglePoint a, b, c, d;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// Corner table by the signs of (k, m). Sign cases take precedence; k = 0
// uses the (0, m) row; m = 0 with k != 0 falls in the m > 0 row.
inline Rectangle clipping_rectangle(const Element& g) {
  using namespace detail;
  const std::int64_t k = g.k, m = g.m, n = g.n;
  if (k != 0 && m >= 0) return {{n, add(k, m)}, {0, add(k, m)}, {0, neg(k)}, {n, neg(k)}};
  if (k < 0) return {{n, sub(m, k)}, {0, sub(m, k)}, {0, add(m, k)}, {n, add(m, k)}};
  if (k > 0) return {{n, m}, {0, m}, {0, add(k, m)}, {n, add(k, m)}};
  return {{n, 0}, {0, 0}, {0, m}, {n, m}};
}

// Weakly monotone run of column heights starting at a horizontal-edge index.
struct YoungDiagram {
  std::size_t start = 0;
  std::vector<std::int64_t> heights;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

// The path is compared with the standard representative edge by edge:
// `upper` collects columns where it runs above the standard path, `lower`
// where it runs below. Together with the element and the mirror flag this
// determines the word.
struct YoungDecomposition {
  Element element;
  Rectangle rectangle;
  bool mirrored = false;
  std::vector<YoungDiagram> upper;
  std::vector<YoungDiagram> lower;

  bool empty() const { return upper.empty() && lower.empty(); }

  friend bool operator==(const YoungDecomposition&, const YoungDecomposition&) = default;
};

namespace detail {

struct HorizontalEdge {
  std::int64_t from_x;
  int direction;
  std::int64_t level;
};

inline std::vector<HorizontalEdge> horizontal_edges(const Word& w) {
  const LatticePath path = lattice_path(w);
  std::vector<HorizontalEdge> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_a_axis(w[i])) out.push_back({path.points[i].x, sign(w[i]), path.points[i].y});
  }
  return out;
}

inline std::size_t expected_edge_count(const Element& g) {
  if (g.n > 0) return static_cast<std::size_t>(g.n);
  return g.k == 0 ? 0 : 2;
}

inline std::vector<std::int64_t> reference_levels(const Element& g) {
  std::vector<std::int64_t> out;
  for (const auto& e : horizontal_edges(std_rep(g))) out.push_back(e.level);
  return out;
}

inline std::vector<YoungDiagram> split_monotone(const std::vector<std::int64_t>& heights) {
  std::vector<YoungDiagram> out;
  int direction = 0;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    const std::int64_t h = heights[i];
    if (h == 0) {
      direction = 0;
      continue;
    }
    bool fresh = i == 0 || heights[i - 1] == 0;
    if (!fresh) {
      const std::int64_t prev = heights[i - 1];
      const int step = h > prev ? 1 : (h < prev ? -1 : 0);
      if (step != 0 && direction != 0 && step != direction) {
        fresh = true;
        direction = 0;
      } else if (step != 0) {
        direction = step;
      }
    }
    if (fresh) out.push_back({i, {}});
    out.back().heights.push_back(h);
  }
  return out;
}

inline bool is_subdiagram(const YoungDiagram& p, const YoungDiagram& q) {
  if (p.heights.size() > q.heights.size()) return false;
  auto sp = p.heights;
  auto sq = q.heights;
  std::sort(sp.rbegin(), sp.rend());
  std::sort(sq.rbegin(), sq.rend());
  for (std::size_t i = 0; i < sp.size(); ++i) {
    if (sp[i] > sq[i]) return false;
  }
  return true;
}

}  // namespace detail

inline YoungDecomposition young_decomposition(const Word& w) {
  detail::require_geodesic(w);
  const Element g = evaluate(w);
  if (!is_normalized(g)) {
    throw std::invalid_argument("young decomposition needs m, n >= 0; got " + to_string(g));
  }
  const auto edges = detail::horizontal_edges(w);
  if (edges.size() != detail::expected_edge_count(g)) {
    throw std::invalid_argument("unexpected path shape for " + format_word(w));
  }
  YoungDecomposition out;
  out.element = g;
  out.rectangle = clipping_rectangle(g);
  out.mirrored = !edges.empty() && edges.front().direction < 0;
  const auto ref = detail::reference_levels(g);
  std::vector<std::int64_t> above(edges.size(), 0), below(edges.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::int64_t diff = detail::sub(edges[i].level, ref[i]);
    (diff > 0 ? above : below)[i] = detail::abs(diff);
  }
  out.upper = detail::split_monotone(above);
  out.lower = detail::split_monotone(below);
  return out;
}

inline Word reconstruct_word(const YoungDecomposition& y) {
  using namespace detail;
  const Element& g = y.element;
  const auto ref = reference_levels(g);
  std::vector<std::int64_t> level = ref;
  for (const auto& d : y.upper) {
    for (std::size_t i = 0; i < d.heights.size(); ++i) level.at(d.start + i) += d.heights[i];
  }
  for (const auto& d : y.lower) {
    for (std::size_t i = 0; i < d.heights.size(); ++i) level.at(d.start + i) -= d.heights[i];
  }
  std::vector<Letter> out;
  std::int64_t x = 0, cur = 0;
  auto climb = [&](std::int64_t target) {
    append_power(out, Axis::b, sub(target, cur) * alternating(x));
    cur = target;
  };
  for (std::size_t i = 0; i < level.size(); ++i) {
    int direction = 1;
    if (g.n == 0) direction = (i == 0) == y.mirrored ? -1 : 1;
    climb(level[i]);
    out.push_back(direction > 0 ? Letter::a : Letter::a_inv);
    x += direction;
  }
  climb(g.m);
  return Word(std::move(out));
}

// Adjacent pairs in upper or lower where one diagram fits inside the other.
inline std::size_t nested_neighbor_count(const YoungDecomposition& y) {
  std::size_t count = 0;
  for (const auto* side : {&y.upper, &y.lower}) {
    for (std::size_t i = 1; i < side->size(); ++i) {
      const auto& p = (*side)[i - 1];
      const auto& q = (*side)[i];
      if (detail::is_subdiagram(p, q) || detail::is_subdiagram(q, p)) ++count;
    }
  }
  return count;
}

}  // namespace ckgeo

#endif  // CKGEO_MOVES_HPP_
