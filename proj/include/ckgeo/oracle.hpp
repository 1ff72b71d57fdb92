#ifndef CKGEO_ORACLE_HPP_
#define CKGEO_ORACLE_HPP_

// Brute-force ground truth: level-synchronous BFS over the Cayley graph of
// any GroupModel, exact distances, full geodesic enumeration, and audits of
// the dead-end, parity, last-letter and standard-language criteria.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "checked.hpp"
#include "element.hpp"
#include "geodesics.hpp"
#include "group_model.hpp"
#include "words.hpp"

namespace ckgeo {

class OutOfBallError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class GeodesicCapError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

inline std::string to_string(const KleinElement& s) {
  return "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
}

inline std::string to_string(const Z2Element& s) {
  return "(" + std::to_string(s.m) + "," + std::to_string(s.n) + ")";
}

inline constexpr std::size_t kDefaultMaxStates = 50'000'000;
inline constexpr std::size_t kDefaultGeodesicCap = 100'000;

template <GroupModel M>
class BallIndex;

template <GroupModel M>
BallIndex<M> build_ball(const M& model, int radius, std::size_t max_states = kDefaultMaxStates);

template <GroupModel M>
class BallIndex {
 public:
  using State = typename M::State;
  using Key = typename M::Key;

  BallIndex(M model, int radius) : model_(std::move(model)), radius_(radius) {}

  const M& model() const noexcept { return model_; }
  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return distance_.size(); }

  std::optional<int> distance(const State& s) const {
    auto it = distance_.find(model_.key(s));
    if (it == distance_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const State& s) const { return distance_.contains(model_.key(s)); }

  // States at exactly distance d, sorted by key.
  const std::vector<Key>& level(int d) const { return levels_.at(static_cast<std::size_t>(d)); }
  std::size_t level_count() const noexcept { return levels_.size(); }

  std::vector<std::size_t> frontier_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& lvl : levels_) out.push_back(lvl.size());
    return out;
  }

  friend bool operator==(const BallIndex& x, const BallIndex& y) {
    return x.radius_ == y.radius_ && x.levels_ == y.levels_;
  }

 private:
  template <GroupModel N>
  friend BallIndex<N> build_ball(const N& model, int radius, std::size_t max_states);

  M model_;
  int radius_;
  std::unordered_map<Key, int, typename M::KeyHash> distance_;
  std::vector<std::vector<Key>> levels_;
};

template <GroupModel M>
BallIndex<M> build_ball(const M& model, int radius, std::size_t max_states) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  BallIndex<M> ball(model, radius);
  const auto id = model.key(model.identity());
  ball.distance_.emplace(id, 0);
  ball.levels_.push_back({id});
  for (int d = 1; d <= radius; ++d) {
    std::vector<typename M::Key> next;
    for (const auto& key : ball.levels_.back()) {
      const auto s = M::from_key(key);
      for (Letter x : kAlphabet) {
        const auto nk = model.key(model.step(s, x));
        if (ball.distance_.emplace(nk, d).second) {
          next.push_back(nk);
          if (ball.distance_.size() > max_states) {
            std::string diag = "ball state budget " + std::to_string(max_states) +
                               " exceeded at level " + std::to_string(d) + "; level sizes:";
            for (const auto& lvl : ball.levels_) diag += " " + std::to_string(lvl.size());
            diag += " " + std::to_string(next.size()) + "+";
            throw ResourceError(diag);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    ball.levels_.push_back(std::move(next));
  }
  return ball;
}

template <GroupModel M>
int exact_length(const BallIndex<M>& ball, const typename M::State& s) {
  auto d = ball.distance(s);
  if (!d) {
    throw OutOfBallError("element " + to_string(s) + " lies outside the ball of radius " +
                         std::to_string(ball.radius()));
  }
  return *d;
}

inline bool format_less(const Word& u, const Word& v) {
  return format_word(u) < format_word(v);
}

inline void sort_by_format(std::vector<Word>& words) {
  std::vector<std::pair<std::string, Word>> keyed;
  keyed.reserve(words.size());
  for (auto& w : words) keyed.emplace_back(format_word(w), std::move(w));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  words.clear();
  for (auto& [_, w] : keyed) words.push_back(std::move(w));
}

// All geodesic words for s, found by walking down the distance gradient from
// s to the identity. Sorted by formatted word.
template <GroupModel M>
std::vector<Word> enumerate_geodesics(const BallIndex<M>& ball, const typename M::State& s,
                                      std::size_t cap = kDefaultGeodesicCap) {
  const int d = exact_length(ball, s);
  const M& model = ball.model();
  std::vector<Word> out;
  std::vector<Letter> suffix(static_cast<std::size_t>(d));
  auto descend = [&](auto&& self, const typename M::State& h, int dist) -> void {
    if (dist == 0) {
      out.emplace_back(suffix);
      if (out.size() > cap) {
        throw GeodesicCapError("more than " + std::to_string(cap) + " geodesics for " +
                               to_string(s));
      }
      return;
    }
    for (Letter x : kAlphabet) {
      const auto pred = model.step(h, inverse(x));
      auto pd = ball.distance(pred);
      if (pd && *pd == dist - 1) {
        suffix[static_cast<std::size_t>(dist - 1)] = x;
        self(self, pred, dist - 1);
      }
    }
  };
  descend(descend, s, d);
  sort_by_format(out);
  return out;
}

// Set of last letters over all geodesics of s, computed by enumeration.
template <GroupModel M>
std::vector<Letter> geodesic_last_letters(const BallIndex<M>& ball, const typename M::State& s,
                                          std::size_t cap = kDefaultGeodesicCap) {
  bool seen[4] = {false, false, false, false};
  for (const Word& w : enumerate_geodesics(ball, s, cap)) {
    if (!w.empty()) seen[static_cast<std::size_t>(w.back())] = true;
  }
  std::vector<Letter> out;
  for (Letter x : kAlphabet) {
    if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

struct AuditReport {
  std::string check;
  std::string model;
  int radius = 0;
  std::size_t words_checked = 0;
  std::vector<std::string> geodesic_failures;
  std::vector<std::string> prefix_failures;
  std::vector<std::string> dead_end_candidates;
  std::vector<std::string> parity_failures;
  std::vector<std::string> dec_violations;

  bool pass() const {
    return geodesic_failures.empty() && prefix_failures.empty() && dead_end_candidates.empty() &&
           parity_failures.empty() && dec_violations.empty();
  }
  std::string verdict() const { return pass() ? "pass" : "fail"; }
};

// Every state with distance <= radius - 1 must have a letter that increases
// distance by one. Also checks that every step flips distance parity, and
// compares the dead-end status with the last-letter criterion on every
// dec_stride-th interior state (0 disables the comparison).
template <GroupModel M>
AuditReport audit_dead_ends(const BallIndex<M>& ball, std::size_t dec_stride = 1,
                            std::size_t geodesic_cap = kDefaultGeodesicCap) {
  if (ball.radius() < 2) throw std::invalid_argument("dead-end audit needs radius >= 2");
  AuditReport report;
  report.check = "dead_ends";
  report.model = std::string(M::name());
  report.radius = ball.radius();
  const M& model = ball.model();
  std::size_t index = 0;
  for (int d = 0; d < ball.radius(); ++d) {
    for (const auto& key : ball.level(d)) {
      const auto s = M::from_key(key);
      ++report.words_checked;
      bool extends = false;
      int up = 0;
      for (Letter x : kAlphabet) {
        const int nd = *ball.distance(model.step(s, x));
        if (nd == d + 1) {
          extends = true;
          ++up;
        } else if (nd != d - 1) {
          report.parity_failures.push_back(to_string(s) + " * " + to_string(x));
        }
      }
      if (!extends) report.dead_end_candidates.push_back(to_string(s));
      if (dec_stride != 0 && index++ % dec_stride == 0) {
        const bool dead = up == 0;
        const bool all_last = geodesic_last_letters(ball, s, geodesic_cap).size() == 4;
        if (dead != all_last) report.dec_violations.push_back(to_string(s));
      }
    }
  }
  return report;
}

// Standard-language interface: words of length <= max_length.
template <class L>
concept StandardLanguage = requires(const L& lang, int max_length) {
  { lang.enumerate(max_length) } -> std::same_as<std::vector<Word>>;
  { lang.name() } -> std::convertible_to<std::string>;
};

// std_rep over every element of cK with length <= max_length.
struct CkStandardLanguage {
  std::string name() const { return "ck-standard"; }
  std::vector<Word> enumerate(int max_length) const {
    std::vector<Word> out;
    const std::int64_t r = max_length;
    for (std::int64_t k = -r; k <= r; ++k) {
      for (std::int64_t m = -r; m <= r; ++m) {
        for (std::int64_t n = -r; n <= r; ++n) {
          const Element g{k, m, n};
          if (length(g) <= r) out.push_back(std_rep(g));
        }
      }
    }
    return out;
  }
};

// b^m a^n for |m| + |n| <= max_length.
struct Z2StandardLanguage {
  std::string name() const { return "z2-standard"; }
  std::vector<Word> enumerate(int max_length) const {
    std::vector<Word> out;
    for (int m = -max_length; m <= max_length; ++m) {
      const int rest = max_length - (m < 0 ? -m : m);
      for (int n = -rest; n <= rest; ++n) {
        std::vector<Letter> w;
        detail::append_power(w, Axis::b, m);
        detail::append_power(w, Axis::a, n);
        out.emplace_back(std::move(w));
      }
    }
    return out;
  }
};

// Negative control: the wrapped language with every word cut to at most
// max_length / 2 letters.
template <StandardLanguage L>
struct TruncatedLanguage {
  L inner;
  std::string name() const { return inner.name() + "-truncated"; }
  std::vector<Word> enumerate(int max_length) const {
    const std::size_t cap = static_cast<std::size_t>(max_length / 2);
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> out;
    for (const Word& w : inner.enumerate(max_length)) {
      Word cut = w.size() > cap ? w.prefix(cap) : w;
      if (seen.insert(cut).second) out.push_back(std::move(cut));
    }
    return out;
  }
};

// Checks within the ball that (1) every language word is geodesic, (2) every
// word shorter than the radius is a proper prefix of a longer language word,
// and (3) every interior state is certified non-dead-end by such a word, with
// the certifying next letter confirmed against the ball.
template <GroupModel M, StandardLanguage L>
AuditReport check_standard_language(const BallIndex<M>& ball, const L& lang) {
  AuditReport report;
  report.check = "standard_language:" + lang.name();
  report.model = std::string(M::name());
  report.radius = ball.radius();
  const M& model = ball.model();
  std::vector<Word> words = lang.enumerate(ball.radius());
  sort_by_format(words);
  report.words_checked = words.size();

  // proper prefix -> first letter that follows it in some language word
  std::unordered_map<std::string, Letter> next_letter;
  for (const Word& w : words) {
    const std::string s = w.compact();
    for (std::size_t i = 0; i < s.size(); ++i) next_letter.try_emplace(s.substr(0, i), w[i]);
  }

  std::unordered_set<typename M::Key, typename M::KeyHash> certified;
  for (const Word& w : words) {
    const auto s = evaluate_in(model, w);
    const auto d = ball.distance(s);
    const bool geodesic = w.is_reduced() && d && *d == static_cast<int>(w.size());
    if (!geodesic) report.geodesic_failures.push_back(format_word(w));
    if (static_cast<int>(w.size()) >= ball.radius()) continue;
    auto it = next_letter.find(w.compact());
    if (it == next_letter.end()) {
      report.prefix_failures.push_back(format_word(w));
      continue;
    }
    if (!geodesic) continue;
    const auto nd = ball.distance(model.step(s, it->second));
    if (!nd || *nd != *d + 1) {
      report.dead_end_candidates.push_back(to_string(s) + " via " + format_word(w));
      continue;
    }
    certified.insert(model.key(s));
  }
  for (int d = 0; d < ball.radius(); ++d) {
    for (const auto& key : ball.level(d)) {
      if (!certified.contains(key)) {
        report.dead_end_candidates.push_back(to_string(M::from_key(key)) + " uncertified");
      }
    }
  }
  return report;
}

struct LastLetterReport {
  int radius = 0;
  std::size_t elements_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

// For interior states g and letters s: g s is one step further out iff no
// enumerated geodesic of g ends with s^-1. budget caps the number of states
// (0 = every interior state).
template <GroupModel M>
LastLetterReport check_last_letter(const BallIndex<M>& ball, std::size_t budget = 0,
                                   std::size_t geodesic_cap = kDefaultGeodesicCap) {
  LastLetterReport report;
  report.radius = ball.radius();
  const M& model = ball.model();
  for (int d = 0; d < ball.radius(); ++d) {
    for (const auto& key : ball.level(d)) {
      if (budget != 0 && report.elements_checked >= budget) return report;
      const auto s = M::from_key(key);
      ++report.elements_checked;
      const std::vector<Letter> last = geodesic_last_letters(ball, s, geodesic_cap);
      for (Letter x : kAlphabet) {
        ++report.pairs_checked;
        const bool extends = *ball.distance(model.step(s, x)) == d + 1;
        const bool ends_with_inverse =
            std::find(last.begin(), last.end(), inverse(x)) != last.end();
        if (extends == ends_with_inverse) {
          report.violations.push_back(to_string(s) + " * " + to_string(x));
        }
      }
    }
  }
  return report;
}

struct ContinuationReport {
  int radius = 0;
  std::size_t elements_checked = 0;
  std::vector<std::string> violations;
  // k = 0 has no named letters; record how often each letter extends.
  std::size_t zero_k_elements = 0;
  std::array<std::size_t, 4> zero_k_extensions{};

  bool pass() const { return violations.empty(); }
};

// For every normalized interior element with k != 0, the letters named by
// its region case must increase the ball distance by one.
inline ContinuationReport check_continuation_letters(const BallIndex<CkModel>& ball) {
  ContinuationReport report;
  report.radius = ball.radius();
  for (int d = 0; d < ball.radius(); ++d) {
    for (const auto& key : ball.level(d)) {
      const Element g = CkModel::from_key(key);
      if (!is_normalized(g)) continue;
      const RegionCase region = classify_region(g);
      if (region == RegionCase::zero_k) {
        ++report.zero_k_elements;
        for (Letter x : kAlphabet) {
          if (*ball.distance(step(g, x)) == d + 1) {
            ++report.zero_k_extensions[static_cast<std::size_t>(x)];
          }
        }
        continue;
      }
      ++report.elements_checked;
      for (Letter x : region_letters(region)) {
        if (*ball.distance(step(g, x)) != d + 1) {
          report.violations.push_back(to_string(g) + " " + to_string(region) + " " +
                                      to_string(x));
        }
      }
    }
  }
  return report;
}

enum class ExportFormat { csv, jsonl };

namespace detail {

inline std::vector<std::int64_t> state_fields(const Element& g) { return {g.k, g.m, g.n}; }
inline std::vector<std::int64_t> state_fields(const KleinElement& s) { return {s.m, s.n}; }
inline std::vector<std::int64_t> state_fields(const Z2Element& s) { return {s.m, s.n}; }

inline std::vector<std::string> state_field_names(const Element&) { return {"k", "m", "n"}; }
inline std::vector<std::string> state_field_names(const KleinElement&) { return {"m", "n"}; }
inline std::vector<std::string> state_field_names(const Z2Element&) { return {"m", "n"}; }

}  // namespace detail

// Rows in (distance, key) order: CSV "k,m,n,length" for cK and "m,n,length"
// for the two-coordinate models, or one JSON object per line.
template <GroupModel M>
void export_ball(const BallIndex<M>& ball, ExportFormat format, std::ostream& out) {
  const auto names = detail::state_field_names(ball.model().identity());
  if (format == ExportFormat::csv) {
    for (const auto& name : names) out << name << ',';
    out << "length\n";
  }
  for (int d = 0; d <= ball.radius(); ++d) {
    for (const auto& key : ball.level(d)) {
      const auto fields = detail::state_fields(M::from_key(key));
      if (format == ExportFormat::csv) {
        for (std::int64_t v : fields) out << v << ',';
        out << d << '\n';
      } else {
        out << '{';
        for (std::size_t i = 0; i < fields.size(); ++i) {
          out << '"' << names[i] << "\":" << fields[i] << ',';
        }
        out << "\"length\":" << d << "}\n";
      }
    }
  }
}

}  // namespace ckgeo

#endif  // CKGEO_ORACLE_HPP_
