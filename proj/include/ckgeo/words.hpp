#ifndef CKGEO_WORDS_HPP_
#define CKGEO_WORDS_HPP_

// Free-group words over the alphabet {a, a^-1, b, b^-1}.

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ckgeo {

enum class Letter : std::uint8_t { a = 0, a_inv = 1, b = 2, b_inv = 3 };

inline constexpr std::array<Letter, 4> kAlphabet = {Letter::a, Letter::a_inv,
                                                    Letter::b, Letter::b_inv};

enum class Axis : std::uint8_t { a, b };

constexpr Letter inverse(Letter x) noexcept {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

constexpr Axis base(Letter x) noexcept {
  return (x == Letter::a || x == Letter::a_inv) ? Axis::a : Axis::b;
}

constexpr bool is_a_axis(Letter x) noexcept { return base(x) == Axis::a; }

// +1 for a and b, -1 for their inverses.
constexpr int sign(Letter x) noexcept {
  return (x == Letter::a || x == Letter::b) ? 1 : -1;
}

constexpr Letter make_letter(Axis axis, int s) noexcept {
  if (axis == Axis::a) return s > 0 ? Letter::a : Letter::a_inv;
  return s > 0 ? Letter::b : Letter::b_inv;
}

// Compact single-character spelling: a, A, b, B.
constexpr char to_char(Letter x) noexcept {
  constexpr char kChars[] = {'a', 'A', 'b', 'B'};
  return kChars[static_cast<std::uint8_t>(x)];
}

// Long spelling used in CLI output: a, a^-1, b, b^-1.
inline std::string to_string(Letter x) {
  switch (x) {
    case Letter::a:
      return "a";
    case Letter::a_inv:
      return "a^-1";
    case Letter::b:
      return "b";
    case Letter::b_inv:
      return "b^-1";
  }
  return "?";
}

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  // 1-based character position of the offending input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter x) { letters_.push_back(x); }

  // True when no adjacent pair x x^-1 occurs.
  bool is_reduced() const noexcept {
    for (std::size_t i = 1; i < letters_.size(); ++i) {
      if (letters_[i] == inverse(letters_[i - 1])) return false;
    }
    return true;
  }

  Word prefix(std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin(),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

  // Compact a/A/b/B spelling; handy as a hash key and for debugging.
  std::string compact() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) s.push_back(to_char(x));
    return s;
  }

  friend Word operator+(const Word& u, const Word& v) {
    std::vector<Letter> out = u.letters_;
    out.insert(out.end(), v.letters_.begin(), v.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// A maximal run of one letter: (axis, signed exponent).
struct Syllable {
  Axis axis;
  std::int64_t exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

inline std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> out;
  for (Letter x : w) {
    if (!out.empty() && out.back().axis == base(x) &&
        (out.back().exponent > 0) == (sign(x) > 0)) {
      out.back().exponent += sign(x);
    } else {
      out.push_back({base(x), sign(x)});
    }
  }
  return out;
}

inline constexpr std::int64_t kMaxExponent = 1'000'000;

// Grammar: tokens a, A, b, B each optionally followed by ^<signed int>;
// whitespace between tokens is ignored. Uppercase means inverse.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (i < n) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    Letter x;
    switch (c) {
      case 'a':
        x = Letter::a;
        break;
      case 'A':
        x = Letter::a_inv;
        break;
      case 'b':
        x = Letter::b;
        break;
      case 'B':
        x = Letter::b_inv;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i + 1);
    }
    ++i;
    std::int64_t exponent = 1;
    if (i < n && text[i] == '^') {
      const std::size_t caret = i;
      ++i;
      bool negative = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed exponent", caret + 1);
      }
      std::int64_t magnitude = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        magnitude = magnitude * 10 + (text[i] - '0');
        if (magnitude > kMaxExponent) {
          throw ParseError("exponent magnitude exceeds 10^6", caret + 1);
        }
        ++i;
      }
      exponent = negative ? -magnitude : magnitude;
    }
    if (exponent < 0) {
      x = inverse(x);
      exponent = -exponent;
    }
    out.insert(out.end(), static_cast<std::size_t>(exponent), x);
  }
  return Word(std::move(out));
}

inline Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

enum class LetterMap : std::uint8_t {
  flip_a,     // a -> a^-1, b -> b
  flip_both,  // a -> a^-1, b -> b^-1
};

constexpr Letter apply_letter_map(LetterMap map, Letter x) noexcept {
  if (is_a_axis(x) || map == LetterMap::flip_both) return inverse(x);
  return x;
}

inline Word apply_letter_map(LetterMap map, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(apply_letter_map(map, x));
  return Word(std::move(out));
}

// Syllable form, e.g. "b^3 a b^2 a^3"; the empty word formats as "".
inline std::string format_word(const Word& w) {
  std::string out;
  for (const Syllable& s : syllables(w)) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(s.axis == Axis::a ? 'a' : 'b');
    if (s.exponent != 1) {
      out.push_back('^');
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

inline std::vector<Word> cyclic_shifts(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  const auto& xs = w.letters();
  for (std::size_t r = 0; r < xs.size(); ++r) {
    std::vector<Letter> rotated(xs.begin() + static_cast<std::ptrdiff_t>(r), xs.end());
    rotated.insert(rotated.end(), xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(r));
    out.push_back(free_reduce(Word(std::move(rotated))));
  }
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= static_cast<std::size_t>(x) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace ckgeo

#endif  // CKGEO_WORDS_HPP_
