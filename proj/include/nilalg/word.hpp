#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilalg/error.hpp"

namespace nilalg {

/// Index of a generator in its alphabet; alphabet order is the monomial order.
using Letter = std::uint16_t;

enum class Family : std::uint8_t { plain, x, y };

/// A generator. Indexed generators x_{j,s} carry family X or Y and copy s;
/// their printed name is "base.copy".
struct Generator {
  std::string base;
  Family family = Family::plain;
  std::uint32_t copy = 1;

  std::string name() const;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator list. Declaration order is the ascending letter order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators);
  static Alphabet plain(std::span<const std::string> names);
  static Alphabet plain(std::initializer_list<std::string_view> names);

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](Letter l) const { return generators_.at(l); }
  const std::vector<Generator>& generators() const { return generators_; }
  std::vector<std::string> names() const;

  std::optional<Letter> find(std::string_view name) const;
  Letter letter(std::string_view name) const;
  std::optional<Letter> find(Family family, std::string_view base, std::uint32_t copy) const;

  /// True when every generator name is a single character, so words may be
  /// written by juxtaposition.
  bool single_character() const { return single_character_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Generator> generators_;
  std::unordered_map<std::string, Letter> by_name_;
  bool single_character_ = true;
};

/// A monomial of the free algebra. The empty word is the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::span<const Letter>(letters_).subspan(pos, len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(degree() - len, len); }

  /// First position at which `w` occurs as a factor, if any.
  std::optional<std::size_t> find(const Word& w) const;
  bool contains(const Word& w) const { return find(w).has_value(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& o) {
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<Letter> letters_;
};

/// Degree-lexicographic comparison on letter indices.
std::strong_ordering deglex_compare(const Word& u, const Word& v);

/// Same comparison, validating that every letter belongs to `order`.
std::strong_ordering deglex_cmp(const Word& u, const Word& v, const Alphabet& order);

struct DeglexLess {
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v) < 0; }
};
struct DeglexGreater {
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v) > 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ w.degree());
  }
};

// Homomorphisms of the bi-indexed free algebra.
//   S_x keeps X letters, S_y keeps Y letters, Phi sends every copy to copy 1.
enum class Hom { s_x, s_y, phi };

/// Image of `w` under `hom`, as a word over the same alphabet. Throws on
/// plain letters, or when Phi's target letter is missing from the alphabet.
Word apply_hom(const Word& w, Hom hom, const Alphabet& alphabet);

/// Class of a word in the direct-sum decomposition by (degree, X-degree,
/// X copy indices in order, Y copy indices in order).
struct Signature {
  std::size_t n = 0;
  std::size_t n_x = 0;
  std::vector<std::uint32_t> s;
  std::vector<std::uint32_t> t;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature_of(const Word& w, const Alphabet& alphabet);

}  // namespace nilalg
