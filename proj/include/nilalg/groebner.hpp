#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilalg/presentation.hpp"

namespace nilalg {

/// Reduced, monic, degree-truncated Groebner basis of a graded two-sided ideal.
struct GroebnerBasis {
  FieldSpec field;
  Alphabet alphabet;
  /// Ascending by leading word (hence by degree).
  std::vector<Polynomial> elements;
  /// All obstructions of degree <= complete_through have been resolved.
  std::size_t complete_through = 0;

  std::vector<Word> leading_words() const;
};

struct CompletionStats {
  std::size_t obstructions = 0;
  std::size_t zero_reductions = 0;
};

/// An ambiguity between two leading words.
///   overlap:   lw(left) = A B, lw(right) = B C with A, B, C nonempty;
///              the ambiguity word is A B C and lw(right) starts at `offset`.
///   inclusion: lw(left) = U lw(right) V with |U| = offset.
struct Obstruction {
  enum class Kind { overlap, inclusion };
  Kind kind = Kind::overlap;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t offset = 0;
  Word ambiguity;

  std::size_t degree() const { return ambiguity.degree(); }
  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Leading-word lookup for subword reduction.
class LeadingWordIndex {
 public:
  void insert(const Word& lw, std::uint32_t id);

  struct Match {
    std::uint32_t id;
    std::size_t position;
  };
  /// Some occurrence of an indexed leading word inside `w`, if any.
  std::optional<Match> find_in(const Word& w) const;
  bool empty() const { return table_.empty(); }

 private:
  std::unordered_map<std::uint64_t, std::vector<std::pair<Word, std::uint32_t>>> table_;
  std::vector<std::size_t> lengths_;
};

/// Rewrites by a set of monic polynomials indexed by their leading words.
class Reducer {
 public:
  explicit Reducer(FieldSpec field) : field_(field) {}

  /// `g` must be monic. Returns its id.
  std::uint32_t add(Polynomial g);
  void replace(std::uint32_t id, Polynomial g);
  const Polynomial& element(std::uint32_t id) const { return elements_.at(id); }
  std::size_t size() const { return elements_.size(); }

  /// Normal form: no word of the result contains an indexed leading word.
  /// The greatest reducible word is rewritten first.
  Polynomial reduce(const Polynomial& f) const;
  /// Keeps the leading term, reduces the rest.
  Polynomial reduce_tail(const Polynomial& f) const;

 private:
  FieldSpec field_;
  std::vector<Polynomial> elements_;
  LeadingWordIndex index_;
};

/// Normal form of `f` modulo monic `basis`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Every overlap (including self-overlaps) and inclusion among the leading
/// words of `basis` with ambiguity degree <= maxdeg, each reported once.
std::vector<Obstruction> find_obstructions(std::span<const Polynomial> basis, std::size_t maxdeg);

/// Difference of the two rewrites of the ambiguity word; elements monic.
Polynomial s_polynomial(const Obstruction& o, std::span<const Polynomial> basis);

struct BuchbergerOptions {
  /// When set, obstructions within one degree are processed in a seeded
  /// random order instead of the canonical one. The result is the same.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Truncated completion: resolves every obstruction of degree <= maxdeg.
GroebnerBasis buchberger(const Presentation& p, std::size_t maxdeg, const BuchbergerOptions& options = {},
                         CompletionStats* stats = nullptr);

struct ConfluenceReport {
  bool reduced = true;
  bool confluent = true;
  std::size_t obstructions_checked = 0;
  std::vector<std::string> problems;

  bool ok() const { return reduced && confluent; }
};

/// Exhaustive post-check: monic, interreduced, and every S-polynomial of
/// degree <= maxdeg reduces to zero.
ConfluenceReport certify(std::span<const Polynomial> elements, std::size_t maxdeg);

/// Normal form of every relation of `p` modulo `gb` is zero.
bool contains_relations(const GroebnerBasis& gb, const Presentation& p);

/// Integer-normalized form of a characteristic-0 basis.
struct IntegerBasis {
  Alphabet alphabet;
  /// Rational polynomials with content-free integer coefficients and a
  /// positive leading coefficient.
  std::vector<Polynomial> elements;
  std::vector<mpz_class> leading_coefficients;
  /// Every leading coefficient is a power of two.
  bool leading_powers_of_two = true;
  std::size_t complete_through = 0;
};

bool is_power_of_two(const mpz_class& v);

IntegerBasis integerize(const GroebnerBasis& gb);

struct TransferResult {
  GroebnerBasis basis;
  /// The reduced images form a reduced Groebner basis through maxdeg and,
  /// when a source presentation was given, generate its ideal over GF(p).
  bool valid = false;
  bool same_leading_words = false;
  ConfluenceReport report;
  /// Set only when checked against a source presentation. Confluence alone
  /// does not exclude the images generating a strictly larger ideal.
  std::optional<bool> ideal_matches;
};

/// Reduces an integer basis modulo p and verifies the image. Throws if a
/// leading coefficient vanishes modulo p.
TransferResult transfer_mod_p(const IntegerBasis& gb, std::uint64_t p, std::size_t maxdeg);

/// As above, and also checks both inclusions against the ideal of `source`
/// over GF(p) through maxdeg.
TransferResult transfer_mod_p(const IntegerBasis& gb, std::uint64_t p, std::size_t maxdeg,
                              const Presentation& source);

/// Basis export: a header with field, order and completeness, then one
/// `g<i> = <expression>` line per element.
std::string export_basis(const GroebnerBasis& gb);

}  // namespace nilalg
