#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilalg/groebner.hpp"

namespace nilalg {

/// dim R_q for q = 0 .. exact_through.
struct HilbertData {
  enum class Source { groebner, oracle };

  std::vector<std::uint64_t> coefficients;
  std::size_t exact_through = 0;
  Source source = Source::groebner;

  /// Index of the first zero coefficient, if any.
  std::optional<std::size_t> first_zero() const;
};

/// Number of words of each degree <= maxdeg over `letters` generators that
/// avoid every word of `forbidden` as a factor. Dynamic programming over the
/// Aho-Corasick automaton of the forbidden set.
std::vector<std::uint64_t> count_normal_words(std::span<const Word> forbidden, std::size_t letters,
                                              std::size_t maxdeg);

/// Hilbert coefficients through maxdeg from the leading words of `gb`.
/// Throws if maxdeg exceeds gb.complete_through.
HilbertData hilbert_series(const GroebnerBasis& gb, std::size_t maxdeg);

struct NilpotencyVerdict {
  bool nilpotent = false;
  /// Least k with R_k = 0 when nilpotent, otherwise the degree checked through.
  std::size_t degree = 0;

  std::string to_string() const;
};

NilpotencyVerdict nilpotency_index(const GroebnerBasis& gb);

/// dim R_d by exact rank of span{U r V} inside the degree-d free component.
/// Independent of the Groebner machinery. Throws if n^d exceeds `cap`.
std::uint64_t dim_oracle(const Presentation& p, std::size_t d, std::uint64_t cap = 250000);

/// Rank of the degree-d part of the relation ideal (the oracle's matrix).
std::uint64_t ideal_rank(const Presentation& p, std::size_t d, std::uint64_t cap = 250000);

/// Whether homogeneous `f` lies in span{U r V} of its degree, decided by
/// rank comparison.
bool oracle_ideal_member(const Presentation& p, const Polynomial& f, std::uint64_t cap = 250000);

struct GsReport {
  /// Coefficients of H(t) (1 - n t + d t^2) that are fully determined.
  std::vector<mpz_class> product;
  /// True when H is certified to be a polynomial, so every product
  /// coefficient is known.
  bool complete = false;
  bool pass = true;
};

/// Golod-Shafarevich check: product coefficient 0 >= 1 and the rest >= 0.
GsReport gs_check(const HilbertData& h, std::size_t generators, std::size_t relations);

/// a + b sqrt(r) with rational a, b.
struct QuadraticSurd {
  mpq_class rational = 0;
  mpq_class coefficient = 0;
  unsigned radicand = 0;

  double value() const;
  /// ceil(value * m), computed exactly.
  mpz_class ceil_times(const mpz_class& m) const;
  std::string to_string() const;
};

struct PhiThreshold {
  double value = 0;
  /// Known for k = 2, 3, 4, 5.
  std::optional<QuadraticSurd> exact;
};

/// 1 / (4 cos^2(pi / (k + 1))). Throws for k < 2.
PhiThreshold phi(int k);

/// "1 + 4t + 10t^2", zero terms omitted.
std::string render_series(std::span<const std::uint64_t> coefficients);
std::string render_series(std::span<const mpz_class> coefficients);

}  // namespace nilalg
