#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/scalar.hpp"
#include "nilalg/word.hpp"

namespace nilalg {

struct Term {
  Word word;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse element of the free algebra. Terms are stored leading-term-first
/// (deglex descending) with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(FieldSpec field) : field_(field) {}
  /// Sorts, merges equal words and drops zeros.
  Polynomial(FieldSpec field, std::vector<Term> terms);
  static Polynomial monomial(FieldSpec field, Word w, Scalar c);
  static Polynomial monomial(FieldSpec field, Word w) { return monomial(field, std::move(w), Scalar::one(field)); }
  /// Trusts that `terms` are already sorted descending, distinct and nonzero.
  static Polynomial from_sorted(FieldSpec field, std::vector<Term> terms);

  FieldSpec field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  const Term& leading_term() const;
  const Word& leading_word() const { return leading_term().word; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  /// Degree of the leading word; 0 for the zero polynomial.
  std::size_t degree() const { return is_zero() ? 0 : leading_word().degree(); }
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  /// left * this * right.
  Polynomial multiply(const Word& left, const Word& right) const;

  /// Scales so that the leading coefficient is 1. Zero stays zero.
  Polynomial monic() const;

  /// Same coefficients mapped into another field (integers/rationals only).
  Polynomial in_field(FieldSpec target) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Renders in the presentation expression grammar, e.g. "cb - bc + aa".
  std::string to_string(const Alphabet& alphabet) const;

 private:
  FieldSpec field_;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };
Polynomial poly_op(const Polynomial& f, const Polynomial& g, PolyOp op);
Polynomial poly_scale(const Polynomial& f, const Scalar& c);

/// Termwise image under one of the bi-indexed homomorphisms.
Polynomial apply_hom(const Polynomial& f, Hom hom, const Alphabet& alphabet);

}  // namespace nilalg
