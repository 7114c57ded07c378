#include "nilalg/polynomial.hpp"

#include <algorithm>
#include <map>

namespace nilalg {

namespace {

void check_field(FieldSpec a, FieldSpec b) {
  if (a != b) throw FieldMismatch();
}

using Accumulator = std::map<Word, Scalar, DeglexGreater>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (!c.is_zero()) out.push_back(Term{w, std::move(c)});
  return out;
}

}  // namespace

Polynomial::Polynomial(FieldSpec field, std::vector<Term> terms) : field_(field) {
  Accumulator acc;
  for (auto& t : terms) {
    check_field(field, t.coeff.field());
    auto [it, inserted] = acc.try_emplace(std::move(t.word), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  terms_ = drain(acc);
}

Polynomial Polynomial::monomial(FieldSpec field, Word w, Scalar c) {
  check_field(field, c.field());
  Polynomial p(field);
  if (!c.is_zero()) p.terms_.push_back(Term{std::move(w), std::move(c)});
  return p;
}

Polynomial Polynomial::from_sorted(FieldSpec field, std::vector<Term> terms) {
  Polynomial p(field);
  p.terms_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.word.degree() == terms_.front().word.degree(); });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_field(field_, o.field_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && deglex_compare(a->word, b->word) > 0)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || deglex_compare(a->word, b->word) < 0) {
      merged.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back(Term{std::move(a->word), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  check_field(field_, c.field());
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_field(a.field_, b.field_);
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& ta : a)
    for (const auto& tb : b) prod.push_back(Term{ta.word * tb.word, ta.coeff * tb.coeff});
  return Polynomial(a.field_, std::move(prod));
}

Polynomial Polynomial::multiply(const Word& left, const Word& right) const {
  // Multiplying by words on both sides preserves deglex order of the terms.
  Polynomial r(field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{left * t.word * right, t.coeff});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return *this * leading_coeff().inverse();
}

Polynomial Polynomial::in_field(FieldSpec target) const {
  if (!field_.is_rational() && field_ != target) throw Error("can only map rational coefficients into another field");
  std::vector<Term> out;
  for (const auto& t : terms_)
    out.push_back(Term{t.word, field_.is_rational() ? Scalar(target, t.coeff.rational()) : t.coeff});
  return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string(const Alphabet& alphabet) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = false;
    if (field_.is_rational() && sgn(t.coeff.rational()) < 0) {
      negative = true;
      c.erase(0, 1);
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const bool unit = c == "1";
    if (!unit) out += c;
    if (!t.word.empty()) {
      if (!unit && !alphabet.single_character()) out += '*';
      out += t.word.to_string(alphabet);
    } else if (unit) {
      out += "1";
    }
  }
  return out;
}

Polynomial poly_op(const Polynomial& f, const Polynomial& g, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return f + g;
    case PolyOp::sub:
      return f - g;
    case PolyOp::mul:
      return f * g;
  }
  throw Error("unknown polynomial operation");
}

Polynomial poly_scale(const Polynomial& f, const Scalar& c) { return f * c; }

Polynomial apply_hom(const Polynomial& f, Hom hom, const Alphabet& alphabet) {
  std::vector<Term> out;
  for (const auto& t : f) out.push_back(Term{apply_hom(t.word, hom, alphabet), t.coeff});
  return Polynomial(f.field(), std::move(out));
}

}  // namespace nilalg
