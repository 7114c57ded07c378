#include "nilalg/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace nilalg {

std::optional<std::size_t> HilbertData::first_zero() const {
  for (std::size_t q = 0; q < coefficients.size(); ++q)
    if (coefficients[q] == 0) return q;
  return std::nullopt;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("Hilbert coefficient overflows 64 bits");
  return r;
}

// Aho-Corasick automaton with dense transitions; dead states contain a
// forbidden factor.
struct FactorAutomaton {
  std::size_t letters;
  std::vector<std::uint32_t> next;
  std::vector<bool> dead;

  FactorAutomaton(std::span<const Word> forbidden, std::size_t letter_count) : letters(letter_count) {
    constexpr std::uint32_t kNone = ~0u;
    next.assign(letters, kNone);
    dead.assign(1, false);
    for (const Word& w : forbidden) {
      std::uint32_t s = 0;
      for (Letter l : w) {
        if (l >= letters) throw Error("forbidden word uses a letter outside the alphabet");
        if (next[s * letters + l] == kNone) {
          next[s * letters + l] = static_cast<std::uint32_t>(dead.size());
          dead.push_back(false);
          next.resize(dead.size() * letters, kNone);
        }
        s = next[s * letters + l];
      }
      dead[s] = true;
    }
    std::vector<std::uint32_t> fail(dead.size(), 0);
    std::deque<std::uint32_t> queue;
    for (std::size_t l = 0; l < letters; ++l) {
      std::uint32_t& t = next[l];
      if (t == kNone) {
        t = 0;
      } else {
        fail[t] = 0;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      const std::uint32_t s = queue.front();
      queue.pop_front();
      if (dead[fail[s]]) dead[s] = true;
      for (std::size_t l = 0; l < letters; ++l) {
        std::uint32_t& t = next[s * letters + l];
        const std::uint32_t via_fail = next[fail[s] * letters + l];
        if (t == kNone) {
          t = via_fail;
        } else {
          fail[t] = via_fail;
          queue.push_back(t);
        }
      }
    }
  }
};

}  // namespace

std::vector<std::uint64_t> count_normal_words(std::span<const Word> forbidden, std::size_t letters,
                                              std::size_t maxdeg) {
  for (const Word& w : forbidden)
    if (w.empty()) return std::vector<std::uint64_t>(maxdeg + 1, 0);
  if (letters == 0) {
    std::vector<std::uint64_t> out(maxdeg + 1, 0);
    out[0] = 1;
    return out;
  }
  const FactorAutomaton automaton(forbidden, letters);
  const std::size_t states = automaton.dead.size();
  std::vector<std::uint64_t> current(states, 0), following(states, 0);
  current[0] = 1;
  std::vector<std::uint64_t> out;
  for (std::size_t q = 0; q <= maxdeg; ++q) {
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < states; ++s) total = checked_add(total, current[s]);
    out.push_back(total);
    if (q == maxdeg) break;
    std::fill(following.begin(), following.end(), 0);
    for (std::size_t s = 0; s < states; ++s) {
      if (current[s] == 0) continue;
      for (std::size_t l = 0; l < letters; ++l) {
        const std::uint32_t t = automaton.next[s * letters + l];
        if (!automaton.dead[t]) following[t] = checked_add(following[t], current[s]);
      }
    }
    std::swap(current, following);
  }
  return out;
}

HilbertData hilbert_series(const GroebnerBasis& gb, std::size_t maxdeg) {
  if (maxdeg > gb.complete_through)
    throw Error("requested degree " + std::to_string(maxdeg) + " exceeds the basis completeness degree " +
                std::to_string(gb.complete_through));
  std::vector<Word> lws;
  for (const auto& g : gb.elements)
    if (g.degree() <= maxdeg) lws.push_back(g.leading_word());
  HilbertData h;
  h.coefficients = count_normal_words(lws, gb.alphabet.size(), maxdeg);
  h.exact_through = maxdeg;
  h.source = HilbertData::Source::groebner;
  return h;
}

std::string NilpotencyVerdict::to_string() const {
  return nilpotent ? "nilpotent(" + std::to_string(degree) + ")"
                   : "not-nilpotent-within(" + std::to_string(degree) + ")";
}

NilpotencyVerdict nilpotency_index(const GroebnerBasis& gb) {
  const HilbertData h = hilbert_series(gb, gb.complete_through);
  NilpotencyVerdict v;
  if (auto k = h.first_zero()) {
    for (std::size_t m = *k; m < h.coefficients.size(); ++m)
      if (h.coefficients[m] != 0) throw Error("graded component reappears after vanishing; basis is inconsistent");
    v.nilpotent = true;
    v.degree = *k;
  } else {
    v.degree = gb.complete_through;
  }
  return v;
}

namespace {

// Incremental row echelon form over the presentation's field. Rational rows
// are kept as content-free integer vectors (fraction-free elimination).
class Eliminator {
 public:
  explicit Eliminator(FieldSpec field) : field_(field) {}

  // Returns true when the row was independent of the rows seen so far.
  bool insert(std::vector<std::pair<std::uint64_t, Scalar>> row) {
    if (field_.is_rational()) {
      std::vector<std::pair<std::uint64_t, mpz_class>> ints;
      std::vector<mpq_class> qs;
      for (auto& [c, v] : row) qs.push_back(v.rational());
      if (qs.empty()) return false;
      bool nonzero = std::any_of(qs.begin(), qs.end(), [](const mpq_class& q) { return sgn(q) != 0; });
      if (!nonzero) return false;
      const auto normalized = integer_normalize(qs);
      for (std::size_t i = 0; i < row.size(); ++i)
        if (sgn(normalized[i]) != 0) ints.emplace_back(row[i].first, normalized[i]);
      return insert_integer(std::move(ints));
    }
    std::vector<std::pair<std::uint64_t, std::uint32_t>> mods;
    for (auto& [c, v] : row)
      if (v.residue() != 0) mods.emplace_back(c, v.residue());
    return insert_modular(std::move(mods));
  }

  std::uint64_t rank() const { return rank_; }

 private:
  template <typename T>
  static void sort_row(std::vector<std::pair<std::uint64_t, T>>& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  bool insert_integer(std::vector<std::pair<std::uint64_t, mpz_class>> row) {
    sort_row(row);
    while (!row.empty()) {
      auto it = int_pivots_.find(row.front().first);
      if (it == int_pivots_.end()) break;
      const auto& pivot = it->second;
      const mpz_class a = pivot.front().second;
      const mpz_class b = row.front().second;
      std::vector<std::pair<std::uint64_t, mpz_class>> merged;
      auto x = row.begin();
      auto y = pivot.begin();
      while (x != row.end() || y != pivot.end()) {
        if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
          merged.emplace_back(x->first, a * x->second);
          ++x;
        } else if (x == row.end() || y->first < x->first) {
          merged.emplace_back(y->first, -b * y->second);
          ++y;
        } else {
          mpz_class v = a * x->second - b * y->second;
          if (sgn(v) != 0) merged.emplace_back(x->first, std::move(v));
          ++x;
          ++y;
        }
      }
      mpz_class content = 0;
      for (auto& [c, v] : merged) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      if (sgn(content) != 0)
        for (auto& [c, v] : merged) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
      row = std::move(merged);
    }
    if (row.empty()) return false;
    const std::uint64_t lead = row.front().first;
    int_pivots_.emplace(lead, std::move(row));
    ++rank_;
    return true;
  }

  bool insert_modular(std::vector<std::pair<std::uint64_t, std::uint32_t>> row) {
    const std::uint64_t p = field_.characteristic();
    sort_row(row);
    while (!row.empty()) {
      auto it = mod_pivots_.find(row.front().first);
      if (it == mod_pivots_.end()) break;
      const auto& pivot = it->second;  // monic
      const std::uint64_t factor = p - row.front().second;
      std::vector<std::pair<std::uint64_t, std::uint32_t>> merged;
      auto x = row.begin();
      auto y = pivot.begin();
      while (x != row.end() || y != pivot.end()) {
        if (y == pivot.end() || (x != row.end() && x->first < y->first)) {
          merged.push_back(*x++);
        } else if (x == row.end() || y->first < x->first) {
          merged.emplace_back(y->first, static_cast<std::uint32_t>(factor * y->second % p));
          ++y;
        } else {
          const auto v = static_cast<std::uint32_t>((x->second + factor * y->second) % p);
          if (v != 0) merged.emplace_back(x->first, v);
          ++x;
          ++y;
        }
      }
      row = std::move(merged);
    }
    if (row.empty()) return false;
    const Scalar inv = Scalar(field_, static_cast<long>(row.front().second)).inverse();
    for (auto& [c, v] : row) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv.residue() % p);
    const std::uint64_t lead = row.front().first;
    mod_pivots_.emplace(lead, std::move(row));
    ++rank_;
    return true;
  }

  FieldSpec field_;
  std::uint64_t rank_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, mpz_class>>> int_pivots_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint32_t>>> mod_pivots_;
};

std::uint64_t power_checked(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) throw Error("oracle size exceeds the configured cap");
    r *= base;
  }
  if (r > cap) throw Error("oracle size exceeds the configured cap");
  return r;
}

std::uint64_t word_index(std::span<const Letter> w, std::uint64_t n) {
  std::uint64_t idx = 0;
  for (Letter l : w) idx = idx * n + l;
  return idx;
}

Word word_at(std::uint64_t idx, std::size_t len, std::uint64_t n) {
  std::vector<Letter> letters(len);
  for (std::size_t i = len; i-- > 0;) {
    letters[i] = static_cast<Letter>(idx % n);
    idx /= n;
  }
  return Word(std::move(letters));
}

// Feeds every U r V of degree d into `elim`.
void fill_ideal_component(const Presentation& p, std::size_t d, std::uint64_t cap, Eliminator& elim) {
  const std::uint64_t n = p.generators.size();
  power_checked(n, d, cap);
  for (const auto& r : p.relations) {
    const std::size_t e = r.degree();
    if (e > d) continue;
    for (std::size_t left_len = 0; left_len <= d - e; ++left_len) {
      const std::size_t right_len = d - e - left_len;
      const std::uint64_t lefts = power_checked(n, left_len, cap);
      const std::uint64_t rights = power_checked(n, right_len, cap);
      for (std::uint64_t li = 0; li < lefts; ++li) {
        const Word u = word_at(li, left_len, n);
        for (std::uint64_t ri = 0; ri < rights; ++ri) {
          const Word v = word_at(ri, right_len, n);
          std::vector<std::pair<std::uint64_t, Scalar>> row;
          for (const auto& t : r) row.emplace_back(word_index((u * t.word * v).letters(), n), t.coeff);
          elim.insert(std::move(row));
        }
      }
    }
  }
}

}  // namespace

std::uint64_t ideal_rank(const Presentation& p, std::size_t d, std::uint64_t cap) {
  p.validate();
  Eliminator elim(p.field);
  fill_ideal_component(p, d, cap, elim);
  return elim.rank();
}

std::uint64_t dim_oracle(const Presentation& p, std::size_t d, std::uint64_t cap) {
  const std::uint64_t total = power_checked(p.generators.size(), d, cap);
  return total - ideal_rank(p, d, cap);
}

bool oracle_ideal_member(const Presentation& p, const Polynomial& f, std::uint64_t cap) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw Error("membership oracle needs a homogeneous polynomial");
  p.validate();
  Eliminator elim(p.field);
  fill_ideal_component(p, f.degree(), cap, elim);
  std::vector<std::pair<std::uint64_t, Scalar>> row;
  for (const auto& t : f) row.emplace_back(word_index(t.word.letters(), p.generators.size()), t.coeff);
  return !elim.insert(std::move(row));
}

GsReport gs_check(const HilbertData& h, std::size_t generators, std::size_t relations) {
  GsReport report;
  const auto& c = h.coefficients;
  const std::size_t known = std::min(c.size(), h.exact_through + 1);
  // A zero coefficient inside the exact range certifies a polynomial series.
  std::optional<std::size_t> zero;
  for (std::size_t q = 0; q < known; ++q)
    if (c[q] == 0) {
      zero = q;
      break;
    }
  report.complete = zero.has_value();
  const std::size_t last = report.complete ? *zero + 1 : known - 1;
  auto coeff = [&](std::ptrdiff_t q) -> mpz_class {
    if (q < 0) return 0;
    if (report.complete && static_cast<std::size_t>(q) >= *zero) return 0;
    return mpz_class(std::to_string(c[static_cast<std::size_t>(q)]));
  };
  const mpz_class n(std::to_string(generators));
  const mpz_class d(std::to_string(relations));
  for (std::size_t q = 0; q <= last; ++q) {
    const auto qi = static_cast<std::ptrdiff_t>(q);
    mpz_class v = coeff(qi) - n * coeff(qi - 1) + d * coeff(qi - 2);
    if (q == 0 ? v < 1 : sgn(v) < 0) report.pass = false;
    report.product.push_back(std::move(v));
  }
  return report;
}

double QuadraticSurd::value() const {
  return rational.get_d() + coefficient.get_d() * std::sqrt(static_cast<double>(radicand));
}

namespace {

// Sign of u + v sqrt(r).
int surd_sign(const mpq_class& u, const mpq_class& v, unsigned r) {
  const int su = sgn(u);
  const int sv = r == 0 ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  const mpq_class lhs = u * u;
  const mpq_class rhs = v * v * r;
  if (lhs == rhs) return 0;
  return lhs > rhs ? su : sv;
}

}  // namespace

mpz_class QuadraticSurd::ceil_times(const mpz_class& m) const {
  const mpq_class a = rational * m;
  const mpq_class b = coefficient * m;
  mpz_class guess(std::ceil(a.get_d() + b.get_d() * std::sqrt(static_cast<double>(radicand))));
  // Smallest integer >= value: value - guess <= 0 and value - (guess - 1) > 0.
  while (surd_sign(a - mpq_class(guess), b, radicand) > 0) ++guess;
  while (surd_sign(a - mpq_class(guess - 1), b, radicand) <= 0) --guess;
  return guess;
}

std::string QuadraticSurd::to_string() const {
  if (radicand == 0 || sgn(coefficient) == 0) return rational.get_str();
  std::ostringstream out;
  out << rational.get_str() << (sgn(coefficient) < 0 ? " - " : " + ") << mpq_class(abs(coefficient)).get_str() << "*sqrt("
      << radicand << ")";
  return out.str();
}

PhiThreshold phi(int k) {
  if (k < 2) throw Error("phi_k is defined for k >= 2");
  PhiThreshold out;
  const double c = std::cos(std::numbers::pi / (k + 1));
  out.value = 1.0 / (4.0 * c * c);
  switch (k) {
    case 2:
      out.exact = QuadraticSurd{1, 0, 0};
      break;
    case 3:
      out.exact = QuadraticSurd{mpq_class(1, 2), 0, 0};
      break;
    case 4:
      out.exact = QuadraticSurd{mpq_class(3, 2), mpq_class(-1, 2), 5};
      break;
    case 5:
      out.exact = QuadraticSurd{mpq_class(1, 3), 0, 0};
      break;
    default:
      break;
  }
  return out;
}

namespace {

template <typename T>
std::string render_generic(std::span<const T> coefficients, auto&& is_zero, auto&& text) {
  std::string out;
  for (std::size_t q = 0; q < coefficients.size(); ++q) {
    if (is_zero(coefficients[q])) continue;
    std::string c = text(coefficients[q]);
    bool negative = c[0] == '-';
    if (negative) c.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (q == 0 || c != "1") out += c;
    if (q >= 1) out += "t";
    if (q >= 2) out += "^" + std::to_string(q);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_series(std::span<const std::uint64_t> coefficients) {
  return render_generic(
      coefficients, [](std::uint64_t v) { return v == 0; }, [](std::uint64_t v) { return std::to_string(v); });
}

std::string render_series(std::span<const mpz_class> coefficients) {
  return render_generic(
      coefficients, [](const mpz_class& v) { return sgn(v) == 0; }, [](const mpz_class& v) { return v.get_str(); });
}

}  // namespace nilalg
