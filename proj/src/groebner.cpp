#include "nilalg/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace nilalg {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t hash_step(std::uint64_t h, Letter l) { return (h ^ (l + 1u)) * kFnvPrime; }

std::uint64_t hash_span(std::span<const Letter> s) {
  std::uint64_t h = kFnvOffset;
  for (Letter l : s) h = hash_step(h, l);
  return h;
}

bool same_letters(std::span<const Letter> a, std::span<const Letter> b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

// Occurrences of `needle` strictly inside or equal to `hay` (i != j handled by callers).
std::vector<std::size_t> occurrences(const Word& hay, const Word& needle) {
  std::vector<std::size_t> out;
  if (needle.degree() > hay.degree()) return out;
  for (std::size_t pos = 0; pos + needle.degree() <= hay.degree(); ++pos)
    if (same_letters(hay.letters().subspan(pos, needle.degree()), needle.letters())) out.push_back(pos);
  return out;
}

}  // namespace

std::vector<Word> GroebnerBasis::leading_words() const {
  std::vector<Word> out;
  for (const auto& g : elements) out.push_back(g.leading_word());
  return out;
}

void LeadingWordIndex::insert(const Word& lw, std::uint32_t id) {
  table_[hash_span(lw.letters())].emplace_back(lw, id);
  if (std::find(lengths_.begin(), lengths_.end(), lw.degree()) == lengths_.end()) {
    lengths_.push_back(lw.degree());
    std::sort(lengths_.begin(), lengths_.end());
  }
}

std::optional<LeadingWordIndex::Match> LeadingWordIndex::find_in(const Word& w) const {
  if (table_.empty()) return std::nullopt;
  const auto letters = w.letters();
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    std::uint64_t h = kFnvOffset;
    std::size_t len = 0;
    for (std::size_t target : lengths_) {
      if (pos + target > letters.size()) break;
      while (len < target) h = hash_step(h, letters[pos + len++]);
      auto it = table_.find(h);
      if (it == table_.end()) continue;
      const auto piece = letters.subspan(pos, len);
      for (const auto& [lw, id] : it->second)
        if (same_letters(lw.letters(), piece)) return Match{id, pos};
    }
  }
  return std::nullopt;
}

std::uint32_t Reducer::add(Polynomial g) {
  if (g.is_zero() || !g.leading_coeff().is_one()) throw Error("reducer elements must be monic");
  if (g.field() != field_) throw FieldMismatch();
  const auto id = static_cast<std::uint32_t>(elements_.size());
  index_.insert(g.leading_word(), id);
  elements_.push_back(std::move(g));
  return id;
}

void Reducer::replace(std::uint32_t id, Polynomial g) {
  if (g.is_zero() || g.leading_word() != elements_.at(id).leading_word() || !g.leading_coeff().is_one())
    throw Error("replacement must keep the monic leading term");
  elements_[id] = std::move(g);
}

Polynomial Reducer::reduce(const Polynomial& f) const {
  if (f.field() != field_) throw FieldMismatch();
  if (f.is_zero() || index_.empty()) return f;
  std::map<Word, Scalar, DeglexGreater> acc;
  for (const auto& t : f) acc.emplace(t.word, t.coeff);
  std::vector<Term> result;
  while (!acc.empty()) {
    auto top = acc.begin();
    const auto match = index_.find_in(top->first);
    if (!match) {
      result.push_back(Term{top->first, std::move(top->second)});
      acc.erase(top);
      continue;
    }
    const Polynomial& g = elements_[match->id];
    const Word& w = top->first;
    const std::span<const Letter> letters = w.letters();
    const std::span<const Letter> left = letters.first(match->position);
    const std::span<const Letter> right = letters.subspan(match->position + g.leading_word().degree());
    const Scalar c = -top->second;
    const Word left_word(left);
    const Word right_word(right);
    acc.erase(top);
    for (auto t = g.begin() + 1; t != g.end(); ++t) {
      Word image = left_word * t->word * right_word;
      auto [it, inserted] = acc.try_emplace(std::move(image), field_);
      it->second.add_product(c, t->coeff);
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return Polynomial::from_sorted(field_, std::move(result));
}

Polynomial Reducer::reduce_tail(const Polynomial& f) const {
  if (f.size() <= 1) return f;
  const Term& lead = f.leading_term();
  std::vector<Term> tail_terms(f.begin() + 1, f.end());
  Polynomial tail = reduce(Polynomial::from_sorted(field_, std::move(tail_terms)));
  return Polynomial::monomial(field_, lead.word, lead.coeff) + tail;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Reducer r(f.field());
  for (const auto& g : basis) r.add(g.monic());
  return r.reduce(f);
}

namespace {

// Prefix and suffix tables of leading words, used to enumerate overlaps
// without scanning every pair.
class OverlapIndex {
 public:
  void insert(const Word& lw, std::uint32_t id) {
    for (std::size_t len = 1; len < lw.degree(); ++len) {
      prefixes_[lw.prefix(len)].push_back(id);
      suffixes_[lw.suffix(len)].push_back(id);
    }
  }

  // Elements whose leading word starts with `piece` as a proper prefix.
  const std::vector<std::uint32_t>* with_prefix(const Word& piece) const {
    auto it = prefixes_.find(piece);
    return it == prefixes_.end() ? nullptr : &it->second;
  }

  // Elements whose leading word ends with `piece` as a proper suffix.
  const std::vector<std::uint32_t>* with_suffix(const Word& piece) const {
    auto it = suffixes_.find(piece);
    return it == suffixes_.end() ? nullptr : &it->second;
  }

 private:
  std::unordered_map<Word, std::vector<std::uint32_t>, WordHash> prefixes_;
  std::unordered_map<Word, std::vector<std::uint32_t>, WordHash> suffixes_;
};

// Overlaps with `left` on the left, against every indexed right element.
template <typename Emit>
void overlaps_from_left(const Word& left_lw, std::uint32_t left_id, const OverlapIndex& index,
                        const std::vector<Word>& lws, std::size_t maxdeg, Emit&& emit) {
  const std::size_t d = left_lw.degree();
  for (std::size_t len = 1; len < d; ++len) {
    const auto* ids = index.with_prefix(left_lw.suffix(len));
    if (!ids) continue;
    for (std::uint32_t right_id : *ids) {
      const Word& right_lw = lws[right_id];
      if (d + right_lw.degree() - len > maxdeg) continue;
      Obstruction o;
      o.kind = Obstruction::Kind::overlap;
      o.left = left_id;
      o.right = right_id;
      o.offset = d - len;
      o.ambiguity = left_lw * right_lw.subword(len, right_lw.degree() - len);
      emit(std::move(o));
    }
  }
}

bool obstruction_less(const Obstruction& a, const Obstruction& b) {
  if (auto c = deglex_compare(a.ambiguity, b.ambiguity); c != 0) return c < 0;
  if (a.left != b.left) return a.left < b.left;
  if (a.right != b.right) return a.right < b.right;
  return a.offset < b.offset;
}

}  // namespace

std::vector<Obstruction> find_obstructions(std::span<const Polynomial> basis, std::size_t maxdeg) {
  std::vector<Word> lws;
  OverlapIndex index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    lws.push_back(basis[i].leading_word());
    index.insert(lws.back(), static_cast<std::uint32_t>(i));
  }
  std::vector<Obstruction> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    overlaps_from_left(lws[i], static_cast<std::uint32_t>(i), index, lws, maxdeg,
                       [&](Obstruction o) { out.push_back(std::move(o)); });
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || lws[i].degree() > maxdeg) continue;
      // Equal leading words are reported once, from the lower index.
      if (lws[i] == lws[j] && j < i) continue;
      for (std::size_t pos : occurrences(lws[i], lws[j])) {
        Obstruction o;
        o.kind = Obstruction::Kind::inclusion;
        o.left = i;
        o.right = j;
        o.offset = pos;
        o.ambiguity = lws[i];
        out.push_back(std::move(o));
      }
    }
  }
  std::sort(out.begin(), out.end(), obstruction_less);
  return out;
}

Polynomial s_polynomial(const Obstruction& o, std::span<const Polynomial> basis) {
  const Polynomial left = basis[o.left].monic();
  const Polynomial right = basis[o.right].monic();
  const Word& lw_left = left.leading_word();
  const Word& lw_right = right.leading_word();
  if (o.kind == Obstruction::Kind::overlap) {
    const Word a = lw_left.prefix(o.offset);
    const std::size_t shared = lw_left.degree() - o.offset;
    const Word c = lw_right.subword(shared, lw_right.degree() - shared);
    return left.multiply(Word{}, c) - right.multiply(a, Word{});
  }
  const Word u = lw_left.prefix(o.offset);
  const Word v = lw_left.subword(o.offset + lw_right.degree(), lw_left.degree() - o.offset - lw_right.degree());
  return left - right.multiply(u, v);
}

GroebnerBasis buchberger(const Presentation& p, std::size_t maxdeg, const BuchbergerOptions& options,
                         CompletionStats* stats) {
  p.validate();
  if (maxdeg < p.max_relation_degree())
    throw Error("truncation degree " + std::to_string(maxdeg) + " is below the relation degree " +
                std::to_string(p.max_relation_degree()));

  CompletionStats local;
  CompletionStats& st = stats ? *stats : local;

  Reducer reducer(p.field);
  std::vector<Word> lws;
  std::vector<std::uint32_t> order_by_degree;
  OverlapIndex overlap_index;
  std::vector<std::vector<Obstruction>> pending(maxdeg + 1);
  std::vector<std::vector<const Polynomial*>> inputs(maxdeg + 1);
  for (const auto& r : p.relations) inputs[r.degree()].push_back(&r);
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  for (std::size_t d = 0; d <= maxdeg; ++d) {
    std::vector<std::uint32_t> added;
    auto consider = [&](Polynomial candidate) {
      Polynomial r = reducer.reduce(candidate);
      if (r.is_zero()) {
        ++st.zero_reductions;
        return;
      }
      r = r.monic();
      const std::uint32_t id = reducer.add(r);
      lws.push_back(r.leading_word());
      overlap_index.insert(lws.back(), id);
      added.push_back(id);
      // New obstructions all have degree > d; both orientations plus the self-overlap.
      auto bucket = [&](Obstruction o) { pending[o.degree()].push_back(std::move(o)); };
      overlaps_from_left(lws[id], id, overlap_index, lws, maxdeg, bucket);
      for (std::size_t len = 1; len < lws[id].degree(); ++len) {
        const auto* lefts = overlap_index.with_suffix(lws[id].prefix(len));
        if (!lefts) continue;
        for (std::uint32_t left_id : *lefts) {
          const Word& left_lw = lws[left_id];
          if (left_id == id || left_lw.degree() + lws[id].degree() - len > maxdeg) continue;
          Obstruction o;
          o.left = left_id;
          o.right = id;
          o.offset = left_lw.degree() - len;
          o.ambiguity = left_lw * lws[id].subword(len, lws[id].degree() - len);
          bucket(std::move(o));
        }
      }
    };

    for (const Polynomial* r : inputs[d]) consider(*r);

    auto& obstructions = pending[d];
    if (rng)
      std::shuffle(obstructions.begin(), obstructions.end(), *rng);
    else
      std::sort(obstructions.begin(), obstructions.end(), obstruction_less);
    for (const Obstruction& o : obstructions) {
      ++st.obstructions;
      const Polynomial& left = reducer.element(static_cast<std::uint32_t>(o.left));
      const Polynomial& right = reducer.element(static_cast<std::uint32_t>(o.right));
      const Word a = o.ambiguity.prefix(o.offset);
      const Word c = o.ambiguity.subword(left.leading_word().degree(),
                                         o.ambiguity.degree() - left.leading_word().degree());
      consider(left.multiply(Word{}, c) - right.multiply(a, Word{}));
    }
    obstructions.clear();
    obstructions.shrink_to_fit();

    // Interreduce this degree: lower degrees cannot change any more.
    for (std::uint32_t id : added) reducer.replace(id, reducer.reduce_tail(reducer.element(id)));
  }

  GroebnerBasis gb;
  gb.field = p.field;
  gb.alphabet = p.generators;
  gb.complete_through = maxdeg;
  for (std::uint32_t id = 0; id < reducer.size(); ++id) gb.elements.push_back(reducer.element(id));
  std::sort(gb.elements.begin(), gb.elements.end(), [](const Polynomial& a, const Polynomial& b) {
    return deglex_compare(a.leading_word(), b.leading_word()) < 0;
  });
  return gb;
}

ConfluenceReport certify(std::span<const Polynomial> elements, std::size_t maxdeg) {
  ConfluenceReport report;
  if (elements.empty()) return report;
  const FieldSpec field = elements.front().field();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Polynomial& g = elements[i];
    if (g.is_zero() || !g.leading_coeff().is_one()) {
      report.reduced = false;
      report.problems.push_back("element " + std::to_string(i + 1) + " is not monic");
      continue;
    }
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i == j) continue;
      const Word& lw = elements[j].leading_word();
      for (const auto& t : g)
        if (t.word.contains(lw)) {
          report.reduced = false;
          report.problems.push_back("element " + std::to_string(i + 1) + " is reducible by element " +
                                    std::to_string(j + 1));
          break;
        }
    }
  }
  if (!report.reduced) return report;

  Reducer reducer(field);
  for (const auto& g : elements) reducer.add(g);
  for (const Obstruction& o : find_obstructions(elements, maxdeg)) {
    ++report.obstructions_checked;
    if (!reducer.reduce(s_polynomial(o, elements)).is_zero()) {
      report.confluent = false;
      report.problems.push_back("S-polynomial of elements " + std::to_string(o.left + 1) + " and " +
                                std::to_string(o.right + 1) + " at degree " + std::to_string(o.degree()) +
                                " does not reduce to zero");
    }
  }
  return report;
}

bool contains_relations(const GroebnerBasis& gb, const Presentation& p) {
  Reducer reducer(gb.field);
  for (const auto& g : gb.elements) reducer.add(g);
  for (const auto& r : p.relations) {
    if (r.degree() > gb.complete_through) continue;
    if (!reducer.reduce(r.in_field(gb.field)).is_zero()) return false;
  }
  return true;
}

bool is_power_of_two(const mpz_class& v) {
  mpz_class a = abs(v);
  return sgn(a) > 0 && mpz_popcount(a.get_mpz_t()) == 1;
}

IntegerBasis integerize(const GroebnerBasis& gb) {
  if (!gb.field.is_rational()) throw Error("integerize needs a characteristic-0 basis");
  IntegerBasis out;
  out.alphabet = gb.alphabet;
  out.complete_through = gb.complete_through;
  for (const auto& g : gb.elements) {
    std::vector<mpq_class> coeffs;
    for (const auto& t : g) coeffs.push_back(t.coeff.rational());
    const std::vector<mpz_class> ints = integer_normalize(coeffs);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < ints.size(); ++i)
      terms.push_back(Term{g.terms()[i].word, Scalar(gb.field, ints[i])});
    out.leading_coefficients.push_back(ints.front());
    if (!is_power_of_two(ints.front())) out.leading_powers_of_two = false;
    out.elements.push_back(Polynomial::from_sorted(gb.field, std::move(terms)));
  }
  return out;
}

TransferResult transfer_mod_p(const IntegerBasis& gb, std::uint64_t p, std::size_t maxdeg) {
  const FieldSpec field(p);
  if (field.is_rational()) throw Error("transfer needs a prime");
  TransferResult out;
  out.basis.field = field;
  out.basis.alphabet = gb.alphabet;
  out.basis.complete_through = maxdeg;
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    const Polynomial image = gb.elements[i].in_field(field);
    if (image.is_zero() || image.leading_word() != gb.elements[i].leading_word())
      throw Error("leading coefficient " + gb.leading_coefficients[i].get_str() + " of element g" +
                  std::to_string(i + 1) + " vanishes modulo " + std::to_string(p));
    out.basis.elements.push_back(image.monic());
  }
  out.same_leading_words = true;
  out.report = certify(out.basis.elements, maxdeg);
  out.valid = out.report.ok();
  return out;
}

TransferResult transfer_mod_p(const IntegerBasis& gb, std::uint64_t p, std::size_t maxdeg,
                              const Presentation& source) {
  TransferResult out = transfer_mod_p(gb, p, maxdeg);
  const FieldSpec field(p);
  Presentation reduced = source;
  reduced.field = field;
  reduced.relations.clear();
  for (const auto& r : source.relations) {
    Polynomial image = r.in_field(field);
    if (!image.is_zero()) reduced.relations.push_back(std::move(image));
  }
  bool matches = contains_relations(out.basis, reduced);
  if (matches) {
    const GroebnerBasis direct = buchberger(reduced, maxdeg);
    for (const auto& g : out.basis.elements)
      if (!normal_form(g, direct.elements).is_zero()) {
        matches = false;
        break;
      }
  }
  out.ideal_matches = matches;
  out.valid = out.valid && matches;
  return out;
}

std::string export_basis(const GroebnerBasis& gb) {
  std::ostringstream out;
  out << "# field " << gb.field.characteristic() << '\n';
  out << "# order";
  for (const auto& n : gb.alphabet.names()) out << ' ' << n;
  out << "\n# complete_through " << gb.complete_through << '\n';
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    out << 'g' << i + 1 << " = " << gb.elements[i].to_string(gb.alphabet) << '\n';
  return out.str();
}

}  // namespace nilalg
