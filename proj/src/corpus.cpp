#include "nilalg/corpus.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace nilalg {

std::string appendix_algebra(int which) {
  if (which == 1) return "R31";
  if (which == 2) return "R32";
  throw Error("appendix tables are numbered 1 and 2");
}

std::vector<std::size_t> irregular_entries(int which) {
  // Table 1, g_23 is printed as two groups across a line break.
  if (which == 1) return {23};
  return {};
}

namespace {

struct Component {
  std::size_t element;
  Scalar coefficient;
};

// Peels off computed elements by leading word. Succeeds when the printed
// polynomial is a combination of at least two of them.
std::optional<std::vector<Component>> decompose(Polynomial rest, const GroebnerBasis& gb,
                                                const std::map<Word, std::size_t, DeglexLess>& by_leading) {
  std::vector<Component> parts;
  while (!rest.is_zero()) {
    auto it = by_leading.find(rest.leading_word());
    if (it == by_leading.end()) return std::nullopt;
    const Scalar c = rest.leading_coeff();
    parts.push_back({it->second, c});
    rest -= gb.elements[it->second] * c;
  }
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

}  // namespace

CorpusMatch match_corpus(const GroebnerBasis& gb, const std::vector<CorpusEntry>& entries,
                         const std::vector<std::size_t>& irregular) {
  if (!gb.field.is_rational()) throw Error("the appendix corpus is over the rationals");
  CorpusMatch out;
  out.corpus_size = entries.size();
  out.computed_size = gb.elements.size();
  const FieldSpec q = FieldSpec::rationals();
  std::map<Word, std::size_t, DeglexLess> by_leading;
  for (std::size_t i = 0; i < gb.elements.size(); ++i) by_leading.emplace(gb.elements[i].leading_word(), i);
  std::vector<bool> used(gb.elements.size(), false);

  for (const CorpusEntry& e : entries) {
    const bool is_irregular = std::find(irregular.begin(), irregular.end(), e.index) != irregular.end();
    auto report = [&](const std::string& why) {
      (is_irregular ? out.flagged : out.mismatches).push_back("g" + std::to_string(e.index) + ": " + why);
    };
    Polynomial printed;
    try {
      printed = parse_expression(e.expression, gb.alphabet, q).monic();
    } catch (const Error& err) {
      report(std::string("cannot parse: ") + err.what());
      continue;
    }
    if (printed.is_zero()) {
      report("printed polynomial is zero");
      continue;
    }
    auto it = by_leading.find(printed.leading_word());
    if (it == by_leading.end()) {
      report("leading word " + printed.leading_word().to_string(gb.alphabet) + " is not a computed leading word");
      continue;
    }
    const Polynomial& computed = gb.elements[it->second];
    if (computed != printed && is_irregular) {
      if (auto parts = decompose(printed, gb, by_leading)) {
        std::string why = "printed polynomial is a combination of computed elements:";
        for (const auto& part : *parts) {
          why += "\n    " + part.coefficient.to_string() + " * (" +
                 gb.elements[part.element].to_string(gb.alphabet) + ")";
          if (!used[part.element]) out.explained.push_back(part.element);
          used[part.element] = true;
        }
        report(why);
        continue;
      }
    }
    if (computed != printed) {
      report("differs from computed element with the same leading word\n    printed:  " +
             printed.to_string(gb.alphabet) + "\n    computed: " + computed.to_string(gb.alphabet));
      continue;
    }
    if (used[it->second]) {
      report("duplicates another entry");
      continue;
    }
    used[it->second] = true;
    ++out.matched;
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) out.unmatched_computed.push_back(i);
  return out;
}

}  // namespace nilalg
