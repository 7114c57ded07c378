#include <string>

#include "doctest.h"
#include "nilalg/catalog.hpp"
#include "nilalg/corpus.hpp"

using namespace nilalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

const GroebnerBasis& basis(int which) {
  static const GroebnerBasis t1 = buchberger(builtin("R31", Q), 6);
  static const GroebnerBasis t2 = buchberger(builtin("R32", Q), 6);
  return which == 1 ? t1 : t2;
}

}  // namespace

TEST_CASE("embedded tables") {
  CHECK(appendix_table(1).size() == 46);
  CHECK(appendix_table(2).size() == 102);
  CHECK(appendix_table(1).front().expression == "b^2-ac+a^2");
  CHECK(appendix_table(1).back().expression == "babxa");
  CHECK(appendix_table(2).back().expression == "baxax");
  for (int which : {1, 2})
    for (std::size_t i = 0; i < appendix_table(which).size(); ++i) CHECK(appendix_table(which)[i].index == i + 1);
  CHECK(appendix_algebra(1) == "R31");
  CHECK(appendix_algebra(2) == "R32");
  CHECK_THROWS_AS(appendix_table(3), Error);
  CHECK(irregular_entries(1) == std::vector<std::size_t>{23});
  CHECK(irregular_entries(2).empty());
}

TEST_CASE("table 1 against the computed basis") {
  const CorpusMatch m = match_corpus(basis(1), appendix_table(1), irregular_entries(1));
  CHECK(m.corpus_size == 46);
  CHECK(m.computed_size == 47);
  CHECK(m.matched == 45);
  CHECK(m.mismatches.empty());
  REQUIRE(m.flagged.size() == 1);
  CHECK(m.flagged[0].rfind("g23: printed polynomial is a combination of computed elements", 0) == 0);
  CHECK(m.explained.size() == 2);
  CHECK(m.unmatched_computed.empty());
  // 46 entries cannot describe a 47-element reduced basis.
  CHECK(!m.pass());

  // Without the irregular marker the same entry is a plain mismatch.
  const CorpusMatch strict = match_corpus(basis(1), appendix_table(1));
  CHECK(strict.mismatches.size() == 1);
  CHECK(strict.unmatched_computed.size() == 2);
}

TEST_CASE("table 2 against the computed basis") {
  const CorpusMatch m = match_corpus(basis(2), appendix_table(2), irregular_entries(2));
  CHECK(m.corpus_size == 102);
  CHECK(m.computed_size == 102);
  CHECK(m.matched == 101);
  REQUIRE(m.mismatches.size() == 1);
  // The printed entry differs from the computed element only in the sign
  // of its leading term.
  CHECK(m.mismatches[0].rfind("g12: differs from computed element", 0) == 0);
  CHECK(m.mismatches[0].find("printed:  caa - bab + aca - aac - aaa") != std::string::npos);
  CHECK(m.mismatches[0].find("computed: caa + bab - aca + aac + aaa") != std::string::npos);
  CHECK(m.unmatched_computed.size() == 1);
  CHECK(!m.pass());
}

TEST_CASE("matching is up to scalar, and each element is used once") {
  const GroebnerBasis& gb = basis(2);
  std::vector<std::string> texts;
  std::vector<CorpusEntry> entries;
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    texts.push_back((-gb.elements[i] * Scalar(Q, 6L)).to_string(gb.alphabet));
  for (std::size_t i = 0; i < texts.size(); ++i) entries.push_back({i + 1, texts[i]});
  const CorpusMatch m = match_corpus(gb, entries);
  CHECK(m.pass());
  CHECK(m.matched == gb.elements.size());

  entries.push_back({entries.size() + 1, texts[0]});
  const CorpusMatch dup = match_corpus(gb, entries);
  CHECK(!dup.pass());
  REQUIRE(dup.mismatches.size() == 1);
  CHECK(dup.mismatches[0].find("duplicates") != std::string::npos);
}

TEST_CASE("tampering with one coefficient gives exactly one mismatch") {
  std::vector<std::string> texts;
  for (const auto& e : appendix_table(2)) texts.emplace_back(e.expression);
  // g_24 = ba^3-abab-2aba^2+...; change the coefficient 2 to 3.
  REQUIRE(texts[23].find("-2aba^2") != std::string::npos);
  texts[23].replace(texts[23].find("-2aba^2"), 7, "-3aba^2");
  texts[11] = "-ca^2-bab+aca-a^2c-a^3";
  std::vector<CorpusEntry> entries;
  for (std::size_t i = 0; i < texts.size(); ++i) entries.push_back({i + 1, texts[i]});
  const CorpusMatch m = match_corpus(basis(2), entries);
  REQUIRE(m.mismatches.size() == 1);
  CHECK(m.mismatches[0].rfind("g24:", 0) == 0);
  CHECK(m.matched == 101);

  // With the sign of g_12 corrected and nothing tampered, table 2 matches.
  for (const auto& e : appendix_table(2)) texts[e.index - 1] = e.expression;
  texts[11] = "-ca^2-bab+aca-a^2c-a^3";
  entries.clear();
  for (std::size_t i = 0; i < texts.size(); ++i) entries.push_back({i + 1, texts[i]});
  CHECK(match_corpus(basis(2), entries).pass());
}

TEST_CASE("corpus errors") {
  const std::vector<CorpusEntry> bad = {{1, "b^2-ac+q"}};
  const CorpusMatch m = match_corpus(basis(1), bad);
  REQUIRE(m.mismatches.size() == 1);
  CHECK(m.mismatches[0].find("cannot parse") != std::string::npos);
  CHECK_THROWS_AS(match_corpus(buchberger(builtin("R31", FieldSpec(3)), 5), bad), Error);
}
