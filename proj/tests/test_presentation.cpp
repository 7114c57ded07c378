#include <random>

#include "doctest.h"
#include "nilalg/catalog.hpp"
#include "nilalg/hilbert.hpp"
#include "nilalg/inflate.hpp"
#include "oracles.hpp"

using namespace nilalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Polynomial terms(FieldSpec f, std::initializer_list<std::pair<Word, long>> t) {
  std::vector<Term> out;
  for (const auto& [w, c] : t) out.push_back({w, Scalar(f, c)});
  return Polynomial(f, std::move(out));
}

// Line and column of the ParseError thrown by `text`, or (0, 0).
std::pair<int, int> error_at(std::string_view text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("expression examples") {
  const Alphabet abc = Alphabet::plain({"a", "b", "c"});
  CHECK(parse_expression("cb - bc + aa", abc, Q) == terms(Q, {{{2, 1}, 1}, {{1, 2}, -1}, {{0, 0}, 1}}));
  const Alphabet x = Alphabet::plain({"x"});
  CHECK(parse_expression("xx", x, Q) == terms(Q, {{{0, 0}, 1}}));
  CHECK(parse_expression("2ab - ab - ab", abc, Q).is_zero());
  CHECK_THROWS_AS(parse_presentation("field 0\ngenerators a b\nrelations\n2ab - ab - ab\n"), ParseError);
}

TEST_CASE("expression grammar") {
  const Alphabet abc = Alphabet::plain({"a", "b", "c"});
  CHECK(parse_expression("a^3b - 2 c a^2", abc, Q) == terms(Q, {{{0, 0, 0, 1}, 1}, {{2, 0, 0}, -2}}));
  CHECK(parse_expression("-a*b*c", abc, Q) == terms(Q, {{{0, 1, 2}, -1}}));
  CHECK(parse_expression("3*ab", abc, Q) == terms(Q, {{{0, 1}, 3}}));
  CHECK(parse_expression("1/2ab", abc, Q) == Polynomial::monomial(Q, Word{0, 1}, Scalar(Q, mpq_class(1, 2))));
  CHECK(parse_expression("5", abc, Q) == terms(Q, {{{}, 5}}));
  CHECK(parse_expression("3ab + 4ab", abc, FieldSpec(7)).is_zero());
  CHECK(parse_expression("1/2ab", abc, FieldSpec(5)) == terms(FieldSpec(5), {{{0, 1}, 3}}));
  CHECK_THROWS_AS(parse_expression("1/5ab", abc, FieldSpec(5)), ParseError);
  CHECK_THROWS_AS(parse_expression("1/0ab", abc, Q), ParseError);

  // Exact multi-character names win over splitting into letters.
  const Alphabet multi = Alphabet::plain({"a", "b", "ab"});
  CHECK(parse_expression("ab", multi, Q) == terms(Q, {{{2}, 1}}));
  CHECK(parse_expression("a*b", multi, Q) == terms(Q, {{{0, 1}, 1}}));
  const Alphabet dotted(std::vector<Generator>{{"a", Family::x, 1}, {"a", Family::x, 2}, {"x", Family::y, 1}});
  CHECK(parse_expression("a.2*x.1 - x.1*a.1", dotted, Q) == terms(Q, {{{2, 0}, -1}, {{1, 2}, 1}}));

  for (const char* bad : {"ab +", "a + + b", "*a", "a**b", "a^", "ab)", "d", "a b ? c"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_expression(bad, abc, Q), ParseError);
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_at("field 0\ngenerators a b\nrelations\nab - bd\n") == std::pair{4, 6});
  CHECK(error_at("field 0\ngenerators a b\nrelations\n  ab + a\n") == std::pair{4, 3});
  CHECK(error_at("field 4\ngenerators a\nrelations\n").first == 1);
  CHECK(error_at("generators a\n").first == 1);
  CHECK(error_at("field 0\nrelations\n").first == 2);
  CHECK(error_at("field 0\ngenerators a a\nrelations\n").first == 2);
  CHECK(error_at("field 0\ngenerators a 1b\nrelations\n").first == 2);
  CHECK(error_at("field 0\ngenerators a\naa\n").first == 3);
  CHECK(error_at("").first != 0);
  CHECK(error_at("field 0\n").first != 0);
}

TEST_CASE("presentation files") {
  const Presentation p = parse_presentation(
      "# a comment\n"
      "field 3\n"
      "generators a b  c   # trailing comment\n"
      "\n"
      "relations\n"
      "  cb - bc + aa\n"
      "bb + aa - ac # why not\n");
  CHECK(p.field == FieldSpec(3));
  CHECK(p.generators.names() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[1] == parse_expression("bb + aa - ac", p.generators, FieldSpec(3)));
  CHECK(p.max_relation_degree() == 2);

  const Presentation free = parse_presentation("field 0\ngenerators a b\nrelations\n");
  CHECK(free.relations.empty());
  const Presentation no_header = parse_presentation("field 0\ngenerators a b\n");
  CHECK(no_header.relations.empty());
  CHECK_THROWS_AS(load_presentation("/nonexistent/file.txt"), Error);
}

TEST_CASE("validation") {
  Presentation p = builtin("R31", Q);
  CHECK_NOTHROW(p.validate());
  p.relations.push_back(parse_expression("ab + c", p.generators, Q));
  CHECK_THROWS_AS(p.validate(), Error);
  p.relations.back() = Polynomial(Q);
  CHECK_THROWS_AS(p.validate(), Error);
  p.relations.back() = parse_expression("3", p.generators, Q);
  CHECK_THROWS_AS(p.validate(), Error);
  p.relations.back() = parse_expression("ab", p.generators, FieldSpec(2));
  CHECK_THROWS_AS(p.validate(), Error);
  p.relations.back() = Polynomial::monomial(Q, Word{0, 9});
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("builtin examples") {
  const Presentation r31 = builtin("R31", Q);
  CHECK(r31.generators.names() == std::vector<std::string>{"a", "b", "c", "x"});
  REQUIRE(r31.relations.size() == 6);
  const Alphabet& g = r31.generators;
  const char* expected[] = {"cb-bc+aa", "bb+aa-ac", "cc-ba", "xx", "ax+bx-xa-xb", "bx+cx-xa-xb-xc"};
  for (std::size_t i = 0; i < 6; ++i) CHECK(r31.relations[i] == parse_expression(expected[i], g, Q));

  const Presentation r32 = builtin("R32", FieldSpec(2));
  CHECK(r32.field == FieldSpec(2));
  CHECK(r32.generators.names() == std::vector<std::string>{"a", "b", "c", "x", "y"});
  CHECK(r32.relations.size() == 9);
  for (const auto& r : r32.relations)
    for (const auto& t : r) CHECK(t.coeff.residue() == 1);

  const Presentation p45 = builtin("P45", Q);
  CHECK(p45.generators.names() == std::vector<std::string>{"a", "b", "c", "d", "e"});
  REQUIRE(p45.relations.size() == 10);
  CHECK(p45.relations[0] == parse_expression("de-eb", p45.generators, Q));
  CHECK(p45.relations[1] == parse_expression("ce-db", p45.generators, Q));
  CHECK(p45.relations[9] == parse_expression("ea", p45.generators, Q));

  CHECK_THROWS_AS(builtin("R33", Q), Error);
  CHECK_THROWS_AS(catalog_entry("P46"), Error);
}

TEST_CASE("builtin relation counts and shape") {
  const std::pair<const char*, std::size_t> counts[] = {{"R31", 6}, {"R32", 9}, {"P41", 1}, {"P42", 2},
                                                       {"P43", 4},  {"P44", 7}, {"P45", 10}};
  for (const auto& [key, n] : counts) {
    CAPTURE(key);
    const Presentation p = builtin(key, Q);
    CHECK(p.relations.size() == n);
    for (const auto& r : p.relations) {
      CHECK(r.is_homogeneous());
      CHECK(r.degree() == 2);
    }
    CHECK(p.label == std::optional<std::string>(key));
  }
  // ceil(phi_4 n^2) for n = 1..5 gives the semigroup relation counts.
  const PhiThreshold phi4 = phi(4);
  REQUIRE(phi4.exact);
  const char* semigroup[] = {"P41", "P42", "P43", "P44", "P45"};
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(phi4.exact->ceil_times(mpz_class(n * n)) == mpz_class(builtin(semigroup[n - 1], Q).relations.size()));
}

TEST_CASE("serialize round trips") {
  for (const auto& e : catalog())
    for (std::uint64_t p : {0u, 2u, 5u}) {
      const Presentation pres = e.instantiate(FieldSpec(p));
      const std::string text = serialize(pres);
      CHECK(parse_presentation(text) == pres);
    }
  const Presentation inflated = inflate(r31_seed(Q), 2, 2).presentation;
  CHECK(inflated.generators.names()[1] == "a.2");
  const Presentation back = parse_presentation(serialize(inflated));
  CHECK(back == inflated);

  Presentation free;
  free.generators = Alphabet::plain({"a", "b"});
  const std::string text = serialize(free);
  CHECK(text == "field 0\ngenerators a b\nrelations\n");
  CHECK(parse_presentation(text) == free);

  Presentation labelled = builtin("P42", Q);
  CHECK(serialize(labelled).rfind("# P42\n", 0) == 0);
}

TEST_CASE("serialize round trips on random presentations") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> gens(1, 5), rels(0, 6), deg(1, 4);
  for (int i = 0; i < 200; ++i) {
    const FieldSpec f(std::array<std::uint64_t, 4>{0, 2, 3, 7}[i % 4]);
    Presentation p;
    p.field = f;
    const std::size_t n = gens(rng);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(i % 3 == 0 ? "g" + std::to_string(k) : std::string(1, char('a' + k)));
    p.generators = Alphabet::plain(names);
    const std::size_t r = rels(rng);
    while (p.relations.size() < r) {
      Polynomial rel = oracle::random_polynomial(rng, f, n, deg(rng), 3);
      if (!rel.is_zero()) p.relations.push_back(std::move(rel));
    }
    CHECK(parse_presentation(serialize(p)) == p);
  }
}

TEST_CASE("json rendering") {
  const Presentation p = builtin("P42", Q);
  const auto j = to_json(p);
  CHECK(j["field"] == 0);
  CHECK(j["generators"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["relations"].dump() == R"([[[1,["b","b"]],[-1,["a","a"]]],[[1,["b","a"]]]])");
  CHECK(scalar_json(Scalar(Q, mpq_class(-3, 4))) == "-3/4");
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(scalar_json(Scalar(Q, big)) == "1000000000000000000000000000000");
  CHECK(scalar_json(Scalar(FieldSpec(7), -1L)) == 6);
}
