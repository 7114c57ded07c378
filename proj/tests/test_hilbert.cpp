#include <cmath>
#include <random>

#include "doctest.h"
#include "nilalg/catalog.hpp"
#include "nilalg/hilbert.hpp"
#include "oracles.hpp"

using namespace nilalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

using Coeffs = std::vector<std::uint64_t>;

HilbertData series(std::string_view key, std::uint64_t p, std::size_t maxdeg) {
  return hilbert_series(buchberger(builtin(key, FieldSpec(p)), maxdeg), maxdeg);
}

std::vector<mpz_class> zs(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("hilbert_series examples") {
  CHECK(series("R31", 0, 5).coefficients == Coeffs{1, 4, 10, 18, 21, 0});
  CHECK(series("R32", 2, 5).coefficients == Coeffs{1, 5, 16, 35, 43, 0});
  Presentation free;
  free.generators = Alphabet::plain({"a", "b"});
  const HilbertData h = hilbert_series(buchberger(free, 3), 3);
  CHECK(h.coefficients == Coeffs{1, 2, 4, 8});
  CHECK(h.exact_through == 3);
  CHECK(h.source == HilbertData::Source::groebner);
  CHECK_THROWS_AS(hilbert_series(buchberger(free, 3), 4), Error);
}

TEST_CASE("normal-word counting matches enumeration") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<std::size_t> letters(1, 3), count(0, 4), deg(1, 3);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = letters(rng);
    std::vector<Word> forbidden;
    const std::size_t k = count(rng);
    for (std::size_t j = 0; j < k; ++j) forbidden.push_back(oracle::random_word(rng, n, deg(rng)));
    const auto counts = count_normal_words(forbidden, n, 6);
    REQUIRE(counts.size() == 7);
    for (std::size_t q = 0; q <= 6; ++q) CHECK(counts[q] == oracle::count_avoiding(forbidden, n, q));
  }
  // Empty basis: n^q.
  const auto free = count_normal_words({}, 7, 5);
  CHECK(free == Coeffs{1, 7, 49, 343, 2401, 16807});
}

TEST_CASE("normal-word counting detects overflow") {
  CHECK_THROWS_AS(count_normal_words({}, 1000, 7), Error);
  CHECK_NOTHROW(count_normal_words({}, 1000, 6));
}

TEST_CASE("series invariants on catalog algebras") {
  for (const auto& e : catalog())
    for (std::uint64_t p : {0u, 2u, 3u, 5u}) {
      CAPTURE(e.key);
      CAPTURE(p);
      const HilbertData h = series(e.key, p, 5);
      CHECK(h.coefficients[0] == 1);
      CHECK(h.coefficients[1] == e.generators.size());
      const auto z = h.first_zero();
      if (z)
        for (std::size_t q = *z; q < h.coefficients.size(); ++q) CHECK(h.coefficients[q] == 0);
    }
}

TEST_CASE("reference series through degree 4 in several characteristics") {
  for (std::uint64_t p : {0u, 2u, 3u, 5u, 7u}) {
    CAPTURE(p);
    CHECK(series("R31", p, 5).coefficients == Coeffs{1, 4, 10, 18, 21, 0});
    const auto r32 = series("R32", p, 5).coefficients;
    CHECK(Coeffs(r32.begin(), r32.begin() + 5) == Coeffs{1, 5, 16, 35, 43});
  }
  // Degree 5 survives for R32 over GF(3) and R31 over GF(13); the oracle
  // confirms it without Groebner bases.
  CHECK(series("R32", 3, 5).coefficients[5] == 1);
  CHECK(dim_oracle(builtin("R32", FieldSpec(3)), 5) == 1);
  CHECK(series("R31", 13, 5).coefficients[5] == 1);
  CHECK(dim_oracle(builtin("R31", FieldSpec(13)), 5) == 1);
  CHECK(dim_oracle(builtin("R31", FieldSpec(11)), 5) == 0);
}

TEST_CASE("nilpotency verdicts") {
  const NilpotencyVerdict r31 = nilpotency_index(buchberger(builtin("R31", Q), 5));
  CHECK(r31.nilpotent);
  CHECK(r31.degree == 5);
  CHECK(r31.to_string() == "nilpotent(5)");
  CHECK(nilpotency_index(buchberger(builtin("P45", Q), 5)).to_string() == "nilpotent(4)");
  CHECK(nilpotency_index(buchberger(builtin("P41", Q), 5)).to_string() == "nilpotent(2)");
  Presentation free;
  free.generators = Alphabet::plain({"t"});
  const NilpotencyVerdict v = nilpotency_index(buchberger(free, 6));
  CHECK(!v.nilpotent);
  CHECK(v.degree == 6);
  CHECK(v.to_string() == "not-nilpotent-within(6)");
  // Truncating before the zero gives no verdict.
  CHECK(nilpotency_index(buchberger(builtin("R31", Q), 4)).to_string() == "not-nilpotent-within(4)");
  for (const auto& e : catalog()) {
    REQUIRE(e.expected_nilpotency);
    CHECK(nilpotency_index(buchberger(e.instantiate(Q), 5)).degree == *e.expected_nilpotency);
  }
}

TEST_CASE("dim_oracle examples") {
  CHECK(dim_oracle(builtin("R31", Q), 2) == 10);
  CHECK(dim_oracle(builtin("R32", Q), 2) == 16);
  CHECK(ideal_rank(builtin("R31", Q), 2) == 6);
  CHECK(ideal_rank(builtin("R32", Q), 2) == 9);
  for (const auto& e : catalog()) CHECK(dim_oracle(e.instantiate(Q), 0) == 1);
  CHECK(dim_oracle(builtin("R31", Q), 1) == 4);
  CHECK_THROWS_AS(dim_oracle(builtin("R32", Q), 9), Error);
  CHECK_THROWS_AS(dim_oracle(builtin("R31", Q), 5, 100), Error);
}

TEST_CASE("oracle agreement") {
  for (const auto& e : catalog())
    for (std::uint64_t p : {0u, 2u, 3u, 5u}) {
      CAPTURE(e.key);
      CAPTURE(p);
      const Presentation pres = e.instantiate(FieldSpec(p));
      const HilbertData h = hilbert_series(buchberger(pres, 4), 4);
      for (std::size_t d = 0; d <= 4; ++d) CHECK(dim_oracle(pres, d) == h.coefficients[d]);
      for (std::size_t d = 0; d <= 3; ++d) CHECK(oracle::dimension(pres, d) == h.coefficients[d]);
    }
}

TEST_CASE("oracle agreement on random presentations") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const FieldSpec f(std::array<std::uint64_t, 3>{0, 2, 5}[i % 3]);
    const Presentation p = oracle::random_quadratic(rng, f, 2 + i % 2, 1 + i % 4);
    const HilbertData h = hilbert_series(buchberger(p, 4), 4);
    for (std::size_t d = 0; d <= 4; ++d) CHECK(dim_oracle(p, d) == h.coefficients[d]);
    for (std::size_t d = 0; d <= 3; ++d) CHECK(oracle::dimension(p, d) == h.coefficients[d]);
  }
}

TEST_CASE("gs_check examples") {
  const GsReport r31 = gs_check(series("R31", 0, 5), 4, 6);
  CHECK(r31.complete);
  CHECK(r31.pass);
  CHECK(r31.product == zs({1, 0, 0, 2, 9, 24, 126}));
  CHECK(r31.product == oracle::series_product({1, 4, 10, 18, 21}, {1, -4, 6}));

  // Free algebra: the geometric series times 1 - n t telescopes to 1.
  for (std::size_t n = 1; n <= 4; ++n) {
    Presentation free;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(std::string(1, char('a' + k)));
    free.generators = Alphabet::plain(names);
    const GsReport r = gs_check(hilbert_series(buchberger(free, 6), 6), n, 0);
    CHECK(!r.complete);
    CHECK(r.pass);
    REQUIRE(r.product.size() == 7);
    CHECK(r.product[0] == 1);
    for (std::size_t q = 1; q < r.product.size(); ++q) CHECK(r.product[q] == 0);
  }

  // A made-up series violating the inequality is caught.
  HilbertData bad;
  bad.coefficients = {1, 3, 2, 0};
  bad.exact_through = 3;
  CHECK(!gs_check(bad, 3, 1).pass);
  HilbertData truncated;
  truncated.coefficients = {1, 3, 5};
  truncated.exact_through = 2;
  const GsReport t = gs_check(truncated, 3, 4);
  CHECK(!t.complete);
  CHECK(t.product == zs({1, 0, 0}));
}

TEST_CASE("gs_check passes on computed series") {
  for (const auto& e : catalog())
    for (std::uint64_t p : {0u, 2u}) {
      const Presentation pres = e.instantiate(FieldSpec(p));
      const GsReport r = gs_check(series(e.key, p, 5), pres.generators.size(), pres.relations.size());
      CHECK(r.pass);
    }
  std::mt19937_64 rng(606);
  for (int i = 0; i < 40; ++i) {
    const FieldSpec f(std::array<std::uint64_t, 3>{0, 2, 5}[i % 3]);
    const Presentation p = oracle::random_quadratic(rng, f, 1 + i % 4, 1 + i % 7);
    const GsReport r = gs_check(hilbert_series(buchberger(p, 5), 5), p.generators.size(), p.relations.size());
    CHECK(r.pass);
  }
}

TEST_CASE("phi thresholds") {
  for (int k = 2; k <= 12; ++k) {
    const double c = std::cos(M_PI / (k + 1));
    CHECK(phi(k).value == doctest::Approx(1.0 / (4 * c * c)).epsilon(1e-12));
  }
  const auto exact = [](int k) { return *phi(k).exact; };
  CHECK(exact(2).to_string() == "1");
  CHECK(exact(3).to_string() == "1/2");
  CHECK(exact(4).to_string() == "3/2 - 1/2*sqrt(5)");
  CHECK(exact(5).to_string() == "1/3");
  CHECK(exact(4).value() == doctest::Approx(0.381966).epsilon(1e-6));
  for (int k = 2; k <= 5; ++k) CHECK(exact(k).value() == doctest::Approx(phi(k).value).epsilon(1e-12));
  CHECK(!phi(6).exact);
  CHECK_THROWS_AS(phi(1), Error);

  // ceil(phi_k m) exactly, against the floating value where it is safe.
  for (int k = 2; k <= 5; ++k)
    for (long m = 1; m <= 400; ++m) {
      const double v = exact(k).value() * m;
      if (std::abs(v - std::round(v)) < 1e-6) continue;
      CHECK(exact(k).ceil_times(m) == static_cast<long>(std::ceil(v)));
    }
  CHECK(exact(5).ceil_times(9) == 3);
  CHECK(exact(3).ceil_times(7) == 4);
  CHECK(exact(4).ceil_times(16) == 7);
}

TEST_CASE("series rendering") {
  CHECK(render_series(Coeffs{1, 4, 10, 18, 21, 0}) == "1 + 4t + 10t^2 + 18t^3 + 21t^4");
  CHECK(render_series(Coeffs{1, 1}) == "1 + t");
  CHECK(render_series(Coeffs{0, 0, 1}) == "t^2");
  CHECK(render_series(Coeffs{}) == "0");
  CHECK(render_series(zs({1, 0, 0, 2, 9, 24, 126})) == "1 + 2t^3 + 9t^4 + 24t^5 + 126t^6");
  CHECK(render_series(zs({1, -3, 1})) == "1 - 3t + t^2");
}
