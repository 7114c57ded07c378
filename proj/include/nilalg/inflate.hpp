#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nilalg/presentation.hpp"

namespace nilalg {

enum class RelationClass { xx, yy, xy };

/// Bi-graded quadratic seed: coefficient tensors of the X.X, Y.Y and
/// X.Y + Y.X relations of a presentation on X u Y.
struct BiSeed {
  FieldSpec field;
  std::vector<std::string> x_names;
  std::vector<std::string> y_names;
  /// c_xx[p][j][l] is the coefficient of x_j x_l in the p-th X.X relation;
  /// likewise c_yy[q][k][w]; c_xy[r][j][k] for x_j y_k and c_yx[r][k][j] for y_k x_j.
  std::vector<std::vector<std::vector<Scalar>>> c_xx, c_yy, c_xy, c_yx;

  std::size_t g_x() const { return x_names.size(); }
  std::size_t g_y() const { return y_names.size(); }
  std::size_t r_xx() const { return c_xx.size(); }
  std::size_t r_yy() const { return c_yy.size(); }
  std::size_t r_xy() const { return c_xy.size(); }
};

/// Splits a quadratic presentation whose relations each lie in X.X, Y.Y or
/// X.Y + Y.X. X and Y must partition the generators; each block keeps the
/// presentation's generator order.
BiSeed split_seed(const Presentation& p, std::span<const std::string> x, std::span<const std::string> y);

/// One relation of an inflated algebra: class, index within the class and
/// the two copy indices ((a, b), (s, t) or (a, s)).
struct RelationId {
  RelationClass cls = RelationClass::xx;
  std::size_t index = 0;
  std::uint32_t first = 1;
  std::uint32_t second = 1;

  friend bool operator==(const RelationId&, const RelationId&) = default;
};

/// X_alpha u Y_beta named base.copy; X block first, each block ordered by
/// base then copy.
Alphabet inflated_alphabet(const BiSeed& seed, std::uint32_t alpha, std::uint32_t beta);

/// The relation `id` written over `alphabet`.
Polynomial seed_relation(const BiSeed& seed, const RelationId& id, const Alphabet& alphabet);

struct InflationResult {
  Presentation presentation;
  std::vector<RelationId> relation_ids;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::size_t generator_count = 0;
  std::size_t relation_count = 0;
};

/// R^(alpha, beta). Throws when alpha + beta == 0.
InflationResult inflate(const BiSeed& seed, std::uint32_t alpha, std::uint32_t beta);

struct LiftedProduct {
  Word left;
  RelationId relation;
  Word right;
};

/// Lifts U f V over X_1 u Y_1 to the unique U' f' V' over X_alpha u Y_beta
/// with Phi(U' f' V') = U f V lying in the space of signature (n, n_x, s, t).
/// U and V are words over inflated_alphabet(seed, 1, 1); the result is over
/// inflated_alphabet(seed, alpha, beta).
LiftedProduct lift_product(const BiSeed& seed, const Word& u, const RelationId& f, const Word& v,
                           std::span<const std::uint32_t> s, std::span<const std::uint32_t> t, std::uint32_t alpha,
                           std::uint32_t beta);

/// Same word with letters renamed from one alphabet into another by name.
Word rename(const Word& w, const Alphabet& from, const Alphabet& to);
Polynomial rename(const Polynomial& f, const Alphabet& from, const Alphabet& to);

/// Seeds split from the catalog algebras R31 (X = abc, Y = x) and R32 (X = abc, Y = xy).
BiSeed r31_seed(FieldSpec field);
BiSeed r32_seed(FieldSpec field);

/// ceil(n^2 / 3).
std::uint64_t ceil_n2_over_3(std::uint64_t n);

struct Construction {
  InflationResult inflation;
  /// "R31" or "R32".
  std::string seed;
};

/// A 5-step nilpotent quadratic algebra with n generators and ceil(n^2/3)
/// relations: n = 3a uses R31 at (a, 0), n = 3a + 1 uses R31 at (a, 1) and
/// n = 3a + 2 uses R32 at (a, 1).
Construction construct5_detail(std::uint64_t n, FieldSpec field);
Presentation construct5(std::uint64_t n, FieldSpec field);

}  // namespace nilalg
