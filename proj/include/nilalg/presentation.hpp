#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "nilalg/polynomial.hpp"

namespace nilalg {

/// A finitely presented graded algebra: generators in monomial order plus
/// homogeneous relations.
struct Presentation {
  FieldSpec field;
  Alphabet generators;
  std::vector<Polynomial> relations;
  std::optional<std::string> label;

  /// Throws unless every relation is nonzero, homogeneous, over `field`
  /// and written in `generators`.
  void validate() const;

  std::size_t max_relation_degree() const;

  /// Structural equality: field, generator names in order, relations in order.
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.field == b.field && a.generators.names() == b.generators.names() && a.relations == b.relations;
  }
};

/// Parses one relation expression. Juxtaposed single-character generators
/// multiply; '*' separates arbitrary names; `g^k` repeats a generator; an
/// integer or a fraction `n/m` may prefix a term. Coefficients are mapped
/// into `field`.
/// `line` only feeds error positions.
Polynomial parse_expression(std::string_view text, const Alphabet& alphabet, FieldSpec field, int line = 1);

/// Parses the text presentation format:
///
///     field 0
///     generators a b c x
///     relations
///     cb - bc + aa
///
/// '#' starts a comment. Relations must be nonzero and homogeneous.
Presentation parse_presentation(std::string_view text);

Presentation load_presentation(const std::string& path);

std::string serialize(const Presentation& p);

/// {"field": 0, "generators": [...], "relations": [[[coeff, [letters]], ...], ...]}
nlohmann::json to_json(const Presentation& p);

/// A coefficient as a JSON integer when it fits, otherwise as a string.
nlohmann::json scalar_json(const Scalar& c);

}  // namespace nilalg
