#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilalg/presentation.hpp"

namespace nilalg {

/// A named algebra with its known invariants.
struct CatalogEntry {
  std::string key;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::vector<std::uint64_t> expected_hilbert;
  std::optional<std::size_t> expected_nilpotency;
  std::string note;

  Presentation instantiate(FieldSpec field) const;
};

/// R31, R32 and the semigroup algebras P41..P45.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view key);

/// The catalog presentation for `key` over `field`.
Presentation builtin(std::string_view key, FieldSpec field);

}  // namespace nilalg
