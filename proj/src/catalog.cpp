#include "nilalg/catalog.hpp"

namespace nilalg {

Presentation CatalogEntry::instantiate(FieldSpec field) const {
  Presentation p;
  p.field = field;
  p.generators = Alphabet::plain(std::span<const std::string>(generators));
  for (std::size_t i = 0; i < relations.size(); ++i)
    p.relations.push_back(parse_expression(relations[i], p.generators, field, static_cast<int>(i + 1)));
  p.label = key;
  p.validate();
  return p;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"R31",
       {"a", "b", "c", "x"},
       {"cb - bc + aa", "bb + aa - ac", "cc - ba", "xx", "ax + bx - xa - xb", "bx + cx - xa - xb - xc"},
       {1, 4, 10, 18, 21},
       5,
       "5-step nilpotent seed for n = 3a and n = 3a + 1"},
      {"R32",
       {"a", "b", "c", "x", "y"},
       {"cb - bc + aa", "bb + aa - ac", "cc - ba", "yy - xx", "yx", "ay + bx + cy - xb - yc", "ax + by - xa - yb",
        "cy + bx - ya - xb - yc", "ax + by + cx - ya - xb"},
       {1, 5, 16, 35, 43},
       5,
       "5-step nilpotent seed for n = 3a + 2"},
      {"P41", {"a"}, {"aa"}, {1, 1}, 2, "semigroup algebra, 1 generator"},
      {"P42", {"a", "b"}, {"bb - aa", "ba"}, {1, 2, 2}, 3, "semigroup algebra, 2 generators"},
      {"P43", {"a", "b", "c"}, {"cc - ba", "cb - aa", "bb", "ca"}, {1, 3, 5, 4}, 4, "semigroup algebra, 3 generators"},
      {"P44",
       {"a", "b", "c", "d"},
       {"dd - ca", "dc - ab", "db - aa", "da", "cd - bb", "cc - ba", "cb - bc"},
       {1, 4, 9, 8},
       4,
       "semigroup algebra, 4 generators"},
      {"P45",
       {"a", "b", "c", "d", "e"},
       {"de - eb", "ce - db", "ee - da", "ed - cb", "dd - bb", "cd - ab", "ec - ca", "dc - ba", "cc - aa", "ea"},
       {1, 5, 15, 25},
       4,
       "semigroup algebra, 5 generators"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;
  throw Error("unknown catalog key '" + std::string(key) + "'");
}

Presentation builtin(std::string_view key, FieldSpec field) { return catalog_entry(key).instantiate(field); }

}  // namespace nilalg
