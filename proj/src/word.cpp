#include "nilalg/word.hpp"

#include <algorithm>

namespace nilalg {

std::string Generator::name() const {
  if (family == Family::plain) return base;
  return base + "." + std::to_string(copy);
}

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  if (generators_.size() > 0xFFFF) throw Error("too many generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const std::string name = generators_[i].name();
    if (name.empty()) throw Error("empty generator name");
    if (!by_name_.emplace(name, static_cast<Letter>(i)).second) throw Error("duplicate generator '" + name + "'");
    if (name.size() != 1) single_character_ = false;
  }
}

Alphabet Alphabet::plain(std::span<const std::string> names) {
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back(Generator{n, Family::plain, 1});
  return Alphabet(std::move(gens));
}

Alphabet Alphabet::plain(std::initializer_list<std::string_view> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return plain(std::span<const std::string>(v));
}

std::vector<std::string> Alphabet::names() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.name());
  return out;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw Error("unknown generator '" + std::string(name) + "'");
}

std::optional<Letter> Alphabet::find(Family family, std::string_view base, std::uint32_t copy) const {
  auto l = find(Generator{std::string(base), family, copy}.name());
  if (l && generators_[*l].family == family) return l;
  return std::nullopt;
}

std::optional<std::size_t> Word::find(const Word& w) const {
  if (w.degree() > degree()) return std::nullopt;
  auto it = std::search(letters_.begin(), letters_.end(), w.letters_.begin(), w.letters_.end());
  if (it == letters_.end() && !w.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

std::string Word::to_string(const Alphabet& alphabet) const {
  if (empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (i && !alphabet.single_character()) out += '*';
    out += alphabet[letters_[i]].name();
  }
  return out;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) {
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  for (std::size_t i = 0; i < u.degree(); ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

std::strong_ordering deglex_cmp(const Word& u, const Word& v, const Alphabet& order) {
  for (const Word* w : {&u, &v})
    for (Letter l : *w)
      if (l >= order.size()) throw Error("letter " + std::to_string(l) + " is not in the generator order");
  return deglex_compare(u, v);
}

namespace {

const Generator& indexed(const Alphabet& alphabet, Letter l) {
  const Generator& g = alphabet[l];
  if (g.family == Family::plain)
    throw Error("generator '" + g.name() + "' is not bi-indexed; S_x, S_y and Phi need X/Y families");
  return g;
}

}  // namespace

Word apply_hom(const Word& w, Hom hom, const Alphabet& alphabet) {
  Word out;
  for (Letter l : w) {
    const Generator& g = indexed(alphabet, l);
    switch (hom) {
      case Hom::s_x:
        if (g.family == Family::x) out.push_back(l);
        break;
      case Hom::s_y:
        if (g.family == Family::y) out.push_back(l);
        break;
      case Hom::phi: {
        auto target = alphabet.find(g.family, g.base, 1);
        if (!target) throw Error("alphabet has no copy 1 of '" + g.base + "'");
        out.push_back(*target);
        break;
      }
    }
  }
  return out;
}

Signature signature_of(const Word& w, const Alphabet& alphabet) {
  Signature sig;
  sig.n = w.degree();
  for (Letter l : w) {
    const Generator& g = indexed(alphabet, l);
    (g.family == Family::x ? sig.s : sig.t).push_back(g.copy);
  }
  sig.n_x = sig.s.size();
  return sig;
}

}  // namespace nilalg
