#include "nilalg/inflate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nilalg/catalog.hpp"

namespace nilalg {

namespace {

using Tensor = std::vector<std::vector<Scalar>>;

Tensor zero_tensor(FieldSpec f, std::size_t rows, std::size_t cols) {
  return Tensor(rows, std::vector<Scalar>(cols, Scalar::zero(f)));
}

bool tensor_is_zero(const Tensor& t) {
  for (const auto& row : t)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

}  // namespace

BiSeed split_seed(const Presentation& p, std::span<const std::string> x, std::span<const std::string> y) {
  p.validate();
  enum class Side { none, x, y };
  std::vector<Side> side(p.generators.size(), Side::none);
  auto mark = [&](std::span<const std::string> names, Side s) {
    for (const auto& name : names) {
      const Letter l = p.generators.letter(name);
      if (side[l] != Side::none) throw Error("generator '" + name + "' appears in both X and Y");
      side[l] = s;
    }
  };
  mark(x, Side::x);
  mark(y, Side::y);

  BiSeed seed;
  seed.field = p.field;
  std::vector<std::size_t> block_index(p.generators.size());
  for (Letter l = 0; l < p.generators.size(); ++l) {
    const std::string name = p.generators[l].name();
    if (side[l] == Side::none) throw Error("generator '" + name + "' is in neither X nor Y");
    auto& names = side[l] == Side::x ? seed.x_names : seed.y_names;
    block_index[l] = names.size();
    names.push_back(name);
  }
  if (seed.x_names.empty() && seed.y_names.empty()) throw Error("seed has no generators");

  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const Polynomial& r = p.relations[i];
    const std::string which = "relation " + std::to_string(i + 1) + " (" + r.to_string(p.generators) + ")";
    if (r.degree() != 2) throw Error(which + " is not quadratic");
    bool has_xx = false, has_yy = false, has_mixed = false;
    for (const auto& t : r) {
      const Side a = side[t.word[0]];
      const Side b = side[t.word[1]];
      if (a == Side::x && b == Side::x)
        has_xx = true;
      else if (a == Side::y && b == Side::y)
        has_yy = true;
      else
        has_mixed = true;
    }
    if (int(has_xx) + int(has_yy) + int(has_mixed) != 1)
      throw Error(which + " mixes the X.X, Y.Y and X.Y + Y.X classes");
    if (has_xx) {
      Tensor c = zero_tensor(p.field, seed.g_x(), seed.g_x());
      for (const auto& t : r) c[block_index[t.word[0]]][block_index[t.word[1]]] = t.coeff;
      seed.c_xx.push_back(std::move(c));
    } else if (has_yy) {
      Tensor c = zero_tensor(p.field, seed.g_y(), seed.g_y());
      for (const auto& t : r) c[block_index[t.word[0]]][block_index[t.word[1]]] = t.coeff;
      seed.c_yy.push_back(std::move(c));
    } else {
      Tensor cxy = zero_tensor(p.field, seed.g_x(), seed.g_y());
      Tensor cyx = zero_tensor(p.field, seed.g_y(), seed.g_x());
      for (const auto& t : r) {
        if (side[t.word[0]] == Side::x)
          cxy[block_index[t.word[0]]][block_index[t.word[1]]] = t.coeff;
        else
          cyx[block_index[t.word[0]]][block_index[t.word[1]]] = t.coeff;
      }
      seed.c_xy.push_back(std::move(cxy));
      seed.c_yx.push_back(std::move(cyx));
    }
  }
  for (const auto* block : {&seed.c_xx, &seed.c_yy})
    for (const auto& t : *block)
      if (tensor_is_zero(t)) throw Error("seed relation with all-zero coefficients");
  return seed;
}

Alphabet inflated_alphabet(const BiSeed& seed, std::uint32_t alpha, std::uint32_t beta) {
  std::vector<Generator> gens;
  for (const auto& base : seed.x_names)
    for (std::uint32_t s = 1; s <= alpha; ++s) gens.push_back(Generator{base, Family::x, s});
  for (const auto& base : seed.y_names)
    for (std::uint32_t t = 1; t <= beta; ++t) gens.push_back(Generator{base, Family::y, t});
  return Alphabet(std::move(gens));
}

namespace {

Letter x_letter(const BiSeed& seed, const Alphabet& alphabet, std::size_t j, std::uint32_t copy) {
  auto l = alphabet.find(Family::x, seed.x_names[j], copy);
  if (!l) throw Error("alphabet lacks " + seed.x_names[j] + "." + std::to_string(copy));
  return *l;
}

Letter y_letter(const BiSeed& seed, const Alphabet& alphabet, std::size_t k, std::uint32_t copy) {
  auto l = alphabet.find(Family::y, seed.y_names[k], copy);
  if (!l) throw Error("alphabet lacks " + seed.y_names[k] + "." + std::to_string(copy));
  return *l;
}

}  // namespace

Polynomial seed_relation(const BiSeed& seed, const RelationId& id, const Alphabet& alphabet) {
  std::vector<Term> terms;
  switch (id.cls) {
    case RelationClass::xx: {
      const Tensor& c = seed.c_xx.at(id.index);
      for (std::size_t j = 0; j < seed.g_x(); ++j)
        for (std::size_t l = 0; l < seed.g_x(); ++l)
          if (!c[j][l].is_zero())
            terms.push_back(
                Term{Word{x_letter(seed, alphabet, j, id.first), x_letter(seed, alphabet, l, id.second)}, c[j][l]});
      break;
    }
    case RelationClass::yy: {
      const Tensor& c = seed.c_yy.at(id.index);
      for (std::size_t k = 0; k < seed.g_y(); ++k)
        for (std::size_t w = 0; w < seed.g_y(); ++w)
          if (!c[k][w].is_zero())
            terms.push_back(
                Term{Word{y_letter(seed, alphabet, k, id.first), y_letter(seed, alphabet, w, id.second)}, c[k][w]});
      break;
    }
    case RelationClass::xy: {
      const Tensor& cxy = seed.c_xy.at(id.index);
      const Tensor& cyx = seed.c_yx.at(id.index);
      for (std::size_t j = 0; j < seed.g_x(); ++j)
        for (std::size_t k = 0; k < seed.g_y(); ++k) {
          const Letter xj = x_letter(seed, alphabet, j, id.first);
          const Letter yk = y_letter(seed, alphabet, k, id.second);
          if (!cxy[j][k].is_zero()) terms.push_back(Term{Word{xj, yk}, cxy[j][k]});
          if (!cyx[k][j].is_zero()) terms.push_back(Term{Word{yk, xj}, cyx[k][j]});
        }
      break;
    }
  }
  return Polynomial(seed.field, std::move(terms));
}

InflationResult inflate(const BiSeed& seed, std::uint32_t alpha, std::uint32_t beta) {
  if (alpha + beta == 0) throw Error("inflation with alpha = beta = 0 has an empty alphabet");
  InflationResult out;
  out.alpha = alpha;
  out.beta = beta;
  Presentation& p = out.presentation;
  p.field = seed.field;
  p.generators = inflated_alphabet(seed, alpha, beta);
  auto emit = [&](RelationId id) {
    out.relation_ids.push_back(id);
    p.relations.push_back(seed_relation(seed, id, p.generators));
  };
  for (std::size_t q = 0; q < seed.r_xx(); ++q)
    for (std::uint32_t a = 1; a <= alpha; ++a)
      for (std::uint32_t b = 1; b <= alpha; ++b) emit({RelationClass::xx, q, a, b});
  for (std::size_t q = 0; q < seed.r_yy(); ++q)
    for (std::uint32_t s = 1; s <= beta; ++s)
      for (std::uint32_t t = 1; t <= beta; ++t) emit({RelationClass::yy, q, s, t});
  for (std::size_t q = 0; q < seed.r_xy(); ++q)
    for (std::uint32_t a = 1; a <= alpha; ++a)
      for (std::uint32_t s = 1; s <= beta; ++s) emit({RelationClass::xy, q, a, s});

  // Distinct indices must give distinct relations for a valid seed.
  std::vector<const Polynomial*> sorted;
  for (const auto& r : p.relations) sorted.push_back(&r);
  auto key = [&](const Polynomial* f) {
    std::vector<std::pair<std::vector<Letter>, std::string>> k;
    for (const auto& t : *f) k.emplace_back(std::vector<Letter>(t.word.begin(), t.word.end()), t.coeff.to_string());
    return k;
  };
  std::set<std::vector<std::pair<std::vector<Letter>, std::string>>> seen;
  for (const auto* f : sorted)
    if (f->is_zero() || !seen.insert(key(f)).second) throw std::logic_error("inflation produced a duplicate or zero relation");

  p.validate();
  p.label = "inflation(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
  out.generator_count = p.generators.size();
  out.relation_count = p.relations.size();
  return out;
}

LiftedProduct lift_product(const BiSeed& seed, const Word& u, const RelationId& f, const Word& v,
                           std::span<const std::uint32_t> s, std::span<const std::uint32_t> t, std::uint32_t alpha,
                           std::uint32_t beta) {
  if (f.first != 1 || f.second != 1) throw Error("lift_product expects a relation of R^(1,1)");
  const Alphabet source = inflated_alphabet(seed, 1, 1);
  const Alphabet target = inflated_alphabet(seed, alpha, beta);

  std::size_t x_count = 0, y_count = 0;
  for (const Word* w : {&u, &v})
    for (Letter l : *w) (source[l].family == Family::x ? x_count : y_count)++;
  const std::size_t fx = f.cls == RelationClass::xx ? 2 : f.cls == RelationClass::xy ? 1 : 0;
  if (s.size() != x_count + fx || t.size() != y_count + 2 - fx)
    throw Error("index vectors do not match the signature of U f V");
  for (std::uint32_t c : s)
    if (c < 1 || c > alpha) throw Error("X copy index out of range");
  for (std::uint32_t c : t)
    if (c < 1 || c > beta) throw Error("Y copy index out of range");

  std::size_t next_s = 0, next_t = 0;
  auto lift_word = [&](const Word& w) {
    Word out;
    for (Letter l : w) {
      const Generator& g = source[l];
      const std::uint32_t copy = g.family == Family::x ? s[next_s++] : t[next_t++];
      auto lifted = target.find(g.family, g.base, copy);
      if (!lifted) throw Error("target alphabet lacks a lifted letter");
      out.push_back(*lifted);
    }
    return out;
  };

  LiftedProduct out;
  out.left = lift_word(u);
  out.relation = f;
  switch (f.cls) {
    case RelationClass::xx:
      out.relation.first = s[next_s++];
      out.relation.second = s[next_s++];
      break;
    case RelationClass::yy:
      out.relation.first = t[next_t++];
      out.relation.second = t[next_t++];
      break;
    case RelationClass::xy:
      out.relation.first = s[next_s++];
      out.relation.second = t[next_t++];
      break;
  }
  out.right = lift_word(v);
  return out;
}

Word rename(const Word& w, const Alphabet& from, const Alphabet& to) {
  Word out;
  for (Letter l : w) out.push_back(to.letter(from[l].name()));
  return out;
}

Polynomial rename(const Polynomial& f, const Alphabet& from, const Alphabet& to) {
  std::vector<Term> terms;
  for (const auto& t : f) terms.push_back(Term{rename(t.word, from, to), t.coeff});
  return Polynomial(f.field(), std::move(terms));
}

BiSeed r31_seed(FieldSpec field) {
  const std::vector<std::string> x = {"a", "b", "c"}, y = {"x"};
  return split_seed(builtin("R31", field), x, y);
}

BiSeed r32_seed(FieldSpec field) {
  const std::vector<std::string> x = {"a", "b", "c"}, y = {"x", "y"};
  return split_seed(builtin("R32", field), x, y);
}

std::uint64_t ceil_n2_over_3(std::uint64_t n) { return (n * n + 2) / 3; }

Construction construct5_detail(std::uint64_t n, FieldSpec field) {
  if (n == 0) throw Error("construct5 needs n >= 1");
  const auto a = static_cast<std::uint32_t>(n / 3);
  Construction c;
  switch (n % 3) {
    case 0:
      c.seed = "R31";
      c.inflation = inflate(r31_seed(field), a, 0);
      break;
    case 1:
      c.seed = "R31";
      c.inflation = inflate(r31_seed(field), a, 1);
      break;
    default:
      c.seed = "R32";
      c.inflation = inflate(r32_seed(field), a, 1);
      break;
  }
  c.inflation.presentation.label = "construct5(" + std::to_string(n) + ")";
  return c;
}

Presentation construct5(std::uint64_t n, FieldSpec field) { return construct5_detail(n, field).inflation.presentation; }

}  // namespace nilalg
