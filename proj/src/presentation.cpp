#include "nilalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nilalg {

void Presentation::validate() const {
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const Polynomial& r = relations[i];
    const std::string which = "relation " + std::to_string(i + 1);
    if (r.field() != field) throw Error(which + " is over a different field");
    if (r.is_zero()) throw Error(which + " is zero");
    if (r.degree() == 0) throw Error(which + " has degree 0");
    if (!r.is_homogeneous()) throw Error(which + " is not homogeneous");
    for (const auto& t : r)
      for (Letter l : t.word)
        if (l >= generators.size()) throw Error(which + " uses a letter outside the generators");
  }
}

std::size_t Presentation::max_relation_degree() const {
  std::size_t d = 0;
  for (const auto& r : relations) d = std::max(d, r.degree());
  return d;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Alphabet& alphabet, FieldSpec field, int line, int column_offset)
      : text_(text), alphabet_(alphabet), field_(field), line_(line), offset_(column_offset) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    while (true) {
      terms.push_back(parse_term(negative));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = text_[pos_++] == '-';
    }
    return Polynomial(field_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  mpz_class parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void parse_factor(Word& word) {
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view ident = text_.substr(start, pos_ - start);
    std::vector<Letter> letters;
    if (auto l = alphabet_.find(ident)) {
      letters.push_back(*l);
    } else {
      for (std::size_t i = 0; i < ident.size(); ++i) {
        auto l = alphabet_.find(ident.substr(i, 1));
        if (!l) {
          pos_ = start;
          fail("unknown generator '" + std::string(ident) + "'");
        }
        letters.push_back(*l);
      }
    }
    std::size_t repeat = 1;
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
      const mpz_class e = parse_integer();
      if (e > 64) fail("exponent too large");
      repeat = e.get_ui();
    }
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) word.push_back(letters[i]);
    for (std::size_t i = 0; i < repeat; ++i) word.push_back(letters.back());
  }

  Term parse_term(bool negative) {
    skip_ws();
    mpq_class coeff = 1;
    bool have_coeff = false;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_coeff = true;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator after '/'");
        const mpz_class den = parse_integer();
        if (den == 0) fail("zero denominator");
        coeff /= den;
      }
    }
    Word word;
    while (true) {
      skip_ws();
      if (peek() == '*') {
        if (!have_coeff && !have_factor) fail("'*' must follow a coefficient or generator");
        ++pos_;
        skip_ws();
        if (!is_ident_start(peek())) fail("expected generator after '*'");
      }
      if (!is_ident_start(peek())) break;
      parse_factor(word);
      have_factor = true;
    }
    if (!have_coeff && !have_factor) fail(at_end() ? "unexpected end of expression" : "expected a term");
    if (negative) coeff = -coeff;
    try {
      return Term{std::move(word), Scalar(field_, coeff)};
    } catch (const DivisionByZero&) {
      fail("denominator vanishes in characteristic " + std::to_string(field_.characteristic()));
    }
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  FieldSpec field_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Polynomial parse_expression(std::string_view text, const Alphabet& alphabet, FieldSpec field, int line) {
  return ExpressionParser(text, alphabet, field, line, 0).parse();
}

Presentation parse_presentation(std::string_view text) {
  enum class Stage { field, generators, relations_header, relations } stage = Stage::field;
  Presentation p;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t indent = line.find_first_not_of(" \t\r");
    if (indent == std::string_view::npos) continue;
    const std::string_view body = trim(line);
    const auto words = split_ws(body);
    switch (stage) {
      case Stage::field: {
        if (words.size() != 2 || words[0] != "field") throw ParseError("expected 'field <characteristic>'", line_no, 1);
        if (words[1].find_first_not_of("0123456789") != std::string::npos || words[1].size() > 10)
          throw ParseError("bad characteristic '" + words[1] + "'", line_no, static_cast<int>(indent) + 7);
        try {
          p.field = FieldSpec(std::stoull(words[1]));
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, static_cast<int>(indent) + 7);
        }
        stage = Stage::generators;
        break;
      }
      case Stage::generators: {
        if (words.empty() || words[0] != "generators") throw ParseError("expected 'generators <name> ...'", line_no, 1);
        std::vector<std::string> names(words.begin() + 1, words.end());
        for (const auto& n : names)
          if (!is_ident_start(n[0]) || !std::all_of(n.begin(), n.end(), is_ident_char))
            throw ParseError("bad generator name '" + n + "'", line_no, 1);
        try {
          p.generators = Alphabet::plain(std::span<const std::string>(names));
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, 1);
        }
        stage = Stage::relations_header;
        break;
      }
      case Stage::relations_header:
        if (words.size() != 1 || words[0] != "relations") throw ParseError("expected 'relations'", line_no, 1);
        stage = Stage::relations;
        break;
      case Stage::relations: {
        Polynomial r = ExpressionParser(body, p.generators, p.field, line_no, static_cast<int>(indent)).parse();
        if (r.is_zero()) throw ParseError("relation is zero", line_no, static_cast<int>(indent) + 1);
        if (!r.is_homogeneous()) throw ParseError("relation is not homogeneous", line_no, static_cast<int>(indent) + 1);
        p.relations.push_back(std::move(r));
        break;
      }
    }
  }
  if (stage == Stage::field) throw ParseError("missing 'field' line", line_no, 1);
  if (stage == Stage::generators) throw ParseError("missing 'generators' line", line_no, 1);
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  if (p.label) out << "# " << *p.label << '\n';
  out << "field " << p.field.characteristic() << '\n';
  out << "generators";
  for (const auto& n : p.generators.names()) out << ' ' << n;
  out << "\nrelations\n";
  for (const auto& r : p.relations) out << r.to_string(p.generators) << '\n';
  return out.str();
}

nlohmann::json scalar_json(const Scalar& c) {
  if (!c.field().is_rational()) return c.residue();
  const mpq_class& q = c.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json j;
  j["field"] = p.field.characteristic();
  j["generators"] = p.generators.names();
  auto rels = nlohmann::json::array();
  for (const auto& r : p.relations) {
    auto terms = nlohmann::json::array();
    for (const auto& t : r) {
      auto letters = nlohmann::json::array();
      for (Letter l : t.word) letters.push_back(p.generators[l].name());
      terms.push_back(nlohmann::json::array({scalar_json(t.coeff), letters}));
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j;
}

}  // namespace nilalg
