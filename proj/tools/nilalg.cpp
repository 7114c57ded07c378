#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilalg/catalog.hpp"
#include "nilalg/corpus.hpp"
#include "nilalg/groebner.hpp"
#include "nilalg/hilbert.hpp"
#include "nilalg/inflate.hpp"
#include "nilalg/presentation.hpp"

using namespace nilalg;
using json = nlohmann::json;

namespace {

// Exit codes: 0 all checks pass, 1 a requested check failed, 2 bad input.
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Globals {
  std::optional<std::uint64_t> characteristic;
  bool json = false;
  bool strict = false;
  bool timings = false;
  std::string seedfile;
};

class Stopwatch {
 public:
  void start(const std::string& phase) {
    phase_ = phase;
    begin_ = std::chrono::steady_clock::now();
  }
  void stop() {
    const auto end = std::chrono::steady_clock::now();
    ms_[phase_] += std::chrono::duration<double, std::milli>(end - begin_).count();
  }
  const std::map<std::string, double>& phases() const { return ms_; }

 private:
  std::string phase_;
  std::chrono::steady_clock::time_point begin_;
  std::map<std::string, double> ms_;
};

json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// "@KEY" names a catalog algebra; anything else is a presentation file.
Presentation resolve(const std::string& input, std::optional<std::uint64_t> characteristic) {
  if (input.starts_with('@')) return builtin(input.substr(1), FieldSpec(characteristic.value_or(0)));
  Presentation p = load_presentation(input);
  if (!characteristic || FieldSpec(*characteristic) == p.field) return p;
  if (!p.field.is_rational())
    throw Error(input + " declares characteristic " + std::to_string(p.field.characteristic()) +
                ", cannot reinterpret in characteristic " + std::to_string(*characteristic));
  Presentation q = p;
  q.field = FieldSpec(*characteristic);
  q.relations.clear();
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    Polynomial r = p.relations[i].in_field(q.field);
    if (r.is_zero())
      throw Error("relation " + std::to_string(i + 1) + " vanishes in characteristic " +
                  std::to_string(*characteristic));
    q.relations.push_back(std::move(r));
  }
  q.validate();
  return q;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

void print_timings(const Stopwatch& clock) {
  std::ostringstream line;
  line << "timings (ms):";
  for (const auto& [phase, ms] : clock.phases()) line << ' ' << phase << '=' << std::fixed << std::setprecision(1) << ms;
  std::cerr << line.str() << '\n';
}

// One pipeline run: completion, series, verdict and GS product.
struct Run {
  std::string input;
  Presentation presentation;
  GroebnerBasis basis;
  HilbertData series;
  NilpotencyVerdict verdict;
  GsReport gs;
  std::optional<bool> oracle_ok;
  std::vector<std::string> oracle_notes;
  Stopwatch clock;
};

Run run_pipeline(const std::string& input, const Globals& g, std::size_t maxdeg, bool oracle_check) {
  Run run;
  run.input = input;
  run.clock.start("parse");
  run.presentation = resolve(input, g.characteristic);
  run.clock.stop();
  run.clock.start("completion");
  run.basis = buchberger(run.presentation, maxdeg);
  run.clock.stop();
  run.clock.start("series");
  run.series = hilbert_series(run.basis, maxdeg);
  run.verdict = nilpotency_index(run.basis);
  run.gs = gs_check(run.series, run.presentation.generators.size(), run.presentation.relations.size());
  run.clock.stop();
  if (oracle_check) {
    run.clock.start("oracle");
    run.oracle_ok = true;
    for (std::size_t d = 0; d <= maxdeg; ++d) {
      std::uint64_t dim = 0;
      try {
        dim = dim_oracle(run.presentation, d);
      } catch (const Error&) {
        run.oracle_notes.push_back("degree " + std::to_string(d) + " and above skipped: free component too large");
        break;
      }
      if (dim != run.series.coefficients[d]) {
        run.oracle_ok = false;
        run.oracle_notes.push_back("degree " + std::to_string(d) + ": oracle " + std::to_string(dim) +
                                   ", series " + std::to_string(run.series.coefficients[d]));
      }
    }
    run.clock.stop();
  }
  return run;
}

json report_json(const Run& run, const Globals& g) {
  json j;
  j["input"] = run.input;
  j["field"] = run.presentation.field.characteristic();
  j["generators"] = run.presentation.generators.size();
  j["relations"] = run.presentation.relations.size();
  j["basis_size"] = run.basis.elements.size();
  j["complete_through"] = run.basis.complete_through;
  j["hilbert"] = run.series.coefficients;
  j["verdict"] = run.verdict.to_string();
  json product = json::array();
  for (const auto& c : run.gs.product) product.push_back(big(c));
  j["gs"] = {{"product", product}, {"complete", run.gs.complete}, {"pass", run.gs.pass}};
  if (run.oracle_ok) j["oracle"] = {{"agrees", *run.oracle_ok}, {"notes", run.oracle_notes}};
  if (g.timings) j["timings_ms"] = run.clock.phases();
  return j;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void report_oracle(const Run& run) {
  for (const auto& note : run.oracle_notes) std::cerr << "oracle: " << note << '\n';
}

int cmd_gb(const Globals& g, const std::string& input, std::size_t maxdeg, const std::string& out) {
  Run run = run_pipeline(input, g, maxdeg, false);
  if (g.json) {
    json j = report_json(run, g);
    std::vector<std::string> elements;
    for (const auto& e : run.basis.elements) elements.push_back(e.to_string(run.basis.alphabet));
    j["basis"] = elements;
    if (out.empty())
      emit_json(j);
    else
      write_output(j.dump(2) + "\n", out);
  } else {
    write_output(export_basis(run.basis), out);
  }
  print_timings(run.clock);
  return 0;
}

int cmd_series(const Globals& g, const std::string& input, std::size_t k, std::optional<std::size_t> maxdeg,
               bool oracle_check, bool nilpotent_query) {
  const std::size_t through = maxdeg.value_or(k);
  if (through < k)
    throw Error("--maxdeg " + std::to_string(through) + " is below --k " + std::to_string(k) +
                ": the basis would be incomplete for the query");
  Run run = run_pipeline(input, g, through, oracle_check);
  const bool nilpotent_k = run.verdict.nilpotent && run.verdict.degree <= k;
  if (g.json) {
    json j = report_json(run, g);
    j["k"] = k;
    j["nilpotent_k"] = nilpotent_k;
    emit_json(j);
  } else {
    if (nilpotent_query) std::cout << run.verdict.to_string() << '\n';
    std::cout << "H(t) = " << render_series(run.series.coefficients) << '\n';
  }
  report_oracle(run);
  print_timings(run.clock);
  if (run.oracle_ok && !*run.oracle_ok) return kCheckFailed;
  if (nilpotent_query && g.strict && !nilpotent_k) return kCheckFailed;
  return 0;
}

int cmd_gs(const Globals& g, const std::string& input, std::size_t maxdeg) {
  Run run = run_pipeline(input, g, maxdeg, false);
  if (g.json) {
    emit_json(report_json(run, g));
  } else {
    std::cout << "H(t) = " << render_series(run.series.coefficients) << '\n';
    std::cout << "H(t)(1 - " << run.presentation.generators.size() << "t + " << run.presentation.relations.size()
              << "t^2) = " << render_series(run.gs.product) << (run.gs.complete ? "" : " + ...") << '\n';
    std::cout << (run.gs.pass ? "pass" : "FAIL") << '\n';
  }
  print_timings(run.clock);
  return run.gs.pass ? 0 : kCheckFailed;
}

json inflation_json(const InflationResult& r) {
  json j = to_json(r.presentation);
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["generator_count"] = r.generator_count;
  j["relation_count"] = r.relation_count;
  return j;
}

std::string summary_text(const Presentation& p) {
  return "generators " + std::to_string(p.generators.size()) + "\nrelations " + std::to_string(p.relations.size()) +
         "\n";
}

int cmd_construct(const Globals& g, std::uint64_t n, bool verify, bool summary, const std::string& out) {
  if (n < 1) throw Error("--n must be at least 1");
  const FieldSpec field(g.characteristic.value_or(0));
  Stopwatch clock;
  clock.start("parse");
  const Construction c = construct5_detail(n, field);
  clock.stop();
  const Presentation& p = c.inflation.presentation;

  std::optional<NilpotencyVerdict> verdict;
  bool ok = true;
  if (verify) {
    clock.start("completion");
    const GroebnerBasis gb = buchberger(p, 5);
    clock.stop();
    clock.start("series");
    verdict = nilpotency_index(gb);
    clock.stop();
    ok = p.generators.size() == n && p.relations.size() == ceil_n2_over_3(n) && verdict->nilpotent &&
         verdict->degree <= 5;
  }

  if (g.json) {
    json j = inflation_json(c.inflation);
    j["n"] = n;
    j["seed"] = c.seed;
    if (verdict) j["verify"] = {{"expected_relations", ceil_n2_over_3(n)}, {"verdict", verdict->to_string()}, {"pass", ok}};
    if (g.timings) j["timings_ms"] = clock.phases();
    write_output(j.dump(2) + "\n", out);
  } else {
    write_output(summary ? summary_text(p) : serialize(p), out);
  }
  if (verdict)
    std::cerr << "verify: " << p.generators.size() << " generators, " << p.relations.size()
              << " relations (ceil(n^2/3) = " << ceil_n2_over_3(n) << "), " << verdict->to_string() << ": "
              << (ok ? "pass" : "FAIL") << '\n';
  print_timings(clock);
  return ok ? 0 : kCheckFailed;
}

int cmd_inflate(const Globals& g, std::string input, std::vector<std::string> x, std::vector<std::string> y,
                std::uint32_t alpha, std::uint32_t beta, bool summary, const std::string& out) {
  if (input.empty()) input = g.seedfile;
  if (input.empty()) throw Error("inflate needs a seed: a file, a catalog key or --seedfile");
  if (x.empty() && y.empty()) {
    if (input == "@R31") x = {"a", "b", "c"}, y = {"x"};
    else if (input == "@R32") x = {"a", "b", "c"}, y = {"x", "y"};
    else throw Error("--X and --Y are required for this seed");
  }
  const BiSeed seed = split_seed(resolve(input, g.characteristic), x, y);
  const InflationResult r = inflate(seed, alpha, beta);
  if (g.json)
    write_output(inflation_json(r).dump(2) + "\n", out);
  else
    write_output(summary ? summary_text(r.presentation) : serialize(r.presentation), out);
  return 0;
}

// verify-appendix

struct Row {
  std::string name;
  std::string detail;
  bool pass = false;
  std::vector<std::string> diff;
};

bool series_equal(const std::vector<std::uint64_t>& got, const std::vector<std::uint64_t>& expected) {
  for (std::size_t q = 0; q < std::max(got.size(), expected.size()); ++q) {
    const std::uint64_t a = q < got.size() ? got[q] : 0;
    const std::uint64_t b = q < expected.size() ? expected[q] : 0;
    if (a != b) return false;
  }
  return true;
}

std::vector<Row> verify_table(int which, const std::vector<std::uint64_t>& primes) {
  constexpr std::size_t maxdeg = 6;
  const std::string key = appendix_algebra(which);
  const std::vector<std::uint64_t>& expected = catalog_entry(key).expected_hilbert;
  std::vector<Row> rows;

  const GroebnerBasis gb = buchberger(builtin(key, FieldSpec::rationals()), maxdeg);
  const CorpusMatch m = match_corpus(gb, appendix_table(which), irregular_entries(which));
  Row corpus{"corpus", "", m.pass(), {}};
  corpus.detail = std::to_string(m.matched) + "/" + std::to_string(m.corpus_size) + " printed entries matched, " +
                  std::to_string(m.computed_size) + " computed elements";
  if (!m.explained.empty()) corpus.detail += ", " + std::to_string(m.explained.size()) + " explained by flagged entries";
  corpus.diff = m.mismatches;
  for (const auto& f : m.flagged) corpus.diff.push_back("flagged " + f);
  for (std::size_t i : m.unmatched_computed)
    corpus.diff.push_back("computed element with no printed counterpart: " +
                          gb.elements[i].to_string(gb.alphabet));
  if (m.computed_size != m.corpus_size)
    corpus.diff.push_back("basis size " + std::to_string(m.computed_size) + " differs from table size " +
                          std::to_string(m.corpus_size));
  rows.push_back(std::move(corpus));

  const IntegerBasis ib = integerize(gb);
  std::set<mpz_class> lcs(ib.leading_coefficients.begin(), ib.leading_coefficients.end());
  std::vector<std::string> lc_text;
  for (const auto& c : lcs) lc_text.push_back(c.get_str());
  rows.push_back({"2^j", "leading coefficients " + join(lc_text, ", "), ib.leading_powers_of_two, {}});

  const HilbertData h0 = hilbert_series(gb, maxdeg);
  Row series{"series", render_series(h0.coefficients), series_equal(h0.coefficients, expected), {}};
  if (!series.pass) series.diff.push_back("expected " + render_series(expected));
  rows.push_back(std::move(series));

  const auto lw0 = gb.leading_words();
  for (std::uint64_t p : primes) {
    const TransferResult tr = transfer_mod_p(ib, p, maxdeg, builtin(key, FieldSpec(p)));
    const GroebnerBasis direct = buchberger(builtin(key, FieldSpec(p)), maxdeg);
    const HilbertData hp = hilbert_series(direct, maxdeg);
    Row row{"p=" + std::to_string(p), "", tr.valid && tr.same_leading_words, {}};
    row.detail = std::string(tr.report.ok() ? "confluent" : "not confluent") + ", " +
                 (tr.ideal_matches.value_or(false) ? "same ideal" : "ideal differs") + ", " +
                 (tr.same_leading_words ? "same leading words" : "leading words differ") + ", series " +
                 (series_equal(hp.coefficients, expected) ? "equal" : "differs");
    for (const auto& problem : tr.report.problems) row.diff.push_back(problem);
    if (!series_equal(hp.coefficients, expected))
      row.diff.push_back("direct series over GF(" + std::to_string(p) + "): " + render_series(hp.coefficients));
    rows.push_back(std::move(row));
  }

  const GroebnerBasis gb2 = buchberger(builtin(key, FieldSpec(2)), maxdeg);
  const HilbertData h2 = hilbert_series(gb2, maxdeg);
  const bool same_lw = gb2.leading_words() == lw0;
  Row two{"char 2", "", series_equal(h2.coefficients, expected), {}};
  two.detail = std::string("series ") + (two.pass ? "equal" : "differs") + ", leading words " +
               (same_lw ? "equal" : "differ") + " (" + std::to_string(gb2.elements.size()) + " elements)";
  if (!two.pass) two.diff.push_back("char 2 series: " + render_series(h2.coefficients));
  rows.push_back(std::move(two));
  return rows;
}

int cmd_verify_appendix(const Globals& g, const std::string& which, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t p : primes) {
    if (p == 2) throw Error("--primes takes odd primes; characteristic 2 is always recomputed directly");
    FieldSpec check(p);
  }
  std::vector<int> tables;
  if (which == "table1" || which == "all") tables.push_back(1);
  if (which == "table2" || which == "all") tables.push_back(2);

  bool all_pass = true;
  json j = json::array();
  for (int t : tables) {
    const std::vector<Row> rows = verify_table(t, primes);
    const std::string name = "table" + std::to_string(t);
    const std::string key = appendix_algebra(t);
    json jt = {{"table", name}, {"algebra", key}, {"rows", json::array()}};
    bool table_pass = true;
    if (!g.json) std::cout << name << " (" << key << ", characteristic 0, maxdeg 6)\n";
    for (const auto& row : rows) {
      table_pass = table_pass && row.pass;
      jt["rows"].push_back({{"check", row.name}, {"detail", row.detail}, {"pass", row.pass}, {"diff", row.diff}});
      if (g.json) continue;
      std::ostringstream line;
      line << "  " << std::left << std::setw(8) << row.name << std::setw(80) << row.detail << ' '
           << (row.pass ? "PASS" : "FAIL");
      std::cout << line.str() << '\n';
      for (const auto& d : row.diff) {
        std::string indented = "      " + d;
        for (std::size_t at = indented.find('\n'); at != std::string::npos; at = indented.find('\n', at + 1))
          indented.insert(at + 1, "      ");
        std::cout << indented << '\n';
      }
    }
    jt["pass"] = table_pass;
    j.push_back(jt);
    all_pass = all_pass && table_pass;
  }
  if (g.json)
    emit_json({{"tables", j}, {"pass", all_pass}});
  else
    std::cout << "verify-appendix: " << (all_pass ? "PASS" : "FAIL") << '\n';
  return all_pass ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded quadratic algebras: Groebner bases, Hilbert series and nilpotency"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--char", g.characteristic, "Field characteristic: 0 or a prime");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--strict", g.strict, "Nonzero exit when a nilpotency query fails");
  app.add_flag("--timings", g.timings, "Include per-phase timings in JSON output");
  app.add_option("--seedfile", g.seedfile, "Seed presentation file for inflate");

  std::string input, out;
  std::size_t maxdeg = 5, k = 5;
  std::optional<std::size_t> maxdeg_opt;
  bool oracle_check = false, verify = false, summary = false;
  std::uint64_t n = 0;
  std::vector<std::string> xs, ys;
  std::uint32_t alpha = 1, beta = 1;
  std::string which = "all";
  std::vector<std::uint64_t> primes = {3, 5, 7, 11, 13};

  auto* gb = app.add_subcommand("gb", "Reduced truncated Groebner basis in the export format");
  gb->add_option("input", input, "Presentation file or @KEY")->required();
  gb->add_option("--maxdeg", maxdeg, "Truncation degree");
  gb->add_option("--out", out, "Write to a file instead of stdout");

  auto* hil = app.add_subcommand("hilbert", "Hilbert series through maxdeg");
  auto* nil = app.add_subcommand("nilpotent", "Nilpotency verdict and Hilbert series");
  for (auto* sub : {hil, nil}) {
    sub->add_option("input", input, "Presentation file or @KEY")->required();
    sub->add_option("--k", k, "Nilpotency degree queried");
    sub->add_option("--maxdeg", maxdeg_opt, "Truncation degree (default k)");
    sub->add_flag("--oracle-check", oracle_check, "Cross-check dimensions with the linear-algebra oracle");
  }

  auto* gs = app.add_subcommand("gs", "Golod-Shafarevich product H(t)(1 - n t + d t^2)");
  gs->add_option("input", input, "Presentation file or @KEY")->required();
  gs->add_option("--maxdeg", maxdeg, "Truncation degree");

  auto* con = app.add_subcommand("construct", "5-step nilpotent algebra with n generators");
  con->add_option("--n", n, "Number of generators")->required();
  con->add_flag("--verify", verify, "Run the pipeline and check the verdict and relation count");
  con->add_flag("--summary", summary, "Print counts only");
  con->add_option("--out", out, "Write to a file instead of stdout");

  auto* inf = app.add_subcommand("inflate", "Inflate a bi-graded seed to alpha copies of X and beta copies of Y");
  inf->add_option("input", input, "Seed presentation file or @KEY");
  inf->add_option("--X", xs, "X generators, comma separated")->delimiter(',');
  inf->add_option("--Y", ys, "Y generators, comma separated")->delimiter(',');
  inf->add_option("--alpha", alpha, "Copies of X");
  inf->add_option("--beta", beta, "Copies of Y");
  inf->add_flag("--summary", summary, "Print counts only");
  inf->add_option("--out", out, "Write to a file instead of stdout");

  auto* ver = app.add_subcommand("verify-appendix", "Check the embedded reference bases of R31 and R32");
  const std::vector<std::string> choices = {"table1", "table2", "all"};
  ver->add_option("table", which, "table1, table2 or all")->check(CLI::IsMember(choices));
  ver->add_option("--which", which, "table1, table2 or all")->check(CLI::IsMember(choices));
  ver->add_option("--primes", primes, "Odd primes for the transfer, comma separated")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*gb) return cmd_gb(g, input, maxdeg, out);
    if (*hil) return cmd_series(g, input, k, maxdeg_opt, oracle_check, false);
    if (*nil) return cmd_series(g, input, k, maxdeg_opt, oracle_check, true);
    if (*gs) return cmd_gs(g, input, maxdeg);
    if (*con) return cmd_construct(g, n, verify, summary, out);
    if (*inf) return cmd_inflate(g, input, xs, ys, alpha, beta, summary, out);
    if (*ver) return cmd_verify_appendix(g, which, primes);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
