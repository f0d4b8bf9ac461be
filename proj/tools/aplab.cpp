// aplab: exact interval-replacement colourings of the circle and
// arithmetic-progression pattern search on Z/pZ.
//
// Exit codes: 0 success, 1 I/O or internal failure, 2 invalid arguments,
// 3 a verification subcommand found a counterexample.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aplab/construction.hpp"
#include "aplab/cyclic.hpp"
#include "aplab/diagnostics.hpp"
#include "aplab/errors.hpp"
#include "aplab/io.hpp"
#include "aplab/structure_checks.hpp"

namespace {

using aplab::Json;

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g_command;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoFailure("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw IoFailure("read from '" + path + "' failed");
  return buf.str();
}

// Payload goes to --out (or stdout); the run manifest sits next to it (or on
// stderr). Identical command and seed give a byte-identical payload; only the
// manifest carries wall time.
void deliver(const std::string& out_path, const std::string& payload, Json result_summary,
             std::optional<std::uint64_t> seed, double wall_ms) {
  Json manifest;
  manifest["command"] = g_command;
  manifest["tool_version"] = "0.1.0";
  manifest["seed"] = seed ? Json(*seed) : Json(nullptr);
  manifest["wall_time_ms"] = wall_ms;
  manifest["result"] = std::move(result_summary);
  if (out_path.empty()) {
    std::cout << payload;
    std::cerr << manifest.dump() << "\n";
  } else {
    write_file(out_path, payload);
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

aplab::Colour parse_fill(const std::string& name) {
  if (name == "blue") return aplab::Colour::Blue;
  if (name == "red") return aplab::Colour::Red;
  throw aplab::InvalidParameter("fill must be 'blue' or 'red'");
}

int cmd_build(const std::string& construction, int level, const std::string& format,
              const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto id = aplab::parse_construction(construction);
  if (level < 0 || level > aplab::depth_cap(id))
    throw aplab::InvalidParameter("level must lie in [0, " +
                                  std::to_string(aplab::depth_cap(id)) + "]");
  const auto c = aplab::iterate(id, level);
  std::string payload;
  if (format == "csv")
    payload = aplab::config_to_csv(c);
  else
    payload = aplab::config_to_json(c).dump(2) + "\n";
  Json summary{{"construction", construction},
               {"level", level},
               {"intervals", c.intervals.size()},
               {"red_measure", aplab::fraction_str(c.measure(aplab::Colour::Red))}};
  deliver(out_path, payload, std::move(summary), std::nullopt, ms_since(t0));
  return 0;
}

int cmd_verify(const std::string& construction, long a, long b, std::vector<long> primes,
               long primes_upto, int depth, const std::string& fill_name,
               const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto id = aplab::parse_construction(construction);
  if (depth < 0 || depth > aplab::depth_cap(id))
    throw aplab::InvalidParameter("depth must lie in [0, " +
                                  std::to_string(aplab::depth_cap(id)) + "]");
  const auto fill = parse_fill(fill_name);
  if (primes_upto > 0)
    for (const long p : aplab::primes_up_to(primes_upto)) primes.push_back(p);
  if (primes.empty()) throw aplab::InvalidParameter("no moduli given");
  for (const long p : primes)
    if (p < 2) throw aplab::InvalidParameter("moduli must be >= 2");
  const aplab::PatternSpec spec{a, b};

  Json rows = Json::array();
  bool all_verified = true;
  for (const long p : primes) {
    const auto partial = aplab::induce_partial(id, p, depth);
    const auto colouring = aplab::complete(partial, fill);
    const auto cert = aplab::verify_no_pattern(colouring, spec);
    all_verified = all_verified && cert.verified;
    Json row = aplab::certificate_to_json(cert);
    row["p"] = p;
    row["unresolved"] = partial.meta.unresolved_count;
    rows.push_back(std::move(row));
    std::cerr << "p=" << p << (cert.verified ? " verified" : " counterexample") << "\n";
  }
  Json payload{{"construction", construction},
               {"pattern", Json{{"a", a}, {"b", b}}},
               {"depth", depth},
               {"fill", fill_name},
               {"all_verified", all_verified},
               {"results", std::move(rows)}};
  Json summary{{"all_verified", all_verified}, {"moduli", primes.size()}};
  deliver(out_path, payload.dump(2) + "\n", std::move(summary), std::nullopt, ms_since(t0));
  return all_verified ? 0 : 3;
}

int cmd_report(const std::string& construction, int max_level, const std::string& format,
               const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto id = aplab::parse_construction(construction);
  if (max_level < 0 || max_level > aplab::depth_cap(id))
    throw aplab::InvalidParameter("max-level must lie in [0, " +
                                  std::to_string(aplab::depth_cap(id)) + "]");

  bool all_ok = true;
  Json levels = Json::array();
  std::ostringstream csv;
  csv << "level,red,blue,uncoloured,symmetry_ok,structure_ok\n";
  aplab::Configuration c = aplab::initial_config(id);
  for (int k = 0; k <= max_level; ++k) {
    if (k > 0) c = aplab::step(c);
    const auto m = aplab::measures_at_level(id, k);
    // The aggregate recurrence must match the materialized measures exactly.
    const bool measures_ok = m.red == c.measure(aplab::Colour::Red) &&
                             m.blue == c.measure(aplab::Colour::Blue) &&
                             m.uncoloured == c.uncoloured_measure();
    bool symmetry_ok = false;
    if (id == aplab::ConstructionId::Ap1414)
      symmetry_ok = aplab::dual_rotation(c) == c;
    else
      symmetry_ok = aplab::reflect(c, aplab::make_rational(1, 4)) == c;
    const auto structure = id == aplab::ConstructionId::Ap1414
                               ? aplab::verify_band_structure(c, k)
                               : aplab::verify_flanking_properties(id, k);
    const bool ok = measures_ok && symmetry_ok && structure.all_pass();
    all_ok = all_ok && ok;
    Json row{{"level", k},
             {"measures", aplab::measures_to_json(m)},
             {"measures_consistent", measures_ok},
             {"symmetry_fixed", symmetry_ok},
             {"structure", aplab::report_to_json(structure)}};
    levels.push_back(std::move(row));
    csv << k << ',' << aplab::fraction_str(m.red) << ',' << aplab::fraction_str(m.blue) << ','
        << aplab::fraction_str(m.uncoloured) << ',' << (symmetry_ok && measures_ok) << ','
        << structure.all_pass() << '\n';
    std::cerr << "level " << k << (ok ? " ok" : " FAILED") << "\n";
  }
  Json payload{{"construction", construction}, {"max_level", max_level}, {"all_ok", all_ok},
               {"levels", std::move(levels)}};
  const std::string body = format == "csv" ? csv.str() : payload.dump(2) + "\n";
  Json summary{{"all_ok", all_ok}, {"max_level", max_level}};
  deliver(out_path, body, std::move(summary), std::nullopt, ms_since(t0));
  return all_ok ? 0 : 3;
}

int cmd_random(long a, long b, const std::vector<long>& primes, long trials, double delta,
               std::uint64_t seed, const std::string& out_dir, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  if (primes.empty()) throw aplab::InvalidParameter("no moduli given");
  const aplab::PatternSpec spec{a, b};
  for (const long p : primes) {
    if (a + b > p)
      throw aplab::InvalidParameter("pattern length " + std::to_string(a + b) +
                                    " exceeds modulus " + std::to_string(p));
  }
  const auto report = aplab::survey_random_colourings(primes, spec, trials, delta, seed);

  Json payload = aplab::findability_to_json(report);
  Json artifacts = Json::array();
  for (const auto& row : report.per_prime) {
    for (std::size_t i = 0; i < row.witness_free.size(); ++i) {
      const std::string name =
          out_dir + "/witness_free_p" + std::to_string(row.p) + "_" + std::to_string(i) + ".txt";
      write_file(name, aplab::colouring_to_text(row.witness_free[i]));
      artifacts.push_back(name);
    }
  }
  payload["artifacts"] = std::move(artifacts);
  bool all_found = true;
  for (const auto& row : report.per_prime) all_found = all_found && row.with_witness == row.trials;
  Json summary{{"all_trials_have_witness", all_found}};
  deliver(out_path, payload.dump(2) + "\n", std::move(summary), seed, ms_since(t0));
  return 0;
}

int cmd_ladders(long samples, long anchors, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  if (samples < 1 || anchors < 1)
    throw aplab::InvalidParameter("samples and anchors must be >= 1");
  bool all_ok = true;
  Json cases = Json::array();
  for (const int case_id : {2, 3, 4}) {
    const auto [lo, hi] = aplab::ladder_case_range(case_id);
    long valid = 0, blue_hits = 0;
    Json failures = Json::array();
    for (long i = 0; i < samples; ++i) {
      const aplab::Rational t =
          samples == 1 ? aplab::make_rational(0) : aplab::make_rational(i, samples - 1);
      const aplab::Rational d = lo + (hi - lo) * t;
      for (long j = 0; j < anchors; ++j) {
        const aplab::Rational anchor = aplab::make_rational(j, anchors);
        const auto ladder = aplab::build_ladder(case_id, anchor, d);
        const bool ok = aplab::verify_ladder(ladder.terms);
        const bool hit = aplab::ladder_hits_blue_arc(ladder.terms);
        if (ok) ++valid;
        if (hit) ++blue_hits;
        if (!ok || !hit) {
          all_ok = false;
          if (failures.size() < 16) failures.push_back(aplab::ladder_to_json(ladder));
        }
      }
    }
    cases.push_back(Json{{"case_id", case_id},
                         {"diff_lo", aplab::fraction_str(lo)},
                         {"diff_hi", aplab::fraction_str(hi)},
                         {"samples", samples},
                         {"anchors", anchors},
                         {"valid", valid},
                         {"blue_hits", blue_hits},
                         {"failures", std::move(failures)}});
    std::cerr << "case " << case_id << ": " << valid << "/" << samples * anchors << " valid, "
              << blue_hits << " blue hits\n";
  }
  Json payload{{"all_ok", all_ok}, {"cases", std::move(cases)}};
  Json summary{{"all_ok", all_ok}};
  deliver(out_path, payload.dump(2) + "\n", std::move(summary), std::nullopt, ms_since(t0));
  return all_ok ? 0 : 3;
}

int cmd_diag(const std::string& input, std::vector<long long> window,
             const std::string& fill_name, std::vector<long long> table,
             const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto partial = aplab::parse_colouring_text(read_file(input));
  aplab::CyclicColouring total;
  if (partial.meta.unresolved_count == 0) {
    total = aplab::as_total(partial);
  } else if (fill_name.empty()) {
    throw aplab::InvalidParameter("colouring has unresolved cells; pass --fill");
  } else {
    total = aplab::complete(partial, parse_fill(fill_name));
  }
  aplab::PeriodicZColouring zc{total.p, total.colours};
  if (window.empty()) window = {0, total.p};
  if (window.size() != 2) throw aplab::InvalidParameter("--window takes two integers");
  const auto gaps = aplab::find_gaps(zc, window[0], window[1]);

  Json gaps_json = Json::array();
  for (const auto& g : gaps) gaps_json.push_back(Json{{"start", g.start}, {"end", g.end}});
  Json payload{{"p", total.p},
               {"window", Json::array({window[0], window[1]})},
               {"gap_count", gaps.size()},
               {"gaps", std::move(gaps_json)}};
  if (!table.empty()) {
    if (table.size() != 4) throw aplab::InvalidParameter("--table takes d ell m k");
    const long long d = table[0], ell = table[1], m = table[2], k = table[3];
    if (d < 1 || ell < 1 || m < 1 || k < 1)
      throw aplab::InvalidParameter("--table parameters must be positive");
    std::set<long long> reds;
    for (long long n = -ell; n <= m; ++n)
      if (zc.at(n * d) == aplab::Colour::Red) reds.insert(n * d);
    payload["table"] = Json{{"d", d},
                            {"ell", ell},
                            {"m", m},
                            {"k", k},
                            {"result", aplab::is_table(reds, d, ell, m, k)},
                            {"bound", aplab::red_count_bound(m, k).get_str()}};
  }
  Json summary{{"gap_count", gaps.size()}};
  deliver(out_path, payload.dump(2) + "\n", std::move(summary), std::nullopt, ms_since(t0));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ostringstream cmd;
  for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
  g_command = cmd.str();

  CLI::App app{"exact circle colourings and AP pattern search on Z/pZ"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: APLAB_JOBS or all cores)")
      ->envname("APLAB_JOBS");

  std::string construction, format = "json", out_path, fill = "blue", diag_fill, input,
      out_dir = ".";
  int level = 0, max_level = 6, depth = -1;
  long trials = 100, samples = 1000, anchors = 100, primes_upto = 0;
  double delta = 0.3;
  std::uint64_t seed = 0;
  std::vector<long> pattern, primes;
  std::vector<long long> window, table;

  auto* build = app.add_subcommand("build", "materialize a configuration and dump it");
  build->add_option("--construction", construction)->required();
  build->add_option("--level", level)->required();
  build->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  build->add_option("--out", out_path);

  auto* verify =
      app.add_subcommand("verify", "exhaustive pattern-absence check on induced colourings");
  verify->add_option("--construction", construction)->required();
  verify->add_option("--pattern", pattern, "a b")->expected(2)->required();
  verify->add_option("--primes", primes)->delimiter(',');
  verify->add_option("--primes-upto", primes_upto);
  verify->add_option("--depth", depth, "refinement depth (default: per construction)");
  verify->add_option("--fill", fill)->check(CLI::IsMember({"blue", "red"}));
  verify->add_option("--out", out_path);

  auto* report = app.add_subcommand("report", "per-level measures, symmetry and structure checks");
  report->add_option("--construction", construction)->required();
  report->add_option("--max-level", max_level);
  report->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  report->add_option("--out", out_path);

  auto* random = app.add_subcommand("random", "witness frequency over random colourings");
  random->add_option("--pattern", pattern, "a b")->expected(2)->required();
  random->add_option("--prime", primes)->delimiter(',')->required();
  random->add_option("--trials", trials);
  random->add_option("--delta", delta, "minimum class fraction");
  random->add_option("--seed", seed);
  random->add_option("--out-dir", out_dir);
  random->add_option("--out", out_path);

  auto* ladders = app.add_subcommand("ladders", "sweep the ladder bands and check the axioms");
  ladders->add_option("--samples", samples);
  ladders->add_option("--anchors", anchors);
  ladders->add_option("--out", out_path);

  auto* diag = app.add_subcommand("diag", "gap and table analysis of a colouring file");
  diag->add_option("--input", input)->required();
  diag->add_option("--window", window)->expected(2);
  diag->add_option("--fill", diag_fill, "colour for unresolved cells")
      ->check(CLI::IsMember({"blue", "red"}));
  diag->add_option("--table", table)->expected(4);
  diag->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (build->parsed()) return cmd_build(construction, level, format, out_path);
    if (verify->parsed()) {
      if (depth < 0) depth = aplab::default_induce_depth(aplab::parse_construction(construction));
      return cmd_verify(construction, pattern[0], pattern[1], primes, primes_upto, depth, fill,
                        out_path);
    }
    if (report->parsed()) return cmd_report(construction, max_level, format, out_path);
    if (random->parsed())
      return cmd_random(pattern[0], pattern[1], primes, trials, delta, seed, out_dir, out_path);
    if (ladders->parsed()) return cmd_ladders(samples, anchors, out_path);
    if (diag->parsed()) return cmd_diag(input, window, diag_fill, table, out_path);
  } catch (const aplab::UnknownConstruction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aplab::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aplab::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aplab::NotReplaceable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
