#include "zxmbqc/cli.hpp"

#include "zxmbqc/oracle.hpp"
#include "zxmbqc/pattern.hpp"
#include "zxmbqc/serialize.hpp"
#include "zxmbqc/simplify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

namespace zxmbqc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Doubles go through %.12g so output is stable across platforms and runs.
double rounded(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json complex_json(cplx z) { return {{"re", rounded(z.real())}, {"im", rounded(z.imag())}}; }

struct FunctionArgs {
  std::size_t n = 0;
  std::string table;
  std::string variant;
};

void add_function_options(CLI::App* sub, FunctionArgs& a) {
  sub->add_option("--n", a.n, "number of input bits");
  sub->add_option("--table", a.table, "truth table, decimal or 2^n binary digits");
  sub->add_option("--variant", a.variant, "table column id (1..72, or i..viii for n <= 2)");
}

std::optional<BooleanFunction> function_from(const FunctionArgs& a) {
  if (a.table.empty() && a.variant.empty()) return std::nullopt;
  if (a.n == 0) throw UsageError("--n is required with --table or --variant");
  if (!a.table.empty() && !a.variant.empty()) throw UsageError("--table and --variant are exclusive");
  try {
    return a.table.empty() ? variant(a.n, a.variant) : BooleanFunction::parse(a.n, a.table);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(a.table.empty() ? "--variant: " : "--table: ") + e.what());
  } catch (const ParseError& e) {
    throw UsageError(std::string("--table: ") + e.what());
  }
}

BooleanFunction require_function(const FunctionArgs& a) {
  auto f = function_from(a);
  if (!f) throw UsageError("one of --table or --variant is required");
  return *f;
}

Json read_json_file(const std::string& path, const char* flag) {
  std::ifstream in(path);
  if (!in) throw UsageError(std::string(flag) + ": cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Circuit oracle_for(const BooleanFunction& f) {
  if (f.n == 3) return oracle_circuit_3q(f);
  if (f.n <= 2) return dj_oracle_circuit(f);
  throw UsageError("oracle circuits are synthesised for n = 1, 2, 3 only");
}

MeasurementPattern pattern_for(const BooleanFunction& f) {
  if (f.n == 3) return dj_pattern_3q(f);
  if (f.n <= 2) return dj_pattern_chain(f);
  throw UsageError("measurement patterns exist for n = 1, 2, 3 only");
}

ZxDiagram compile(const BooleanFunction& f, std::vector<RewriteStep>* steps = nullptr) {
  SimplifyResult r = simplify_mbqc(plug_plus_states(to_zx(oracle_for(f))));
  if (steps) *steps = std::move(r.steps);
  return std::move(r.diagram);
}

Verdict scalar_verdict(const ZxDiagram& d) {
  const double a = std::abs(evaluate(d).scalar());
  return a > kZeroFloor * magnitude_bound(d) ? Verdict::Constant : Verdict::Balanced;
}

Json function_json(const BooleanFunction& f) {
  return {{"n", f.n}, {"table", f.table}, {"binary", f.binary()}};
}

Json outcome_json(const PatternOutcome& o, bool sampled) {
  Json j{{"verdict", to_string(o.verdict)}, {"amplitude", complex_json(o.amplitude)}, {"floor", rounded(o.floor)}};
  if (sampled) {
    j["shots"] = o.shots;
    j["constant_shots"] = o.constant_shots;
    j["balanced_shots"] = o.balanced_shots;
  }
  return j;
}

std::string column_name(std::size_t n, std::size_t k) {
  static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
  return n <= 2 ? roman[k] : std::to_string(k + 1);
}

Json verify_variant(const BooleanFunction& f, const std::string& column, std::uint64_t seed, std::size_t shots) {
  const Verdict expected = classify(f);
  Json r{{"variant", column}, {"table", f.table}, {"binary", f.binary()}, {"expected", to_string(expected)}};
  bool agree = true;
  auto note = [&](const char* key, Verdict v) {
    r[key] = to_string(v);
    agree = agree && v == expected;
  };
  note("circuit", dj_run_circuit(oracle_for(f)));
  const ZxDiagram compiled = compile(f);
  note("zx", scalar_verdict(compiled));
  const MeasurementPattern pattern = pattern_for(f);
  note("pattern", run_postselected(pattern).verdict);
  if (f.n == 3) {
    const bool closure = is_graph_like(compiled) && isomorphic(pattern_from_graph_like(compiled), pattern, true);
    r["compiled_matches_pattern"] = closure;
    note("lattice", run_postselected(lattice_pattern_3q(f)).verdict);
    agree = agree && closure;
  } else {
    const bool spider_form = implements_oracle(spider_oracle_matrix(oracle_spider_angles(f)), f);
    r["spider_form_ok"] = spider_form;
    note("sampled", run_sampled(pattern, seed, shots).verdict);
    agree = agree && spider_form;
  }
  r["agree"] = agree;
  return r;
}

// ---------------------------------------------------------------------------
// Human-readable rendering

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(std::ostream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& [k, v] : rows.front().items()) cols.push_back(k);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const Json& row : rows) width[c] = std::max(width[c], scalar_text(row.value(cols[c], Json())).size());
  }
  auto line = [&](auto cell) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = cell(c);
      out << s;
      if (c + 1 < cols.size()) out << std::string(width[c] - s.size() + 2, ' ');
    }
    out << '\n';
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const Json& row : rows) line([&](std::size_t c) { return scalar_text(row.value(cols[c], Json())); });
}

void print_human(std::ostream& out, const Json& j) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items())
    if (!v.is_array() || v.empty() || !v.front().is_object()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) continue;
    out << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << '\n';
  }
  for (const auto& [k, v] : j.items()) {
    if (!v.is_array() || v.empty() || !v.front().is_object()) continue;
    out << '\n' << k << ":\n";
    print_table(out, v);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ZX-calculus and measurement-based Deutsch-Jozsa toolkit", "zxmbqc"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  app.add_flag("--human", human, "aligned text instead of JSON");

  FunctionArgs fa;
  bool trace = false, printed = false;
  std::string circuit_file, pattern_file, target, out_file;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> shots;

  auto* classify_cmd = app.add_subcommand("classify", "constant or balanced");
  add_function_options(classify_cmd, fa);
  auto* synth_cmd = app.add_subcommand("synth-circuit", "oracle circuit as JSON");
  add_function_options(synth_cmd, fa);
  auto* compile_cmd = app.add_subcommand("compile-mbqc", "circuit -> ZX -> measurement pattern");
  add_function_options(compile_cmd, fa);
  compile_cmd->add_flag("--trace", trace, "include the rewrite steps");
  auto* simulate_cmd = app.add_subcommand("simulate", "run a circuit or pattern");
  add_function_options(simulate_cmd, fa);
  simulate_cmd->add_option("--circuit", circuit_file, "circuit JSON file");
  simulate_cmd->add_option("--pattern", pattern_file, "pattern JSON file");
  simulate_cmd->add_option("--shots", shots, "sample with byproduct correction instead of post-selecting");
  simulate_cmd->add_option("--seed", seed, "random seed for sampling (default " + std::to_string(kDefaultSeed) + ")");
  auto* verify_cmd = app.add_subcommand("verify-all", "cross-check every promise variant");
  verify_cmd->add_option("--n", fa.n, "number of input bits (1, 2 or 3)")->required();
  verify_cmd->add_option("--shots", shots, "shots per sampled variant (default 1000)");
  verify_cmd->add_option("--seed", seed, "random seed for sampling");
  auto* lattice_cmd = app.add_subcommand("lattice", "lattice pattern, its verdict and reduction");
  add_function_options(lattice_cmd, fa);
  lattice_cmd->add_flag("--printed", printed, "use the literal transcription of the lattice angles");
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  add_function_options(dot_cmd, fa);
  dot_cmd->add_option("--target", target, "pattern | lattice | reduced | circuit | compiled | empty")->required();
  dot_cmd->add_option("--out", out_file, "output file (default: standard output)");

  auto emit = [&](const Json& j) {
    if (human) print_human(out, j);
    else out << j.dump() << '\n';
  };
  auto fail = [&](int code, const std::string& msg) {
    if (human) err << "error: " << msg << '\n';
    else out << Json{{"error", msg}}.dump() << '\n';
    return code;
  };

  std::vector<std::string> argv_store{"zxmbqc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(2, e.what());
  }

  try {
    if (*classify_cmd) {
      const Verdict v = classify(require_function(fa));
      emit({{"verdict", to_string(v)}});
    } else if (*synth_cmd) {
      emit(circuit_to_json(oracle_for(require_function(fa))));
    } else if (*compile_cmd) {
      const BooleanFunction f = require_function(fa);
      std::vector<RewriteStep> steps;
      const ZxDiagram d = compile(f, &steps);
      Json j = function_json(f);
      j["spiders"] = d.num_spiders();
      j["edges"] = d.num_edges();
      j["graph_like"] = is_graph_like(d);
      if (is_graph_like(d) && d.is_closed()) {
        const MeasurementPattern p = pattern_from_graph_like(d);
        if (f.n == 3) j["matches_reference"] = isomorphic(p, dj_pattern_3q(f), true);
        j["pattern"] = pattern_to_json(p);
      } else {
        j["diagram"] = diagram_to_json(d);
      }
      if (trace) j["steps"] = steps_to_json(steps);
      emit(j);
    } else if (*simulate_cmd) {
      const auto f = function_from(fa);
      if ((f ? 1 : 0) + !circuit_file.empty() + !pattern_file.empty() != 1)
        throw UsageError("give exactly one of --circuit, --pattern or a function (--n with --table/--variant)");
      if (!circuit_file.empty()) {
        Circuit c;
        try {
          c = circuit_from_json(read_json_file(circuit_file, "--circuit"));
        } catch (const ParseError& e) {
          throw UsageError(std::string("--circuit: ") + e.what());
        }
        if (c.width < 1 || c.width > 3) throw UsageError("--circuit: width must be 1, 2 or 3");
        const cplx a = plus_amplitude(c);
        const Verdict v = dj_run_circuit(c);
        emit({{"amplitude", complex_json(a)}, {"verdict", to_string(v)}});
      } else {
        MeasurementPattern p;
        if (f) {
          p = pattern_for(*f);
        } else {
          try {
            p = pattern_from_json(read_json_file(pattern_file, "--pattern"));
          } catch (const ParseError& e) {
            throw UsageError(std::string("--pattern: ") + e.what());
          }
        }
        if (shots) emit(outcome_json(run_sampled(p, seed, *shots), true));
        else emit(outcome_json(run_postselected(p), false));
      }
    } else if (*verify_cmd) {
      if (fa.n < 1 || fa.n > 3) throw UsageError("--n must be 1, 2 or 3");
      const auto fs = variant_columns(fa.n);
      std::vector<std::future<Json>> jobs;
      for (std::size_t k = 0; k < fs.size(); ++k)
        jobs.push_back(std::async(std::launch::async, verify_variant, fs[k], column_name(fa.n, k), seed,
                                  shots.value_or(1000)));
      Json records = Json::array();
      bool all = true;
      for (auto& job : jobs) {
        records.push_back(job.get());
        all = all && records.back()["agree"].get<bool>();
      }
      emit({{"n", fa.n}, {"count", records.size()}, {"all_agree", all}, {"records", records}});
      if (!all) return 1;
    } else if (*lattice_cmd) {
      const BooleanFunction f = require_function(fa);
      if (f.n != 3) throw UsageError("the lattice is defined for n = 3");
      const MeasurementPattern p = lattice_pattern_3q(f, printed ? LatticeReading::AsPrinted : LatticeReading::Corrected);
      const Verdict expected = classify(f);
      const PatternOutcome o = run_postselected(p);
      Json j = function_json(f);
      j["reading"] = printed ? "printed" : "corrected";
      j["qubits"] = p.qubits.size();
      j["edges"] = p.edges.size();
      j["verdict"] = to_string(o.verdict);
      j["expected"] = to_string(expected);
      try {
        const MeasurementPattern r = reduce_lattice(p);
        j["reduced_qubits"] = r.qubits.size();
        j["reduced_edges"] = r.edges.size();
        j["reduced_matches_graph"] = isomorphic(r, dj_pattern_3q(f), false);
        j["reduced_matches_angles"] = isomorphic(r, dj_pattern_3q(f), true);
      } catch (const ReductionStuck& e) {
        j["reduction_error"] = e.what();
      }
      emit(j);
    } else if (*dot_cmd) {
      std::string dot;
      std::size_t nodes = 0, edges = 0;
      auto take = [&](const auto& g, std::size_t n, std::size_t e) {
        dot = to_dot(g);
        nodes = n;
        edges = e;
      };
      if (target == "empty") {
        take(ZxDiagram{}, 0, 0);
      } else if (target == "pattern" || target == "lattice" || target == "reduced" || target == "circuit" ||
                 target == "compiled") {
        const BooleanFunction f = require_function(fa);
        if (target == "pattern") {
          const auto p = pattern_for(f);
          take(p, p.qubits.size(), p.edges.size());
        } else if (target == "lattice" || target == "reduced") {
          if (f.n != 3) throw UsageError("the lattice is defined for n = 3");
          auto p = lattice_pattern_3q(f);
          if (target == "reduced") p = reduce_lattice(p);
          take(p, p.qubits.size(), p.edges.size());
        } else {
          const ZxDiagram d = target == "circuit" ? to_zx(oracle_for(f)) : compile(f);
          take(d, d.num_spiders(), d.num_edges());
        }
      } else {
        throw UsageError("--target: unknown target '" + target + "'");
      }
      if (out_file.empty()) {
        out << dot;
      } else {
        std::ofstream file(out_file);
        if (!file || !(file << dot)) throw UsageError("--out: cannot write " + out_file);
        emit({{"target", target}, {"out", out_file}, {"nodes", nodes}, {"edges", edges}});
      }
    }
  } catch (const UsageError& e) {
    return fail(2, e.what());
  } catch (const NotPromise& e) {
    return fail(1, std::string("promise violation: ") + e.what());
  } catch (const std::exception& e) {
    return fail(2, e.what());
  }
  return 0;
}

}  // namespace zxmbqc
