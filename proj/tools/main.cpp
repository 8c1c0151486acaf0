#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "alexdimer/errors.hpp"
#include "alexdimer/jsonio.hpp"
#include "alexdimer/murasugi.hpp"
#include "report.hpp"

using namespace alexdimer;
using alexdimer::cli::Check;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::optional<int> segment;
  bool oracle = false;
  bool as_json = false;
  std::string suite = "all";
  bool corrupt = false;
  std::optional<int> circle;
  std::string out_dir = ".";
  std::string mode = "table";
  std::optional<int> level;
  std::string out_path;
  unsigned jobs = 0;
  Caps caps;
};

MurasugiSplit split_for(const LinkDiagram& d, const std::optional<int>& circle) {
  return circle ? split_along(d, *circle) : split_lowest(d);
}

std::string subset_text(const std::vector<int>& subset) {
  if (subset.empty()) return "{}";
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < subset.size(); ++i)
    out << (i ? "," : "") << subset[i];
  out << "}";
  return out.str();
}

int cmd_compute(const Options& o) {
  const LinkDiagram d = read_diagram(o.input);
  const int seg = o.segment.value_or(d.canonical_segment());
  const LaurentPoly f = state_sum(d, seg, o.caps);
  bool agree = true;
  LaurentPoly det;
  if (o.oracle) {
    det = determinant_oracle(d, seg);
    agree = d.is_connected() ? equal_up_to_unit(f, det)
                             : f.is_zero() && det.is_zero();
  }
  if (o.as_json) {
    json rep{{"diagram", d.name()},
             {"segment", seg},
             {"polynomial", poly_to_json(f)},
             {"polynomial_text", to_string(f)}};
    if (o.oracle)
      rep["oracle"] = {{"determinant", poly_to_json(det)}, {"agree", agree}};
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << d.name() << ": " << to_string(f) << "\n";
    if (o.oracle)
      std::cout << "determinant oracle: " << to_string(det)
                << (agree ? " (agrees up to a unit)" : " (DISAGREES)") << "\n";
  }
  return agree ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const LinkDiagram d = read_diagram(o.input);
  std::vector<Check> checks;
  if (o.suite == "all" || o.suite == "dimer") {
    const auto cs = cli::dimer_suite(d, o.caps, o.corrupt);
    checks.insert(checks.end(), cs.begin(), cs.end());
  }
  if (o.suite == "all" || o.suite == "murasugi") {
    const auto cs = cli::murasugi_suite(d, o.caps);
    checks.insert(checks.end(), cs.begin(), cs.end());
  }
  const bool ok = cli::all_pass(checks);
  if (o.as_json) {
    std::cout << json{{"diagram", d.name()},
                      {"suite", o.suite},
                      {"checks", cli::checks_to_json(checks)},
                      {"pass", ok}}
                     .dump(2)
              << "\n";
  } else {
    cli::print_checks(checks);
    std::cout << d.name() << ": " << checks.size() << " checks, "
              << (ok ? "all passed" : "FAILURES above") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const Options& o) {
  const LinkDiagram d = read_diagram(o.input);
  const MurasugiSplit s = split_for(d, o.circle);
  const fs::path dir = o.out_dir;
  if (!dir.empty()) fs::create_directories(dir);
  const std::string stem = fs::path(o.input).stem().string();

  json meta = split_to_json(s);
  json files = json::object();
  const auto emit = [&](const LinkDiagram& part, const char* tag,
                        const char* key) {
    const fs::path p = dir / (stem + "-" + tag + ".json");
    write_diagram(part, p.string());
    files[key] = p.string();
  };
  emit(s.prime, "prime", "prime");
  emit(s.dprime, "dprime", "dprime");
  if (s.length >= 2) {
    const TildeDiagrams td = swap_move_diagrams(d, s);
    if (td.prime) {
      emit(*td.prime, "tilde-prime", "tilde_prime");
      meta["tilde_segment_prime"] = td.segment_prime;
    }
    if (td.dprime) {
      emit(*td.dprime, "tilde-dprime", "tilde_dprime");
      meta["tilde_segment_dprime"] = td.segment_dprime;
    }
  }
  meta["files"] = std::move(files);
  std::cout << meta.dump(2) << "\n";
  return 0;
}

int cmd_explore(const Options& o) {
  const LinkDiagram d = read_diagram(o.input);
  const MurasugiSplit s = split_for(d, o.circle);
  const StateSumDecomposition dec = decompose_state_sum(d, s, o.caps);

  if (o.mode == "table") {
    if (s.length < 3)
      throw HypothesisError("flock-subset table needs split length >= 3, got " +
                            std::to_string(s.length));
    const auto rows = explore_flock_subsets(d, s, o.caps);
    LaurentPoly total;
    for (const FlockSubsetRow& r : rows) total += r.sum;
    const bool conserved = total == dec.total;
    if (o.as_json) {
      json jr = json::array();
      for (const FlockSubsetRow& r : rows)
        jr.push_back({{"subset", r.subset},
                      {"matchings", r.matchings},
                      {"sum", poly_to_json(r.sum)},
                      {"sum_text", to_string(r.sum)}});
      std::cout << json{{"diagram", d.name()},
                        {"circle", s.circle},
                        {"length", s.length},
                        {"mode", "table"},
                        {"rows", std::move(jr)},
                        {"conserved", conserved}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << d.name() << ": circle " << s.circle << ", length "
                << s.length << ", " << s.flock.size() << " flock edges\n";
      std::cout << "subset        matchings  contribution\n";
      for (const FlockSubsetRow& r : rows) {
        std::string sub = subset_text(r.subset);
        sub.resize(std::max<std::size_t>(sub.size(), 12), ' ');
        std::string n = std::to_string(r.matchings);
        n.resize(std::max<std::size_t>(n.size(), 9), ' ');
        std::cout << sub << "  " << n << "  " << to_string(r.sum) << "\n";
      }
      std::cout << "rows sum to the state sum: " << (conserved ? "yes" : "NO")
                << "\n";
    }
    return conserved ? 0 : 1;
  }

  // tree
  if (s.length < 2)
    throw HypothesisError("tree exploration needs split length >= 2, got " +
                          std::to_string(s.length));
  const std::size_t depth = s.flock.size();
  if (o.level && (*o.level < 0 || static_cast<std::size_t>(*o.level) > depth))
    throw HypothesisError("level must lie in [0, " + std::to_string(depth) +
                          "]");
  const auto tree = explore_tree(d, s, o.caps);
  bool conserved = true;
  json levels = json::array();
  for (std::size_t lv = 0; lv <= depth; ++lv) {
    if (o.level && static_cast<std::size_t>(*o.level) != lv) continue;
    LaurentPoly level_sum;
    json nodes = json::array();
    for (const auto& [prefix, node] : tree) {
      if (prefix.size() != lv) continue;
      level_sum += node.sum;
      nodes.push_back({{"prefix", prefix},
                       {"matchings", node.matchings},
                       {"sum", poly_to_json(node.sum)},
                       {"sum_text", to_string(node.sum)}});
    }
    conserved = conserved && level_sum == dec.total;
    levels.push_back({{"level", lv},
                      {"nodes", std::move(nodes)},
                      {"sum_text", to_string(level_sum)}});
  }
  if (o.as_json) {
    std::cout << json{{"diagram", d.name()},
                      {"circle", s.circle},
                      {"length", s.length},
                      {"mode", "tree"},
                      {"levels", std::move(levels)},
                      {"conserved", conserved}}
                     .dump(2)
              << "\n";
  } else {
    for (const json& lj : levels) {
      std::cout << "level " << lj.at("level").get<std::size_t>() << ":\n";
      for (const json& nj : lj.at("nodes")) {
        const auto prefix = nj.at("prefix").get<std::string>();
        std::cout << "  " << (prefix.empty() ? "(root)" : prefix) << "  "
                  << nj.at("matchings").get<std::size_t>() << "  "
                  << nj.at("sum_text").get<std::string>() << "\n";
      }
    }
    std::cout << "levels sum to the state sum: " << (conserved ? "yes" : "NO")
              << "\n";
  }
  return conserved ? 0 : 1;
}

int cmd_certify(const Options& o) {
  const LinkDiagram d = read_diagram(o.input);
  const TrapezoidCertificate cert = certify_trapezoid(d, o.caps);
  const json cj = certificate_to_json(cert);
  if (!o.out_path.empty()) {
    std::ofstream out(o.out_path);
    if (!out) throw Error("cannot write " + o.out_path);
    out << cj.dump(2) << "\n";
    std::cout << "certificate written to " << o.out_path << "\n";
  } else {
    std::cout << cj.dump(2) << "\n";
  }
  return cert.trapezoidal && cert.centered ? 0 : 1;
}

json process_file(const fs::path& path, const Caps& caps) {
  json entry{{"file", path.filename().string()}};
  try {
    const LinkDiagram d = read_diagram(path.string());
    entry["diagram"] = d.name();
    std::vector<Check> checks = cli::dimer_suite(d, caps);
    const auto ms = cli::murasugi_suite(d, caps);
    checks.insert(checks.end(), ms.begin(), ms.end());
    entry["checks"] = cli::checks_to_json(checks);
    bool ok = cli::all_pass(checks);

    try {
      const TrapezoidCertificate cert = certify_trapezoid(d, caps);
      const bool verdict = cert.trapezoidal && cert.centered;
      const json cj = certificate_to_json(cert);
      entry["certificate"] = {{"verdict", verdict},
                              {"kind", cj.at("kind")},
                              {"poly_text", cj.at("poly_text")}};
      ok = ok && verdict;
    } catch (const HypothesisError& e) {
      entry["certificate"] = {{"skipped", e.what()}};
    }

    const RemainderObservation obs = remainder_observation(d, caps);
    json oj{{"applicable", obs.applicable}};
    if (obs.applicable) {
      oj["circle"] = obs.circle;
      oj["length"] = obs.length;
      oj["remainder"] = poly_to_json(obs.remainder);
      oj["remainder_zero"] = obs.remainder_zero;
      oj["noncanceling"] = obs.noncanceling;
      ok = ok && obs.noncanceling;
    }
    entry["remainder_observation"] = std::move(oj);
    entry["status"] = ok ? "ok" : "failed";
  } catch (const ResourceCapError& e) {
    entry["status"] = "capped";
    entry["error"] = e.what();
  } catch (const Error& e) {
    entry["status"] = "error";
    entry["error"] = e.what();
  }
  return entry;
}

int cmd_batch(const Options& o) {
  if (!fs::is_directory(o.input))
    throw ParseError(o.input + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(o.input))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });

  std::vector<json> results(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();)
      results[i] = process_file(files[i], o.caps);
  };
  unsigned jobs = o.jobs ? o.jobs : std::thread::hardware_concurrency();
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(
                                                   std::max<std::size_t>(
                                                       files.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::size_t failures = 0, errors = 0, capped = 0;
  for (const json& r : results) {
    const auto status = r.at("status").get<std::string>();
    if (status == "failed") ++failures;
    if (status == "error") ++errors;
    if (status == "capped") ++capped;
  }
  const json agg{{"caps",
                  {{"max_matchings", o.caps.max_matchings},
                   {"max_crossings", o.caps.max_crossings}}},
                 {"total", files.size()},
                 {"failures", failures},
                 {"input_errors", errors},
                 {"capped", capped},
                 {"files", results}};
  std::ofstream out(o.out_path);
  if (!out) throw Error("cannot write " + o.out_path);
  out << agg.dump(2) << "\n";
  std::cout << files.size() << " files, " << failures << " failures, "
            << errors << " input errors, " << capped << " capped -> "
            << o.out_path << "\n";
  if (failures || errors) return 1;
  if (capped) return 3;
  return 0;
}

int guarded(int (*f)(const Options&), const Options& o) {
  try {
    return f(o);
  } catch (const ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const LengthZeroError& e) {
    std::cerr << "error: diagram is special: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AmbiguityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LengthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Symmetrized Alexander polynomials of oriented link diagrams via "
      "weighted perfect matchings, with split-identity verification"};
  app.require_subcommand(1);
  Options o;

  const auto add_caps = [&o](CLI::App* sc) {
    sc->add_option("--max-matchings", o.caps.max_matchings,
                   "Abort enumeration beyond this many matchings")
        ->envname("ALEXDIMER_MAX_MATCHINGS");
    sc->add_option("--max-crossings", o.caps.max_crossings,
                   "Refuse diagrams with more crossings")
        ->envname("ALEXDIMER_MAX_CROSSINGS");
  };

  auto* compute =
      app.add_subcommand("compute", "Print the symmetrized state-sum polynomial");
  compute->add_option("input", o.input, "Diagram JSON file")->required();
  compute->add_option("--segment", o.segment, "Distinguished segment (edge id)");
  compute->add_flag("--oracle", o.oracle, "Also run the determinant oracle");
  compute->add_flag("--json", o.as_json, "Emit a JSON report");
  add_caps(compute);

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("input", o.input, "Diagram JSON file")->required();
  verify->add_option("--suite", o.suite, "all, dimer or murasugi")
      ->check(CLI::IsMember({"all", "dimer", "murasugi"}));
  verify->add_flag("--json", o.as_json, "Emit a JSON report");
  verify->add_flag("--corrupt-weights", o.corrupt)->group("");
  add_caps(verify);

  auto* decompose = app.add_subcommand(
      "decompose", "Split along a two-sided Seifert circle and emit summands");
  decompose->add_option("input", o.input, "Diagram JSON file")->required();
  decompose->add_option("--circle", o.circle,
                        "Circle id (default: lowest two-sided)");
  decompose->add_option("--out", o.out_dir, "Output directory");
  add_caps(decompose);

  auto* explore = app.add_subcommand(
      "explore", "Flock-subset table or prefix-tree partition of the state sum");
  explore->add_option("input", o.input, "Diagram JSON file")->required();
  explore->add_option("--circle", o.circle,
                      "Circle id (default: lowest two-sided)");
  explore->add_option("--mode", o.mode, "table or tree")
      ->required()
      ->check(CLI::IsMember({"table", "tree"}));
  explore->add_option("--level", o.level, "Single tree level to print");
  explore->add_flag("--json", o.as_json, "Emit a JSON report");
  add_caps(explore);

  auto* certify = app.add_subcommand(
      "certify", "Recursive trapezoid certificate for an alternating diagram");
  certify->add_option("input", o.input, "Diagram JSON file")->required();
  certify->add_option("--out", o.out_path, "Write the certificate here");
  add_caps(certify);

  auto* batch = app.add_subcommand(
      "batch", "Verify and certify every diagram JSON file in a directory");
  batch->add_option("input", o.input, "Directory of diagram JSON files")
      ->required();
  batch->add_option("--out", o.out_path, "Aggregate report path")->required();
  batch->add_option("--jobs", o.jobs, "Worker threads (default: hardware)");
  add_caps(batch);

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) return guarded(cmd_compute, o);
  if (verify->parsed()) return guarded(cmd_verify, o);
  if (decompose->parsed()) return guarded(cmd_decompose, o);
  if (explore->parsed()) return guarded(cmd_explore, o);
  if (certify->parsed()) return guarded(cmd_certify, o);
  if (batch->parsed()) return guarded(cmd_batch, o);
  return 0;
}
