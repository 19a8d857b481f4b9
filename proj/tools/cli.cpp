#include "cli.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "cfstat/cfe.hpp"
#include "cfstat/ensemble.hpp"
#include "cfstat/error.hpp"
#include "cfstat/gauss_kuzmin.hpp"
#include "cfstat/orbit.hpp"
#include "cfstat/orbit_io.hpp"
#include "cfstat/parallel.hpp"
#include "cfstat/report_io.hpp"
#include "cfstat/statistics.hpp"
#include "cfstat/zaremba.hpp"
#include "cfstat/zaremba_io.hpp"

#ifndef CFSTAT_VERSION
#define CFSTAT_VERSION "0.0.0"
#endif

namespace cfstat::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Named outputs of one command: "stdout" plus file contents such as "json",
// "csv", "svg" and "profile".
using Outputs = std::map<std::string, std::string>;

struct Job {
  json config;
  std::optional<std::uint64_t> seed;
  std::function<Outputs(const Job&)> compute;
  std::map<std::string, std::string> paths;  // output name -> file path
  bool cacheable = true;
};

struct Globals {
  unsigned workers = default_workers();
  std::string cache_dir;
  bool no_cache = false;
};

std::string seed_text(const std::optional<std::uint64_t>& seed) {
  return seed ? std::to_string(*seed) : "none";
}

std::string header_comment(const Job& job) {
  return fmt::format("# {} {}\n# config: {}\n# seed: {}\n", kToolName, CFSTAT_VERSION, job.config.dump(),
                     seed_text(job.seed));
}

json meta(const Job& job) {
  json m;
  m["tool"] = kToolName;
  m["version"] = CFSTAT_VERSION;
  m["config"] = job.config;
  m["seed"] = job.seed ? json(*job.seed) : json(nullptr);
  return m;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

std::optional<fs::path> cache_directory(const Globals& g) {
  if (g.no_cache) return std::nullopt;
  if (!g.cache_dir.empty()) return fs::path(g.cache_dir);
  if (const char* env = std::getenv("CF_STATLAB_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

Outputs run_job(const Job& job, const Globals& g) {
  const auto dir = job.cacheable ? cache_directory(g) : std::nullopt;
  if (!dir) return job.compute(job);

  const std::string material = fmt::format("{} {}\n{}", kToolName, CFSTAT_VERSION, job.config.dump());
  const fs::path entry = *dir / (sha256_hex(material) + ".json");
  if (fs::exists(entry)) {
    const json cached = json::parse(read_file(entry), nullptr, false);
    if (!cached.is_discarded() && cached.value("key", std::string()) == material) {
      return cached.at("outputs").get<Outputs>();
    }
  }
  Outputs outputs = job.compute(job);
  fs::create_directories(*dir);
  json stored;
  stored["key"] = material;
  stored["outputs"] = outputs;
  const fs::path tmp = entry.string() + ".tmp";
  write_file(tmp, stored.dump());
  fs::rename(tmp, entry);
  return outputs;
}

void emit(const Job& job, const Outputs& outputs, std::ostream& out) {
  if (auto it = outputs.find("stdout"); it != outputs.end()) out << it->second;
  for (const auto& [name, path] : job.paths) {
    if (path.empty()) continue;
    write_file(path, outputs.at(name));
  }
}

// ---------------------------------------------------------------------------
// Shared argument handling

Int normalize_numerator(Int p, Int q) {
  if (q < 2) throw InvalidArgument("modulus q must be at least 2");
  const Int r = ((p % q) + q) % q;
  if (r == 0) throw InvalidArgument(fmt::format("numerator {} is divisible by {}", p, q));
  if (std::gcd(r, q) != 1) throw NotCoprime(fmt::format("{} is not coprime to {}", p, q));
  return r;
}

std::vector<Int> read_residue_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Int> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(word, &used);
      } catch (const std::exception&) {
        throw InvalidArgument("bad residue '" + word + "' in " + path);
      }
      if (used != word.size()) throw InvalidArgument("bad residue '" + word + "' in " + path);
      out.push_back(v);
    }
  }
  return out;
}

struct ResolvedEnsemble {
  EnsembleSpec spec;
  std::optional<std::uint64_t> seed;
  json config;
};

ResolvedEnsemble resolve_ensemble(const std::string& text, Int q) {
  ResolvedEnsemble r;
  r.config = text;
  if (text.rfind("file:", 0) == 0) {
    const std::string path = text.substr(5);
    const std::string content = read_file(path);
    r.spec = EnsembleSpec::explicit_residues(q, read_residue_file(path));
    r.config = json{{"file_sha256", sha256_hex(content)}, {"kind", "explicit"}};
    return r;
  }
  r.spec = EnsembleSpec::parse(text, q);
  if (r.spec.kind == EnsembleKind::RandomSparse) r.seed = r.spec.seed;
  return r;
}

std::vector<Window> parse_windows(const std::vector<std::string>& texts) {
  std::vector<Window> out;
  for (const auto& t : texts) out.push_back(Window::parse(t));
  return out;
}

void check_scan_modulus(Int q) {
  if (q > kScanModulusCap) throw OverflowError(fmt::format("modulus {} exceeds the 2^31 cap", q));
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Commands

struct CfeArgs {
  std::string fraction;
  std::vector<std::string> windows;
};

void run_cfe(const CfeArgs& a, std::ostream& out) {
  const ReducedFraction f = ReducedFraction::parse(a.fraction);
  const CfDigits d = expand(f);
  out << "digits=" << d.to_string() << " len=" << len(d) << '\n';
  for (const auto& w : parse_windows(a.windows)) {
    out << "window=" << w.to_string() << " density=" << format_double(window_density(f, w))
        << " target=" << format_double(target_density(w)) << '\n';
  }
}

struct StatsArgs {
  Int q = 0;
  std::string ensemble = "all";
  std::vector<std::string> windows{"1"};
  std::vector<double> eps{0.05, 0.1};
  std::string out_prefix;
  std::string json_path;
  std::string csv_path;
  bool timing = false;
};

Job stats_job(const StatsArgs& a, const Globals& g) {
  check_scan_modulus(a.q);
  const auto windows = parse_windows(a.windows);
  const auto ens = resolve_ensemble(a.ensemble, a.q);

  Job job;
  job.config = {{"command", "stats"}, {"q", a.q}, {"ensemble", ens.config}, {"windows", a.windows}, {"eps", a.eps},
                {"timing", a.timing}};
  job.seed = ens.seed;
  job.cacheable = !a.timing;
  job.paths["json"] = a.json_path.empty() && !a.out_prefix.empty() ? a.out_prefix + ".json" : a.json_path;
  job.paths["csv"] = a.csv_path.empty() && !a.out_prefix.empty() ? a.out_prefix + ".csv" : a.csv_path;
  const bool to_stdout = job.paths["json"].empty() && job.paths["csv"].empty();
  job.compute = [=, workers = g.workers](const Job& job) {
    const auto report = deviation_report(ens.spec, windows, a.eps, workers);
    json doc = report_to_json(report, a.timing ? std::optional<double>(report.runtime_ms) : std::nullopt);
    doc["meta"] = meta(job);
    std::ostringstream csv;
    csv << header_comment(job) << kReportCsvHeader << '\n';
    write_report_csv_rows(csv, report);
    Outputs o{{"json", doc.dump(2) + "\n"}, {"csv", csv.str()}};
    o["stdout"] = to_stdout ? o["json"] : "";
    return o;
  };
  return job;
}

struct RatesArgs {
  std::vector<Int> qs;
  std::string ensemble = "all";
  std::vector<std::string> windows{"1"};
  std::vector<double> eps{0.1};
  std::string out_path;
};

Job rates_job(const RatesArgs& a, const Globals& g) {
  for (Int q : a.qs) check_scan_modulus(q);
  const auto windows = parse_windows(a.windows);
  std::vector<ResolvedEnsemble> ensembles;
  json ens_config = json::array();
  for (Int q : a.qs) {
    ensembles.push_back(resolve_ensemble(a.ensemble, q));
    ens_config.push_back(ensembles.back().config);
  }

  Job job;
  job.config = {{"command", "rates"}, {"q", a.qs}, {"ensemble", ens_config}, {"windows", a.windows}, {"eps", a.eps}};
  if (!ensembles.empty()) job.seed = ensembles.front().seed;
  job.paths["csv"] = a.out_path;
  job.compute = [=, workers = g.workers](const Job& job) {
    std::vector<DeviationReport> reports;
    for (const auto& e : ensembles) reports.push_back(deviation_report(e.spec, windows, a.eps, workers));
    std::ostringstream csv;
    csv << header_comment(job) << "eps,statistic,alpha\n";
    for (double eps : a.eps) {
      const RateFit fit = rate_fit(reports, eps);
      for (std::size_t i = 0; i < windows.size(); ++i) {
        std::string name = windows[i].to_string();
        std::replace(name.begin(), name.end(), ',', '-');
        csv << format_double(eps) << ',' << name << ',' << format_double(fit.window_alpha[i]) << '\n';
      }
      csv << format_double(eps) << ",len," << format_double(fit.length_alpha) << '\n';
    }
    csv << "# probabilities\nq,statistic,eps,count,ensemble_size,prob\n";
    for (const auto& r : reports) {
      for (const auto& w : r.windows) {
        std::string name = w.window.to_string();
        std::replace(name.begin(), name.end(), ',', '-');
        for (const auto& d : w.deviation) {
          csv << r.q << ',' << name << ',' << format_double(d.eps) << ',' << d.count << ',' << r.ensemble_size << ','
              << format_double(d.prob) << '\n';
        }
      }
      for (const auto& d : r.length.deviation) {
        csv << r.q << ",len," << format_double(d.eps) << ',' << d.count << ',' << r.ensemble_size << ','
            << format_double(d.prob) << '\n';
      }
    }
    Outputs o{{"csv", csv.str()}};
    o["stdout"] = a.out_path.empty() ? o["csv"] : "";
    return o;
  };
  return job;
}

struct ZarembaArgs {
  Int qmin = 2;
  Int qmax = 0;
  Int k = 5;
  bool primes_only = false;
  std::string out_path;
  std::string svg_path;
};

std::string rows_csv(const Job& job, const std::vector<ZarembaRow>& rows) {
  std::ostringstream csv;
  csv << header_comment(job) << kZarembaCsvHeader << '\n';
  for (const auto& r : rows) write_zaremba_row(csv, r);
  return csv.str();
}

Job zaremba_job(const ZarembaArgs& a, const Globals& g) {
  check_scan_modulus(a.qmax);
  if (a.qmin < 2 || a.qmax < a.qmin) throw InvalidArgument("need 2 <= qmin <= qmax");
  if (a.k < 1) throw InvalidArgument("digit bound k must be at least 1");

  Job job;
  job.config = {{"command", "zaremba"}, {"qmin", a.qmin}, {"qmax", a.qmax}, {"k", a.k}, {"primes_only", a.primes_only}};
  job.paths["csv"] = a.out_path;
  job.paths["svg"] = a.svg_path;
  job.compute = [=, workers = g.workers](const Job& job) {
    const auto rows = scan_range(a.qmin, a.qmax, a.k, workers);
    const auto scan = conjecture_scan(a.qmax, a.k, a.primes_only, workers);
    auto from_qmin = [&](const std::vector<Int>& v) {
      std::vector<Int> kept;
      for (Int q : v) {
        if (q >= a.qmin) kept.push_back(q);
      }
      return kept;
    };
    const std::string lists = "counterexamples=" + join(from_qmin(scan.counterexamples)) + "\n" +
                              "vacuous=" + join(from_qmin(scan.vacuous)) + "\n";
    std::string csv = rows_csv(job, rows);
    std::istringstream list_lines(lists);
    for (std::string line; std::getline(list_lines, line);) csv += "# " + line + "\n";
    Outputs o{{"csv", csv}, {"svg", zaremba_svg(rows)}};
    o["stdout"] = (a.out_path.empty() ? rows_csv(job, rows) : std::string()) + lists;
    return o;
  };
  return job;
}

struct Figure1Args {
  Int qmin = 100;
  Int qmax = 3000;
  Int k = 5;
  std::string out_path;
  std::string svg_path;
};

Job figure1_job(const Figure1Args& a, const Globals& g) {
  check_scan_modulus(a.qmax);
  if (a.qmin < 2 || a.qmax <= a.qmin) throw InvalidArgument("need 2 <= qmin < qmax");
  if (a.k < 1) throw InvalidArgument("digit bound k must be at least 1");

  Job job;
  job.config = {{"command", "figure1"}, {"qmin", a.qmin}, {"qmax", a.qmax}, {"k", a.k}};
  job.paths["csv"] = a.out_path;
  job.paths["svg"] = a.svg_path;
  job.compute = [=, workers = g.workers](const Job& job) {
    const auto rows = scan_range(a.qmin, a.qmax, a.k, workers);
    std::vector<double> xa, ya, xp, yp;
    std::size_t both = 0, all_above = 0;
    for (const auto& r : rows) {
      if (r.ratio_all) {
        xa.push_back(static_cast<double>(r.q));
        ya.push_back(*r.ratio_all);
      }
      if (r.ratio_prime) {
        xp.push_back(static_cast<double>(r.q));
        yp.push_back(*r.ratio_prime);
      }
      if (r.ratio_all && r.ratio_prime) {
        ++both;
        all_above += *r.ratio_all > *r.ratio_prime;
      }
    }
    auto slope = [](const std::vector<double>& x, const std::vector<double>& y) {
      return x.size() >= 2 ? format_double(least_squares_slope(x, y)) : std::string("nan");
    };
    std::ostringstream summary;
    summary << "rows=" << rows.size() << '\n'
            << "rows_with_ratio_all=" << xa.size() << '\n'
            << "rows_with_ratio_prime=" << xp.size() << '\n'
            << "share_ratio_all_above_prime="
            << format_double(both ? static_cast<double>(all_above) / static_cast<double>(both) : 0.0) << '\n'
            << "slope_ratio_all=" << slope(xa, ya) << '\n'
            << "slope_ratio_prime=" << slope(xp, yp) << '\n';
    return Outputs{{"csv", rows_csv(job, rows)}, {"svg", zaremba_svg(rows)}, {"stdout", summary.str()}};
  };
  return job;
}

struct OrbitArgs {
  Int q = 0;
  Int p = 0;
  std::string horizon = "auto";
  std::vector<double> thresholds{5.0};
  double grid = 1e-3;
  double step = 0.01;
  std::string out_path;
  std::string profile_path;
};

Job orbit_job(const OrbitArgs& a) {
  check_scan_modulus(a.q);
  const Int p = normalize_numerator(a.p, a.q);
  OrbitSpec spec = OrbitSpec::standard(p, a.q);
  if (a.horizon != "auto") {
    std::size_t used = 0;
    double T = 0.0;
    try {
      T = std::stod(a.horizon, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.horizon.size() || !(T > 0.0)) throw InvalidArgument("--T must be 'auto' or a positive number");
    spec.horizon = T;
  }
  if (!(a.grid > 0.0)) throw InvalidArgument("--grid must be positive");
  if (!(a.step > 0.0)) throw InvalidArgument("--step must be positive");

  Job job;
  job.config = {{"command", "orbit"}, {"q", a.q},       {"p", p},           {"T", a.horizon},
                {"M", a.thresholds},  {"grid", a.grid}, {"step", a.step}};
  job.cacheable = false;
  job.paths["csv"] = a.out_path;
  job.paths["profile"] = a.profile_path;
  job.compute = [=](const Job& job) {
    const OrbitProfile profile = alpha1_profile(spec);
    std::ostringstream csv;
    csv << header_comment(job) << kExcursionCsvHeader << '\n';
    for (double M : a.thresholds) write_excursion_row(csv, profile, excursion_fraction(profile, M, a.grid));
    std::ostringstream prof;
    prof << header_comment(job);
    write_profile_csv(prof, profile, a.step);
    Outputs o{{"csv", csv.str()}, {"profile", prof.str()}};
    o["stdout"] = a.out_path.empty() ? o["csv"] : "";
    return o;
  };
  return job;
}

struct DualArgs {
  Int q = 0;
  Int p = 0;
  std::vector<double> thresholds{2.0};
  double grid = 1e-3;
  std::string out_path;
};

Job dual_job(const DualArgs& a) {
  check_scan_modulus(a.q);
  const Int p = normalize_numerator(a.p, a.q);
  for (double M : a.thresholds) {
    if (!(M > 0.0)) throw InvalidArgument("cusp thresholds must be positive");
  }

  Job job;
  job.config = {{"command", "orbit-dual"}, {"q", a.q}, {"p", p}, {"M", a.thresholds}, {"grid", a.grid}};
  job.cacheable = false;
  job.paths["csv"] = a.out_path;
  job.compute = [=](const Job& job) {
    const Int dual = neg_mod_inverse(p, a.q);
    std::ostringstream csv;
    csv << header_comment(job) << kDualCsvHeader << '\n';
    for (const auto& r : dual_orbit_identity(p, a.q, a.thresholds, a.grid)) {
      csv << a.q << ',' << p << ',' << dual << ',' << format_double(r.M) << ',' << format_double(r.lhs) << ','
          << format_double(r.rhs) << ',' << format_double(r.residual) << '\n';
    }
    Outputs o{{"csv", csv.str()}};
    o["stdout"] = a.out_path.empty() ? o["csv"] : "";
    return o;
  };
  return job;
}

struct MassArgs {
  std::vector<Int> qs;
  std::string ensemble = "all";
  std::vector<double> thresholds{5.0};
  double grid = 1e-3;
  std::string out_path;
};

Job mass_job(const MassArgs& a, const Globals& g) {
  std::vector<ResolvedEnsemble> ensembles;
  json ens_config = json::array();
  for (Int q : a.qs) {
    check_scan_modulus(q);
    ensembles.push_back(resolve_ensemble(a.ensemble, q));
    ens_config.push_back(ensembles.back().config);
  }
  for (double M : a.thresholds) {
    if (!(M > 0.0)) throw InvalidArgument("cusp thresholds must be positive");
  }
  if (!(a.grid > 0.0)) throw InvalidArgument("--grid must be positive");

  Job job;
  job.config = {{"command", "orbit-mass"}, {"q", a.qs}, {"ensemble", ens_config}, {"M", a.thresholds},
                {"grid", a.grid}};
  if (!ensembles.empty()) job.seed = ensembles.front().seed;
  job.paths["csv"] = a.out_path;
  job.compute = [=, workers = g.workers](const Job& job) {
    std::ostringstream csv;
    csv << header_comment(job) << kMassCsvHeader << '\n';
    for (const auto& e : ensembles) {
      const auto residues = realize_ensemble(e.spec);
      for (double M : a.thresholds) {
        csv << e.spec.q << ',' << format_double(M) << ','
            << format_double(ensemble_mass(e.spec.q, residues, M, workers)) << ',' << residues.size() << ','
            << format_double(a.grid) << '\n';
      }
    }
    Outputs o{{"csv", csv.str()}};
    o["stdout"] = a.out_path.empty() ? o["csv"] : "";
    return o;
  };
  return job;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const EmptyEnsemble*>(&e)) return kEmptyEnsemble;
  if (dynamic_cast<const OverflowError*>(&e)) return kOverflow;
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const InsufficientData*>(&e)) return kUsage;
  if (dynamic_cast<const json::exception*>(&e)) return kUsage;
  return kFailure;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < size; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued-fraction statistics laboratory", kToolName};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", CFSTAT_VERSION);

  Globals g;
  app.add_option("--workers", g.workers, "Worker threads (default: hardware concurrency)")
      ->check(CLI::Range(1u, 4096u));
  app.add_option("--cache-dir", g.cache_dir, "Result cache directory (overrides CF_STATLAB_CACHE)");
  app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");

  CfeArgs cfe;
  auto* cmd_cfe = app.add_subcommand("cfe", "Expand one fraction");
  cmd_cfe->add_option("fraction", cfe.fraction, "Fraction p/q")->required();
  cmd_cfe->add_option("--window", cfe.windows, "Window digits, e.g. 1,2 (repeatable)");

  StatsArgs stats;
  auto* cmd_stats = app.add_subcommand("stats", "Window and length statistics over an ensemble");
  cmd_stats->add_option("--q", stats.q, "Modulus")->required();
  cmd_stats->add_option("--ensemble", stats.ensemble, "all | primes | random:h=H,seed=S | file:PATH");
  cmd_stats->add_option("--window", stats.windows, "Window digits (repeatable)");
  cmd_stats->add_option("--eps", stats.eps, "Deviation thresholds")->delimiter(',');
  cmd_stats->add_option("--out", stats.out_prefix, "Write PREFIX.json and PREFIX.csv");
  cmd_stats->add_option("--json", stats.json_path, "JSON report path");
  cmd_stats->add_option("--csv", stats.csv_path, "CSV report path");
  cmd_stats->add_flag("--timing", stats.timing, "Record wall time in the JSON report");

  RatesArgs rates;
  auto* cmd_rates = app.add_subcommand("rates", "Fit deviation rate exponents across moduli");
  cmd_rates->add_option("--q", rates.qs, "Moduli, comma separated")->required()->delimiter(',');
  cmd_rates->add_option("--ensemble", rates.ensemble, "all | primes | random:h=H,seed=S | file:PATH");
  cmd_rates->add_option("--window", rates.windows, "Window digits (repeatable)");
  cmd_rates->add_option("--eps", rates.eps, "Deviation thresholds")->delimiter(',');
  cmd_rates->add_option("--out", rates.out_path, "CSV output path");

  ZarembaArgs zar;
  auto* cmd_zar = app.add_subcommand("zaremba", "Per-denominator k-Zaremba counts and counterexample scan");
  cmd_zar->add_option("--qmin", zar.qmin, "Smallest denominator");
  cmd_zar->add_option("--qmax", zar.qmax, "Largest denominator")->required();
  cmd_zar->add_option("--k", zar.k, "Digit bound");
  cmd_zar->add_flag("--primes-only", zar.primes_only, "Require a prime numerator");
  cmd_zar->add_option("--out", zar.out_path, "CSV output path");
  cmd_zar->add_option("--svg", zar.svg_path, "SVG scatter output path");

  Figure1Args fig;
  auto* cmd_fig = app.add_subcommand("figure1", "Growth of k-Zaremba numerator counts");
  cmd_fig->add_option("--qmin", fig.qmin, "Smallest denominator");
  cmd_fig->add_option("--qmax", fig.qmax, "Largest denominator");
  cmd_fig->add_option("--k", fig.k, "Digit bound");
  cmd_fig->add_option("--out", fig.out_path, "CSV output path");
  cmd_fig->add_option("--svg", fig.svg_path, "SVG scatter output path");

  OrbitArgs orb;
  auto* cmd_orbit = app.add_subcommand("orbit", "alpha_1 profile and cusp excursions of one orbit");
  cmd_orbit->add_option("--q", orb.q, "Modulus")->required();
  cmd_orbit->add_option("--p", orb.p, "Numerator (reduced mod q)")->required();
  cmd_orbit->add_option("--T", orb.horizon, "Horizon, or 'auto' for 2 log q");
  cmd_orbit->add_option("--M", orb.thresholds, "Cusp thresholds")->delimiter(',');
  cmd_orbit->add_option("--grid", orb.grid, "Validation grid step");
  cmd_orbit->add_option("--step", orb.step, "Profile sampling step");
  cmd_orbit->add_option("--out", orb.out_path, "Excursion CSV path");
  cmd_orbit->add_option("--profile", orb.profile_path, "Profile CSV path");

  DualArgs dual;
  auto* cmd_dual = app.add_subcommand("orbit-dual", "Dual-orbit splitting residuals");
  cmd_dual->add_option("--q", dual.q, "Modulus")->required();
  cmd_dual->add_option("--p", dual.p, "Numerator (reduced mod q)")->required();
  cmd_dual->add_option("--M", dual.thresholds, "Cusp thresholds")->delimiter(',');
  cmd_dual->add_option("--grid", dual.grid, "Validation grid step");
  cmd_dual->add_option("--out", dual.out_path, "CSV output path");

  MassArgs mass;
  auto* cmd_mass = app.add_subcommand("orbit-mass", "Retained mass of X^{<=M} averaged over an ensemble");
  cmd_mass->add_option("--q", mass.qs, "Moduli, comma separated")->required()->delimiter(',');
  cmd_mass->add_option("--ensemble", mass.ensemble, "all | primes | random:h=H,seed=S | file:PATH");
  cmd_mass->add_option("--M", mass.thresholds, "Cusp thresholds")->delimiter(',');
  cmd_mass->add_option("--grid", mass.grid, "Grid step (recorded only)");
  cmd_mass->add_option("--out", mass.out_path, "CSV output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() + std::string("\n") : app.help());
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*cmd_cfe) {
      run_cfe(cfe, out);
      return kOk;
    }
    Job job;
    if (*cmd_stats) job = stats_job(stats, g);
    else if (*cmd_rates) job = rates_job(rates, g);
    else if (*cmd_zar) job = zaremba_job(zar, g);
    else if (*cmd_fig) job = figure1_job(fig, g);
    else if (*cmd_orbit) job = orbit_job(orb);
    else if (*cmd_dual) job = dual_job(dual);
    else job = mass_job(mass, g);
    emit(job, run_job(job, g), out);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace cfstat::cli
