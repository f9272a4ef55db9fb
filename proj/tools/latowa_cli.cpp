// Command-line front end: aggregate CSV rows, validate lattice spec files,
// run property checks, and filter PGM images through window aggregation.
//
// Exit codes: 0 success, 1 validation/property failure, 2 usage/parse error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latowa/latowa.hpp"

namespace {

using namespace latowa;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string lattice = "unit";
  std::string tnorm;
  std::string tconorm;
  std::string mode;
  std::string weights;
  std::string family;
  std::string in_path;
  std::string out_path;
  std::string props;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  double step = 0.05;
  std::size_t samples = 256;
  std::size_t arity = 0;
  int window = 3;
  bool explain = false;
  bool expect_fail = false;
  bool oracle = false;
};

AnyLattice resolve_lattice(const std::string& selector, double tol) {
  if (selector == "unit") return AnyLattice::unit(tol);
  if (selector == "interval") return AnyLattice::interval(tol);
  if (selector.starts_with("finite=")) {
    std::string path = selector.substr(7);
    std::ifstream in(path);
    if (!in) throw Error("cannot open lattice file '" + path + "'");
    return AnyLattice::finite(FiniteLattice::parse_spec(in));
  }
  if (selector.starts_with("product=")) {
    std::string rest = selector.substr(8);
    std::vector<AnyLattice> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || rest[i] == '|') {
        factors.push_back(resolve_lattice(rest.substr(start, i - start), tol));
        start = i + 1;
      }
    }
    return product_lattice(std::move(factors));
  }
  throw Error("unknown lattice selector '" + selector + "'");
}

std::pair<std::string, std::string> default_pair_names(const AnyLattice& lat,
                                                       const std::string& family) {
  if (family == "gamma1" || family == "gamma2") return {"meet", "join"};
  switch (lat.kind()) {
    case AnyLattice::Kind::Unit: return {"prod", "luk"};
    case AnyLattice::Kind::Interval:
    case AnyLattice::Kind::Product: return {"cw:prod", "cw:luk"};
    case AnyLattice::Kind::Finite: return {"meet", "join"};
  }
  return {"meet", "join"};
}

TriangularPair<AnyLattice> resolve_pair(const AnyLattice& lat, const RunConfig& cfg) {
  auto [dn, dc] = default_pair_names(lat, cfg.family);
  std::string tn = cfg.tnorm.empty() ? dn : cfg.tnorm;
  std::string tc = cfg.tconorm.empty() ? dc : cfg.tconorm;
  return pair_from_names(lat, tn, tc);
}

struct Aggregator {
  std::size_t arity = 0;
  std::function<AggregationResult<AnyLattice>(std::span<const Value>)> run;
};

// Builds the per-row aggregation. Name/compatibility problems surface as
// usage errors; weight-value problems as validation errors.
Aggregator build_aggregator(const AnyLattice& lat, const TriangularPair<AnyLattice>& pair,
                            const RunConfig& cfg, int& error_exit) {
  Aggregator agg;
  if (cfg.mode == "owa") {
    if (lat.kind() != AnyLattice::Kind::Unit) {
      error_exit = kExitUsage;
      throw Error("mode=owa requires --lattice unit");
    }
    if (cfg.weights.empty()) {
      error_exit = kExitUsage;
      throw Error("mode=owa requires --weights");
    }
    auto wvals = parse_row(lat, cfg.weights);
    std::vector<UnitValue> w;
    for (const auto& v : wvals) w.push_back(v.as_unit());
    UnitLattice unit = lat.as_unit();
    double sum = 0;
    for (const auto& v : w) sum += v.value();
    if (std::fabs(sum - 1.0) > unit.tolerance()) {
      error_exit = kExitValidation;
      throw Error("weights sum to " + std::to_string(sum) + ", not 1");
    }
    agg.arity = w.size();
    agg.run = [lat, unit, w, wvals](std::span<const Value> row) {
      std::vector<UnitValue> xs;
      xs.reserve(row.size());
      for (const auto& v : row) xs.push_back(v.as_unit());
      UnitValue res = yager_owa(unit, std::span<const UnitValue>(w),
                                std::span<const UnitValue>(xs));
      auto chain = lm_transform(lat, row);
      return AggregationResult<AnyLattice>{Value(res), std::move(chain), wvals};
    };
    return agg;
  }
  if (cfg.mode == "lmowa") {
    if (cfg.weights.empty()) {
      error_exit = kExitUsage;
      throw Error("mode=lmowa requires --weights");
    }
    auto w = make_weight_vector(pair, parse_row(lat, cfg.weights));
    error_exit = kExitValidation;
    auto fold = pair.fold_tconorm(std::span<const Value>(w.weights));
    if (!lat.equal(fold, lat.top()))
      throw Error("invalid weight vector: fold of weights is " + lat.format(fold) +
                  ", not top");
    agg.arity = w.weights.size();
    agg.run = [w](std::span<const Value> row) { return lmowa(w, row); };
    return agg;
  }
  if (cfg.mode == "dyowa") {
    if (cfg.family.empty()) {
      error_exit = kExitUsage;
      throw Error("mode=dyowa requires --family");
    }
    std::size_t n = cfg.arity;
    std::optional<WeightFamily<AnyLattice>> fam;
    if (cfg.family == "constant") {
      if (cfg.weights.empty()) {
        error_exit = kExitUsage;
        throw Error("--family constant requires --weights");
      }
      auto w = parse_row(lat, cfg.weights);
      error_exit = kExitValidation;
      fam = constant_family(pair, std::move(w));
    } else {
      if (n == 0) n = cfg.weights.empty() ? 2 : parse_row(lat, cfg.weights).size();
      fam = builtin_family(cfg.family, n, pair);
    }
    agg.arity = fam->arity;
    auto shared = std::make_shared<WeightFamily<AnyLattice>>(std::move(*fam));
    agg.run = [shared](std::span<const Value> row) { return dyowa(*shared, row); };
    return agg;
  }
  error_exit = kExitUsage;
  throw Error("unknown mode '" + cfg.mode + "' (expected owa, lmowa, or dyowa)");
}

int run_aggregate(const RunConfig& cfg) {
  AnyLattice lat = AnyLattice::unit();
  TriangularPair<AnyLattice> pair = meet_join_pair(lat);
  try {
    if (cfg.mode != "owa" && cfg.mode != "lmowa" && cfg.mode != "dyowa")
      throw Error("unknown mode '" + cfg.mode + "' (expected owa, lmowa, or dyowa)");
    if (!cfg.family.empty() && cfg.family != "gamma1" && cfg.family != "gamma2" &&
        cfg.family != "proportional" && cfg.family != "constant")
      throw Error("unknown weight family '" + cfg.family +
                  "' (expected gamma1, gamma2, proportional, or constant)");
    lat = resolve_lattice(cfg.lattice, cfg.tolerance);
    pair = resolve_pair(lat, cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ifstream in(cfg.in_path);
  if (!in) {
    std::cerr << "error: cannot open input '" << cfg.in_path << "'\n";
    return kExitUsage;
  }
  std::vector<std::pair<std::size_t, std::vector<Value>>> rows;
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> arity;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
      trimmed.remove_suffix(1);
    if (trimmed.empty()) continue;
    std::vector<Value> row;
    try {
      row = parse_row(lat, trimmed);
    } catch (const ParseError& e) {
      std::cerr << "error: row " << lineno << ", " << e.what() << "\n";
      return kExitUsage;
    }
    if (!arity) arity = row.size();
    if (row.size() != *arity) {
      std::cerr << "error: row " << lineno << ": expected " << *arity << " cells, got "
                << row.size() << "\n";
      return kExitUsage;
    }
    rows.emplace_back(lineno, std::move(row));
  }

  // Family arity follows the data unless given explicitly.
  RunConfig effective = cfg;
  if (effective.arity == 0 && arity) effective.arity = *arity;
  Aggregator agg;
  int phase_exit = kExitUsage;
  try {
    agg = build_aggregator(lat, pair, effective, phase_exit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return phase_exit;
  }

  std::ostringstream out;
  for (const auto& [rowno, row] : rows) {
    if (row.size() != agg.arity) {
      std::cerr << "error: row " << rowno << ": expected " << agg.arity
                << " cells, got " << row.size() << "\n";
      return kExitUsage;
    }
    try {
      auto result = agg.run(std::span<const Value>(row));
      out << lat.format(result.value);
      if (cfg.explain) {
        out << "\tchain=" << format_row(lat, std::span<const Value>(result.chain))
            << "\tweights="
            << format_row(lat, std::span<const Value>(result.weights_used));
      }
      out << "\n";
    } catch (const Error& e) {
      std::cerr << "error: row " << rowno << ": " << e.what() << "\n";
      return kExitValidation;
    }
  }
  if (cfg.out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream of(cfg.out_path, std::ios::binary);
    of << out.str();
    if (!of) {
      std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

int run_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  try {
    FiniteLattice lat = FiniteLattice::parse_spec(in);
    std::cout << "elements: " << lat.size() << "\n"
              << "bottom: " << lat.name(lat.bottom()) << "\n"
              << "top: " << lat.name(lat.top()) << "\n"
              << "LATTICE OK\n";
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cout << "FAIL " << e.what() << "\n";
    return kExitValidation;
  }
}

int run_check(const RunConfig& cfg) {
  AnyLattice lat = AnyLattice::unit();
  TriangularPair<AnyLattice> pair = meet_join_pair(lat);
  Aggregator agg;
  int phase_exit = kExitUsage;
  try {
    lat = resolve_lattice(cfg.lattice, cfg.tolerance);
    pair = resolve_pair(lat, cfg);
    if (!cfg.oracle) agg = build_aggregator(lat, pair, cfg, phase_exit);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return phase_exit;
  }

  RegimeSpec regime;
  regime.grid_step = cfg.step;
  regime.samples = cfg.samples;
  regime.seed = cfg.seed;

  if (cfg.oracle) {
    std::size_t n = cfg.arity ? cfg.arity : 2;
    if (n > kOracleArityCap) {
      std::cerr << "error: --oracle supports arity up to " << kOracleArityCap << "\n";
      return kExitUsage;
    }
    auto dom = auto_domain(lat, n, cfg.samples, cfg.seed);
    auto report = equivalence_report(
        dom,
        [&](std::span<const Value> t) { return lm_transform(lat, t); },
        [&](std::span<const Value> t) { return oracle_lm(lat, t); },
        chain_eq(lat, cfg.tolerance));
    if (report.pass()) {
      std::cout << "ORACLE " << report.compared << " tuples PASS\n";
      return kExitOk;
    }
    std::cout << "ORACLE DIVERGENCE at "
              << format_tuple(lat, std::span<const Value>(report.divergence->input))
              << " transform=" << report.divergence->left
              << " oracle=" << report.divergence->right << "\n";
    return kExitValidation;
  }

  if (cfg.props.empty()) {
    std::cerr << "error: --props is required (comma-separated property ids)\n";
    return kExitUsage;
  }
  auto runner = agg.run;
  LatticeOp<AnyLattice> op{
      lat, agg.arity, cfg.mode,
      [runner](std::span<const Value> xs) { return runner(xs).value; }, nullptr};

  bool all_hold = true, all_fail = true;
  std::size_t start = 0;
  std::string props = cfg.props + ",";
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (props[i] != ',') continue;
    std::string name = props.substr(start, i - start);
    start = i + 1;
    if (name.empty()) continue;
    PropertyVerdict verdict;
    try {
      verdict = check_property(op, prop_from_name(name), regime);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cout << verdict.to_line() << "\n";
    all_hold = all_hold && verdict.holds;
    all_fail = all_fail && !verdict.holds;
  }
  if (cfg.expect_fail) return all_fail ? kExitOk : kExitValidation;
  return all_hold ? kExitOk : kExitValidation;
}

int run_filter(const RunConfig& cfg) {
  if (cfg.window < 1 || cfg.window % 2 == 0) {
    std::cerr << "error: --window must be odd and >= 1\n";
    return kExitUsage;
  }
  const std::string family = cfg.family.empty() ? "proportional" : cfg.family;
  if (family != "gamma1" && family != "gamma2" && family != "proportional" &&
      family != "constant") {
    std::cerr << "error: filter supports gamma1, gamma2, proportional, constant\n";
    return kExitUsage;
  }
  AnyLattice lat = AnyLattice::unit(cfg.tolerance);
  RunConfig fam_cfg = cfg;
  fam_cfg.family = family;
  std::optional<WeightFamily<AnyLattice>> fam;
  const std::size_t n = static_cast<std::size_t>(cfg.window) * cfg.window;
  try {
    auto pair = resolve_pair(lat, fam_cfg);
    if (family == "constant") {
      if (cfg.weights.empty()) {
        std::cerr << "error: --family constant requires --weights\n";
        return kExitUsage;
      }
      auto w = parse_row(lat, cfg.weights);
      if (w.size() != n) {
        std::cerr << "error: constant weights must have window*window = " << n
                  << " entries\n";
        return kExitUsage;
      }
      fam = constant_family(pair, std::move(w));
    } else {
      fam = builtin_family(family, n, pair);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  std::ifstream in(cfg.in_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input '" << cfg.in_path << "'\n";
    return kExitUsage;
  }
  PgmImage img;
  try {
    img = read_pgm(in);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  PgmImage out = img;
  const int r = cfg.window / 2;
  std::vector<Value> window;
  window.reserve(n);
  const auto w = static_cast<long>(img.width);
  const auto h = static_cast<long>(img.height);
  for (long y = 0; y < h; ++y) {
    for (long x = 0; x < w; ++x) {
      window.clear();
      for (long dy = -r; dy <= r; ++dy) {
        for (long dx = -r; dx <= r; ++dx) {
          long sx = std::clamp(x + dx, 0L, w - 1);
          long sy = std::clamp(y + dy, 0L, h - 1);
          double v = img.at(static_cast<std::size_t>(sx), static_cast<std::size_t>(sy)) /
                     255.0;
          window.push_back(Value(UnitValue(v)));
        }
      }
      double v;
      try {
        v = dyowa(*fam, std::span<const Value>(window)).value.as_unit().value();
      } catch (const Error& e) {
        std::cerr << "error: pixel (" << x << "," << y << "): " << e.what() << "\n";
        return kExitValidation;
      }
      double scaled = std::floor(v * 255.0 + 0.5);  // round half up
      out.pixels[static_cast<std::size_t>(y) * img.width + static_cast<std::size_t>(x)] =
          static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
    }
  }

  std::ofstream of(cfg.out_path, std::ios::binary);
  if (!of) {
    std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
    return kExitUsage;
  }
  write_pgm(of, out);
  return of ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string lattice_path;

  CLI::App app{"ordered weighted averaging over complete lattices"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* cmd) {
    cmd->add_option("--lattice", cfg.lattice,
                    "unit | interval | finite=PATH | product=SEL|SEL|...");
    cmd->add_option("--tnorm", cfg.tnorm, "min|prod|luk|drastic, meet, or cw:NAME");
    cmd->add_option("--tconorm", cfg.tconorm,
                    "max|probsum|luk|drastic, join, or cw:NAME");
    cmd->add_option("--tolerance", cfg.tolerance, "numeric comparison tolerance");
    cmd->add_option("--seed", cfg.seed, "seed for sampled regimes");
  };

  auto* agg = app.add_subcommand("aggregate", "aggregate each CSV row to one value");
  add_common(agg);
  agg->add_option("--mode", cfg.mode, "owa | lmowa | dyowa")->required();
  agg->add_option("--weights", cfg.weights, "weight cells (CSV, lattice grammar)");
  agg->add_option("--family", cfg.family, "gamma1 | gamma2 | proportional | constant");
  agg->add_option("--arity", cfg.arity, "family arity (defaults to weights length or 2)");
  agg->add_option("--in", cfg.in_path, "input CSV")->required();
  agg->add_option("--out", cfg.out_path, "output path (stdout when omitted)");
  agg->add_flag("--explain", cfg.explain, "append the ordered chain and weights used");

  auto* chk = app.add_subcommand("check", "run property checks on an operator");
  add_common(chk);
  chk->add_option("--mode", cfg.mode, "owa | lmowa | dyowa");
  chk->add_option("--weights", cfg.weights, "weight cells");
  chk->add_option("--family", cfg.family, "gamma1 | gamma2 | proportional | constant");
  chk->add_option("--arity", cfg.arity, "operator arity");
  chk->add_option("--props", cfg.props,
                  "comma-separated ids: A1A2,ISO,IP,SP,NP,AP,HP,ZD,OD,ASP,"
                  "averaging,conjunctive,disjunctive");
  chk->add_option("--step", cfg.step, "grid step on the unit lattice");
  chk->add_option("--samples", cfg.samples, "sample count for sampled regimes");
  chk->add_flag("--expect-fail", cfg.expect_fail,
                "exit 0 when every requested property FAILs");
  chk->add_flag("--oracle", cfg.oracle)->group("");

  auto* lats = app.add_subcommand("lattice", "validate a finite lattice spec file");
  lats->add_option("path", lattice_path, "lattice spec file")->required();

  auto* flt = app.add_subcommand("filter", "window-aggregate a PGM image");
  add_common(flt);
  flt->add_option("--in", cfg.in_path, "input PGM (P2 or P5, maxval 255)")->required();
  flt->add_option("--out", cfg.out_path, "output PGM")->required();
  flt->add_option("--window", cfg.window, "odd window size k (k*k pixels per window)");
  flt->add_option("--family", cfg.family, "gamma1 | gamma2 | proportional | constant");
  flt->add_option("--weights", cfg.weights, "weights for --family constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*agg) return run_aggregate(cfg);
    if (*chk) return run_check(cfg);
    if (*lats) return run_lattice(lattice_path);
    if (*flt) return run_filter(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
