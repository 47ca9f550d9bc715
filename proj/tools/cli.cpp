#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "needleboard/board.hpp"
#include "needleboard/geom.hpp"
#include "needleboard/parallel.hpp"
#include "needleboard/radon.hpp"
#include "needleboard/search.hpp"
#include "needleboard/spectral.hpp"
#include "needleboard/verify.hpp"
#include "needleboard/version.hpp"

namespace needleboard::cli {

namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad user input; maps to exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  int n = 16;
  std::uint64_t seed = 0;
  int angles = 0;  // 0: 8 n^2, capped
  int refine = 3;
  std::size_t trials = 10;
  std::string board;
  std::string out;
  std::string format = "json";
  std::string svg;
  unsigned threads = 0;

  // generate
  std::string kind = "random";
  double value = 1.0;
  // integrate / tail
  std::string seg;
  std::size_t mc = 0;
  // project / spectrum
  std::vector<double> thetas;
  std::vector<double> radii = {4.0, 8.0, 16.0};
  // tail
  std::vector<double> lambdas = {1.0, 2.0, 3.0};
  // verify-*
  std::vector<int> ns;
  std::vector<std::string> fixtures = {"constant", "parity", "stripes", "random:1", "random:2"};
  bool brute = false;
};

Json config_json(const RunConfig& cfg) {
  Json j;
  j["subcommand"] = cfg.subcommand;
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["angles"] = cfg.angles;
  j["refine"] = cfg.refine;
  j["trials"] = cfg.trials;
  j["board"] = cfg.board.empty() ? Json() : Json(cfg.board);
  j["out"] = cfg.out.empty() ? Json() : Json(cfg.out);
  j["format"] = cfg.format;
  j["svg"] = cfg.svg.empty() ? Json() : Json(cfg.svg);
  return j;
}

Json envelope(const RunConfig& cfg) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["config"] = config_json(cfg);
  return j;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(); }

Json point_json(const Point& p) { return Json::array({p.x, p.y}); }

Json segment_json(const Segment& s) {
  Json j;
  j["a"] = point_json(s.a);
  j["b"] = point_json(s.b);
  j["length"] = s.length();
  return j;
}

Segment parse_segment(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double d = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(d))
      throw UsageError("--seg: bad number '" + item + "' in '" + text + "'");
    v.push_back(d);
  }
  if (v.size() != 4) throw UsageError("--seg: expected ax,ay,bx,by, got '" + text + "'");
  return {{v[0], v[1]}, {v[2], v[3]}};
}

Coloring load_board(const RunConfig& cfg) {
  if (cfg.board.empty()) throw UsageError("--board is required");
  try {
    return read_board_file(cfg.board);
  } catch (const ParseError& e) {
    throw UsageError(std::string("malformed board: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

int resolved_angles(const RunConfig& cfg, int n) { return cfg.angles > 0 ? cfg.angles : default_angles(n); }

void write_svg(const std::string& path, const Coloring& c, const Segment& probe) {
  const int n = c.n();
  const double cell = std::max(4.0, 512.0 / n);
  const double size = cell * n;
  std::ofstream svg(path);
  if (!svg) throw UsageError("cannot write svg '" + path + "'");
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << ' ' << size << "\">\n";
  const double peak = std::max(c.max_abs(), 1e-300);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int shade = static_cast<int>(std::lround(127.5 + 127.5 * c.at(i, j) / peak));
      svg << "<rect x=\"" << i * cell << "\" y=\"" << (n - 1 - j) * cell << "\" width=\"" << cell << "\" height=\""
          << cell << "\" fill=\"rgb(" << shade << ',' << shade << ',' << shade << ")\"/>\n";
    }
  svg.precision(17);
  svg << "<line x1=\"" << probe.a.x * cell << "\" y1=\"" << size - probe.a.y * cell << "\" x2=\"" << probe.b.x * cell
      << "\" y2=\"" << size - probe.b.y * cell << "\" stroke=\"red\" stroke-width=\"" << std::max(1.0, cell / 6)
      << "\"/>\n</svg>\n";
}

struct Output {
  std::string text;
  int status = kOk;
};

Output json_output(const Json& j, int status = kOk) { return {j.dump(2) + "\n", status}; }

void require_json(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError("--format " + cfg.format + " is not supported by '" + cfg.subcommand + "'");
}

std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Output cmd_generate(RunConfig& cfg) {
  Coloring c = [&] {
    if (cfg.kind == "constant") {
      if (cfg.value != 1.0 && cfg.value != -1.0) throw UsageError("--value must be 1 or -1 for board files");
      return make_constant(cfg.n, cfg.value);
    }
    if (cfg.kind == "parity") return make_parity(cfg.n);
    if (cfg.kind == "stripes" || cfg.kind == "stripes-h") return make_stripes(cfg.n, StripeAxis::horizontal);
    if (cfg.kind == "stripes-v") return make_stripes(cfg.n, StripeAxis::vertical);
    if (cfg.kind == "random") return make_random(cfg.n, cfg.seed);
    throw UsageError("--kind: unknown board kind '" + cfg.kind + "'");
  }();
  std::ostringstream os;
  write_text(c, os);
  return {os.str(), kOk};
}

Output cmd_integrate(RunConfig& cfg) {
  require_json(cfg);
  const Coloring c = load_board(cfg);
  cfg.n = c.n();
  const Segment s = parse_segment(cfg.seg);
  const CrossingList pieces = cell_crossings(s, c.n());
  Json j = envelope(cfg);
  j["segment"] = segment_json(s);
  j["value"] = integrate(c, pieces);
  j["clipped_length"] = clipped_length(s, c.n());
  j["pieces"] = pieces.size();
  j["sigma"] = crossing_sigma(pieces);
  j["mc_estimate"] = cfg.mc > 0 ? Json(integrate_mc(c, s, cfg.mc)) : Json();
  return json_output(j);
}

Output cmd_project(RunConfig& cfg) {
  const Coloring c = load_board(cfg);
  cfg.n = c.n();
  if (cfg.thetas.size() != 1) throw UsageError("--theta takes exactly one angle for 'project'");
  const Direction dir(cfg.thetas.front());
  const Projection p = project(c, dir);
  const ChordMax best = max_chord_in_direction(c, dir);
  const SegmentMax seg = max_segment_in_direction(c, dir);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "offset,value\n";
    for (std::size_t k = 0; k < p.breakpoints.size(); ++k)
      os << csv_number(p.breakpoints[k]) << ',' << csv_number(p.values[k]) << '\n';
    return {os.str(), kOk};
  }
  require_json(cfg);
  Json j = envelope(cfg);
  j["theta"] = dir.theta();
  j["breakpoints"] = p.breakpoints;
  j["values"] = p.values;
  j["left_limits"] = p.left_limits;
  j["right_limits"] = p.right_limits;
  j["integral"] = p.integral();
  j["line_energy"] = line_energy(p);
  j["max_chord"] = {{"offset", best.offset}, {"value", best.value}, {"signed_value", best.signed_value}};
  j["max_segment"] = {{"segment", segment_json(seg.segment)}, {"offset", seg.offset}, {"value", seg.value}};
  return json_output(j);
}

Json report_json(const DiscrepancyReport& r) {
  Json j;
  j["n"] = r.n;
  j["best_chord"] = {{"theta", r.best_chord.chord.theta},
                     {"offset", r.best_chord.chord.offset},
                     {"segment", segment_json(r.best_chord.segment)},
                     {"value", r.best_chord.value}};
  j["best_segment"] = {{"theta", r.best_segment.theta},
                       {"offset", r.best_segment.offset},
                       {"segment", segment_json(r.best_segment.segment)},
                       {"value", r.best_segment.value}};
  j["strategy"] = {{"angles", r.strategy.angles},
                   {"refine", r.strategy.refine},
                   {"oracle", r.strategy.oracle},
                   {"directions", r.strategy.directions}};
  j["ratios"] = {{"chord_sqrt_n", r.chord_ratio_sqrt_n},
                 {"chord_sqrt_n_log_n", optional_json(r.chord_ratio_sqrt_n_log_n)},
                 {"segment_sqrt_n", r.segment_ratio_sqrt_n},
                 {"segment_sqrt_n_log_n", optional_json(r.segment_ratio_sqrt_n_log_n)}};
  return j;
}

Output cmd_search(RunConfig& cfg) {
  require_json(cfg);
  const Coloring c = load_board(cfg);
  cfg.n = c.n();
  DiscrepancyReport r;
  if (cfg.brute) {
    if (c.n() > kMaxBruteForceSide) throw UsageError("--brute needs n <= " + std::to_string(kMaxBruteForceSide));
    r = brute_force(c);
  } else {
    cfg.angles = resolved_angles(cfg, c.n());
    r = search(c, cfg.angles, cfg.refine);
  }
  if (!cfg.svg.empty()) write_svg(cfg.svg, c, r.best_segment.segment);
  Json j = envelope(cfg);
  j["report"] = report_json(r);
  return json_output(j);
}

Output cmd_certify(RunConfig& cfg) {
  require_json(cfg);
  const Coloring c = load_board(cfg);
  cfg.n = c.n();
  cfg.angles = resolved_angles(cfg, c.n());
  if (sum_squares(c) == 0.0) throw UsageError("certify: board has zero energy");
  const auto cert = certified_lower_bound(c);
  const ChordResult best = best_chord(c, cfg.angles, cfg.refine);
  Json j = envelope(cfg);
  j["certificate"] = cert ? Json{{"bound", cert->bound}, {"radius", cert->radius}, {"disk", cert->disk}, {"total", cert->total}}
                          : Json();
  j["best_chord"] = {{"theta", best.chord.theta}, {"offset", best.chord.offset}, {"value", best.value}};
  const bool sound = !cert || cert->bound <= best.value;
  j["sound"] = sound;
  if (!cfg.svg.empty()) write_svg(cfg.svg, c, best.segment);
  return json_output(j, cert && sound ? kOk : kContract);
}

Output cmd_spectrum(RunConfig& cfg) {
  require_json(cfg);
  const Coloring c = load_board(cfg);
  cfg.n = c.n();
  const EnergyReport report = tail_energy(c, cfg.radii);
  Json j = envelope(cfg);
  j["total"] = report.total;
  j["total_spectral"] = report.total_spectral;
  Json entries = Json::array();
  for (const EnergyEntry& e : report.entries)
    entries.push_back({{"radius", e.radius},
                       {"disk", e.disk},
                       {"tail", e.tail},
                       {"scaled_tail", e.scaled_tail},
                       {"error_estimate", std::isfinite(e.error_estimate) ? Json(e.error_estimate) : Json()},
                       {"resolution", e.resolution},
                       {"converged", e.converged}});
  j["entries"] = entries;
  std::vector<double> grid;
  for (int k = -32; k <= 32; ++k) grid.push_back(0.25 * k);
  Json slices = Json::array();
  for (double theta : cfg.thetas) {
    const Direction dir(theta);
    slices.push_back({{"theta", dir.theta()},
                      {"slice_residual", slice_residual(c, dir, grid)},
                      {"line_energy", line_energy(c, dir)}});
  }
  j["slices"] = slices;
  bool ok = true;
  for (const EnergyEntry& e : report.entries) ok = ok && e.converged;
  return json_output(j, ok ? kOk : kContract);
}

Output cmd_tail(RunConfig& cfg) {
  const Segment s = cfg.seg.empty() ? Segment{{0.0, 0.0}, {double(cfg.n), double(cfg.n)}} : parse_segment(cfg.seg);
  const TailExperiment ex = hoeffding_tail(s, cfg.n, cfg.trials, cfg.seed, cfg.lambdas);
  bool ok = true;
  for (std::size_t k = 0; k < ex.lambdas.size(); ++k) ok = ok && ex.within_bound(k);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "lambda,exceedances,frequency,hoeffding,allowance,within_bound\n";
    for (std::size_t k = 0; k < ex.lambdas.size(); ++k)
      os << csv_number(ex.lambdas[k]) << ',' << ex.exceedances[k] << ',' << csv_number(ex.frequencies[k]) << ','
         << csv_number(ex.hoeffding[k]) << ',' << csv_number(ex.allowance[k]) << ',' << (ex.within_bound(k) ? 1 : 0)
         << '\n';
    return {os.str(), ok ? kOk : kContract};
  }
  require_json(cfg);
  Json j = envelope(cfg);
  j["segment"] = segment_json(s);
  j["sigma"] = ex.sigma;
  j["length_sum"] = ex.length_sum;
  j["pieces"] = ex.pieces;
  Json rows = Json::array();
  for (std::size_t k = 0; k < ex.lambdas.size(); ++k)
    rows.push_back({{"lambda", ex.lambdas[k]},
                    {"exceedances", ex.exceedances[k]},
                    {"frequency", ex.frequencies[k]},
                    {"hoeffding", ex.hoeffding[k]},
                    {"allowance", ex.allowance[k]},
                    {"within_bound", ex.within_bound(k)}});
  j["lambdas"] = rows;
  return json_output(j, ok ? kOk : kContract);
}

Output cmd_verify_lower(RunConfig& cfg) {
  if (cfg.ns.empty()) cfg.ns = {4, 8, 16};
  std::vector<Fixture> fixtures;
  for (const std::string& f : cfg.fixtures) {
    try {
      fixtures.push_back(parse_fixture(f));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--fixtures: ") + e.what());
    }
  }
  const std::vector<LowerBoundRow> rows = lower_bound_scan(fixtures, cfg.ns, cfg.angles, cfg.refine);
  bool ok = true;
  for (const auto& row : rows) ok = ok && row.sound && row.certificate.has_value();
  const int status = ok ? kOk : kContract;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "fixture,n,best_chord,ratio_sqrt_n,certificate,certificate_radius,sound\n";
    for (const auto& row : rows)
      os << row.fixture << ',' << row.n << ',' << csv_number(row.best_chord) << ',' << csv_number(row.ratio_sqrt_n)
         << ',' << (row.certificate ? csv_number(*row.certificate) : "") << ','
         << (row.certificate_radius ? csv_number(*row.certificate_radius) : "") << ',' << (row.sound ? 1 : 0) << '\n';
    return {os.str(), status};
  }
  require_json(cfg);
  Json j = envelope(cfg);
  j["ns"] = cfg.ns;
  Json table = Json::array();
  for (const auto& row : rows)
    table.push_back({{"fixture", row.fixture},
                     {"n", row.n},
                     {"best_chord", row.best_chord},
                     {"ratio_sqrt_n", row.ratio_sqrt_n},
                     {"certificate", optional_json(row.certificate)},
                     {"certificate_radius", optional_json(row.certificate_radius)},
                     {"sound", row.sound}});
  j["rows"] = table;
  return json_output(j, status);
}

Output cmd_verify_upper(RunConfig& cfg) {
  if (cfg.ns.empty()) cfg.ns = {8, 16, 32};
  const ScalingReport r = upper_bound_scan(cfg.ns, cfg.trials, cfg.seed, cfg.angles, cfg.refine);
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "n,trial,seed,value,ratio_sqrt_n_log_n\n";
    for (std::size_t a = 0; a < r.ns.size(); ++a) {
      const double n = r.ns[a];
      for (std::size_t t = 0; t < r.values[a].size(); ++t)
        os << r.ns[a] << ',' << t << ',' << r.seed + t << ',' << csv_number(r.values[a][t]) << ','
           << csv_number(r.values[a][t] / std::sqrt(n * std::log(n))) << '\n';
    }
    return {os.str(), kOk};
  }
  require_json(cfg);
  Json j = envelope(cfg);
  Json per_n = Json::array();
  for (std::size_t a = 0; a < r.ns.size(); ++a)
    per_n.push_back({{"n", r.ns[a]},
                     {"angles", cfg.angles > 0 ? cfg.angles : default_angles(r.ns[a])},
                     {"values", r.values[a]},
                     {"max_ratio_sqrt_n_log_n", r.max_ratio[a]}});
  j["sizes"] = per_n;
  j["exponent"] = optional_json(r.exponent);
  return json_output(j);
}

Output cmd_perturb(RunConfig& cfg) {
  require_json(cfg);
  if (cfg.n < 2 || cfg.n > kMaxPerturbationSide)
    throw UsageError("perturb: --n must be in [2, " + std::to_string(kMaxPerturbationSide) + "]");
  const PerturbationReport r = perturbation_check(cfg.n, cfg.trials, cfg.seed);
  Json j = envelope(cfg);
  j["spacing"] = r.spacing;
  j["generic_max"] = r.generic_max;
  j["strip_max"] = r.strip_max;
  j["strip_splits"] = r.strip_splits;
  j["max_deviation"] = r.max_deviation();
  j["within_one"] = r.max_deviation() <= 1.0;
  return json_output(j, r.max_deviation() <= 1.0 ? kOk : kContract);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Line-segment discrepancy on +/-1 checkerboards", "needleboard"};
  app.set_version_flag("--version", std::string("needleboard ") + kVersion);
  app.require_subcommand(1);
  unsigned env_threads = thread_count();
  cfg.threads = env_threads;
  app.add_option("--threads", cfg.threads, "worker threads (default: NEEDLEBOARD_THREADS or 1)")
      ->check(CLI::Range(1u, 1024u));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  };
  auto add_board = [&](CLI::App* sub) { sub->add_option("--board", cfg.board, "board file")->required(); };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--angles", cfg.angles, "scan directions (default 8 n^2, at most 200000)")->check(CLI::NonNegativeNumber);
    sub->add_option("--refine", cfg.refine, "refinement rounds")->check(CLI::NonNegativeNumber);
  };

  CLI::App* generate = app.add_subcommand("generate", "write a board file");
  add_common(generate);
  generate->add_option("--n", cfg.n, "board side")->check(CLI::PositiveNumber);
  generate->add_option("--kind", cfg.kind, "constant | parity | stripes | stripes-v | random");
  generate->add_option("--seed", cfg.seed, "seed for random boards");
  generate->add_option("--value", cfg.value, "cell value for constant boards (+1 or -1)");

  CLI::App* integ = app.add_subcommand("integrate", "integral of the board along a segment");
  add_common(integ);
  add_board(integ);
  integ->add_option("--seg", cfg.seg, "segment ax,ay,bx,by")->required();
  integ->add_option("--mc", cfg.mc, "also report a midpoint-rule estimate with this many samples");

  CLI::App* proj = app.add_subcommand("project", "projection of the board onto one direction");
  add_common(proj);
  add_board(proj);
  proj->add_option("--theta", cfg.thetas, "direction angle in radians")->required()->expected(1);

  CLI::App* srch = app.add_subcommand("search", "largest chord and segment discrepancy");
  add_common(srch);
  add_board(srch);
  add_search(srch);
  srch->add_flag("--brute", cfg.brute, "exhaustive lattice-direction oracle (n <= 16)");
  srch->add_option("--svg", cfg.svg, "render the board and best segment");

  CLI::App* cert = app.add_subcommand("certify", "Fourier lower bound on the largest chord discrepancy");
  add_common(cert);
  add_board(cert);
  add_search(cert);
  cert->add_option("--svg", cfg.svg, "render the board and best chord");

  CLI::App* spec = app.add_subcommand("spectrum", "spectral energy inside and outside frequency disks");
  add_common(spec);
  add_board(spec);
  spec->add_option("--radii", cfg.radii, "disk radii")->delimiter(',')->check(CLI::PositiveNumber);
  spec->add_option("--theta", cfg.thetas, "directions for slice checks")->delimiter(',');

  CLI::App* tail = app.add_subcommand("tail", "empirical tail of a segment integral over random boards");
  add_common(tail);
  tail->add_option("--n", cfg.n, "board side")->check(CLI::PositiveNumber);
  tail->add_option("--seg", cfg.seg, "segment ax,ay,bx,by (default: main diagonal)");
  tail->add_option("--trials", cfg.trials, "random boards")->check(CLI::PositiveNumber);
  tail->add_option("--seed", cfg.seed, "base seed");
  tail->add_option("--lambdas", cfg.lambdas, "thresholds in units of sigma")->delimiter(',');

  CLI::App* vlow = app.add_subcommand("verify-lower", "best chords against the Fourier certificate");
  add_common(vlow);
  add_search(vlow);
  vlow->add_option("--ns", cfg.ns, "board sides")->delimiter(',')->check(CLI::PositiveNumber);
  vlow->add_option("--fixtures", cfg.fixtures, "constant, parity, stripes, random:<seed>")->delimiter(',');

  CLI::App* vup = app.add_subcommand("verify-upper", "best segments of random boards across sizes");
  add_common(vup);
  add_search(vup);
  vup->add_option("--ns", cfg.ns, "board sides")->delimiter(',')->check(CLI::Range(2, 100000));
  vup->add_option("--trials", cfg.trials, "random boards per size")->check(CLI::PositiveNumber);
  vup->add_option("--seed", cfg.seed, "base seed");

  CLI::App* pert = app.add_subcommand("perturb", "endpoint snapping changes integrals by at most 1");
  add_common(pert);
  pert->add_option("--n", cfg.n, "board side (2..8)");
  pert->add_option("--trials", cfg.trials, "random probes")->check(CLI::PositiveNumber);
  pert->add_option("--seed", cfg.seed, "base seed");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  set_thread_count(cfg.threads);

  Output result;
  try {
    if (cfg.subcommand == "generate") result = cmd_generate(cfg);
    else if (cfg.subcommand == "integrate") result = cmd_integrate(cfg);
    else if (cfg.subcommand == "project") result = cmd_project(cfg);
    else if (cfg.subcommand == "search") result = cmd_search(cfg);
    else if (cfg.subcommand == "certify") result = cmd_certify(cfg);
    else if (cfg.subcommand == "spectrum") result = cmd_spectrum(cfg);
    else if (cfg.subcommand == "tail") result = cmd_tail(cfg);
    else if (cfg.subcommand == "verify-lower") result = cmd_verify_lower(cfg);
    else if (cfg.subcommand == "verify-upper") result = cmd_verify_upper(cfg);
    else result = cmd_perturb(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kContract;
  }

  if (cfg.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.out << "'\n";
      return kUsage;
    }
    file << result.text;
  }
  if (result.status == kContract) err << "error: computation contract violated (see report)\n";
  return result.status;
}

}  // namespace needleboard::cli
