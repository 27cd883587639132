#include "curvetopo_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "curvetopo/crossings.hpp"
#include "curvetopo/curve_file.hpp"
#include "curvetopo/curvegen.hpp"
#include "curvetopo/diagram.hpp"
#include "curvetopo/errors.hpp"
#include "curvetopo/moves.hpp"
#include "curvetopo/report.hpp"
#include "curvetopo/rotation.hpp"
#include "curvetopo/svg.hpp"

namespace curvetopo::cli {

namespace {

struct ToleranceFlags {
  std::optional<double> eps_pos, eps_angle, eps_int;

  void attach(CLI::App& app) {
    app.add_option("--eps-pos", eps_pos, "Position tolerance (default 1e-9 x extent)");
    app.add_option("--eps-angle", eps_angle, "Angle tolerance in radians (default 1e-6)");
    app.add_option("--eps-int", eps_int, "Integer rounding tolerance (default 1e-6)");
  }

  Tolerances resolve(const ClosedPolyline& curve) const {
    Tolerances tol = default_tolerances(curve);
    if (eps_pos) tol.eps_pos = *eps_pos;
    if (eps_angle) tol.eps_angle = *eps_angle;
    if (eps_int) tol.eps_int = *eps_int;
    tol.validate();
    return tol;
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_text(out_path, text);
  }
}

// analyze -----------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string format = "text";
  std::string svg_path;
  std::string dump_path;
  std::string out_path;
  std::optional<double> basepoint;
  ToleranceFlags tol;
};

int do_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  const ClosedPolyline curve = read_curve_file(args.input).to_polyline();
  const Tolerances tol = args.tol.resolve(curve);
  const GenericityReport generic = validate_generic(curve, tol);
  if (!generic.ok) {
    err << "curve is not generic:\n";
    for (const Violation& v : generic.violations) {
      err << "  " << to_string(v.kind) << " near (" << v.location.x << ", " << v.location.y
          << "): " << v.detail << '\n';
    }
    return kRejected;
  }
  const Analysis a =
      args.basepoint ? analyze_full(curve, tol, *args.basepoint) : analyze_full(curve, tol);
  emit(args.format == "json" ? report_to_json(a.report) : report_to_text(a.report), args.out_path,
       out);
  if (!args.svg_path.empty()) {
    write_text(args.svg_path, render_svg(a.diagram, a.labels, a.winds, a.report.basepoint_t, tol));
  }
  if (!args.dump_path.empty()) write_text(args.dump_path, dump_diagram(a.diagram));
  if (!a.report.agreement) {
    err << "rotation numbers disagree: turning " << a.report.rotation_turning << ", whitney "
        << a.report.rotation_whitney << ", regions " << a.report.rotation_new << '\n';
    return kTheoremFailed;
  }
  return kOk;
}

// generate ----------------------------------------------------------------

struct GenerateArgs {
  std::optional<std::string> name;
  int order = 3;
  std::uint64_t seed = 0;
  int samples = 512;
  std::string out_path;
};

int do_generate(const GenerateArgs& args, std::ostream& out) {
  CurveFile file;
  if (args.name) {
    file = CurveFile::from_points(named_curve(*args.name, args.samples), *args.name);
  } else {
    file.geometry = random_generic_spec(args.order, args.seed, args.samples);
  }
  emit(write_curve_file(file), args.out_path, out);
  return kOk;
}

// check -------------------------------------------------------------------

int do_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const CheckSummary s = run_check(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int n = options.trials;
  out << "trials: " << n << " (max order " << options.max_order << ", seeds " << options.seed
      << ".." << options.seed + static_cast<std::uint64_t>(std::max(n - 1, 0)) << ")\n"
      << "agree: " << s.agreements << '/' << n << '\n'
      << "basepoint independence: " << s.basepoint_checks << '/' << n << '\n'
      << "euler: " << s.euler_checks << '/' << n << '\n';
  char line[64];
  std::snprintf(line, sizeof line, "time: %.2f s\n", seconds);
  out << line;

  bool generation_only = s.failures > 0;
  for (const TrialResult& t : s.trials) {
    if (t.passed()) continue;
    generation_only = generation_only && t.generation_failed;
    err << "FAIL seed " << t.seed << " order " << t.order;
    if (!t.error.empty()) {
      err << ": " << t.error << '\n';
    } else {
      err << ": rotations " << t.turning << ' ' << t.whitney << ' ' << t.rotation_new
          << (t.basepoint_independent ? "" : ", basepoint dependent")
          << (t.euler_ok ? "" : ", euler mismatch") << '\n';
    }
  }
  if (s.failures == 0) return kOk;
  return generation_only ? kRejected : kTheoremFailed;
}

// moves -------------------------------------------------------------------

struct MovesArgs {
  std::string input;
  std::string script_path;
  std::vector<std::string> steps;
  std::string out_path;
};

struct Step {
  MoveKind kind;
  long site = 0;
};

std::vector<Step> parse_steps(const MovesArgs& args) {
  std::vector<std::string> lines = args.steps;
  if (!args.script_path.empty()) {
    std::istringstream in(read_text(args.script_path));
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  std::vector<Step> steps;
  for (const std::string& raw : lines) {
    const std::string line = raw.substr(0, raw.find('#'));
    std::istringstream in(line);
    std::string type, direction, extra;
    long site = 0;
    if (!(in >> type)) continue;
    if (!(in >> direction >> site) || (in >> extra)) {
      throw ParseError("move step must read '<M1a|M1b|M2a|M3a> <forward|backward> <site>': '" +
                       raw + "'");
    }
    steps.push_back({{parse_move_type(type), parse_move_direction(direction)}, site});
  }
  return steps;
}

int do_moves(const MovesArgs& args, std::ostream& out, std::ostream& err) {
  const std::vector<Step> steps = parse_steps(args);
  Diagram d = load_diagram(read_text(args.input));
  RegionLabeling labels = alexander_numbering(d);
  int current_d = diagram_d(d);
  err << "start: crossings " << d.crossing_count() << ", d " << current_d << '\n';
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& step = steps[i];
    const std::vector<MoveSite> sites = find_move_sites(d, labels, step.kind);
    if (step.site < 0 || step.site >= static_cast<long>(sites.size())) {
      err << "step " << i << ": " << to_string(step.kind) << " site " << step.site
          << " out of range (" << sites.size() << " sites)\n";
      return kRejected;
    }
    std::optional<MoveOutcome> outcome;
    try {
      outcome.emplace(apply_move(d, labels, sites[step.site]));
    } catch (const InvalidSite& e) {
      err << "step " << i << ": " << e.what() << '\n';
      return kRejected;
    } catch (const DisconnectingMove& e) {
      err << "step " << i << ": " << e.what() << '\n';
      return kRejected;
    }
    MoveOutcome& result = *outcome;
    const int want_d = expected_delta_d(step.kind);
    const int want_n = expected_delta_crossings(step.kind);
    err << "step " << i << ": " << to_string(step.kind) << " site " << step.site << ": delta_d "
        << std::showpos << result.delta_d << std::noshowpos << ", crossings "
        << d.crossing_count() << " -> " << result.diagram.crossing_count() << ", d "
        << current_d + result.delta_d << '\n';
    if (result.delta_d != want_d || result.delta_crossings != want_n) {
      err << "step " << i << ": expected delta_d " << want_d << " and delta crossings " << want_n
          << '\n';
      return kTheoremFailed;
    }
    current_d += result.delta_d;
    d = std::move(result.diagram);
    labels = std::move(result.labels);
  }
  emit(dump_diagram(d), args.out_path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation numbers of closed plane curves", "curvetopo"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a curve file");
  analyze->add_option("input", analyze_args.input, "Curve file (JSON)")->required();
  analyze->add_option("--format", analyze_args.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--svg", analyze_args.svg_path, "Also write an annotated SVG");
  analyze->add_option("--dump-diagram", analyze_args.dump_path, "Also write the diagram dump");
  analyze->add_option("--out", analyze_args.out_path, "Write the report here instead of stdout");
  analyze->add_option("--basepoint", analyze_args.basepoint, "Base point parameter in [0, 1)");
  analyze_args.tol.attach(*analyze);

  GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand("generate", "Emit a curve file");
  auto* name_opt = generate->add_option("--name", generate_args.name, "Named curve");
  generate->add_option("--order", generate_args.order, "Fourier order")
      ->check(CLI::PositiveNumber)
      ->excludes(name_opt);
  generate->add_option("--seed", generate_args.seed, "Random seed")->excludes(name_opt);
  generate->add_option("--samples", generate_args.samples, "Number of vertices")
      ->check(CLI::Range(3, 1 << 22));
  generate->add_option("--out", generate_args.out_path, "Output path (default stdout)");

  CheckOptions check_args;
  CLI::App* check = app.add_subcommand("check", "Triple-agreement sweep on random curves");
  check->add_option("--trials", check_args.trials, "Number of curves")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--max-order", check_args.max_order, "Largest Fourier order")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", check_args.seed, "First seed");
  check->add_option("--samples", check_args.samples, "Vertices per curve")
      ->check(CLI::Range(kMinFourierSamples, 1 << 20));
  check->add_option("--threads", check_args.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  MovesArgs moves_args;
  CLI::App* moves = app.add_subcommand("moves", "Apply a move script to a diagram dump");
  moves->add_option("input", moves_args.input, "Diagram dump (JSON)")->required();
  moves->add_option("--script", moves_args.script_path,
                    "File with one '<type> <direction> <site>' step per line");
  moves->add_option("--step", moves_args.steps, "Inline step, repeatable; runs before --script");
  moves->add_option("--out", moves_args.out_path, "Write the final dump here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (analyze->parsed()) return do_analyze(analyze_args, out, err);
    if (generate->parsed()) return do_generate(generate_args, out);
    if (check->parsed()) return do_check(check_args, out, err);
    if (moves->parsed()) return do_moves(moves_args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidCurve& e) {
    err << "invalid curve: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidTolerances& e) {
    err << "invalid tolerances: " << e.what() << '\n';
    return kBadInput;
  } catch (const UnknownName& e) {
    err << e.what() << '\n';
    return kBadInput;
  } catch (const MalformedDiagram& e) {
    err << "malformed diagram: " << e.what() << '\n';
    return kBadInput;
  } catch (const GenericityViolation& e) {
    err << "curve is not generic: " << e.what() << '\n';
    return kRejected;
  } catch (const GenerationExhausted& e) {
    err << e.what() << '\n';
    return kRejected;
  } catch (const InconsistentLabeling& e) {
    err << "theorem check failed: " << e.what() << '\n';
    return kTheoremFailed;
  } catch (const CornerPatternViolation& e) {
    err << "theorem check failed: " << e.what() << '\n';
    return kTheoremFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kRejected;
  }
  return kBadInput;
}

}  // namespace curvetopo::cli
