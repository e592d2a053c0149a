#include "ribbon/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <future>
#include <ostream>

#include "ribbon/constructor.hpp"
#include "ribbon/diagram.hpp"
#include "ribbon/error.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/io.hpp"
#include "ribbon/plot.hpp"

namespace ribbon::cli {

using io::Json;

std::vector<double> default_radii(const Stabilization& st) {
  const double base = st.unbounded ? 1.0 : std::max(st.width, 1.0);
  return {1.5 * base, 3 * base, 6 * base, 12 * base};
}

std::string radial_code(const RibbonFrame& frame, double R) {
  const auto edge = outer_edge(frame, R);
  return canonical_form(gauss_from_spatial(edge, Projection::radial(), frame.tol, frame.grid_n)).str();
}

SweepReport sweep(const RibbonFrame& frame, std::vector<double> radii) {
  SweepReport rep;
  rep.r_star = stabilization_width(frame);
  if (radii.empty()) radii = default_radii(rep.r_star);
  std::sort(radii.begin(), radii.end());
  rep.radii = radii;

  struct One {
    bool embedded;
    std::optional<std::string> code;
  };
  std::vector<std::future<One>> jobs;
  for (double R : radii)
    jobs.push_back(std::async(std::launch::async, [&frame, R] {
      One o{edge_embedded(frame, R).embedded, std::nullopt};
      try {
        o.code = radial_code(frame, R);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonGenericProjection) throw;
      }
      return o;
    }));
  for (auto& j : jobs) {
    auto o = j.get();
    rep.embedded.push_back(o.embedded);
    rep.code.push_back(std::move(o.code));
  }

  const std::size_t n = radii.size();
  if (n == 0 || !rep.embedded.back() || !rep.code.back()) return rep;
  std::size_t first = n - 1;
  while (first > 0 && rep.embedded[first - 1] && rep.code[first - 1] == rep.code.back() &&
         (rep.r_star.unbounded || radii[first - 1] > rep.r_star.width))
    --first;
  if (rep.r_star.unbounded || radii[first] > rep.r_star.width) rep.stable_from = radii[first];
  return rep;
}

namespace {

constexpr int kOk = 0, kUsage = 1, kInvalid = 2;

std::size_t grid_override() {
  const char* env = std::getenv("RIBBON_GRID_N");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(env, &end, 10);
  if (*end != '\0' || n < 256 || (n & (n - 1)) != 0)
    throw Error(ErrorKind::ParseError, std::string("RIBBON_GRID_N must be a power of two >= 256, got ") + env);
  return static_cast<std::size_t>(n);
}

RibbonFrame load(const std::string& path) {
  auto f = io::load_frame(path);
  if (const auto g = grid_override()) f.grid_n = g;
  return f;
}

Json stabilization_json(const Stabilization& st) {
  return st.unbounded ? Json(nullptr) : Json(st.width);
}

BaseKnot base_knot(const std::string& spec) {
  if (spec == "unknot") return UnknotPreset{};
  if (spec == "trefoil") return fixtures::trefoil_curve();
  return io::load_frame(spec).base;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const auto rep = validate_frame(load(path));
  out << io::dump(io::report_json(rep));
  return rep.all_passed() ? kOk : kInvalid;
}

int cmd_goalposts(const std::string& path, std::ostream& out) {
  const auto f = load(path);
  const auto gps = detect_goalposts(f);
  out << io::dump(Json{{"count", gps.size()}, {"goalposts", io::goalposts_json(gps)}});
  return kOk;
}

int cmd_rstar(const std::string& path, std::ostream& out) {
  const auto f = load(path);
  const auto st = stabilization_width(f);
  auto recs = st.unbounded ? std::vector<CrossingRecord>{} : crossing_widths(f);
  out << io::dump(Json{{"unbounded", st.unbounded}, {"r_star", stabilization_json(st)},
                       {"crossings", io::crossings_json(recs)}});
  return kOk;
}

int cmd_limit(const std::string& path, std::ostream& out) {
  const auto f = load(path);
  const auto code = limiting_resolution(f);
  out << io::dump(Json{{"code", canonical_form(code).str()}, {"profile", io::profile_json(profile(code))}});
  return kOk;
}

int cmd_sweep(const std::string& path, const std::vector<double>& radii, std::ostream& out) {
  const auto rep = sweep(load(path), radii);
  Json codes = Json::array(), emb = Json::array();
  for (std::size_t i = 0; i < rep.radii.size(); ++i) {
    emb.push_back(static_cast<bool>(rep.embedded[i]));
    codes.push_back(rep.code[i] ? Json(*rep.code[i]) : Json(nullptr));
  }
  out << io::dump(Json{{"radii", rep.radii},
                       {"embedded", emb},
                       {"code", codes},
                       {"r_star", stabilization_json(rep.r_star)},
                       {"stable_from", rep.stable_from ? Json(*rep.stable_from) : Json(nullptr)}});
  return kOk;
}

int cmd_construct(const std::string& k1, const std::string& k2, const std::string& out_path, std::ostream& out) {
  const auto base = base_knot(k1);
  const auto target = SignedGaussCode::parse(k2);
  const auto target_profile = profile(target);
  const std::size_t grid = grid_override();
  const auto frame = build_frame(base, target, grid ? grid : kDefaultGridN);
  io::write_text(out_path, io::dump(io::frame_json(frame)));

  const auto rep = validate_frame(frame);
  const auto st = stabilization_width(frame);
  const auto limit = limiting_resolution(frame);
  const auto limit_profile = profile(limit);
  const auto verdict = same_knot_type(limit_profile, target_profile);
  Json j{{"frame", out_path},
         {"validation", io::report_json(rep)},
         {"r_star", stabilization_json(st)},
         {"limiting_code", canonical_form(limit).str()},
         {"limiting_profile", io::profile_json(limit_profile)},
         {"target_profile", io::profile_json(target_profile)},
         {"limit_vs_target", to_string(verdict)}};
  bool base_ok = true;
  if (const auto* curve = std::get_if<ClosedCurve3>(&base)) {
    const auto got = profile(spatial_code(frame.base, frame.grid_n));
    const auto want = profile(spatial_code(*curve, frame.grid_n));
    base_ok = same_knot_type(got, want) == KnotComparison::Indistinguishable;
    j["base_profile"] = io::profile_json(got);
    j["k1_profile"] = io::profile_json(want);
  }
  out << io::dump(j);
  return rep.all_passed() && verdict == KnotComparison::Indistinguishable && base_ok ? kOk : kInvalid;
}

int cmd_identify(const std::string& code, std::ostream& out) {
  out << io::dump(io::profile_json(profile(SignedGaussCode::parse(code))));
  return kOk;
}

int cmd_plot(const std::string& path, const std::string& what, const std::string& out_path, std::ostream& out) {
  const auto f = load(path);
  std::string text;
  if (what == "diagram") {
    text = plot::diagram_svg(f);
  } else if (what == "sweep") {
    const auto st = stabilization_width(f);
    text = plot::sweep_csv(f, plot::sweep_radii(st.unbounded ? 1.0 : st.width));
  } else {
    text = plot::curve_svg(f.base);
  }
  if (out_path.empty())
    out << text;
  else
    io::write_text(out_path, text);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-width ribbon analysis"};
  app.require_subcommand(1);
  std::string frame_path, code, k1 = "unknot", k2, out_path, what = "diagram";
  std::vector<double> radii;

  auto* validate = app.add_subcommand("validate", "check the five frame conditions");
  validate->add_option("frame", frame_path)->required();
  auto* goalposts = app.add_subcommand("goalposts", "list goal posts");
  goalposts->add_option("frame", frame_path)->required();
  auto* rstar = app.add_subcommand("rstar", "stabilization width and crossing widths");
  rstar->add_option("frame", frame_path)->required();
  auto* limit = app.add_subcommand("limit-knot", "limiting resolution and its invariants");
  limit->add_option("frame", frame_path)->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "outer edge codes over a radius ladder");
  sweep_cmd->add_option("frame", frame_path)->required();
  sweep_cmd->add_option("--radii", radii, "explicit radii")->delimiter(',');
  auto* construct = app.add_subcommand("construct", "build a frame whose limit is a given knot");
  construct->add_option("--k1", k1, "unknot, trefoil, or a frame JSON whose base is used");
  construct->add_option("--k2", k2, "signed Gauss code of the target")->required();
  construct->add_option("--out", out_path, "frame JSON output")->required();
  auto* identify = app.add_subcommand("identify", "invariants of a signed Gauss code");
  identify->add_option("code", code)->required();
  auto* plot_cmd = app.add_subcommand("plot", "SVG or CSV figures");
  plot_cmd->add_option("frame", frame_path)->required();
  plot_cmd->add_option("--what", what)->check(CLI::IsMember({"diagram", "sweep", "curve"}));
  plot_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(frame_path, out);
    if (*goalposts) return cmd_goalposts(frame_path, out);
    if (*rstar) return cmd_rstar(frame_path, out);
    if (*limit) return cmd_limit(frame_path, out);
    if (*sweep_cmd) return cmd_sweep(frame_path, radii, out);
    if (*construct) return cmd_construct(k1, k2, out_path, out);
    if (*identify) return cmd_identify(code, out);
    if (*plot_cmd) return cmd_plot(frame_path, what, out_path, out);
  } catch (const Error& e) {
    err << "ribbon: " << e.what() << "\n";
    const bool input = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError ||
                       e.kind() == ErrorKind::InvalidArgument;
    return input ? kUsage : kInvalid;
  } catch (const std::exception& e) {
    err << "ribbon: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ribbon::cli
