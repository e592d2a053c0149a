#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

#include "ribbon/cli.hpp"
#include "ribbon/io.hpp"
#include "ribbon/plot.hpp"
#include "shared.hpp"

using namespace ribbon;
namespace fx = ribbon::fixtures;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "ribbon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RIBBON_DATA_DIR) + "/" + name; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / "ribbon_cli_tests";
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("identify") {
  const auto r = call({"identify", "O1+ U2+ O3+ U1+ O2+ U3+"});
  CHECK(r.code == 0);
  const auto j = io::parse_json(r.out);
  CHECK(j["determinant"] == 3);
  CHECK(j["crossings"] == 3);
  CHECK(j["jones"]["16"] == -1);
  CHECK(call({"identify", "O1+ X2"}).code == 1);
  CHECK(call({"identify", "O1+ U2- U1+ O2-"}).code == 2);
}

TEST_CASE("file errors and usage") {
  CHECK(call({"sweep", "missing.json"}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({}).code == 1);
  const auto bad = scratch_dir() / "bad.json";
  io::write_text(bad.string(), "{\"x\": 3}");
  CHECK(call({"validate", bad.string()}).code == 1);
}

TEST_CASE("validate bundled files") {
  const auto r = call({"validate", data("fixture_trefoil.json")});
  CHECK(r.code == 0);
  const auto j = io::parse_json(r.out);
  for (const char* key : {"regular_x", "regular_u", "x_embedded", "u_no_triples", "u_transversal", "no_goalposts"})
    CHECK(j[key] == true);
  CHECK(call({"validate", data("goalpost.json")}).code == 2);
}

TEST_CASE("analysis subcommands") {
  const auto gp = io::parse_json(call({"goalposts", data("goalpost.json")}).out);
  CHECK(gp["count"] == 1);
  const auto rs = io::parse_json(call({"rstar", data("goalpost.json")}).out);
  CHECK(rs["unbounded"] == true);
  CHECK(rs["r_star"].is_null());
  const auto fr = io::parse_json(call({"rstar", data("fig8_field.json")}).out);
  CHECK(fr["r_star"] == 0.0);

  const auto lk = call({"limit-knot", data("fixture_trefoil.json")});
  CHECK(lk.code == 0);
  CHECK(io::parse_json(lk.out)["profile"]["determinant"] == 3);
  CHECK(call({"limit-knot", data("goalpost.json")}).code == 2);
}

TEST_CASE("sweep") {
  const auto r = call({"sweep", data("fixture_trefoil.json")});
  REQUIRE(r.code == 0);
  const auto j = io::parse_json(r.out);
  REQUIRE(j["radii"].size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(j["embedded"][i] == true);
    CHECK(j["code"][i] == j["code"][0]);
  }
  CHECK(j["stable_from"].get<double>() >= j["r_star"].get<double>());
  CHECK(j["radii"][0].get<double>() == doctest::Approx(1.5 * j["r_star"].get<double>()));

  const auto flat = io::parse_json(call({"sweep", data("radial_circle.json")}).out);
  CHECK(flat["radii"][0] == 1.5);
  CHECK(flat["code"][0] == "");
}

TEST_CASE("construct round trip and determinism") {
  const auto out = (scratch_dir() / "built.json").string();
  const auto a = call({"construct", "--k1", "unknot", "--k2", "O1+ U2+ O3+ U1+ O2+ U3+", "--out", out});
  REQUIRE(a.code == 0);
  const auto first = io::read_text(out);
  const auto b = call({"construct", "--k1", "unknot", "--k2", "O1+ U2+ O3+ U1+ O2+ U3+", "--out", out});
  CHECK(a.out == b.out);
  CHECK(io::read_text(out) == first);

  const auto report = io::parse_json(a.out);
  CHECK(report["limiting_profile"]["determinant"] == 3);
  CHECK(report["limit_vs_target"] == "indistinguishable");

  const auto frame = io::load_frame(out);
  CHECK(io::dump(io::frame_json(frame)) == first);
  CHECK(io::dump(io::report_json(validate_frame(frame))) == io::dump(report["validation"]));
  CHECK(call({"validate", out}).out == call({"validate", out}).out);

  CHECK(call({"construct", "--k2", "O1+ U1+ O2+ U2+ O3+ U3+", "--out", out}).code == 2);
}

TEST_CASE("grid override") {
  setenv("RIBBON_GRID_N", "1000", 1);
  CHECK(call({"validate", data("fig8_field.json")}).code == 1);
  setenv("RIBBON_GRID_N", "1024", 1);
  CHECK(call({"validate", data("fig8_field.json")}).code == 0);
  unsetenv("RIBBON_GRID_N");
}

TEST_CASE("plots") {
  const auto empty = plot::diagram_svg(fx::radial_circle_frame());
  CHECK(count(empty, "class=\"crossing\"") == 0);
  CHECK(count(empty, "class=\"field\"") == 1);
  CHECK(count(plot::diagram_svg(shared::trefoil_flip()), "class=\"crossing\"") == 3);

  const auto csv = plot::sweep_csv(shared::trefoil_flip(), {4.0, 1.0, 2.0, 8.0});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "R,embedded,min_gap");
  double prev = -1;
  int rows = 0;
  while (std::getline(in, line)) {
    const double R = std::stod(line.substr(0, line.find(',')));
    CHECK(R > prev);
    prev = R;
    ++rows;
  }
  CHECK(rows == 4);

  const auto r = call({"plot", data("fixture_trefoil.json"), "--what", "curve"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "<svg") == 1);
}
