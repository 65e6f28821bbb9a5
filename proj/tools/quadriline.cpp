// quadriline: rectangles inscribed in four lines, from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quadriline/error.hpp"
#include "quadriline/io.hpp"
#include "quadriline/render.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

void print(const quadriline::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  using namespace quadriline;

  CLI::App app{"Exact rectangles inscribed in four lines"};
  app.require_subcommand(1);

  std::string input;
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", input, "configuration JSON file")->required(); };

  auto* classify = app.add_subcommand("classify", "normalize and classify a configuration");
  add_input(classify);

  auto* rect = app.add_subcommand("rect", "the rectangle with a given slope or aspect ratio");
  add_input(rect);
  std::optional<std::string> slope, aspect;
  auto* slope_opt = rect->add_option("--slope", slope, "slope as s/t (1/0 for vertical)");
  auto* aspect_opt = rect->add_option("--aspect", aspect, "aspect ratio as u/v");
  slope_opt->excludes(aspect_opt);

  auto* path = app.add_subcommand("path", "sample a path of rectangles");
  add_input(path);
  std::string kind = "slope";
  std::size_t samples = 12;
  path->add_option("--kind", kind, "slope or aspect")->check(CLI::IsMember({"slope", "aspect"}));
  path->add_option("--samples", samples, "number of sampled ratios");

  auto* locus = app.add_subcommand("locus", "describe the locus of rectangle centers");
  add_input(locus);

  auto* census = app.add_subcommand("census", "brute-force rectangle count over a prime field");
  add_input(census);

  auto* render = app.add_subcommand("render", "draw lines, rectangles and locus as SVG");
  add_input(render);
  std::string out;
  RenderOptions render_options;
  render->add_option("--out", out, "output SVG file")->required();
  render->add_option("--samples", render_options.samples, "number of sampled rectangles");
  render->add_flag("--diagonals", render_options.diagonals, "also draw diagonals E, F and G");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const ConfigurationInput cfg = load_config(input);
    if (classify->parsed()) {
      print(classify_report(cfg));
    } else if (rect->parsed()) {
      if (!slope && !aspect) throw ParseError("rect", "one of --slope or --aspect is required");
      if (slope) {
        print(rect_report(cfg, PathKind::Slope, parse_ratio(*slope, cfg.field)));
      } else {
        print(rect_report(cfg, PathKind::Aspect, parse_ratio(*aspect, cfg.field)));
      }
    } else if (path->parsed()) {
      print(path_report(cfg, kind == "slope" ? PathKind::Slope : PathKind::Aspect, samples));
    } else if (locus->parsed()) {
      print(locus_report(cfg));
    } else if (census->parsed()) {
      const json report = census_report(cfg);
      print(report);
      if (!report["failures"].empty()) {
        std::cerr << "census: " << report["failures"].size() << " check(s) failed\n";
        return kExitInvariant;
      }
    } else if (render->parsed()) {
      const std::string svg = render_svg(cfg, render_options);
      std::ofstream file(out, std::ios::binary);
      if (!(file << svg) || !file.flush()) {
        std::cerr << "error: cannot write " << out << '\n';
        return kExitUsage;
      }
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
