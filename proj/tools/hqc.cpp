// hqc: build, verify and export scenario files describing exterior-algebra
// towers over finite-group Hopf algebras. Exit codes: 0 ok, 1 schema error,
// 2 construction failure, 3 verification failure.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hq/scenario.hpp"

namespace {

int resolve_cap(int flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char* env = std::getenv("HQC_DEGREE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // scenario's own cap, else the library default of 4
}

hq::Json load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hq::SchemaError("scenario: cannot open '" + path + "'");
  hq::Json j;
  try {
    in >> j;
  } catch (const hq::Json::parse_error& e) {
    throw hq::SchemaError(std::string("scenario: ") + e.what());
  }
  return j;
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  out << text;
}

// Plain-text rendering of a report document for terminal use.
std::string render_text(const std::string& json_text) {
  hq::Json doc = hq::Json::parse(json_text);
  std::ostringstream os;
  if (doc.contains("error")) {
    os << "error (" << doc.value("kind", "?") << "): " << doc.at("error").get<std::string>()
       << "\n";
    return os.str();
  }
  if (doc.contains("name")) os << doc.at("name").get<std::string>() << "\n";
  if (doc.contains("dims") && doc.at("dims").is_object()) {
    os << "dims:";
    for (auto& [deg, dim] : doc.at("dims").items()) os << " " << deg << ":" << dim.get<int>();
    os << "\n";
  }
  if (doc.contains("checks")) {
    int passed = 0, failed = 0;
    for (const hq::Json& c : doc.at("checks")) {
      if (c.at("pass").get<bool>()) {
        ++passed;
      } else {
        ++failed;
        os << "FAIL " << c.at("id").get<std::string>();
        if (c.contains("witness")) os << "  [" << c.at("witness").get<std::string>() << "]";
        os << "\n";
      }
    }
    os << passed << " checks passed, " << failed << " failed\n";
  }
  return os.str();
}

int run(const std::string& command, const std::string& path, int cap, bool as_json,
        const std::string& out_path) {
  std::string out;
  int code;
  try {
    code = hq::run_command(command, load_scenario(path), resolve_cap(cap), out);
  } catch (const hq::SchemaError& e) {
    out = hq::Json{{"error", e.what()}, {"kind", "schema"}}.dump(2) + "\n";
    code = 1;
  }
  write_out(as_json || !out_path.empty() ? out : render_text(out), out_path);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact exterior-algebra towers over finite-group Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  int cap = 0;
  bool as_json = false;
  std::string out_path;
  app.add_option("--degree-cap", cap, "override the degree cap");
  app.add_flag("--json", as_json, "emit the raw JSON report");
  app.add_option("--out", out_path, "write the JSON report to a file");

  std::string scenario_path, fixture_name = "all";
  for (const char* cmd : {"build", "verify", "dims", "pair", "export"}) {
    CLI::App* sub = app.add_subcommand(cmd);
    sub->add_option("scenario", scenario_path, "scenario JSON file")->required();
  }
  app.add_subcommand("fixtures", "write the bundled example scenarios")
      ->add_option("name", fixture_name, "fixture name, or 'all'");

  CLI11_PARSE(app, argc, argv);
  std::string cmd = app.get_subcommands().front()->get_name();

  if (cmd == "fixtures") {
    std::vector<std::string> names;
    if (fixture_name == "all")
      names = {"z2-minimal", "z2-universal", "z2-subshuffle"};
    else
      names = {fixture_name};
    try {
      for (const std::string& n : names) {
        std::string path = names.size() == 1 && !out_path.empty() ? out_path : n + ".json";
        std::ofstream out(path);
        out << hq::fixture_scenario(n).dump(2) << "\n";
        std::cout << path << "\n";
      }
    } catch (const hq::SchemaError& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
    return 0;
  }
  return run(cmd, scenario_path, cap, as_json, out_path);
}
