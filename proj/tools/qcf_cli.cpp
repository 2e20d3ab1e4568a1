// qcf: analyze, compose and complement qubit channels through their Green
// functions; sweep the canonical family; run the self-test battery.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcf/report.hpp"
#include "qcf/selftest.hpp"
#include "qcf/sweep.hpp"

namespace {

enum Exit { kOk = 0, kInternal = 1, kValidation = 2, kSelfTest = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qcf::SpecError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot write " + output);
  out << text;
}

std::string format_report(const qcf::Json& j, const std::string& format) {
  return format == "text" ? qcf::render_text(j) : j.dump(2) + "\n";
}

qcf::AxisRange parse_axis(const qcf::Json& j, const char* name) {
  if (!j.contains(name)) throw qcf::SpecError(name, "missing field");
  const auto& a = j.at(name);
  qcf::AxisRange r;
  try {
    r.min = a.at("min").get<double>();
    r.max = a.at("max").get<double>();
    r.count = a.at("count").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw qcf::SpecError(name, "expected {\"min\": x, \"max\": y, \"count\": n}");
  }
  if (r.count < 1) throw qcf::SpecError(std::string(name) + ".count", "must be positive");
  return r;
}

qcf::SweepConfig parse_sweep_config(const std::string& text) {
  qcf::Json j;
  try {
    j = qcf::Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw qcf::SpecError("grid config", "malformed JSON");
  }
  qcf::SweepConfig cfg;
  cfg.theta = parse_axis(j, "theta");
  cfg.phi = parse_axis(j, "phi");
  if (j.contains("q")) {
    if (!j.at("q").is_array() || j.at("q").empty()) throw qcf::SpecError("q", "expected a non-empty array");
    cfg.q.clear();
    for (const auto& v : j.at("q")) {
      if (!v.is_number() || v.get<double>() < 0.0 || v.get<double>() > 1.0) {
        throw qcf::SpecError("q", "entries must be numbers in [0, 1]");
      }
      cfg.q.push_back(v.get<double>());
    }
  }
  if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  return cfg;
}

const char* kSweepHelp = R"(
Sweep CSV columns (floats with 17 significant digits):
  theta, phi, q                  grid point, radians
  verdict                        Degradable | AntiDegradable | Both | WeaklyDegradable | QZero
  residual                       classifier convolution residual
  max_coherent_information       max over sampled input states, bits
Grid config: {"theta": {"min": 0, "max": 6.283185307179586, "count": 100},
              "phi": {...}, "q": [1.0], "samples": 200, "seed": 1}
Axes are half-open: count points starting at min, max excluded.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmann Green-function analysis of qubit channels"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 internal error, 2 input validation, 3 self-test failure.\n"
      "Specs are JSON: {\"kind\":\"kraus\",\"operators\":[[[[re,im],[re,im]],[[re,im],[re,im]]],...]},\n"
      "{\"kind\":\"tT\",\"t\":[t1,t2,t3],\"T\":[[...],[...],[...]]} or\n"
      "{\"kind\":\"gaussian_canonical\",\"theta\":x,\"phi\":y,\"q\":z}.");

  std::string output;
  std::string format = "json";
  double tolerance = 1e-10;
  std::int64_t seed = -1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", output, "write to this path instead of stdout");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--tolerance", tolerance, "residual gate for cross-checks")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "random seed (sweep, selftest)");
  };

  std::string spec_a;
  std::string spec_b;
  auto* analyze = app.add_subcommand("analyze", "report on one channel");
  analyze->add_option("spec", spec_a, "channel spec file")->required();
  common(analyze);

  auto* compose = app.add_subcommand("compose", "compose two channels, first then second");
  compose->add_option("first", spec_a, "channel applied first")->required();
  compose->add_option("second", spec_b, "channel applied second")->required();
  common(compose);

  auto* complement = app.add_subcommand("complement", "report on the (weak) complementary channel");
  complement->add_option("spec", spec_a, "channel spec file")->required();
  common(complement);

  std::string grid;
  bool serial = false;
  auto* sweep = app.add_subcommand("sweep", "degradability phase map of the canonical family as CSV");
  sweep->add_option("config", grid, "grid config file")->required();
  sweep->add_flag("--serial", serial, "evaluate rows on one thread");
  sweep->footer(kSweepHelp);
  common(sweep);

  auto* selftest = app.add_subcommand("selftest", "convention anchors and oracle correspondence checks");
  common(selftest);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      emit(format_report(qcf::analyze(qcf::parse_spec_text(read_file(spec_a)), tolerance), format), output);
    } else if (*compose) {
      const auto a = qcf::parse_spec_text(read_file(spec_a));
      const auto b = qcf::parse_spec_text(read_file(spec_b));
      emit(format_report(qcf::compose(a, b, tolerance), format), output);
    } else if (*complement) {
      emit(format_report(qcf::complement(qcf::parse_spec_text(read_file(spec_a)), tolerance), format), output);
    } else if (*sweep) {
      auto cfg = parse_sweep_config(read_file(grid));
      if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
      const auto rows = serial ? qcf::sweep_serial(cfg) : qcf::sweep_parallel(cfg);
      std::ostringstream os;
      qcf::write_sweep_csv(os, rows);
      emit(os.str(), output);
    } else if (*selftest) {
      const auto report = qcf::run_selftest(seed >= 0 ? static_cast<std::uint64_t>(seed) : 7);
      std::ostringstream os;
      if (format == "text") {
        char line[200];
        for (const auto& c : report.checks) {
          std::snprintf(line, sizeof line, "%-4s %-28s %-15s residual %.3e (tol %.1e)\n", c.passed ? "ok" : "FAIL",
                        c.name.c_str(), c.group.c_str(), c.residual, c.tolerance);
          os << line;
        }
      } else {
        qcf::Json j{{"passed", report.passed()}, {"checks", qcf::Json::array()}};
        for (const auto& c : report.checks) {
          j["checks"].push_back({{"name", c.name},
                                 {"group", c.group},
                                 {"passed", c.passed},
                                 {"residual", c.residual},
                                 {"tolerance", c.tolerance}});
        }
        os << j.dump(2) << "\n";
      }
      emit(os.str(), output);
      if (!report.passed()) {
        for (const auto& name : report.failures()) std::cerr << "selftest failed: " << name << "\n";
        return kSelfTest;
      }
    }
  } catch (const qcf::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const qcf::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const qcf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
