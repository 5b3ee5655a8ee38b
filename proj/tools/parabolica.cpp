#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parabolica/parabolica.hpp"

namespace {

using parabolica::commands::json;

#ifndef PARABOLICA_GOLDEN_DIR
#define PARABOLICA_GOLDEN_DIR ""
#endif

struct Io {
  std::string input;   // path, "-" for stdin
  std::string inline_json;
  std::string format = "json";
};

json read_document(const Io& io) {
  std::string text;
  if (!io.inline_json.empty()) {
    text = io.inline_json;
  } else if (io.input.empty() || io.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(io.input);
    if (!in) throw parabolica::DomainError("io", "cannot read " + io.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parabolica::DomainError("bad_json", e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void add_io(CLI::App* cmd, Io& io) {
  cmd->add_option("-i,--input", io.input, "JSON input file (default: stdin)");
  cmd->add_option("-j,--json", io.inline_json, "inline JSON input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with parabolic subalgebras over the rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  Io io;
  std::string budget;
  app.add_option("--budget", budget, "exterior-power dimension budget");
  app.add_option("--format", io.format, "output format for building and config project")
      ->check(CLI::IsMember({"json", "dot"}));

  std::function<int()> action;

  auto* make = app.add_subcommand("make", "emit a catalog algebra: make gl N | make sl N | make so P Q");
  std::string family;
  std::vector<int> make_args;
  make->add_option("family", family)->required()->check(CLI::IsMember({"gl", "sl", "so"}));
  make->add_option("args", make_args)->required();
  make->callback([&] { action = [&] { emit(parabolica::commands::make(family, make_args)); return 0; }; });

  // Verbs that read one document and print one document.
  auto simple = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    json (*fn)(const json&)) {
    auto* cmd = parent->add_subcommand(name, help);
    add_io(cmd, io);
    cmd->callback([&, fn] { action = [&, fn] { emit(fn(read_document(io))); return 0; }; });
    return cmd;
  };
  namespace cmds = parabolica::commands;
  auto* parabolic = app.add_subcommand("parabolic", "parabolic operations (check, project, opposite, levi)");
  parabolic->require_subcommand(1);
  for (CLI::App* parent : {&app, parabolic}) {
    simple(parent, "check", "recognize a parabolic subalgebra", &cmds::check);
    simple(parent, "project", "project p into q and its Levi quotient", &cmds::project);
    simple(parent, "opposite", "opposite parabolic through a grading lift", &cmds::opposite);
    simple(parent, "levi", "grading lift, Levi subalgebra and quotient", &cmds::levi);
  }
  simple(&app, "rootdata", "roots, Cartan matrix, fundamental (co)weights", &cmds::rootdata);
  simple(&app, "weyl", "Weyl word carrying the reference chamber to a target", &cmds::weyl);
  simple(&app, "delta", "W-distance between two Borel subalgebras", &cmds::delta);
  simple(&app, "flag-stab", "stabilizer of a flag", &cmds::flag_stab);
  simple(&app, "flag-of", "flag of a parabolic", &cmds::flag_of);

  auto* building = app.add_subcommand("building", "apartment of a catalog algebra, or a thin model");
  add_io(building, io);
  auto* model = building->add_subcommand("model", "thin model: model A N | model B N");
  std::string model_kind;
  int model_rank = 0;
  model->add_option("kind", model_kind)->required()->check(CLI::IsMember({"A", "B"}));
  model->add_option("rank", model_rank)->required()->check(CLI::PositiveNumber);
  building->callback([&] {
    action = [&] {
      if (*model) {
        auto thin = cmds::model(model_kind, model_rank);
        if (io.format == "dot")
          std::cout << parabolica::to_dot(thin.system(), model_kind + std::to_string(model_rank));
        else
          emit(cmds::thin_json(thin));
        return 0;
      }
      json doc = read_document(io);
      if (io.format == "dot")
        std::cout << parabolica::to_dot(cmds::building_view(doc).apartment.thin.system(), "apartment");
      else
        emit(cmds::building(doc));
      return 0;
    };
  });

  auto* config = app.add_subcommand("config", "configurations");
  config->require_subcommand(1);
  auto* cproject = config->add_subcommand("project", "project a standard configuration from a centre");
  add_io(cproject, io);
  cproject->callback([&] {
    action = [&] {
      auto r = cmds::config_project(read_document(io));
      if (io.format == "dot")
        std::cout << r.dot;
      else
        emit(r.report);
      return 0;
    };
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  parabolica::selftest::Options opt;
  opt.golden_dir = PARABOLICA_GOLDEN_DIR;
  selftest->add_option("--golden-dir", opt.golden_dir, "directory of golden configuration outputs");
  selftest->add_option("--seed", opt.seed, "sampling seed");
  selftest->callback([&] {
    action = [&] {
      auto results = parabolica::selftest::run(
          opt, [](const auto& o) { std::cout << parabolica::selftest::format(o) << std::endl; });
      for (const auto& o : results)
        if (!o.passed) return 2;
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (!budget.empty()) setenv("PARABOLICA_WEDGE_BUDGET", budget.c_str(), 1);
  try {
    return action();
  } catch (const parabolica::TheoremContradiction& e) {
    emit(parabolica::json_io::error_json(e));
    return 2;
  } catch (const parabolica::Error& e) {
    emit(parabolica::json_io::error_json(e));
    return 1;
  } catch (const json::exception& e) {
    emit(json{{"error", "bad_json"}, {"message", e.what()}});
    return 1;
  }
}
