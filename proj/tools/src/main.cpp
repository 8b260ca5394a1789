#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "catcore/format.hpp"
#include "commands.hpp"
#include "report_json.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-categories with group actions: validation and constructions"};
  app.require_subcommand(1);

  std::vector<std::string> workspaces;
  std::vector<std::string> files;
  cli::Caps caps;
  int caps_n = 0;
  std::string out_path;
  std::string format = "json";
  app.add_option("-w,--workspace", workspaces, "Directory of .grp/.2cat/.act files")->check(CLI::ExistingDirectory);
  app.add_option("-i,--input", files, "Extra document to load")->check(CLI::ExistingFile);
  app.add_option("--caps", caps_n, "Cap on 1-cells per hom-set during enumeration")->check(CLI::PositiveNumber);
  app.add_option("--budget", caps.budget, "Search budget (partial assignments)");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", caps.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);

  std::string name, b, act;
  auto* validate = app.add_subcommand("validate", "Validate a group, 2-category or action");
  validate->add_option("name", name)->required();
  auto* strictify = app.add_subcommand("strictify", "Build B[G] and check the embedding");
  strictify->add_option("B", b)->required();
  strictify->add_option("action", act)->required();
  auto* equiv = app.add_subcommand("equivariantize", "Build B^G");
  equiv->add_option("B", b)->required();
  equiv->add_option("action", act)->required();
  auto* zg = app.add_subcommand("zg", "Build the G-crossed center Z_G(B)");
  zg->add_option("B", b)->required();
  zg->add_option("action", act)->required();
  auto* center = app.add_subcommand("center", "Build the braided center Z(B)");
  center->add_option("B", b)->required();
  auto* theorem = app.add_subcommand("check-theorem", "Check a theorem on finite data");
  theorem->require_subcommand(1);
  auto* center_equi = theorem->add_subcommand("center-equi", "Z(B^G) against Z(Phi)^G");
  center_equi->add_option("B", b)->required();
  center_equi->add_option("action", act)->required();
  for (auto* s : {validate, strictify, equiv, zg, center, theorem, center_equi}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (caps_n > 0) caps.max_hom1 = caps_n;
  if (workspaces.empty()) workspaces.push_back(CATCORE_FIXTURE_DIR);

  const auto t0 = std::chrono::steady_clock::now();
  cli::Outcome outcome;
  std::string status;
  int code = kPass;
  auto fail_with = [&](const std::string& command, const std::string& tag, const std::string& what, int exit) {
    outcome = cli::Outcome();
    outcome.command = command;
    outcome.report.add(tag, {}, what);
    status = "error";
    code = exit;
  };
  std::string command = app.get_subcommands().front()->get_name();
  if (command == "check-theorem") command += " center-equi";
  try {
    catcore::Workspace ws;
    for (const auto& dir : workspaces) catcore::load_directory(dir, ws);
    for (const auto& f : files) catcore::load_file(f, ws);
    if (*validate) outcome = cli::run_validate(ws, name, caps);
    else if (*strictify) outcome = cli::run_strictify(ws, b, act, caps);
    else if (*equiv) outcome = cli::run_equivariantize(ws, b, act, caps);
    else if (*zg) outcome = cli::run_zg(ws, b, act, caps);
    else if (*center) outcome = cli::run_center(ws, b, caps);
    else outcome = cli::run_center_theorem(ws, b, act, caps);
    status = outcome.report.pass() ? "pass" : "fail";
    code = outcome.report.pass() ? kPass : kFail;
  } catch (const catcore::ValidationError& e) {
    fail_with(command, e.tag(), e.what(), kFail);
    status = "fail";
  } catch (const catcore::ParseError& e) {
    fail_with(command, "ParseError", e.what(), kUsage);
  } catch (const catcore::SchemaError& e) {
    fail_with(command, "SchemaError", std::string(e.what()) + " at " + e.path(), kUsage);
  } catch (const cli::UsageError& e) {
    fail_with(command, "Usage", e.what(), kUsage);
  } catch (const catcore::NotStrictAction& e) {
    fail_with(command, "NotStrictAction", e.what(), kUsage);
  } catch (const catcore::CapExceeded& e) {
    fail_with(command, "CapExceeded", e.what(), kUsage);
  } catch (const catcore::SearchBudgetExceeded& e) {
    fail_with(command, "SearchBudgetExceeded", e.what(), kUsage);
  } catch (const catcore::Error& e) {
    fail_with(command, "Error", e.what(), kUsage);
  } catch (const std::filesystem::filesystem_error& e) {
    fail_with(command, "Usage", e.what(), kUsage);
  }
  outcome.command = command;
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const nlohmann::json report = cli::to_json(outcome, caps, status, ms);
  const std::string text = format == "json" ? report.dump(2) + "\n" : cli::to_text(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return kUsage;
    }
    out << text;
  }
  return code;
}
