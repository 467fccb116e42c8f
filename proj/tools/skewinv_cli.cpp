// Command-line front end.  Exit codes: 0 all asserted checks pass,
// 1 an asserted check failed, 2 bad input or runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "skewinv/errors.hpp"
#include "skewinv/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants of finite matrix groups on exterior, skew and symmetric algebras"};
  std::string command;
  std::string problem_path;
  std::string method = "direct";
  std::optional<std::size_t> cap;
  std::uint64_t seed = 1;
  std::size_t group_cap = skewinv::kDefaultGroupCap;
  std::string json_path;

  std::vector<std::string> commands(skewinv::kCommands.begin(), skewinv::kCommands.end());
  app.add_option("command", command, "What to run")->required()->check(CLI::IsMember(commands));
  app.add_option("problem", problem_path, "Problem file (JSON)");
  app.add_option("--method", method, "Generator computation")->check(CLI::IsMember({"direct", "arrangement"}));
  app.add_option("--cap", cap, "Degree cap for the skew and symmetric rules");
  app.add_option("--seed", seed, "Seed for the random arrangement battery");
  app.add_option("--group-cap", group_cap, "Abort group enumeration beyond this many elements");
  app.add_option("--json", json_path, "Write the machine-readable report here ('-' for stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<skewinv::ProblemFile> problem;
    if (!problem_path.empty()) problem = skewinv::load_problem(problem_path);
    skewinv::RunOptions options;
    options.method = skewinv::parse_method(method);
    options.cap = cap;
    options.seed = seed;
    options.group_cap = group_cap;
    const auto report = skewinv::run(command, problem ? &*problem : nullptr, options);
    if (json_path == "-") {
      std::cout << report.json;
    } else {
      std::cout << report.text;
      if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw skewinv::UsageError("cannot write '" + json_path + "'");
        out << report.json;
      }
    }
    return report.ok ? 0 : 1;
  } catch (const skewinv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
