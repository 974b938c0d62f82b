#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "spinstar/experiments.hpp"

namespace {

// Exit codes: 0 success, 2 config error, 3 cap exceeded, 4 numerical
// diagnostic (positivity violation).
int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const spinstar::CapExceededError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const spinstar::PositivityViolationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const spinstar::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const spinstar::NonPositiveTemperatureError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

spinstar::ExperimentSpec load(const std::string& spec_file,
                              const std::vector<std::string>& overrides,
                              const std::string& out) {
  spinstar::ExperimentSpec spec = spinstar::parse_spec_file(spec_file);
  for (const std::string& ov : overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw spinstar::ConfigError("override must be key=value: '" + ov + "'");
    spinstar::apply_override(spec, ov.substr(0, eq), ov.substr(eq + 1));
  }
  if (!out.empty()) spec.output_path = out;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact central-spin model simulator"};
  app.require_subcommand(1);

  std::string spec_file, out;
  std::vector<std::string> overrides;
  int threads = 0;

  CLI::App* run_cmd = app.add_subcommand("run", "run an experiment spec");
  run_cmd->add_option("spec-file", spec_file, "experiment spec file")
      ->required();
  run_cmd->add_option("--out", out, "output CSV path (overrides the spec)");
  run_cmd->add_option("--threads", threads, "OpenMP worker count");
  run_cmd->add_option("--override", overrides,
                      "key=value settings applied on top of the spec");

  CLI::App* list_cmd =
      app.add_subcommand("list-experiments", "list experiment kinds");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a spec file without running it");
  validate_cmd->add_option("spec-file", spec_file, "experiment spec file")
      ->required();
  validate_cmd->add_option("--override", overrides,
                           "key=value settings applied on top of the spec");

  CLI11_PARSE(app, argc, argv);

  if (list_cmd->parsed()) {
    for (const auto& [name, desc] : spinstar::experiment_catalog())
      std::printf("%-28s %s\n", name.c_str(), desc.c_str());
    return 0;
  }

  if (validate_cmd->parsed()) {
    return run_guarded([&] {
      spinstar::validate_spec(load(spec_file, overrides, ""));
      std::printf("ok\n");
      return 0;
    });
  }

  return run_guarded([&] {
    if (threads > 0) omp_set_num_threads(threads);
    const spinstar::ExperimentSpec spec = load(spec_file, overrides, out);
    const std::string path = spinstar::run(spec);
    std::printf("wrote %s\n", path.c_str());
    return 0;
  });
}
