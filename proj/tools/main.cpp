#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "output.hpp"
#include "randflight/error.hpp"

int main(int argc, char** argv) {
  using namespace rflight;

  CLI::App app{"Exact moments, characteristic function and Monte Carlo checks for the Markov random flight"};
  app.name("rflight");
  app.config_formatter(std::make_shared<cli::JsonConfig>(&app));
  app.set_config("--config", "", "Flat JSON object whose keys mirror flag names (flags win)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  // lets `rflight <cmd> --config file` reach the top-level option
  app.fallthrough();
  app.require_subcommand(1);

  int status = cli::kOk;
  cli::add_commands(app, status);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  } catch (const Error& e) {
    std::cerr << "rflight: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::TruncationNotConverged:
      case ErrorKind::PrecisionLoss:
        return cli::kCheckFailed;
      default:
        return cli::kUsage;
    }
  }
  return status;
}
