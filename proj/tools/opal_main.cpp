// opal: a session-language front end for the exact ideal and closure engine.
// Reads a session from a file (or stdin), executes it, and prints the
// deterministic text or JSON transcript.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opal/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"opal - closure operations on ideals of presented rings"};

  std::string input_path;
  opal::ExecOptions options;
  std::string witnesses_csv;

  app.add_option("session", input_path, "session file (stdin when omitted)");
  app.add_option("--format", options.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", options.seed, "sampling seed, echoed in every report")->capture_default_str();
  app.add_option("--degree-bound", options.degree_bound, "degree bound for sampled checks")
      ->capture_default_str();
  app.add_option("--samples", options.axiom_samples, "sample count for axiom checks")->capture_default_str();
  app.add_flag("--fail-fast", options.fail_fast, "stop at the first failing command");
  app.add_option("--witnesses", witnesses_csv, "extra regular witnesses, comma-separated");

  CLI11_PARSE(app, argc, argv);

  if (!witnesses_csv.empty()) {
    std::stringstream ss(witnesses_csv);
    std::string part;
    while (std::getline(ss, part, ',')) options.extra_witness_texts.push_back(part);
  }

  std::string text;
  if (input_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "error: cannot read " << input_path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    int exit_code = 0;
    std::cout << opal::run_session_text(text, options, &exit_code);
    return exit_code;
  } catch (const opal::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
