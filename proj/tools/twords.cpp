// twords: command-line front end.
//
//   twords SPACE-FILE COMMAND ARGS...
//   twords --space SPACE-FILE COMMAND ARGS...
//   twords SPACE-FILE repl          (one command per line on stdin)

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twords/twords.hpp"

namespace {

using twords::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

// Runs one command, reporting failures on stderr.
int execute(twords::Session& session, const std::vector<std::string>& args) {
  try {
    std::cout << session.run(args);
    return code(ExitCode::ok);
  } catch (const twords::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return code(ExitCode::parse);
  } catch (const twords::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitCode::semantic);
  }
}

int repl(twords::Session& session, std::istream& in) {
  int status = code(ExitCode::ok);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> args;
    try {
      args = twords::split_command_line(line);
    } catch (const twords::parse_error& e) {
      std::cerr << "parse error: " << e.what() << '\n';
      status = code(ExitCode::parse);
      continue;
    }
    if (args.empty() || args[0].starts_with("#")) continue;
    if (args[0] == "quit" || args[0] == "exit") break;
    if (int rc = execute(session, args); rc != 0) status = rc;
    std::cout.flush();
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transfinite word products over Noetherian base spaces"};
  std::string space_file;
  std::size_t depth = 6;
  std::string format = "pretty";
  app.add_option("--space", space_file, "Space definition file");
  app.add_option("--oracle-depth", depth, "Longest finite word searched for witnesses")->check(CLI::Range(0, 64));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "machine"}));
  app.usage("Usage: twords [OPTIONS] [SPACE-FILE] COMMAND ARGS...");
  app.prefix_command();
  app.footer(std::string(twords::session_usage) + "  repl                     read commands from stdin\n");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : code(ExitCode::usage);
  }

  std::vector<std::string> args = app.remaining();
  if (space_file.empty()) {
    if (args.empty()) {
      std::cerr << app.help();
      return code(ExitCode::usage);
    }
    space_file = args.front();
    args.erase(args.begin());
  }

  std::ifstream file(space_file);
  if (!file) {
    std::cerr << "error: cannot read " << space_file << '\n';
    return code(ExitCode::usage);
  }
  std::stringstream text;
  text << file.rdbuf();

  twords::SpacePtr space;
  try {
    space = twords::parse_space(text.str());
  } catch (const twords::parse_error& e) {
    std::cerr << space_file << ": parse error: " << e.what() << '\n';
    return code(ExitCode::parse);
  } catch (const twords::error& e) {
    std::cerr << space_file << ": error: " << e.what() << '\n';
    return code(ExitCode::semantic);
  }

  twords::SessionOptions options;
  options.oracle_depth = depth;
  options.format = format == "machine" ? twords::OutputFormat::machine : twords::OutputFormat::pretty;
  twords::Session session(space, options);

  if (args.empty() || args.front() == "repl") return repl(session, std::cin);
  return execute(session, args);
}
