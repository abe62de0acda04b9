// Acceptance gate: runs every verification suite over the rationals with the
// pinned seed and replays the golden CLI transcript, printing one pass/fail
// line per criterion.  All comparisons are exact; there are no tolerances.
//
// Usage: sinv_acceptance <path-to-cli> <path-to-transcript>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "sinv/verify.hpp"

namespace {

struct TranscriptEntry {
  std::string command;  // after "$ ", starting with the placeholder "sinv"
  std::string output;   // expected stdout+stderr, exactly
  int exit_code = 0;
};

std::vector<TranscriptEntry> parse_transcript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open transcript " + path);
  std::vector<TranscriptEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("$ ", 0) == 0) {
      entries.push_back({line.substr(2), "", 0});
    } else if (line.rfind("[exit ", 0) == 0) {
      if (entries.empty()) throw std::runtime_error("exit before command");
      entries.back().exit_code =
          std::atoi(line.substr(6, line.size() - 7).c_str());
    } else if (!entries.empty()) {
      entries.back().output += line + "\n";
    }
  }
  return entries;
}

// Replace the leading "sinv" placeholder with the real binary path and
// "@golden@" with the transcript's directory (for auxiliary input files).
std::string resolve_command(std::string cmd, const std::string& cli,
                            const std::string& dir) {
  for (std::size_t p = cmd.find("@golden@"); p != std::string::npos;
       p = cmd.find("@golden@"))
    cmd.replace(p, 8, dir);
  if (cmd.rfind("sinv", 0) != 0) return cmd;
  return "'" + cli + "'" + cmd.substr(4);
}

bool run_transcript(const std::string& cli, const std::string& path,
                    std::string& detail) {
  std::size_t slash = path.find_last_of('/');
  std::string dir = slash == std::string::npos ? "." : path.substr(0, slash);
  std::vector<TranscriptEntry> entries = parse_transcript(path);
  if (entries.size() < 30) {
    detail = "transcript has only " + std::to_string(entries.size()) +
             " commands, need at least 30";
    return false;
  }
  for (const TranscriptEntry& e : entries) {
    std::string full = resolve_command(e.command, cli, dir) + " 2>&1";
    FILE* p = popen(full.c_str(), "r");
    if (!p) {
      detail = "popen failed for: " + e.command;
      return false;
    }
    std::string got;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) got.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != e.exit_code) {
      detail = "command '" + e.command + "' exited " + std::to_string(code) +
               ", expected " + std::to_string(e.exit_code);
      return false;
    }
    if (got != e.output) {
      detail = "command '" + e.command + "' output differs:\n--- expected\n" +
               e.output + "--- got\n" + got;
      return false;
    }
  }
  detail = std::to_string(entries.size()) + " commands byte-identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  struct Row {
    int criterion;
    const char* title;
    const char* suite;
  };
  const std::vector<Row> rows = {
      {1, "defining relations and matrix-unit calculus", "relations"},
      {2, "scalar index: symbol vs truncation oracle", "index-scalar"},
      {3, "block index: symbol vs truncation oracle", "index-block"},
      {4, "index invariance under finite-rank perturbations", "finite-rank"},
      {5, "component-index laws on units", "ind-laws"},
      {6, "the shift element and its action table", "theta"},
      {7, "scalar determinant and one-sided unit factorization",
       "k1-detbar"},
      {8, "finite blocks as factor-2 elementary words", "f2-elementaries"},
      {9, "global unit splits and full factorization", "group-splits"},
      {10, "finite-block determinants and the filtration limit",
       "determinants"},
      {11, "automorphism generators and conjugation identities",
       "automorphisms"},
  };

  sinv::SuiteOptions opt;  // rational field, seed 12345, window cap 48
  bool all_pass = true;
  for (const Row& r : rows) {
    sinv::SuiteOutcome out;
    try {
      out = sinv::run_suite(r.suite, opt);
    } catch (const std::exception& e) {
      out = {r.suite, false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && out.pass;
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << r.criterion << ": " << r.title << " (" << out.detail << ")"
              << std::endl;
  }

  bool cli_ok = false;
  std::string detail;
  if (argc >= 3) {
    try {
      cli_ok = run_transcript(argv[1], argv[2], detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
  } else {
    detail = "cli path and transcript path not provided";
  }
  all_pass = all_pass && cli_ok;
  std::cout << (cli_ok ? "[PASS]" : "[FAIL]")
            << " criterion 12: golden CLI transcript (" << detail << ")"
            << std::endl;

  return all_pass ? 0 : 1;
}
