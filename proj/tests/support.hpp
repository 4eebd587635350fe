#pragma once

#include <array>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <sys/wait.h>

#include "ghr/ghr.hpp"

namespace support {

inline ghr::Rational01 r(const char* text) { return ghr::Rational01::parse(text); }

inline ghr::Grid grid(const char* text) { return ghr::io::parse_grid(text); }

inline std::string corpus_file(const std::string& name) { return std::string(GHR_CORPUS_DIR) + "/" + name; }

/// One shared context per corpus structure; building them is the slow part.
inline const ghr::CorrespondenceContext& context(const std::string& name) {
  static std::map<std::string, std::unique_ptr<ghr::CorrespondenceContext>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    ghr::GammaHemiring g;
    if (name == "B") g = ghr::corpus::boolean();
    else if (name == "Z2") g = ghr::corpus::cyclic(2);
    else if (name == "Z3") g = ghr::corpus::cyclic(3);
    else if (name == "Z4") g = ghr::corpus::cyclic(4);
    else if (name == "Z2xZ2") g = ghr::corpus::z2_squared();
    else if (name == "Mat2x1") g = ghr::corpus::boolean_column_matrices();
    else if (name == "Z2zero") g = ghr::corpus::zero_action_z2();
    else throw std::runtime_error("no corpus structure " + name);
    it = cache.emplace(name, std::make_unique<ghr::CorrespondenceContext>(ghr::CorrespondenceContext::build(g))).first;
  }
  return *it->second;
}

inline const std::array<const char*, 6> kCorpus{"B", "Z2", "Z3", "Z4", "Z2xZ2", "Mat2x1"};

inline ghr::FuzzySubset fuzzy(const char* carrier, std::initializer_list<const char*> values) {
  ghr::FuzzySubset mu{carrier, {}};
  for (auto v : values) mu.values.push_back(r(v));
  return mu;
}

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args` (shell syntax) and captures stdout.
inline Run cli(const std::string& args, const std::string& env = {}) {
  std::string command = (env.empty() ? "" : env + " ") + "'" + GHR_CLI_PATH + "' " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) run.out.append(buf.data(), got);
  int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

}  // namespace support
