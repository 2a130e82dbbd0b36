#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockmagic/matrix.hpp"

namespace blockmagic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command. args excludes the program name. Input that is not given
/// by path (or given as "-") is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Renders a report as indented "key: value" lines; matrices become grids.
std::string render_text(const nlohmann::json& report);

struct SelfCheck {
  std::string name;
  bool passed = false;
};

/// The worked examples and reference squares, checked end to end.
std::vector<SelfCheck> selftest();

}  // namespace blockmagic::cli
