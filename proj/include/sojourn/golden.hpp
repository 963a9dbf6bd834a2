#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sojourn/report.hpp"
#include "sojourn/serialize.hpp"

namespace sojourn {

/// A recomputed document and the golden file it must reproduce.
struct GoldenDocument {
  std::string file;
  Json computed;
};

std::vector<GoldenDocument> golden_documents();

/// Directory baked in at build time; overridable from the CLI.
std::filesystem::path default_golden_dir();

/// Parses each golden file, re-serializes both sides canonically and compares
/// the bytes. A mismatch names the file and the first differing row.
CheckReport compare_goldens(const std::filesystem::path& dir);

}  // namespace sojourn
