#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "serialize.hpp"

namespace rc3bp {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

struct ManifestEntry {
  std::string file;  // relative to the output directory
  std::string subcommand;
  json params;
  std::string sha256;
};

/// The manifest file itself is not listed.
struct RunManifest {
  std::string version{kArtifactVersion};
  std::vector<ManifestEntry> entries;
};

json to_json(const RunManifest& m);

/// Hex SHA-256 of a file's bytes. Throws Io.
std::string sha256_file(const std::filesystem::path& path);

/// Writes the raster CSV and the overlay JSON. Throws Io with the path.
void write_figure(const FigureDataset& d, const std::filesystem::path& csv, const std::filesystem::path& overlay);

/// Every figure dataset at default parameters plus the critical-root and
/// stability-constant tables, then manifest.json. Throws Io.
RunManifest reproduce_all(const std::filesystem::path& dir, int resolution = 512);

}  // namespace rc3bp
