#include "reproduce.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>

#include <fmt/format.h>
#include <openssl/evp.h>

namespace rc3bp {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
  return os;
}

void finish(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  auto os = open_out(path);
  os << text;
  finish(os, path);
}

}  // namespace

json to_json(const RunManifest& m) {
  json entries = json::array();
  for (const auto& e : m.entries) {
    entries.push_back({{"file", e.file}, {"subcommand", e.subcommand}, {"params", e.params}, {"sha256", e.sha256}});
  }
  return {{"version", m.version}, {"entries", entries}};
}

std::string sha256_file(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::Io, "cannot read " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf;
  while (is.read(buf.data(), buf.size()) || is.gcount() > 0) {
    EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(is.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx, md.data(), &len);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  for (unsigned i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

void write_figure(const FigureDataset& d, const fs::path& csv, const fs::path& overlay) {
  auto os = open_out(csv);
  write_raster_csv(os, d.raster);
  finish(os, csv);
  write_text(overlay, overlay_json(d).dump(2) + "\n");
}

RunManifest reproduce_all(const fs::path& dir, int resolution) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());

  RunManifest m;
  const auto add = [&](const std::string& file, const std::string& sub, json params) {
    m.entries.push_back({file, sub, std::move(params), sha256_file(dir / file)});
  };

  for (int fig : kFigures) {
    const double mu = default_mu(fig);
    const FigureDataset d = make_figure(fig, mu, default_grid(fig, resolution));
    const std::string stem = fmt::format("figure{:02d}", fig);
    write_figure(d, dir / (stem + ".csv"), dir / (stem + ".json"));
    const json params = {{"figure", fig}, {"mu", mu}, {"resolution", resolution}};
    add(stem + ".csv", "regions", params);
    add(stem + ".json", "regions", params);
  }

  {
    std::string text = "mu,x_r1,x_r2,x_r1_series,x_r2_series\n";
    for (double mu : {0.001, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.25, 0.5}) {
      const CriticalRoots num = critical_roots(mu);
      const CriticalRoots ser = critical_roots_series(mu);
      text += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", mu, num.x_r1, num.x_r2, ser.x_r1, ser.x_r2);
    }
    write_text(dir / "critical_roots.csv", text);
    add("critical_roots.csv", "critical-roots", {{"series", true}});
  }

  {
    const double ms = critical_mu();
    const json c = {{"mu_star", ms},
                    {"F_mu_star_half_pi", F_stability(ms, std::numbers::pi / 2.0)},
                    {"gamma_mu_half", gamma_mu(0.5)},
                    {"arcsin_one_third", std::asin(1.0 / 3.0)}};
    write_text(dir / "stability_constants.json", c.dump(2) + "\n");
    add("stability_constants.json", "stability", json::object());
  }

  write_text(dir / "manifest.json", to_json(m).dump(2) + "\n");
  return m;
}

}  // namespace rc3bp
