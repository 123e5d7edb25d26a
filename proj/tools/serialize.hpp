#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rc3bp/collinear.hpp"
#include "rc3bp/params.hpp"
#include "rc3bp/regions.hpp"
#include "rc3bp/stability.hpp"
#include "rc3bp/triangular.hpp"
#include "rc3bp/two_body.hpp"

namespace rc3bp {

using json = nlohmann::json;

json to_json(const SystemParams& p);
json to_json(const two_body::HyperbolicOrbit& o);
json to_json(const TriangularPair& t);
json to_json(const std::vector<CollinearRoot>& roots);
json to_json(const StabilityReport& r);
json to_json(const StableRegionReport& r);

/// Grid spec, provenance and overlays of a figure (everything except the cells).
json overlay_json(const FigureDataset& d, int samples = 257);

/// Header "x,y,label", one row per cell, i fastest.
void write_raster_csv(std::ostream& os, const RegionRaster& r);

/// 17 significant digits.
std::string fmt_double(double v);

}  // namespace rc3bp
