#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bjq/grid.hpp"
#include "bjq/pseudodiff.hpp"

namespace bjq {

/// %.17g-style text; reads back to the same double.
std::string format_double(double v);

/// Header x,p,re,im; one row per grid point, x index outer.
void write_csv(const PhaseFunction& f, const std::string& path);
PhaseFunction read_phase_csv(const std::string& path);

/// Header i,j,re,im; row-major.
void write_csv(const OperatorMatrix& a, const std::string& path);

/// Header x,re,im.
void write_csv(const SampledSignal& s, const std::string& path);
SampledSignal read_signal_csv(const std::string& path);

/// Named real columns of equal length.
void write_columns(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns,
                   const std::string& path);

/// Binary 16-bit P5 image of Re f (rows = p descending, columns = x), scaled
/// affinely from [min, max] to [0, 65535]. A sidecar `path + ".json"` records
/// min, max and the axis extents.
void write_pgm(const PhaseFunction& f, const std::string& path);

struct PgmImage {
  int width = 0, height = 0;
  std::vector<unsigned> pixels;  // row-major
};
PgmImage read_pgm(const std::string& path);

void write_json(const nlohmann::json& report, const std::string& path);

}  // namespace bjq
