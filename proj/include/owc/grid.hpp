#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace owc {

/// A rectangular map of one scalar quantity over the communication floor,
/// row-major (ny rows of nx values, y rows, x fast), matching cf_grid order.
struct ScalarGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double step = 0.0;            // m
  std::string quantity;         // snr_db | sinr_db | gain_db | lux
  std::vector<double> values;   // nx * ny

  double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
  double& at(std::size_t ix, std::size_t iy) { return values[iy * nx + ix]; }
  double x_of(std::size_t ix) const { return (static_cast<double>(ix) + 0.5) * step; }
  double y_of(std::size_t iy) const { return (static_cast<double>(iy) + 0.5) * step; }
};

struct GridSummary {
  double min = 0.0, max = 0.0, mean = 0.0;
  std::size_t argmin_ix = 0, argmin_iy = 0;
  std::size_t argmax_ix = 0, argmax_iy = 0;
  double threshold = 0.0;
  double coverage = 0.0;  // fraction of points with value >= threshold
};

/// Min/max/mean, their positions, and the fraction of points at or above
/// the threshold.
GridSummary summarize(const ScalarGrid& grid, double threshold);

/// CSV layout: "nx,ny,step,quantity" header line, one metadata line, then
/// ny rows of nx values, all numbers printed with 9 significant digits.
void write_csv(const ScalarGrid& grid, std::ostream& os);
void write_csv_file(const ScalarGrid& grid, const std::string& path);
ScalarGrid read_csv(std::istream& is);

void write_summary(const ScalarGrid& grid, const GridSummary& s, const std::string& name,
                   std::ostream& os);

}  // namespace owc
