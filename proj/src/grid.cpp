#include "owc/grid.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace owc {

GridSummary summarize(const ScalarGrid& grid, double threshold) {
  if (grid.values.empty()) throw std::invalid_argument("summarize: empty grid");
  GridSummary s;
  s.threshold = threshold;
  s.min = s.max = grid.values[0];
  double sum = 0.0;
  std::size_t above = 0, imin = 0, imax = 0;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const double v = grid.values[i];
    if (v < s.min) { s.min = v; imin = i; }
    if (v > s.max) { s.max = v; imax = i; }
    if (v >= threshold) ++above;
    sum += v;
  }
  s.mean = sum / static_cast<double>(grid.values.size());
  s.argmin_ix = imin % grid.nx;
  s.argmin_iy = imin / grid.nx;
  s.argmax_ix = imax % grid.nx;
  s.argmax_iy = imax / grid.nx;
  s.coverage = static_cast<double>(above) / static_cast<double>(grid.values.size());
  return s;
}

namespace {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

void write_csv(const ScalarGrid& grid, std::ostream& os) {
  os << "nx,ny,step,quantity\n";
  os << grid.nx << ',' << grid.ny << ',' << fmt9(grid.step) << ',' << grid.quantity << '\n';
  for (std::size_t j = 0; j < grid.ny; ++j) {
    for (std::size_t i = 0; i < grid.nx; ++i) {
      if (i != 0) os << ',';
      os << fmt9(grid.at(i, j));
    }
    os << '\n';
  }
}

void write_csv_file(const ScalarGrid& grid, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(grid, os);
  if (!os) throw std::runtime_error("write failed: " + path);
}

ScalarGrid read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "nx,ny,step,quantity")
    throw std::runtime_error("grid csv: bad header");
  if (!std::getline(is, line)) throw std::runtime_error("grid csv: missing metadata");
  ScalarGrid g;
  {
    std::istringstream ls(line);
    std::string tok;
    std::getline(ls, tok, ','); g.nx = std::stoul(tok);
    std::getline(ls, tok, ','); g.ny = std::stoul(tok);
    std::getline(ls, tok, ','); g.step = std::stod(tok);
    std::getline(ls, g.quantity);
  }
  g.values.reserve(g.nx * g.ny);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) g.values.push_back(std::stod(tok));
  }
  if (g.values.size() != g.nx * g.ny) throw std::runtime_error("grid csv: value count mismatch");
  return g;
}

void write_summary(const ScalarGrid& grid, const GridSummary& s, const std::string& name,
                   std::ostream& os) {
  os << "map: " << name << '\n';
  os << "quantity: " << grid.quantity << '\n';
  os << "grid: " << grid.nx << " x " << grid.ny << ", step " << fmt9(grid.step) << " m\n";
  os << "min: " << fmt9(s.min) << " at (" << fmt9(grid.x_of(s.argmin_ix)) << ", "
     << fmt9(grid.y_of(s.argmin_iy)) << ")\n";
  os << "max: " << fmt9(s.max) << " at (" << fmt9(grid.x_of(s.argmax_ix)) << ", "
     << fmt9(grid.y_of(s.argmax_iy)) << ")\n";
  os << "mean: " << fmt9(s.mean) << '\n';
  os << "coverage(>= " << fmt9(s.threshold) << "): " << fmt9(s.coverage * 100.0) << "%\n";
}

}  // namespace owc
