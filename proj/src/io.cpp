#include "bjq/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bjq/errors.hpp"

namespace bjq {

namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw ValidationError("cannot open " + path);
  return in;
}

double parse_double(std::string_view text, const std::string& path) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  while (first < last && (*first == ' ' || *first == '+')) ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ValidationError("bad number '" + std::string(text) + "' in " + path);
  return v;
}

std::vector<std::vector<double>> read_table(const std::string& path, const std::string& header) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw ValidationError(path + ": expected header '" + header + "'");
  const size_t cols = static_cast<size_t>(std::count(header.begin(), header.end(), ',')) + 1;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    size_t start = 0;
    while (true) {
      const size_t comma = line.find(',', start);
      row.push_back(parse_double(std::string_view(line).substr(start, comma - start), path));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (row.size() != cols) throw ValidationError(path + ": wrong number of columns");
    rows.push_back(std::move(row));
  }
  return rows;
}

// Recovers a centred grid from its sorted distinct sample positions.
Grid1D grid_from_points(const std::vector<double>& pts, const std::string& path) {
  if (pts.size() < 4 || pts.size() % 2 != 0) throw ValidationError(path + ": grid size must be even and >= 4");
  const double dx = (pts.back() - pts.front()) / static_cast<double>(pts.size() - 1);
  Grid1D g = Grid1D::centered(static_cast<int>(pts.size()), dx);
  for (size_t j = 0; j < pts.size(); ++j) {
    if (std::abs(pts[j] - g.point(static_cast<int>(j))) > 1e-9 * std::max(1.0, std::abs(pts[j]))) {
      throw ValidationError(path + ": samples are not on a centred uniform grid");
    }
  }
  return g;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_csv(const PhaseFunction& f, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "x,p,re,im\n";
  const int n = f.grid.n();
  for (int i = 0; i < n; ++i) {
    const std::string x = format_double(f.grid.x.point(i));
    for (int k = 0; k < n; ++k) {
      const cplx v = f.at(i, k);
      out << x << ',' << format_double(f.grid.p.point(k)) << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

PhaseFunction read_phase_csv(const std::string& path) {
  const auto rows = read_table(path, "x,p,re,im");
  const size_t n = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(rows.size()))));
  if (n * n != rows.size()) throw ValidationError(path + ": row count is not a square");
  std::vector<double> xs(n), ps(n);
  for (size_t i = 0; i < n; ++i) xs[i] = rows[i * n][0];
  for (size_t k = 0; k < n; ++k) ps[k] = rows[k][1];
  const Grid1D gx = grid_from_points(xs, path);
  const Grid1D gp = grid_from_points(ps, path);
  const double hbar = gp.dx * n * gx.dx / (2.0 * std::numbers::pi);
  PhaseGrid pg = phase_grid_for(gx, hbar);
  pg.p = gp;
  PhaseFunction f(pg);
  for (size_t j = 0; j < rows.size(); ++j) f.values[j] = cplx(rows[j][2], rows[j][3]);
  return f;
}

void write_csv(const OperatorMatrix& a, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "i,j,re,im\n";
  const size_t n = a.n();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      out << i << ',' << j << ',' << format_double(a.at(i, j).real()) << ',' << format_double(a.at(i, j).imag())
          << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv(const SampledSignal& s, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "x,re,im\n";
  for (int j = 0; j < s.grid.n_points; ++j)
    out << format_double(s.grid.point(j)) << ',' << format_double(s.values[j].real()) << ','
        << format_double(s.values[j].imag()) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

SampledSignal read_signal_csv(const std::string& path) {
  const auto rows = read_table(path, "x,re,im");
  std::vector<double> xs;
  CVector vals;
  for (const auto& r : rows) {
    xs.push_back(r[0]);
    vals.emplace_back(r[1], r[2]);
  }
  return SampledSignal(grid_from_points(xs, path), std::move(vals));
}

void write_columns(const std::vector<std::string>& names, const std::vector<std::vector<double>>& columns,
                   const std::string& path) {
  if (names.size() != columns.size() || columns.empty()) throw ValidationError("column names and data disagree");
  const size_t len = columns.front().size();
  for (const auto& c : columns)
    if (c.size() != len) throw ValidationError("columns differ in length");
  std::ofstream out = open_out(path);
  for (size_t c = 0; c < names.size(); ++c) out << (c ? "," : "") << names[c];
  out << '\n';
  for (size_t r = 0; r < len; ++r) {
    for (size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << format_double(columns[c][r]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_pgm(const PhaseFunction& f, const std::string& path) {
  const int n = f.grid.n();
  double lo = f.values.front().real(), hi = lo;
  for (const auto& v : f.values) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
  }
  const double span = hi > lo ? hi - lo : 1.0;
  std::ofstream out = open_out(path, std::ios::out | std::ios::binary);
  out << "P5\n" << n << ' ' << n << "\n65535\n";
  std::vector<unsigned char> bytes;
  bytes.reserve(static_cast<size_t>(2 * n * n));
  for (int row = 0; row < n; ++row) {
    const int k = n - 1 - row;
    for (int i = 0; i < n; ++i) {
      const double t = (f.at(i, k).real() - lo) / span;
      const auto level = static_cast<unsigned>(std::lround(std::clamp(t, 0.0, 1.0) * 65535.0));
      bytes.push_back(static_cast<unsigned char>(level >> 8));
      bytes.push_back(static_cast<unsigned char>(level & 0xFF));
    }
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
  nlohmann::json meta{{"min", lo},
                      {"max", hi},
                      {"component", "real"},
                      {"width", n},
                      {"height", n},
                      {"x_min", f.grid.x.x_min},
                      {"dx", f.grid.x.dx},
                      {"p_min", f.grid.p.x_min},
                      {"dp", f.grid.p.dx},
                      {"rows", "p descending"}};
  write_json(meta, path + ".json");
}

PgmImage read_pgm(const std::string& path) {
  std::ifstream in = open_in(path, std::ios::in | std::ios::binary);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  in.get();
  if (magic != "P5" || w <= 0 || h <= 0 || maxval != 65535) throw ValidationError(path + " is not a 16-bit P5 image");
  PgmImage img{w, h, std::vector<unsigned>(static_cast<size_t>(w) * h)};
  std::vector<unsigned char> bytes(img.pixels.size() * 2);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!in) throw ValidationError(path + " is truncated");
  for (size_t j = 0; j < img.pixels.size(); ++j) img.pixels[j] = (bytes[2 * j] << 8) | bytes[2 * j + 1];
  return img;
}

void write_json(const nlohmann::json& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << report.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bjq
