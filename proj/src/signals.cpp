#include "bjq/signals.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "bjq/errors.hpp"
#include "bjq/io.hpp"

namespace bjq {

namespace {

std::vector<double> numbers(const std::string& body, size_t expected, const std::string& kind) {
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("malformed number '" + item + "' in " + kind + " signal spec");
    }
  }
  if (out.size() != expected) {
    throw ValidationError(kind + " signal spec needs " + std::to_string(expected) + " parameter(s)");
  }
  return out;
}

}  // namespace

SignalSpec SignalSpec::parse(const std::string& raw) {
  std::string text = raw;
  SignalSpec spec;
  if (text.size() > 4 && text.compare(text.size() - 4, 4, ":raw") == 0) {
    spec.normalize = false;
    text.resize(text.size() - 4);
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string body = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  if (kind == "gaussian") {
    const auto v = numbers(body, 3, kind);
    spec.kind = Kind::gaussian;
    spec.x0 = v[0];
    spec.p0 = v[1];
    spec.sigma = v[2];
    if (!(spec.sigma > 0.0)) throw ValidationError("gaussian sigma must be positive");
  } else if (kind == "hermite") {
    const auto v = numbers(body, 1, kind);
    spec.kind = Kind::hermite;
    if (v[0] < 0 || v[0] != std::floor(v[0])) throw ValidationError("hermite order must be a non-negative integer");
    spec.k = static_cast<int>(v[0]);
  } else if (kind == "chirp") {
    spec.kind = Kind::chirp;
    spec.rate = numbers(body, 1, kind)[0];
  } else if (kind == "two_tone") {
    const auto v = numbers(body, 2, kind);
    spec.kind = Kind::two_tone;
    spec.p0 = v[0];
    spec.sigma = v[1];
    if (!(spec.sigma > 0.0)) throw ValidationError("two_tone sigma must be positive");
  } else if (kind == "csv") {
    spec.kind = Kind::csv;
    spec.path = body;
    if (spec.path.empty()) throw ValidationError("csv signal spec needs a path");
  } else {
    throw ValidationError("unknown signal kind: " + kind);
  }
  return spec;
}

SampledSignal hermite_function(int k, const Grid1D& grid, double hbar) {
  if (k < 0) throw ValidationError("hermite order must be non-negative");
  SampledSignal out(grid);
  const double front = std::pow(std::numbers::pi * hbar, -0.25);
  for (int j = 0; j < grid.n_points; ++j) {
    const double s = grid.point(j) / std::sqrt(hbar);
    // Normalised recurrence avoids overflow of H_k.
    double prev = 0.0;
    double cur = front * std::exp(-0.5 * s * s);
    for (int m = 0; m < k; ++m) {
      const double next = std::sqrt(2.0 / (m + 1)) * s * cur - std::sqrt(static_cast<double>(m) / (m + 1)) * prev;
      prev = cur;
      cur = next;
    }
    out.values[j] = cur;
  }
  return out;
}

SampledSignal generate_signal(const SignalSpec& spec, const Grid1D& grid, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  SampledSignal out(grid);
  switch (spec.kind) {
    case SignalSpec::Kind::gaussian: {
      const double front = std::pow(std::numbers::pi * spec.sigma * spec.sigma, -0.25);
      for (int j = 0; j < grid.n_points; ++j) {
        const double x = grid.point(j);
        const double d = (x - spec.x0) / spec.sigma;
        out.values[j] = std::polar(front * std::exp(-0.5 * d * d), spec.p0 * x / hbar);
      }
      break;
    }
    case SignalSpec::Kind::hermite: out = hermite_function(spec.k, grid, hbar); break;
    case SignalSpec::Kind::chirp:
      for (int j = 0; j < grid.n_points; ++j) {
        const double x = grid.point(j);
        out.values[j] = std::polar(std::exp(-x * x / (2.0 * hbar)), spec.rate * x * x / (2.0 * hbar));
      }
      break;
    case SignalSpec::Kind::two_tone:
      for (int j = 0; j < grid.n_points; ++j) {
        const double x = grid.point(j);
        const double d = x / spec.sigma;
        out.values[j] = 2.0 * std::exp(-0.5 * d * d) * std::cos(spec.p0 * x / hbar);
      }
      break;
    case SignalSpec::Kind::csv: {
      out = read_signal_csv(spec.path);
      if (!same_grid(out.grid, grid)) throw ValidationError("signal file " + spec.path + " is on a different grid");
      break;
    }
  }
  if (spec.normalize) {
    const double nrm = norm(out);
    if (nrm == 0.0) throw ValidationError("signal is identically zero");
    for (auto& v : out.values) v /= nrm;
  }
  check_boundary_mass(out);
  return out;
}

}  // namespace bjq
