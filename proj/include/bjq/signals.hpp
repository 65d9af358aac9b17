#pragma once

#include <string>

#include "bjq/grid.hpp"

namespace bjq {

struct SignalSpec {
  enum class Kind { gaussian, hermite, chirp, two_tone, csv };
  Kind kind = Kind::gaussian;
  double x0 = 0.0, p0 = 0.0, sigma = 1.0;  // gaussian; two_tone uses p0 and sigma
  int k = 0;                               // hermite order
  double rate = 0.0;                       // chirp
  std::string path;                        // csv
  bool normalize = true;

  /// gaussian:x0,p0,sigma | hermite:k | chirp:rate | two_tone:p0,sigma | csv:path
  /// A trailing ":raw" keeps the samples unnormalised.
  static SignalSpec parse(const std::string& text);
};

/// gaussian:  (pi sigma^2)^{-1/4} e^{-(x-x0)^2/2 sigma^2} e^{i p0 x / hbar}
/// hermite:   (pi hbar)^{-1/4} (2^k k!)^{-1/2} H_k(x/sqrt(hbar)) e^{-x^2/2hbar}
/// chirp:     e^{-x^2/2hbar} e^{i rate x^2/2hbar}
/// two_tone:  g(x) (e^{i p0 x/hbar} + e^{-i p0 x/hbar}), g a Gaussian of width sigma
/// csv:       columns x,re,im on the same grid
SampledSignal generate_signal(const SignalSpec& spec, const Grid1D& grid, double hbar);

SampledSignal hermite_function(int k, const Grid1D& grid, double hbar);

}  // namespace bjq
