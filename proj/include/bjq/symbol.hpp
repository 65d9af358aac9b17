#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "bjq/grid.hpp"

namespace bjq {

using ScalarFn = std::function<cplx(double)>;
using PhaseFn = std::function<cplx(double x, double p)>;

/// One term f(x) g(p - c x). Kernels of such terms are built from a single
/// transform of g, which keeps Born-Jordan averages cheap.
struct ShearTerm {
  ScalarFn f;
  ScalarFn g;
  double shear = 0.0;
};

struct SeparableSymbol {
  std::vector<ShearTerm> terms;
};

struct AnalyticSymbol {
  PhaseFn fn;
};

/// A phase-space symbol a(x, p): a sum of sheared products, an arbitrary
/// callback, or samples on a phase grid.
class SymbolSource {
 public:
  using Variant = std::variant<SeparableSymbol, AnalyticSymbol, PhaseFunction>;

  SymbolSource(SeparableSymbol s, std::string label = {}) : data_(std::move(s)), label_(std::move(label)) {}
  SymbolSource(AnalyticSymbol s, std::string label = {}) : data_(std::move(s)), label_(std::move(label)) {}
  SymbolSource(PhaseFunction s, std::string label = {}) : data_(std::move(s)), label_(std::move(label)) {}

  static SymbolSource separable(ScalarFn f, ScalarFn g, std::string label = {});
  static SymbolSource analytic(PhaseFn fn, std::string label = {});
  static SymbolSource sampled(PhaseFunction values, std::string label = {});

  const Variant& data() const { return data_; }
  const std::string& label() const { return label_; }

  bool is_sampled() const { return std::holds_alternative<PhaseFunction>(data_); }

  cplx operator()(double x, double p) const;

  // Pointwise samples on a phase grid (sampled symbols must match it).
  PhaseFunction sample(const PhaseGrid& pg) const;

  SymbolSource conj() const;
  SymbolSource operator+(const SymbolSource& other) const;
  SymbolSource scaled(cplx c) const;

 private:
  Variant data_;
  std::string label_;
};

// Standard test symbols.
SymbolSource gaussian_symbol(double hbar, double width = 1.0);
// x p e^{-(x^2 + p^2)/2hbar}
SymbolSource xp_gaussian_symbol(double hbar);
// x^m p^n
SymbolSource monomial_symbol(int m, int n);

}  // namespace bjq
