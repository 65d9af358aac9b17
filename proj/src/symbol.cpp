#include "bjq/symbol.hpp"

#include <cmath>

#include "bjq/errors.hpp"

namespace bjq {

SymbolSource SymbolSource::separable(ScalarFn f, ScalarFn g, std::string label) {
  return SymbolSource(SeparableSymbol{{ShearTerm{std::move(f), std::move(g), 0.0}}}, std::move(label));
}

SymbolSource SymbolSource::analytic(PhaseFn fn, std::string label) {
  return SymbolSource(AnalyticSymbol{std::move(fn)}, std::move(label));
}

SymbolSource SymbolSource::sampled(PhaseFunction values, std::string label) {
  return SymbolSource(std::move(values), std::move(label));
}

namespace {

int nearest_index(const Grid1D& g, double v) { return static_cast<int>(std::lround((v - g.x_min) / g.dx)); }

}  // namespace

cplx SymbolSource::operator()(double x, double p) const {
  if (const auto* s = std::get_if<SeparableSymbol>(&data_)) {
    cplx acc = 0.0;
    for (const auto& t : s->terms) acc += t.f(x) * t.g(p - t.shear * x);
    return acc;
  }
  if (const auto* a = std::get_if<AnalyticSymbol>(&data_)) return a->fn(x, p);
  // Sampled symbols are read at grid nodes only.
  const auto& f = std::get<PhaseFunction>(data_);
  const int i = nearest_index(f.grid.x, x);
  const int k = nearest_index(f.grid.p, p);
  if (i < 0 || i >= f.grid.n() || k < 0 || k >= f.grid.n()) return 0.0;
  return f.at(i, k);
}

PhaseFunction SymbolSource::sample(const PhaseGrid& pg) const {
  if (const auto* f = std::get_if<PhaseFunction>(&data_)) {
    if (!same_grid(f->grid, pg)) throw ValidationError("sampled symbol does not match the working grid");
    return *f;
  }
  PhaseFunction out(pg);
  for (int i = 0; i < pg.n(); ++i)
    for (int k = 0; k < pg.n(); ++k) out.at(i, k) = (*this)(pg.x.point(i), pg.p.point(k));
  return out;
}

SymbolSource SymbolSource::conj() const {
  if (const auto* s = std::get_if<SeparableSymbol>(&data_)) {
    SeparableSymbol out;
    for (const auto& t : s->terms) {
      out.terms.push_back({[f = t.f](double x) { return std::conj(f(x)); },
                           [g = t.g](double q) { return std::conj(g(q)); }, t.shear});
    }
    return SymbolSource(std::move(out), label_);
  }
  if (const auto* a = std::get_if<AnalyticSymbol>(&data_)) {
    return analytic([fn = a->fn](double x, double p) { return std::conj(fn(x, p)); }, label_);
  }
  PhaseFunction f = std::get<PhaseFunction>(data_);
  for (auto& v : f.values) v = std::conj(v);
  return SymbolSource(std::move(f), label_);
}

SymbolSource SymbolSource::operator+(const SymbolSource& other) const {
  const auto* a = std::get_if<SeparableSymbol>(&data_);
  const auto* b = std::get_if<SeparableSymbol>(&other.data_);
  if (a && b) {
    SeparableSymbol out = *a;
    out.terms.insert(out.terms.end(), b->terms.begin(), b->terms.end());
    return SymbolSource(std::move(out), label_ + "+" + other.label_);
  }
  const auto* fa = std::get_if<PhaseFunction>(&data_);
  const auto* fb = std::get_if<PhaseFunction>(&other.data_);
  if (fa && fb) {
    if (!same_grid(fa->grid, fb->grid)) throw ValidationError("cannot add symbols sampled on different grids");
    PhaseFunction out = *fa;
    for (size_t j = 0; j < out.values.size(); ++j) out.values[j] += fb->values[j];
    return SymbolSource(std::move(out), label_ + "+" + other.label_);
  }
  if (fa || fb) throw ValidationError("cannot add a sampled symbol to an analytic one");
  return analytic([l = *this, r = other](double x, double p) { return l(x, p) + r(x, p); },
                  label_ + "+" + other.label_);
}

SymbolSource SymbolSource::scaled(cplx c) const {
  if (const auto* s = std::get_if<SeparableSymbol>(&data_)) {
    SeparableSymbol out = *s;
    for (auto& t : out.terms) t.f = [f = t.f, c](double x) { return c * f(x); };
    return SymbolSource(std::move(out), label_);
  }
  if (const auto* a = std::get_if<AnalyticSymbol>(&data_)) {
    return analytic([fn = a->fn, c](double x, double p) { return c * fn(x, p); }, label_);
  }
  PhaseFunction f = std::get<PhaseFunction>(data_);
  for (auto& v : f.values) v *= c;
  return SymbolSource(std::move(f), label_);
}

SymbolSource gaussian_symbol(double hbar, double width) {
  const double s2 = 2.0 * hbar * width * width;
  return SymbolSource::separable([s2](double x) { return cplx(std::exp(-x * x / s2)); },
                                 [s2](double p) { return cplx(std::exp(-p * p / s2)); }, "gaussian");
}

SymbolSource xp_gaussian_symbol(double hbar) {
  return SymbolSource::separable([hbar](double x) { return cplx(x * std::exp(-x * x / (2.0 * hbar))); },
                                 [hbar](double p) { return cplx(p * std::exp(-p * p / (2.0 * hbar))); },
                                 "xp_gaussian");
}

SymbolSource monomial_symbol(int m, int n) {
  if (m < 0 || n < 0) throw ValidationError("monomial exponents must be non-negative");
  return SymbolSource::separable([m](double x) { return cplx(std::pow(x, m)); },
                                 [n](double p) { return cplx(std::pow(p, n)); },
                                 "x^" + std::to_string(m) + " p^" + std::to_string(n));
}

}  // namespace bjq
