#include "bjq/metaplectic.hpp"

#include <cmath>
#include <numbers>

#include "bjq/distributions.hpp"
#include "bjq/errors.hpp"
#include "bjq/kernels.hpp"

namespace bjq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx dirichlet_weight(double t, int n, double dx) {
  const double theta = kTwoPi * t / (n * dx);
  const double half = 0.5 * theta;
  const double s = std::sin(half);
  if (std::abs(s) < 1e-14) {
    const double k = std::round(theta / kTwoPi);
    const double sign = (static_cast<long>(k) * (n - 1)) % 2 == 0 ? 1.0 : -1.0;
    return std::polar(sign, -half);
  }
  return std::polar(std::sin(n * half) / (n * s), -half);
}

cplx i_pow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// e^{sign i pi/4} (2 pi hbar)^{-1/2} e^{sign i x_i x_j / hbar}: non-uniform DFT onto x.
OperatorMatrix fourier_matrix(const PhaseGrid& pg, int sign) {
  OperatorMatrix out(pg);
  const int n = pg.n();
  const cplx front = std::polar(1.0 / std::sqrt(kTwoPi * pg.hbar), sign * std::numbers::pi / 4.0);
  kernels::for_rows(static_cast<size_t>(n), [&](size_t i) {
    const double xi = pg.x.point(static_cast<int>(i));
    for (int j = 0; j < n; ++j) out.at(i, j) = front * std::polar(1.0, sign * xi * pg.x.point(j) / pg.hbar);
  });
  return out;
}

// sqrt|L| psi(L x). For |L| <= 1 the stretched signal is read from the
// band-limited interpolant in x. For |L| > 1 reading psi(L x) in x would alias
// the upper half of the band, so the equivalent momentum stretch
// (1/sqrt|L|) psi_hat(p / L) is applied between grid Fourier transforms.
OperatorMatrix scaling_matrix(double l, int m, const PhaseGrid& pg) {
  if (!(std::abs(l) >= 0.25 && std::abs(l) <= 4.0)) {
    throw ValidationError("scaling factor must satisfy 1/4 <= |L| <= 4");
  }
  OperatorMatrix out(pg);
  const int n = pg.n();
  const double dx = pg.x.dx;
  if (std::abs(l) <= 1.0) {
    const cplx front = i_pow(m) * std::sqrt(std::abs(l));
    kernels::for_rows(static_cast<size_t>(n), [&](size_t i) {
      const double target = l * pg.x.point(static_cast<int>(i));
      if (!pg.x.contains(target)) return;
      for (int j = 0; j < n; ++j) out.at(i, j) = front * dirichlet_weight(target - pg.x.point(j), n, dx) / dx;
    });
    return out;
  }
  const double dp = pg.p.dx;
  const cplx front = i_pow(m) / std::sqrt(std::abs(l));
  CVector stretch(static_cast<size_t>(n) * n);
  kernels::for_rows(static_cast<size_t>(n), [&](size_t k) {
    const double target = pg.p.point(static_cast<int>(k)) / l;
    for (int q = 0; q < n; ++q) stretch[k * n + q] = front * dirichlet_weight(target - pg.p.point(q), n, dp);
  });
  kernels::for_rows(static_cast<size_t>(n), [&](size_t j) {
    SampledSignal unit(pg.x);
    unit.values[j] = 1.0;
    const SampledSignal hat = hbar_fourier(unit, pg.hbar);
    SampledSignal moved(pg.p);
    for (int k = 0; k < n; ++k) {
      cplx acc = 0.0;
      for (int q = 0; q < n; ++q) acc += stretch[static_cast<size_t>(k) * n + q] * hat.values[q];
      moved.values[k] = acc;
    }
    const SampledSignal back = inverse_hbar_fourier(moved, pg.hbar);
    for (int i = 0; i < n; ++i) out.at(i, j) = back.values[i] / dx;
  });
  return out;
}

OperatorMatrix chirp_matrix(double p, const PhaseGrid& pg) {
  OperatorMatrix out(pg);
  for (int i = 0; i < pg.n(); ++i) {
    const double x = pg.x.point(i);
    out.at(i, i) = std::polar(1.0 / pg.x.dx, p * x * x / (2.0 * pg.hbar));
  }
  return out;
}

// Kaiser-windowed sinc on a uniform grid, used to read a sampled symbol at
// off-grid points.
constexpr int kTaps = 12;
constexpr double kKaiserBeta = 10.0;

double windowed_sinc(double t) {
  if (std::abs(t) >= kTaps) return 0.0;
  const double r = t / kTaps;
  const double window = std::cyl_bessel_i(0.0, kKaiserBeta * std::sqrt(1.0 - r * r)) / std::cyl_bessel_i(0.0, kKaiserBeta);
  if (t == 0.0) return window;
  const double pt = std::numbers::pi * t;
  return window * std::sin(pt) / pt;
}

cplx interpolate(const PhaseFunction& f, double x, double p) {
  constexpr int a = kTaps;
  const double u = (x - f.grid.x.x_min) / f.grid.x.dx;
  const double v = (p - f.grid.p.x_min) / f.grid.p.dx;
  const int n = f.grid.n();
  const int i0 = static_cast<int>(std::floor(u));
  const int k0 = static_cast<int>(std::floor(v));
  // Weights are normalised per axis so constants are reproduced exactly.
  double wx[2 * a], wp[2 * a];
  double sx = 0.0, sp = 0.0;
  for (int t = 0; t < 2 * a; ++t) {
    sx += wx[t] = windowed_sinc(u - (i0 - a + 1 + t));
    sp += wp[t] = windowed_sinc(v - (k0 - a + 1 + t));
  }
  cplx acc = 0.0;
  for (int t = 0; t < 2 * a; ++t) {
    const int i = i0 - a + 1 + t;
    if (i < 0 || i >= n || wx[t] == 0.0) continue;
    for (int r = 0; r < 2 * a; ++r) {
      const int k = k0 - a + 1 + r;
      if (k < 0 || k >= n) continue;
      acc += wx[t] * wp[r] * f.at(i, k);
    }
  }
  return acc / (sx * sp);
}

}  // namespace

SympMat2 make_symp(double a, double b, double c, double d) {
  SympMat2 s{a, b, c, d};
  if (std::abs(s.det() - 1.0) > 1e-12) throw ValidationError("matrix is not symplectic (det != 1)");
  return s;
}

MetaGenerator MetaGenerator::scaling(double l, int m) {
  if (l == 0.0 || !std::isfinite(l)) throw ValidationError("scaling generator needs L != 0");
  return {Kind::ml, l, m};
}

MetaGenerator MetaGenerator::parse(const std::string& text) {
  if (text == "j" || text == "J") return fourier();
  auto number = [&](const std::string& s) {
    try {
      size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ValidationError("malformed generator parameter: " + text);
    }
  };
  if (text.rfind("ml:", 0) == 0) {
    const std::string rest = text.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return scaling(number(rest), 0);
    return scaling(number(rest.substr(0, colon)), static_cast<int>(number(rest.substr(colon + 1))));
  }
  if (text.rfind("vp:", 0) == 0) return chirp(number(text.substr(3)));
  throw ValidationError("unknown generator: " + text + " (expected j, ml:L or vp:P)");
}

std::string MetaGenerator::name() const {
  switch (kind) {
    case Kind::j: return "j";
    case Kind::ml: return "ml:" + std::to_string(value) + (m ? ":" + std::to_string(m) : "");
    default: return "vp:" + std::to_string(value);
  }
}

SympMat2 project(const MetaGenerator& g) {
  switch (g.kind) {
    case MetaGenerator::Kind::j: return {0, 1, -1, 0};
    case MetaGenerator::Kind::ml: return {1.0 / g.value, 0, 0, g.value};
    default: return {1, 0, g.value, 1};
  }
}

OperatorMatrix meta_matrix(const MetaGenerator& g, const PhaseGrid& pg) {
  switch (g.kind) {
    case MetaGenerator::Kind::j: return fourier_matrix(pg, -1);
    case MetaGenerator::Kind::ml: return scaling_matrix(g.value, g.m, pg);
    default: return chirp_matrix(g.value, pg);
  }
}

OperatorMatrix meta_inverse(const MetaGenerator& g, const PhaseGrid& pg) {
  switch (g.kind) {
    case MetaGenerator::Kind::j: return fourier_matrix(pg, +1);
    case MetaGenerator::Kind::ml: return scaling_matrix(1.0 / g.value, -g.m, pg);
    default: return chirp_matrix(-g.value, pg);
  }
}

SymbolSource pullback_symbol(const SymbolSource& a, const SympMat2& s) {
  const SympMat2 inv = s.inverse();
  const std::string label = a.label().empty() ? std::string() : a.label() + "*";
  if (const auto* sep = std::get_if<SeparableSymbol>(&a.data())) {
    // s^{-1}(x, p) = (alpha x + beta p, gamma x + delta p)
    const double alpha = inv.a, beta = inv.b, gamma = inv.c, delta = inv.d;
    SeparableSymbol out;
    bool closed = true;
    for (const auto& t : sep->terms) {
      const double c = t.shear;
      if (beta == 0.0) {
        // f(alpha x) g(gamma x + delta p - c alpha x) = f(alpha x) g(delta (p - shear' x))
        out.terms.push_back({[f = t.f, alpha](double x) { return f(alpha * x); },
                             [g = t.g, delta](double q) { return g(delta * q); }, (c * alpha - gamma) / delta});
      } else if (alpha == 0.0 && delta == 0.0 && c == 0.0) {
        // f(beta p) g(gamma x): the roles of f and g swap
        out.terms.push_back({[g = t.g, gamma](double x) { return g(gamma * x); },
                             [f = t.f, beta](double q) { return f(beta * q); }, 0.0});
      } else {
        closed = false;
        break;
      }
    }
    if (closed) return SymbolSource(std::move(out), label);
  }
  if (const auto* sampled = std::get_if<PhaseFunction>(&a.data())) {
    PhaseFunction out(sampled->grid);
    const PhaseGrid& g = sampled->grid;
    kernels::for_rows(static_cast<size_t>(g.n()), [&](size_t i) {
      const double x = g.x.point(static_cast<int>(i));
      for (int k = 0; k < g.n(); ++k) {
        const double p = g.p.point(k);
        out.at(static_cast<int>(i), k) = interpolate(*sampled, inv.a * x + inv.b * p, inv.c * x + inv.d * p);
      }
    });
    return SymbolSource(std::move(out), label);
  }
  return SymbolSource::analytic(
      [a, inv](double x, double p) { return a(inv.a * x + inv.b * p, inv.c * x + inv.d * p); }, label);
}

double covariance_defect(Scheme scheme, const SymbolSource& a, const MetaGenerator& g, const PhaseGrid& pg) {
  const OperatorMatrix op = quantize(a, scheme, pg);
  const double base = frobenius_norm(op);
  if (base == 0.0) throw ValidationError("covariance_defect: symbol quantizes to the zero operator");
  const OperatorMatrix conj = matmul(matmul(meta_matrix(g, pg), op), meta_inverse(g, pg));
  const OperatorMatrix moved = quantize(pullback_symbol(a, project(g)), scheme, pg);
  return frobenius_norm(conj - moved) / base;
}

double theta_invariance(const SympMat2& s, const PhaseGrid& pg) {
  const SympMat2 inv = s.inverse();
  double worst = 0.0;
  for (int i = 0; i < pg.n(); ++i) {
    const double x = pg.x.point(i);
    for (int k = 0; k < pg.n(); ++k) {
      const double p = pg.p.point(k);
      const double moved = theta_value(inv.a * x + inv.b * p, inv.c * x + inv.d * p, pg.hbar);
      worst = std::max(worst, std::abs(moved - theta_value(x, p, pg.hbar)));
    }
  }
  return worst;
}

SympMat2 recover_projection(const OperatorMatrix& s, const OperatorMatrix& s_inverse, const SampledSignal& probe) {
  const PhaseGrid& pg = s.grid;
  const OperatorMatrix x = position_operator(pg);
  const OperatorMatrix p = momentum_operator(pg);
  const SampledSignal xpsi = apply(x, probe);
  const SampledSignal ppsi = apply(p, probe);
  // Fit y ~ u X psi + v P psi with real u, v (normal equations, real parts).
  auto fit = [&](const SampledSignal& y, double& u, double& v) {
    const double a11 = inner_product(xpsi, xpsi).real();
    const double a22 = inner_product(ppsi, ppsi).real();
    const double a12 = inner_product(xpsi, ppsi).real();
    const double b1 = inner_product(y, xpsi).real();
    const double b2 = inner_product(y, ppsi).real();
    const double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-14 * a11 * a22) throw NumericError("probe does not separate X and P");
    u = (b1 * a22 - b2 * a12) / det;
    v = (a11 * b2 - a12 * b1) / det;
  };
  const SampledSignal sx = apply(s, apply(x, apply(s_inverse, probe)));
  const SampledSignal sp = apply(s, apply(p, apply(s_inverse, probe)));
  // S X S^{-1} = alpha X + beta P and S P S^{-1} = gamma X + delta P, where
  // (alpha, beta; gamma, delta) is s^{-1}.
  SympMat2 inv;
  fit(sx, inv.a, inv.b);
  fit(sp, inv.c, inv.d);
  return inv.inverse();
}

}  // namespace bjq
