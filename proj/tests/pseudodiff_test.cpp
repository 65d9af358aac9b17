#include <doctest.h>

#include "bjq/algebra/quantize.hpp"
#include "bjq/distributions.hpp"
#include "bjq/errors.hpp"
#include "bjq/kernels.hpp"
#include "bjq/pseudodiff.hpp"
#include "bjq/quadrature.hpp"
#include "support.hpp"

using namespace bjq;
using namespace testsupport;

namespace {

const PhaseGrid& grid() {
  static const PhaseGrid pg = default_grid();
  return pg;
}

cplx complex_value(double x, double p) { return cplx(x, p) * std::polar(std::exp(-(x * x + 2 * p * p) / 4), 0.5 * x); }

// (x + ip) e^{ix/2} e^{-(x^2 + 2p^2)/4} written as two separable terms.
SymbolSource complex_symbol() {
  const auto env = [](double x) { return std::polar(std::exp(-x * x / 4), 0.5 * x); };
  SeparableSymbol s;
  s.terms.push_back({[env](double x) { return x * env(x); }, [](double p) { return cplx(std::exp(-p * p / 2)); }, 0.0});
  s.terms.push_back({env, [](double p) { return cplx(0, p * std::exp(-p * p / 2)); }, 0.0});
  return SymbolSource(std::move(s), "cplx");
}

// Same function through the generic callback path.
SymbolSource complex_analytic() { return SymbolSource::analytic(complex_value, "cplx-analytic"); }

SampledSignal gaussian_times(const PhaseGrid& pg, const std::function<cplx(double)>& f) {
  const SampledSignal g = hermite_function(0, pg.x, pg.hbar);
  SampledSignal out(pg.x);
  for (int j = 0; j < pg.n(); ++j) out.values[j] = f(pg.x.point(j)) * g.values[j];
  return out;
}

double rel_op(const OperatorMatrix& a, const OperatorMatrix& ref) { return operator_norm(a - ref) / operator_norm(ref); }

}  // namespace

TEST_SUITE("pseudodiff") {
  TEST_CASE("position symbol acts by multiplication for every tau") {
    const PhaseGrid& pg = grid();
    const SampledSignal psi = random_packet(pg, 1);
    CVector expect(psi.values.size());
    for (int j = 0; j < pg.n(); ++j) expect[j] = pg.x.point(j) * psi.values[j];
    for (double tau : {0.0, 0.3, 0.5, 1.0}) CHECK(max_diff(apply(kernel_tau(monomial_symbol(1, 0), tau, pg), psi).values, expect) < 1e-8);
    CHECK(max_diff(apply(position_operator(pg), psi).values, expect) < 1e-12);
  }

  TEST_CASE("momentum symbol differentiates") {
    const PhaseGrid& pg = grid();
    // psi = (1 + x) g, so -i hbar psi' = -i (1 - x - x^2) g at hbar = 1.
    const SampledSignal psi = gaussian_times(pg, [](double x) { return cplx(1 + x); });
    const SampledSignal expect = gaussian_times(pg, [](double x) { return cplx(0, -1) * (1 - x - x * x); });
    for (double tau : {0.0, 0.5, 1.0}) CHECK(max_diff(apply(kernel_tau(monomial_symbol(0, 1), tau, pg), psi).values, expect.values) < 1e-6);
    CHECK(max_diff(apply(momentum_operator(pg), psi).values, expect.values) < 1e-6);
  }

  TEST_CASE("constant symbol is the identity") {
    const PhaseGrid& pg = grid();
    const SampledSignal psi = random_packet(pg, 2);
    const SymbolSource one = monomial_symbol(0, 0);
    CHECK(max_diff(apply(kernel_weyl(one, pg), psi).values, psi.values) < 1e-10);
    CHECK(max_diff(apply(kernel_tau(one, 0.2, pg), psi).values, psi.values) < 1e-10);
    CHECK(max_diff(apply(identity_operator(pg), psi).values, psi.values) < 1e-14);
    CHECK(relative_difference(op_from_twist(one, pg, Scheme::weyl), identity_operator(pg)) < 1e-10);
  }

  TEST_CASE("weyl quantised xp matches the symbolic operator") {
    const PhaseGrid& pg = grid();
    const SampledSignal g = hermite_function(0, pg.x, 1.0);
    // (XP - i hbar/2) g = i (x^2 - 1/2) g
    const SampledSignal expect = gaussian_times(pg, [](double x) { return cplx(0, x * x - 0.5); });
    const SampledSignal got = apply(kernel_weyl(monomial_symbol(1, 1), pg), g);
    CHECK(rel_l2(got.values, expect.values) < 1e-6);
    const auto sym = algebra::quantize_monomial(1, 1, algebra::QuantScheme::weyl());
    CHECK(rel_l2(apply(realize(sym, pg), g).values, expect.values) < 1e-6);
    const SampledSignal via_product = apply(matmul(position_operator(pg), momentum_operator(pg)), g);
    SampledSignal shifted = via_product;
    for (size_t j = 0; j < shifted.values.size(); ++j) shifted.values[j] -= cplx(0, 0.5) * g.values[j];
    CHECK(rel_l2(shifted.values, expect.values) < 1e-6);
  }

  TEST_CASE("born-jordan minus weyl on x^2 p^2") {
    const PhaseGrid& pg = grid();
    const SampledSignal h0 = hermite_function(0, pg.x, 1.0);
    const SymbolSource a = monomial_symbol(2, 2);
    const OperatorMatrix diff = kernel_bj(a, pg) - kernel_weyl(a, pg);
    CHECK(std::abs(inner_product(apply(diff, h0), h0) - cplx(-1.0 / 6.0)) < 1e-6);
  }

  TEST_CASE("symbols of one variable give the same operator in every scheme") {
    const PhaseGrid& pg = grid();
    const SymbolSource px = SymbolSource::separable([](double x) { return cplx(std::exp(-x * x / 3) * std::cos(x)); },
                                                    [](double) { return cplx(1.0); });
    const SymbolSource pp = SymbolSource::separable([](double) { return cplx(1.0); },
                                                    [](double p) { return cplx(std::exp(-p * p / 2) * (1 + p)); });
    for (const auto* a : {&px, &pp}) {
      const OperatorMatrix w = kernel_weyl(*a, pg);
      CHECK(relative_difference(w, kernel_bj(*a, pg)) < 1e-8);
      CHECK(relative_difference(w, kernel_tau(*a, 0.0, pg)) < 1e-8);
      CHECK(relative_difference(w, kernel_tau(*a, 1.0, pg)) < 1e-8);
    }
    CHECK(relative_difference(kernel_weyl(pp, pg), kernel_bj(pp, pg)) < 1e-12);
  }

  TEST_CASE("adjoint law") {
    const PhaseGrid& pg = grid();
    for (const SymbolSource& a : {gaussian_symbol(1.0), xp_gaussian_symbol(1.0), complex_symbol()})
      for (double tau : {0.0, 0.3, 0.5, 1.0}) {
        INFO(a.label(), " tau=", tau);
        const OperatorMatrix lhs = matrix_adjoint(kernel_tau(a, tau, pg));
        CHECK(relative_difference(kernel_tau(a.conj(), 1 - tau, pg), lhs) < 1e-8);
      }
    const OperatorMatrix direct = kernel_tau(complex_analytic(), 0.3, pg);
    CHECK(relative_difference(kernel_tau(complex_analytic().conj(), 0.7, pg), matrix_adjoint(direct)) < 1e-8);
    CHECK(relative_difference(kernel_tau(complex_symbol(), 0.3, pg), direct) < 1e-12);
    const OperatorMatrix k = kernel_tau(complex_symbol(), 0.3, pg);
    CHECK(matrix_adjoint(matrix_adjoint(k)).entries == k.entries);
    for (const SymbolSource& a : {gaussian_symbol(1.0), xp_gaussian_symbol(1.0)}) {
      const OperatorMatrix bj = kernel_bj(a, pg);
      CHECK(relative_difference(bj, matrix_adjoint(bj)) < 1e-8);
      const OperatorMatrix w = kernel_weyl(a, pg);
      CHECK(relative_difference(w, matrix_adjoint(w)) < 1e-8);
    }
  }

  TEST_CASE("sampled symbols agree with analytic ones") {
    const PhaseGrid& pg = grid();
    for (const SymbolSource& a : {gaussian_symbol(1.0), xp_gaussian_symbol(1.0)}) {
      const SymbolSource s = SymbolSource::sampled(a.sample(pg));
      CHECK(relative_difference(kernel_weyl(a, pg), kernel_weyl(s, pg)) < 1e-8);
      CHECK(relative_difference(kernel_tau(a, 0.3, pg), kernel_tau(s, 0.3, pg)) < 1e-8);
    }
    // A sheared term f(x) g(p - c x) against direct evaluation of the same callback.
    const SymbolSource sheared(SeparableSymbol{{{[](double x) { return cplx(std::exp(-x * x / 2)); },
                                                 [](double q) { return std::polar(std::exp(-q * q / 2), 0.3 * q); }, 0.7}}});
    const SymbolSource sheared_direct =
        SymbolSource::analytic([](double x, double p) {
          const double q = p - 0.7 * x;
          return std::exp(-x * x / 2) * std::polar(std::exp(-q * q / 2), 0.3 * q);
        });
    CHECK(relative_difference(kernel_tau(sheared_direct, 0.3, pg), kernel_tau(sheared, 0.3, pg)) < 1e-10);
    CHECK(std::abs(sheared(0.4, -1.1) - sheared_direct(0.4, -1.1)) < 1e-15);
    const SymbolSource c = complex_analytic();
    CHECK(relative_difference(kernel_tau(c, 0.3, pg), kernel_tau(SymbolSource::sampled(c.sample(pg)), 0.3, pg)) < 1e-8);
    CHECK_THROWS_AS(kernel_weyl(SymbolSource::sampled(PhaseFunction(make_phase_grid(128, 10, 1))), pg), ValidationError);
  }

  TEST_CASE("heisenberg operators") {
    const PhaseGrid& pg = grid();
    CHECK(relative_difference(identity_operator(pg), heisenberg_weyl(0, 0, 0.5, pg)) < 1e-14);
    const SampledSignal psi = random_packet(pg, 3);
    const double x0 = 0.71, p0 = -1.3, x1 = -0.43, p1 = 0.9;
    for (double tau : {0.5, 0.2}) {
      const OperatorMatrix t0 = heisenberg_weyl(x0, p0, tau, pg), t1 = heisenberg_weyl(x1, p1, tau, pg);
      const SampledSignal a = apply(t0, apply(t1, psi));
      SampledSignal b = apply(t1, apply(t0, psi));
      const cplx phase = std::polar(1.0, p0 * x1 - p1 * x0);
      for (auto& v : b.values) v *= phase;
      CHECK(rel_l2(a.values, b.values) < 1e-8);
    }
    // Closed-form action on an on-grid shift.
    const double shift = 8 * pg.x.dx;
    const SampledSignal moved = apply(heisenberg_weyl(shift, 1.5, 0.5, pg), psi);
    double worst = 0.0;
    for (int j = 20; j < pg.n(); ++j) {
      const cplx expect = std::polar(1.0, 1.5 * pg.x.point(j) - 0.75 * shift) * psi.values[j - 8];
      worst = std::max(worst, std::abs(moved.values[j] - expect));
    }
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(heisenberg_weyl(40, 0, 0.5, pg), ValidationError);
  }

  TEST_CASE("tau average of heisenberg operators is the theta-scaled operator") {
    const PhaseGrid& pg = grid();
    const QuadratureRule rule = gauss_legendre(kDefaultQuadNodes);
    OperatorMatrix avg(pg);
    for (size_t k = 0; k < rule.size(); ++k) avg = avg + cplx(rule.weights()[k]) * heisenberg_weyl(1, 2, rule.nodes()[k], pg);
    const OperatorMatrix expect = cplx(theta_value(1, 2, 1.0)) * heisenberg_weyl(1, 2, 0.5, pg);
    CHECK(relative_difference(expect, avg) < 1e-8);
  }

  TEST_CASE("twist construction matches kernels") {
    const PhaseGrid& pg = grid();
    for (const SymbolSource& a : {gaussian_symbol(1.0), xp_gaussian_symbol(1.0)}) {
      INFO(a.label());
      CHECK(rel_op(op_from_twist(a, pg, Scheme::weyl), kernel_weyl(a, pg)) < 1e-5);
      CHECK(rel_op(op_from_twist(a, pg, Scheme::born_jordan), kernel_bj(a, pg)) < 1e-5);
    }
    PhaseFunction spike(pg);
    spike.at(100, 140) = 1.0;
    CHECK_THROWS_AS(op_from_twist(SymbolSource::sampled(spike), pg, Scheme::weyl), NumericError);
  }

  TEST_CASE("apply") {
    const PhaseGrid& pg = grid();
    const SampledSignal psi = random_packet(pg, 4), phi = random_packet(pg, 5);
    const OperatorMatrix a = kernel_tau(complex_symbol(), 0.3, pg);
    SampledSignal combo(pg.x);
    for (size_t j = 0; j < combo.values.size(); ++j) combo.values[j] = 2.0 * psi.values[j] - cplx(0, 3) * phi.values[j];
    const SampledSignal lhs = apply(a, combo);
    const SampledSignal ap = apply(a, psi), aq = apply(a, phi);
    CVector rhs(ap.values.size());
    for (size_t j = 0; j < rhs.size(); ++j) rhs[j] = 2.0 * ap.values[j] - cplx(0, 3) * aq.values[j];
    CHECK(rel_l2(lhs.values, rhs) < 1e-13);
    CHECK_THROWS_AS(apply(a, SampledSignal(make_phase_grid(128, 10, 1).x)), ValidationError);
  }

  TEST_CASE("pairing identities") {
    const PhaseGrid& pg = grid();
    const SampledSignal g = hermite_function(0, pg.x, 1.0);
    const Pairing gg = pairing_check(gaussian_symbol(1.0), g, g, 0.5, pg);
    CHECK(std::abs(gg.lhs - gg.rhs) <= 1e-6 * std::abs(gg.lhs));
    const SampledSignal psi = random_packet(pg, 6), phi = random_packet(pg, 7);
    for (const SymbolSource& a : {gaussian_symbol(1.0), complex_symbol()}) {
      const Pairing t = pairing_check(a, psi, phi, 0.3, pg);
      CHECK(std::abs(t.lhs - t.rhs) <= 1e-6 * std::abs(t.lhs));
      const Pairing b = pairing_check_bj(a, psi, phi, pg);
      CHECK(std::abs(b.lhs - b.rhs) <= 1e-6 * std::abs(b.lhs));
    }
  }

  TEST_CASE("serial and parallel kernels agree bitwise") {
    const PhaseGrid& pg = grid();
    kernels::set_default_exec(kernels::Exec::serial);
    const OperatorMatrix a = kernel_tau(complex_symbol(), 0.3, pg);
    const OperatorMatrix b = kernel_bj(xp_gaussian_symbol(1.0), pg);
    const OperatorMatrix c = op_from_twist(gaussian_symbol(1.0), pg, Scheme::born_jordan);
    const OperatorMatrix d = matmul(a, b);
    kernels::set_default_exec(kernels::Exec::parallel);
    CHECK(kernel_tau(complex_symbol(), 0.3, pg).entries == a.entries);
    CHECK(kernel_bj(xp_gaussian_symbol(1.0), pg).entries == b.entries);
    CHECK(op_from_twist(gaussian_symbol(1.0), pg, Scheme::born_jordan).entries == c.entries);
    CHECK(matmul(a, b).entries == d.entries);
  }
}
