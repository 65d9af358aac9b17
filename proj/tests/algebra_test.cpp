#include <doctest.h>

#include <random>

#include "bjq/algebra/crehan.hpp"
#include "bjq/algebra/format.hpp"
#include "bjq/algebra/quantize.hpp"
#include "bjq/errors.hpp"

using namespace bjq;
using namespace bjq::algebra;

namespace {

OpPoly P(const std::string& s) { return parse_op_poly(s); }

std::string random_word(std::mt19937& rng, int len) {
  std::string w;
  for (int k = 0; k < len; ++k) w += (rng() & 1u) ? 'X' : 'P';
  return w;
}

std::vector<QuantScheme> five_schemes() {
  return {QuantScheme::weyl(), QuantScheme::born_jordan(), QuantScheme::tau_rule(0), QuantScheme::tau_rule(mpq_class(1, 4)),
          QuantScheme::tau_rule(1)};
}

}  // namespace

TEST_SUITE("operator-algebra") {
  TEST_CASE("gaussian rationals and hbar polynomials") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.pow(4) == GaussianRational(1));
    CHECK((GaussianRational(mpq_class(1, 2), 3)).conj() == GaussianRational(mpq_class(1, 2), -3));
    CHECK(GaussianRational(mpq_class(2, 4)) == GaussianRational(mpq_class(1, 2)));
    HbarPoly h = HbarPoly::monomial(1, 2) + HbarPoly::monomial(1, -2);
    CHECK(h.is_zero());
    CHECK(h.coeffs().empty());
    const HbarPoly a = HbarPoly(1) + HbarPoly::monomial(1, i);
    CHECK(a * a == HbarPoly(1) + HbarPoly::monomial(1, GaussianRational(0, 2)) + HbarPoly::monomial(2, -1));
    CHECK(binomial(6, 3) == 20);
    CHECK(factorial(5) == 120);
    CHECK_THROWS_AS(factorial(-1), ValidationError);
  }

  TEST_CASE("normal ordering of words") {
    CHECK(normal_order_word("PX") == P("X P - iħ"));
    CHECK(normal_order_word("PXX") == P("X^2 P - 2iħ X"));
    CHECK(normal_order_word("PPXX") == P("X^2 P^2 - 4iħ X P - 2ħ^2"));
    CHECK(normal_order_word("XXPP") == OpPoly::monomial(2, 2));
    CHECK(normal_order_word("") == OpPoly(HbarPoly(1)));
    CHECK_THROWS_AS(normal_order_word("PY"), ValidationError);
  }

  TEST_CASE("normal ordering is confluent") {
    std::mt19937 rng(17);
    for (int len = 1; len <= 8; ++len)
      for (int trial = 0; trial < 12; ++trial) {
        const std::string w = random_word(rng, len);
        const OpPoly ref = normal_order_word(w, RewriteOrder::leftmost);
        CHECK(normal_order_word(w, RewriteOrder::rightmost) == ref);
        for (unsigned seed = 1; seed <= 3; ++seed) CHECK(normal_order_word(w, RewriteOrder::random, seed + trial) == ref);
      }
  }

  TEST_CASE("multiplication agrees with word rewriting") {
    CHECK(OpPoly::x() * OpPoly::p() == OpPoly::monomial(1, 1));
    CHECK(OpPoly::p() * OpPoly::x() == P("X P - iħ"));
    const OpPoly xp = OpPoly::monomial(1, 1);
    CHECK(xp * xp == P("X^2 P^2 - iħ X P"));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const std::string u = random_word(rng, 1 + static_cast<int>(rng() % 5));
      const std::string v = random_word(rng, 1 + static_cast<int>(rng() % 5));
      CHECK(normal_order_word(u) * normal_order_word(v) == normal_order_word(u + v));
    }
    CHECK_THROWS_AS(power(OpPoly::x(), 65), ValidationError);
    CHECK(power(OpPoly::x() + OpPoly::p(), 0) == OpPoly(HbarPoly(1)));
  }

  TEST_CASE("commutators") {
    const HbarPoly ih = HbarPoly::monomial(1, GaussianRational::i());
    CHECK(commutator(OpPoly::x(), OpPoly::p()) == OpPoly(ih));
    CHECK(commutator(OpPoly::monomial(2, 0), OpPoly::monomial(0, 2)) == P("4iħ X P + 2ħ^2"));
    CHECK(anticommutator(OpPoly::x(), OpPoly::p()) == P("2 X P - iħ"));
    // The factorial-free closed form differs by exactly hbar^2 at m = n = 2.
    CHECK(commutator_closed_form_without_factorial(2, 2) == P("4iħ X P + 3ħ^2"));
    CHECK(commutator_closed_form_without_factorial(1, 1) == commutator(OpPoly::x(), OpPoly::p()));
  }

  TEST_CASE("quantized monomials") {
    const OpPoly half = P("X P - (1/2)iħ");
    CHECK(quantize_monomial(1, 1, QuantScheme::weyl()) == half);
    CHECK(quantize_monomial(1, 1, QuantScheme::born_jordan()) == half);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) CHECK(quantize_monomial(m, n, QuantScheme::tau_rule(1)) == OpPoly::monomial(m, n));
    const OpPoly bj = quantize_monomial(2, 2, QuantScheme::born_jordan());
    const OpPoly w = quantize_monomial(2, 2, QuantScheme::weyl());
    CHECK(bj == P("X^2 P^2 - 2iħ X P - (2/3)ħ^2"));
    CHECK(w == P("X^2 P^2 - 2iħ X P - (1/2)ħ^2"));
    CHECK(bj - w == P("-(1/6)ħ^2"));
    // Weyl ordering of x p^2 by the symmetrised sum of words.
    const OpPoly sym = (normal_order_word("XPP") + normal_order_word("PXP") + normal_order_word("PPX"));
    CHECK(HbarPoly(GaussianRational(3)) * quantize_monomial(1, 2, QuantScheme::weyl()) == sym);
  }

  TEST_CASE("low degree monomials agree across schemes") {
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; m + n <= 2; ++n) {
        const OpPoly ref = quantize_monomial(m, n, QuantScheme::weyl());
        CHECK(quantize_monomial(m, n, QuantScheme::born_jordan()) == ref);
        for (const mpq_class& t : {mpq_class(0), mpq_class(1, 3), mpq_class(1), mpq_class(-7, 2), mpq_class(5)}) {
          const OpPoly q = quantize_monomial(m, n, QuantScheme::tau_rule(t));
          if (m == 1 && n == 1) {
            // The mixed product keeps a tau-dependent constant: XP - i(1-tau)hbar.
            CHECK(q == OpPoly::monomial(1, 1) + OpPoly(HbarPoly::monomial(1, GaussianRational(0, -(1 - t)))));
          } else {
            CHECK(q == ref);
          }
        }
      }
  }

  TEST_CASE("mixed commutators do not depend on the scheme") {
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) {
        const OpPoly ref = commutator(OpPoly::monomial(m, 0), OpPoly::monomial(0, n));
        for (const auto& s1 : five_schemes())
          for (const auto& s2 : five_schemes())
            CHECK(commutator(quantize_monomial(m, 0, s1), quantize_monomial(0, n, s2)) == ref);
      }
  }

  TEST_CASE("beta average reproduces born-jordan") {
    CHECK(beta_average_coefficient(0, 0) == 1);
    CHECK(beta_average_coefficient(1, 2) == mpq_class(1, 6));
    CHECK(beta_average_coefficient(0, 3) == mpq_class(1, 4));
    CHECK_THROWS_AS(beta_average_coefficient(3, 2), ValidationError);
    CHECK_THROWS_AS(beta_average_coefficient(-1, 2), ValidationError);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        OpPoly avg;
        for (int k = 0; k <= n; ++k) {
          std::string word = std::string(k, 'P') + std::string(m, 'X') + std::string(n - k, 'P');
          avg += HbarPoly(GaussianRational(binomial(n, k) * beta_average_coefficient(k, n))) * normal_order_word(word);
        }
        CHECK(avg == quantize_monomial(m, n, QuantScheme::born_jordan()));
      }
  }

  TEST_CASE("polynomial quantization is linear") {
    ClassicalPoly energy{{{2, 0}, 1}, {{0, 2}, 1}};
    for (const auto& s : five_schemes()) CHECK(quantize_polynomial(energy, s) == P("X^2 + P^2"));
    ClassicalPoly two_xp{{{1, 1}, 2}};
    CHECK(quantize_polynomial(two_xp, QuantScheme::born_jordan()) ==
          HbarPoly(2) * quantize_monomial(1, 1, QuantScheme::born_jordan()));
    // (x^2 + p^2)^3 expanded classically, then Born-Jordan quantised.
    ClassicalPoly cube;
    for (int k = 0; k <= 3; ++k) cube[{2 * k, 6 - 2 * k}] = GaussianRational(binomial(3, k));
    const OpPoly q = quantize_polynomial(cube, QuantScheme::born_jordan());
    CHECK(formal_adjoint(q) == q);
  }

  TEST_CASE("formal adjoints") {
    CHECK(formal_adjoint(OpPoly::monomial(1, 1)) == P("X P - iħ"));
    CHECK(formal_adjoint(OpPoly(HbarPoly::monomial(1, GaussianRational::i()))) ==
          OpPoly(HbarPoly::monomial(1, GaussianRational(0, -1))));
    const mpq_class third(1, 3);
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}})
      CHECK(formal_adjoint(quantize_monomial(m, n, QuantScheme::tau_rule(third))) ==
            quantize_monomial(m, n, QuantScheme::tau_rule(1 - third)));
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        const OpPoly bj = quantize_monomial(m, n, QuantScheme::born_jordan());
        const OpPoly w = quantize_monomial(m, n, QuantScheme::weyl());
        CHECK(formal_adjoint(bj) == bj);
        CHECK(formal_adjoint(w) == w);
      }
  }

  TEST_CASE("printing and parsing round trip") {
    CHECK(to_string(quantize_monomial(2, 2, QuantScheme::born_jordan())) == "X^2 P^2 - 2iħ X P - (2/3)ħ^2");
    CHECK(to_string(OpPoly()) == "0");
    CHECK(P("hbar * X") == P("ħ X"));
    CHECK(P("P X") == P("X P - iħ"));
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      OpPoly a;
      for (int t = 0; t < 4; ++t) {
        const int m = static_cast<int>(rng() % 4), n = static_cast<int>(rng() % 4), h = static_cast<int>(rng() % 3);
        const GaussianRational c(mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)),
                                 mpq_class(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
        a.add(m, n, HbarPoly::monomial(h, c));
      }
      CHECK(parse_op_poly(to_string(a)) == a);
    }
    CHECK_THROWS_AS(parse_op_poly("X ^"), ValidationError);
    CHECK_THROWS_AS(parse_op_poly(""), ValidationError);
  }

  TEST_CASE("scheme parsing") {
    CHECK(QuantScheme::parse("weyl").kind == QuantScheme::Kind::weyl);
    CHECK(QuantScheme::parse("bj").kind == QuantScheme::Kind::born_jordan);
    CHECK(QuantScheme::parse("tau:1/3").tau == mpq_class(1, 3));
    CHECK(QuantScheme::parse("tau:0.25").tau == mpq_class(1, 4));
    CHECK(parse_rational("-3") == -3);
    CHECK_THROWS_AS(QuantScheme::parse("tau:1/0"), ValidationError);
    CHECK_THROWS_AS(QuantScheme::parse("anti"), ValidationError);
  }

  TEST_CASE("crehan spectrum") {
    for (int n = 0; n <= 5; ++n) CHECK(crehan_spectrum(n, 0, 0.7, 1.3) == doctest::Approx((n + 0.5) * 1.3));
    CHECK(crehan_spectrum(0, 1, 0, 1) == -2.5);
    CHECK(crehan_spectrum_exact(0, 1, 0, 1) == mpq_class(-5, 2));
    for (int n = 0; n <= 5; ++n) {
      const mpq_class lam(2, 7), h(3, 5);
      CHECK(crehan_spectrum_exact(n, lam, 1, h) - crehan_spectrum_exact(n, lam, 0, h) == 3 * lam * h * h * h * (2 * n + 1));
    }
    // Eigenvalues of the quantised Hamiltonian at hbar = 1.
    for (int n = 0; n <= 5; ++n)
      for (const mpq_class& lam : {mpq_class(0), mpq_class(1, 3), mpq_class(-2)})
        for (const mpq_class& al : {mpq_class(0), mpq_class(1), mpq_class(5, 2)})
          CHECK(crehan_operator_eigenvalue(n, lam, al, 1) == crehan_spectrum_exact(n, lam, al, 1));
    CHECK_THROWS_AS(crehan_spectrum(-1, 0, 0, 1), ValidationError);
    // The Hamiltonian is formally self-adjoint.
    const OpPoly h = crehan_hamiltonian(mpq_class(1, 3), 2);
    CHECK(formal_adjoint(h) == h);
  }
}
