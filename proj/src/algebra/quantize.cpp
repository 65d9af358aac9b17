#include "bjq/algebra/quantize.hpp"

#include <cctype>

#include "bjq/errors.hpp"

namespace bjq::algebra {

namespace {

mpq_class qpow(const mpq_class& base, int k) {
  mpq_class out = 1;
  for (int j = 0; j < k; ++j) out *= base;
  return out;
}

}  // namespace

mpq_class parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  if (text.empty()) throw ValidationError("empty rational");
  if (auto dot = text.find('.'); dot != std::string::npos) {
    bool neg = text[0] == '-';
    std::string body = (neg || text[0] == '+') ? text.substr(1) : text;
    dot = body.find('.');
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    const size_t decimals = body.size() - dot - 1;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("malformed decimal: " + raw);
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  mpq_class q;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  if (q.set_str(body, 10) != 0) throw ValidationError("malformed rational: " + raw);
  if (sgn(q.get_den()) == 0) throw ValidationError("zero denominator: " + raw);
  q.canonicalize();
  return q;
}

QuantScheme QuantScheme::parse(const std::string& text) {
  if (text == "weyl" || text == "Weyl") return weyl();
  if (text == "bj" || text == "born-jordan" || text == "BJ") return born_jordan();
  if (text.rfind("tau:", 0) == 0) return tau_rule(parse_rational(text.substr(4)));
  throw ValidationError("unknown quantization scheme: " + text);
}

std::string QuantScheme::name() const {
  switch (kind) {
    case Kind::weyl: return "weyl";
    case Kind::born_jordan: return "bj";
    default: return "tau:" + tau.get_str();
  }
}

mpq_class beta_average_coefficient(int k, int n) {
  if (n < 0 || k < 0 || k > n) throw ValidationError("beta_average_coefficient needs 0 <= k <= n");
  mpq_class q = factorial(k) * factorial(n - k) / factorial(n + 1);
  q.canonicalize();
  return q;
}

OpPoly sandwich_word(int k, int m, int n) {
  return multiply(multiply(OpPoly::monomial(0, k), OpPoly::monomial(m, 0)), OpPoly::monomial(0, n - k));
}

OpPoly quantize_monomial(int m, int n, const QuantScheme& scheme) {
  if (m < 0 || n < 0) throw ValidationError("monomial exponents must be non-negative");
  if (m + n > kMaxDegree) throw ValidationError("monomial degree exceeds the cap");
  OpPoly out;
  if (scheme.kind == QuantScheme::Kind::born_jordan) {
    const GaussianRational w(mpq_class(1, n + 1));
    for (int k = 0; k <= n; ++k) out += HbarPoly(w) * sandwich_word(k, m, n);
    return out;
  }
  const mpq_class tau = scheme.kind == QuantScheme::Kind::weyl ? mpq_class(1, 2) : scheme.tau;
  const mpq_class one_minus = 1 - tau;
  for (int k = 0; k <= n; ++k) {
    const mpq_class w = binomial(n, k) * qpow(one_minus, k) * qpow(tau, n - k);
    if (sgn(w) == 0) continue;
    out += HbarPoly(GaussianRational(w)) * sandwich_word(k, m, n);
  }
  return out;
}

OpPoly quantize_polynomial(const ClassicalPoly& poly, const QuantScheme& scheme) {
  OpPoly out;
  for (const auto& [key, c] : poly) {
    if (c.is_zero()) continue;
    out += HbarPoly(c) * quantize_monomial(key.first, key.second, scheme);
  }
  return out;
}

OpPoly commutator_closed_form_without_factorial(int m, int n) {
  OpPoly out;
  const GaussianRational i_unit(0, 1);
  for (int k = 1; k <= std::min(m, n); ++k) {
    const GaussianRational c = i_unit.pow(k) * GaussianRational(binomial(m, k) * binomial(n, k));
    const OpPoly word = multiply(OpPoly::monomial(0, n - k), OpPoly::monomial(m - k, 0));
    out += HbarPoly::monomial(k, c) * word;
  }
  return out;
}

}  // namespace bjq::algebra
