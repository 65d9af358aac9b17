#include "bjq/algebra/format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>
#include <vector>

#include "bjq/errors.hpp"

namespace bjq::algebra {

namespace {

const std::string kHbar = "\xC4\xA7";  // ħ

std::string magnitude(const mpq_class& q) {
  const mpq_class a = abs(q);
  if (a.get_den() == 1) return a.get_num().get_str();
  return "(" + a.get_str() + ")";
}

// Signed text of a coefficient times hbar^k, without the leading sign.
// Returns the sign separately so callers can join terms with " + " / " - ".
std::pair<bool, std::string> coefficient_text(const GaussianRational& c, int hbar_power) {
  std::string hbar;
  if (hbar_power == 1) hbar = kHbar;
  if (hbar_power > 1) hbar = kHbar + "^" + std::to_string(hbar_power);
  if (c.is_real()) {
    const bool neg = sgn(c.re()) < 0;
    const std::string mag = abs(c.re()) == 1 ? std::string() : magnitude(c.re());
    return {neg, mag + hbar};
  }
  if (c.is_imaginary()) {
    const bool neg = sgn(c.im()) < 0;
    const std::string mag = abs(c.im()) == 1 ? std::string() : magnitude(c.im());
    return {neg, mag + "i" + hbar};
  }
  std::string text = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? "-" : "+") + mpq_class(abs(c.im())).get_str() + "i)";
  return {false, text + hbar};
}

std::string word_text(int a, int b) {
  std::string out;
  auto letter = [&](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  letter("X", a);
  letter("P", b);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  OpPoly parse() {
    OpPoly out;
    skip();
    if (done()) throw ValidationError("empty operator expression");
    bool first = true;
    while (!done()) {
      bool neg = false;
      bool saw_sign = false;
      while (!done() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') neg = !neg;
        saw_sign = true;
        ++pos_;
        skip();
      }
      if (!first && !saw_sign) fail("expected '+' or '-' between terms");
      OpPoly term = parse_term();
      out += neg ? -term : term;
      first = false;
      skip();
    }
    return out;
  }

 private:
  std::string s_;
  size_t pos_ = 0;

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!done() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse operator expression at offset " + std::to_string(pos_) + ": " + what);
  }

  mpz_class integer() {
    const size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start), 10);
  }

  mpq_class rational() {
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    mpz_class num = integer();
    mpz_class den = 1;
    if (!done() && peek() == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }

  bool at_hbar() const { return s_.compare(pos_, kHbar.size(), kHbar) == 0 || s_.compare(pos_, 4, "hbar") == 0; }

  int exponent() {
    if (!done() && peek() == '^') {
      ++pos_;
      const mpz_class e = integer();
      if (e > kMaxDegree) fail("exponent too large");
      return static_cast<int>(e.get_si());
    }
    return 1;
  }

  // coefficient := int | int/int | '(' rational ')' | '(' rational ('+'|'-') rational 'i' ')' | '(' rational 'i' ')'
  GaussianRational coefficient() {
    if (peek() == '(') {
      ++pos_;
      mpq_class first = rational();
      if (!done() && peek() == 'i') {
        ++pos_;
        expect(')');
        return {0, first};
      }
      if (!done() && (peek() == '+' || peek() == '-')) {
        mpq_class second = rational();
        if (done() || peek() != 'i') fail("expected 'i' in complex coefficient");
        ++pos_;
        expect(')');
        return {first, second};
      }
      expect(')');
      return {first, 0};
    }
    return GaussianRational(rational());
  }

  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  OpPoly parse_term() {
    GaussianRational coef(1);
    bool any = false;
    if (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(')) {
      coef = coefficient();
      any = true;
    }
    if (!done() && peek() == 'i') {
      coef *= GaussianRational::i();
      ++pos_;
      any = true;
    }
    int hbar_power = 0;
    skip();
    while (!done() && at_hbar()) {
      pos_ += s_.compare(pos_, 4, "hbar") == 0 ? 4 : kHbar.size();
      hbar_power += exponent();
      any = true;
      skip();
    }
    OpPoly word(HbarPoly(1));
    while (!done() && (peek() == 'X' || peek() == 'P')) {
      const char letter = peek();
      ++pos_;
      const int e = exponent();
      word = multiply(word, letter == 'X' ? OpPoly::monomial(e, 0) : OpPoly::monomial(0, e));
      any = true;
      skip();
    }
    if (!any) fail("expected a term");
    return HbarPoly::monomial(hbar_power, coef) * word;
  }
};

}  // namespace

std::string to_string(const GaussianRational& c) {
  if (c.is_zero()) return "0";
  auto [neg, text] = coefficient_text(c, 0);
  if (text.empty() || text == "i") text = (text.empty() ? "1" : "i");
  return (neg ? "-" : "") + text;
}

std::string to_string(const OpPoly& poly) {
  using Row = std::tuple<int, int, int, GaussianRational>;  // a, b, hbar power, coefficient
  std::vector<Row> rows;
  for (const auto& [key, coef] : poly.terms())
    for (const auto& [k, c] : coef.coeffs()) rows.emplace_back(key.first, key.second, k, c);
  if (rows.empty()) return "0";
  std::stable_sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) {
    const int dl = std::get<0>(l) + std::get<1>(l);
    const int dr = std::get<0>(r) + std::get<1>(r);
    if (dl != dr) return dl > dr;
    if (std::get<0>(l) != std::get<0>(r)) return std::get<0>(l) > std::get<0>(r);
    return std::get<2>(l) < std::get<2>(r);
  });
  std::string out;
  for (size_t j = 0; j < rows.size(); ++j) {
    const auto& [a, b, k, c] = rows[j];
    auto [neg, coef] = coefficient_text(c, k);
    const std::string word = word_text(a, b);
    std::string body = coef;
    if (!word.empty()) body += (body.empty() ? "" : " ") + word;
    if (body.empty()) body = "1";
    if (j == 0) {
      out += (neg ? "-" : "") + body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

OpPoly parse_op_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace bjq::algebra
