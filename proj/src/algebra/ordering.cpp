#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bjq/algebra/op_poly.hpp"
#include "bjq/errors.hpp"

namespace bjq::algebra {

OpPoly normal_order_word(std::string_view word, RewriteOrder order, unsigned seed) {
  std::string start;
  for (char ch : word) {
    if (ch == 'X' || ch == 'x') start.push_back('X');
    else if (ch == 'P' || ch == 'p') start.push_back('P');
    else if (ch != ' ' && ch != '*') throw ValidationError(std::string("unexpected letter in word: ") + ch);
  }
  if (static_cast<int>(start.size()) > kMaxDegree) throw ValidationError("word longer than the degree cap");

  std::mt19937 rng(seed);
  const HbarPoly minus_i_hbar = HbarPoly::monomial(1, GaussianRational(0, -1));

  std::map<std::string, HbarPoly> pending{{start, HbarPoly(1)}};
  OpPoly result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const HbarPoly& coef = node.mapped();
    std::vector<size_t> spots;
    for (size_t j = 0; j + 1 < w.size(); ++j)
      if (w[j] == 'P' && w[j + 1] == 'X') spots.push_back(j);
    if (spots.empty()) {
      const int a = static_cast<int>(std::count(w.begin(), w.end(), 'X'));
      result.add(a, static_cast<int>(w.size()) - a, coef);
      continue;
    }
    size_t at = spots.front();
    if (order == RewriteOrder::rightmost) at = spots.back();
    if (order == RewriteOrder::random) at = spots[std::uniform_int_distribution<size_t>(0, spots.size() - 1)(rng)];

    std::string swapped = w;
    swapped[at] = 'X';
    swapped[at + 1] = 'P';
    std::string contracted = w.substr(0, at) + w.substr(at + 2);
    auto push = [&](const std::string& key, const HbarPoly& c) {
      auto [it, inserted] = pending.try_emplace(key, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    push(swapped, coef);
    push(contracted, coef * minus_i_hbar);
  }
  return result;
}

}  // namespace bjq::algebra
