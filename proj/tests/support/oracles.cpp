#include "oracles.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace oracle {

using khtrans::BraidWord;
using khtrans::Diagram;
using khtrans::LaurentPolynomial;

int walk_circle_count(const Diagram& d, std::uint32_t bits) {
  const int b = d.strands();
  const int n = d.crossing_count();
  if (n == 0)
    return b;
  // Segment t runs from crossing t-1 (above) to crossing t (below).
  auto horizontal = [&](int j) {
    const auto& c = d.crossings()[j];
    const bool one = (bits >> j) & 1u;
    return c.sign > 0 ? one : !one;
  };
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(b, false));
  int circles = 0;
  for (int t0 = 0; t0 < n; ++t0) {
    for (int p0 = 0; p0 < b; ++p0) {
      if (seen[t0][p0])
        continue;
      ++circles;
      int t = t0, p = p0;
      bool down = true;
      while (!seen[t][p]) {
        seen[t][p] = true;
        const int j = down ? t : (t + n - 1) % n;
        const int i = d.crossings()[j].position;
        const bool involved = p == i - 1 || p == i;
        if (involved && horizontal(j)) {
          p = p == i - 1 ? i : i - 1;
          down = !down;
        } else {
          t = down ? (t + 1) % n : (t + n - 1) % n;
        }
      }
    }
  }
  return circles;
}

LaurentPolynomial kauffman_bracket(const Diagram& d) {
  const int n = d.crossing_count();
  const LaurentPolynomial delta = LaurentPolynomial::monomial(2, -1) + LaurentPolynomial::monomial(-2, -1);
  LaurentPolynomial total;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const int ones = std::popcount(bits);
    LaurentPolynomial term = LaurentPolynomial::monomial((n - ones) - ones);
    const int k = walk_circle_count(d, bits);
    for (int c = 1; c < k; ++c)
      term = term * delta;
    total += term;
  }
  return total;
}

LaurentPolynomial unnormalized_jones(const Diagram& d) {
  const int writhe = d.positive_count() - d.negative_count();
  LaurentPolynomial f = kauffman_bracket(d) * LaurentPolynomial::monomial(-3 * writhe, writhe % 2 == 0 ? 1 : -1);
  LaurentPolynomial in_q;
  for (auto [e, coeff] : f.terms()) {
    if (e % 2 != 0)
      throw std::logic_error("odd power of A in the normalized bracket");
    const int m = e / 2; // A^(2m) = (-1)^m q^-m
    in_q.add(-m, m % 2 == 0 ? coeff : -coeff);
  }
  return in_q * (LaurentPolynomial::monomial(1) + LaurentPolynomial::monomial(-1));
}

BraidWord random_word(std::mt19937& rng, int max_strands, int max_length) {
  const int b = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int n = std::uniform_int_distribution<int>(0, max_length)(rng);
  std::uniform_int_distribution<int> gen(1, b - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<int> letters;
  for (int k = 0; k < n; ++k)
    letters.push_back(positive(rng) ? gen(rng) : -gen(rng));
  return BraidWord(b, letters);
}

BraidWord random_negative_only_word(std::mt19937& rng, int max_strands, int max_length) {
  for (;;) {
    BraidWord w = random_word(rng, max_strands, max_length);
    std::set<int> seen(w.letters().begin(), w.letters().end());
    for (int l : seen) {
      if (l < 0 && !seen.count(-l))
        return w;
    }
  }
}

BraidWord random_knot_word(std::mt19937& rng, int max_strands, int max_length) {
  for (;;) {
    BraidWord w = random_word(rng, max_strands, max_length);
    if (khtrans::link_components(w) == 1)
      return w;
  }
}

std::vector<BraidWord> regression_words() {
  return {
      BraidWord(1, {}),
      BraidWord(2, {}),
      BraidWord(2, {1}),
      BraidWord(2, {-1}),
      BraidWord(2, {1, 1}),
      BraidWord(2, {1, 1, 1}),
      BraidWord(2, {-1, -1, -1}),
      BraidWord(2, {1, 1, 1, 1, 1}),
      BraidWord(3, {1, -2, 1, -2}),
      BraidWord(3, {1, 1, 1, -2}),
      BraidWord(3, {1, 2, 1, 2}),
      BraidWord(3, {1, 1, 2, -1, 2}),
      BraidWord(3, {-1, 2, 2, -1, 2}),
      BraidWord(4, {1, 2, 3, -1, 2}),
      BraidWord(4, {1, -2, 3, 1, -2, 3}),
  };
}

} // namespace oracle
