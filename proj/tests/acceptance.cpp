// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "khtrans/homology.hpp"
#include "khtrans/lee.hpp"
#include "khtrans/transverse.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <string>

using namespace khtrans;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

KhComplex make(const BraidWord& w, Variant variant = Variant::Standard, CoeffRing ring = CoeffRing::Integers,
               int marked = 0) {
  ComplexOptions o;
  o.variant = variant;
  o.ring = ring;
  o.marked_arc = marked;
  return KhComplex(closure_diagram(w), o);
}

bool plus_or_minus(const Chain& x, const Chain& y) { return x == y || x == -y; }

bool is_chain_map(const KhComplex& source, const ChainMap& f) {
  for (int i = source.min_degree(); i <= source.max_degree(); ++i)
    for (const auto& g : source.generators(i))
      if (f.target().apply_differential(f(g)) != f(source.differential(g)))
        return false;
  return true;
}

std::vector<BraidWord> random_corpus(unsigned seed, int count, int max_strands, int max_length) {
  std::mt19937 rng(seed);
  std::vector<BraidWord> out;
  for (int k = 0; k < count; ++k)
    out.push_back(oracle::random_word(rng, max_strands, max_length));
  return out;
}

std::string name(const BraidWord& w) { return "{" + std::to_string(w.strands()) + ", [" + w.to_string() + "]}"; }

Outcome trefoil_table() {
  Outcome o;
  const auto h = bigraded_homology(make(BraidWord(2, {1, 1, 1})));
  BigradedHomology expected;
  expected.set(0, 1, {1, {}});
  expected.set(0, 3, {1, {}});
  expected.set(2, 5, {1, {}});
  expected.set(3, 7, {0, {BigInt(2)}});
  expected.set(3, 9, {1, {}});
  o.require(h == expected, "table differs");
  const int n = 3, b = 2;
  o.require(h.at(0, n - b) == HomologyGroup{1, {}} && h.at(0, n - b + 2) == HomologyGroup{1, {}}, "i=0 row");
  return o;
}

Outcome psi_gradings(const std::vector<BraidWord>& corpus) {
  Outcome o;
  for (const auto& w : corpus) {
    const KhComplex c = make(w);
    const CubeGenerator& g = psi_chain(c).begin()->first;
    o.require(c.homological_degree(g.vertex) == 0 && c.quantum_degree(g) == self_linking(w), name(w));
  }
  return o;
}

Outcome psi_cycle_and_d_squared(const std::vector<BraidWord>& corpus) {
  Outcome o;
  for (const auto& w : corpus) {
    const KhComplex c = make(w);
    o.require(c.apply_differential(psi_chain(c)).is_zero(), "d psi != 0 for " + name(w));
    for (int i = c.min_degree(); i <= c.max_degree() && o.pass; ++i)
      for (const auto& g : c.generators(i))
        if (!c.apply_differential(c.differential(g)).is_zero()) {
          o.require(false, "d^2 != 0 for " + name(w));
          break;
        }
  }
  return o;
}

Outcome stabilization_vanishing() {
  Outcome o;
  for (const auto& base : random_corpus(104, 50, 4, 8)) {
    const BraidWord w = markov_move(base, NegativeStab{});
    o.require(psi_report(w).cls.is_zero, "psi nonzero for " + name(w));
    const KhComplex c = make(w);
    const Chain phi = stabilization_primitive(c, static_cast<int>(w.size()) - 1);
    o.require(plus_or_minus(c.apply_differential(phi), psi_chain(c)), "d phi != +-psi for " + name(w));
  }
  return o;
}

Outcome rho_maps() {
  Outcome o;
  std::mt19937 rng(105);
  for (const auto& w : random_corpus(5, 20, 3, 5)) {
    const KhComplex c = make(w);
    const Chain psi = psi_chain(c);
    const int n = static_cast<int>(w.size());

    const ChainMap stab = rho1_chain_map(c, n);
    o.require(stab.target().diagram().crossings() == closure_diagram(markov_move(w, PositiveStab{})).crossings(),
              "rho1 target for " + name(w));
    o.require(stab(psi) == psi_chain(stab.target()), "rho1(psi) for " + name(w));
    o.require(is_chain_map(c, stab), "rho1 not a chain map for " + name(w));

    const int pos = std::uniform_int_distribution<int>(0, n)(rng);
    const ChainMap kink = rho1_chain_map(c, pos);
    o.require(kink(psi) == psi_chain(kink.target()), "rho1(psi) at " + std::to_string(pos) + " for " + name(w));
    o.require(is_chain_map(c, kink), "rho1 not a chain map for " + name(w));

    const int gen = std::uniform_int_distribution<int>(1, w.strands() - 1)(rng);
    const int sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
    const ChainMap r2 = rho2_chain_map(c, pos, gen, sign);
    o.require(plus_or_minus(r2(psi), psi_chain(r2.target())), "rho2(psi) for " + name(w));
    o.require(is_chain_map(c, r2), "rho2 not a chain map for " + name(w));

    const ClassInfo before = psi_report(w).cls;
    const ClassInfo after = psi_report(markov_move(w, PositiveStab{})).cls;
    o.require(before.is_zero == after.is_zero && before.order == after.order &&
                  before.divisibility == after.divisibility,
              "class changed under positive stabilization for " + name(w));
  }
  return o;
}

Outcome positive_resolution() {
  Outcome o;
  std::mt19937 rng(106);
  int done = 0;
  while (done < 20) {
    const BraidWord w = oracle::random_word(rng, 4, 7);
    std::vector<int> positive;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w.letters()[k] > 0)
        positive.push_back(static_cast<int>(k));
    if (positive.empty())
      continue;
    const int j = positive[std::uniform_int_distribution<std::size_t>(0, positive.size() - 1)(rng)];
    const KhComplex c = make(w);
    const ChainMap f = positive_resolution_map(c, j);
    o.require(is_chain_map(c, f), "not a chain map for " + name(w));
    o.require(f(psi_chain(c)) == psi_chain(f.target()), "psi not preserved for " + name(w));
    ++done;
  }
  return o;
}

Outcome negative_only() {
  Outcome o;
  std::mt19937 rng(107);
  for (int k = 0; k < 50; ++k) {
    const BraidWord w = oracle::random_negative_only_word(rng, 4, 10);
    o.require(psi_report(w).cls.is_zero, "psi nonzero for " + name(w));
  }
  return o;
}

// psi generates Kh^{0,sl} = Z.
bool generates_z(const BraidWord& w) {
  const PsiReport p = psi_report(w);
  return p.cls.is_primitive && homology_at(make(w), 0, p.sl) == HomologyGroup{1, {}};
}

Outcome torus_links() {
  Outcome o;
  o.require(psi_report(BraidWord(2, {-1, -1, -1})).cls.is_zero, "negative trefoil");
  for (int q : {3, 5, 7})
    o.require(generates_z(BraidWord(2, std::vector<int>(q, 1))), "T(2," + std::to_string(q) + ")");
  return o;
}

Outcome birman_menasco() {
  Outcome o;
  const BraidWord a(3, {1, 1, 1, 1, 1, 2, 2, 2, 2, 1, 1, 1, 1, -2});
  const BraidWord b(3, {1, 1, 1, 1, 1, -2, 1, 1, 1, 1, 2, 2, 2, 2});
  for (const auto& w : {a, b}) {
    o.require(self_linking(w) == 9, "sl of " + name(w));
    o.require(generates_z(w), "psi does not generate Kh^{0,9} for " + name(w));
  }
  return o;
}

Outcome euler_characteristic(const std::vector<BraidWord>& words) {
  Outcome o;
  for (const auto& w : words) {
    const KhComplex c = make(w);
    o.require(graded_euler_characteristic(bigraded_homology(c)) == oracle::unnormalized_jones(c.diagram()),
              name(w));
  }
  return o;
}

Outcome s_invariant_checks(const std::vector<BraidWord>& words) {
  Outcome o;
  o.require(s_invariant(BraidWord(1, {})) == 0, "s(unknot)");
  o.require(s_invariant(BraidWord(2, {1, 1, 1})) == 2, "s(trefoil)");
  o.require(s_invariant(BraidWord(2, {1, 1, 1, 1, 1})) == 4, "s(T(2,5))");
  std::mt19937 rng(111);
  for (int k = 0; k < 100; ++k) {
    const BraidWord w = oracle::random_knot_word(rng, 3, 8);
    o.require(self_linking(w) <= s_invariant(w) - 1, "sl > s-1 for " + name(w));
  }
  for (const auto& w : words)
    o.require(lee_homology_dimension(w) == (std::size_t{1} << link_components(w)), "Lee dimension of " + name(w));
  return o;
}

Outcome reduced_theory(const std::vector<BraidWord>& corpus) {
  Outcome o;
  for (const auto& w : random_corpus(112, 10, 3, 6)) {
    const Diagram d = closure_diagram(w);
    const auto first = bigraded_homology(make(w, Variant::Reduced, CoeffRing::FieldTwo, 0));
    for (int arc = 1; arc < d.arc_count(); ++arc)
      o.require(bigraded_homology(make(w, Variant::Reduced, CoeffRing::FieldTwo, arc)) == first,
                "marking " + std::to_string(arc) + " of " + name(w));
  }
  // Positive braids add words with psi != 0 to the mostly vanishing corpus.
  std::vector<BraidWord> words = corpus;
  for (const auto& w : random_corpus(113, 30, 4, 10)) {
    std::vector<int> letters;
    for (int l : w.letters())
      letters.push_back(std::abs(l));
    words.emplace_back(w.strands(), letters);
  }
  int nonzero = 0;
  for (const auto& w : words) {
    ComplexOptions reduced;
    reduced.variant = Variant::Reduced;
    const bool zero = psi_report(w).cls.is_zero;
    nonzero += !zero;
    o.require(psi_report(w, reduced).cls.is_zero == zero, "verdict differs for " + name(w));
  }
  o.require(nonzero >= 30, "too few words with psi != 0");
  return o;
}

} // namespace

int main() {
  const auto corpus = random_corpus(2024, 200, 4, 10);
  auto regression = oracle::regression_words();
  for (const auto& w : random_corpus(10, 30, 4, 8))
    regression.push_back(w);

  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "trefoil homology table", 1.0, trefoil_table},
      {2, "psi has gr 0 and q = sl on 200 words", 120.0, [&] { return psi_gradings(corpus); }},
      {3, "psi is a cycle and d^2 = 0 on 200 words", 0, [&] { return psi_cycle_and_d_squared(corpus); }},
      {4, "negative stabilization kills psi, d phi = +-psi", 0, stabilization_vanishing},
      {5, "rho1, rho2 chain maps fixing psi; stabilization invariance", 0, rho_maps},
      {6, "positive resolution map is a chain map fixing psi", 0, positive_resolution},
      {7, "negative-only generator forces psi = 0", 0, negative_only},
      {8, "torus links T(2,q)", 0, torus_links},
      {9, "Birman-Menasco pair, 14 crossings", 600.0, birman_menasco},
      {10, "Euler characteristic equals Kauffman bracket Jones", 0, [&] { return euler_characteristic(regression); }},
      {11, "s-invariant values, sl <= s-1, Lee dimension", 0, [&] { return s_invariant_checks(regression); }},
      {12, "reduced theory: marking independence, psi verdict", 0, [&] { return reduced_theory(corpus); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && seconds > c.budget_s)
      o.require(false, "over time budget of " + std::to_string(c.budget_s) + " s");
    failures += !o.pass;
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, seconds,
                o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
