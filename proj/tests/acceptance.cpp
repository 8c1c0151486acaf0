// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is self-contained and uses only the public API.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "alexdimer/braid.hpp"
#include "alexdimer/jsonio.hpp"
#include "alexdimer/murasugi.hpp"
#include "random_links.hpp"

using namespace alexdimer;
using alexdimer::testing::random_alternating_closure;

namespace {

int g_failures = 0;

void report(int n, const std::string& title, bool pass,
            const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << title;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

std::filesystem::path fixtures_dir() {
  const char* d = std::getenv("ALEXDIMER_FIXTURES");
  return d ? d : "fixtures";
}

LinkDiagram fx(const char* name) {
  return read_diagram((fixtures_dir() / (std::string(name) + ".json")).string());
}

const std::vector<const char*> kAllFixtures{"unknot1", "hopf",      "trefoil",
                                            "fig8",    "whitehead", "l3"};

// --- 1: the published magnitude sequence is trapezoidal but not palindromic.
void criterion1() {
  const std::vector<Int> seq{14, 108, 395, 882, 1320, 1302, 882, 395, 108, 14};
  std::vector<Int> rev(seq.rbegin(), seq.rend());
  const bool trap = is_trapezoidal(seq);
  const bool palin = seq == rev;
  report(1, "ten-term magnitude sequence is trapezoidal", trap && !palin,
         palin ? "unexpectedly palindromic"
               : "not palindromic: positions 5/6 hold 1320 vs 1302");
}

// --- 2: state sum equals the determinant oracle up to a unit.
void criterion2() {
  bool ok = true;
  std::string note;
  for (const char* name : kAllFixtures) {
    const LinkDiagram d = fx(name);
    const int seg = d.canonical_segment();
    if (!equal_up_to_unit(state_sum(d, seg), determinant_oracle(d, seg))) {
      ok = false;
      note += std::string(name) + " disagrees; ";
    }
  }
  report(2, "determinant oracle agrees on every fixture", ok, note);
}

// --- 3: the distinguished segment does not matter.
void criterion3() {
  bool ok = true;
  std::string note;
  for (const char* name : {"trefoil", "hopf", "fig8", "whitehead"}) {
    if (!segment_independence_check(fx(name))) {
      ok = false;
      note += std::string(name) + " varies; ";
    }
  }
  report(3, "state sum independent of the distinguished segment", ok, note);
}

// --- 4: alternating shape facts.
void criterion4() {
  bool ok = true;
  std::string note;
  for (const char* name : kAllFixtures) {
    const LinkDiagram d = fx(name);
    if (!d.is_connected() || !d.is_alternating()) continue;
    for (const auto& [edge, seg] : d.segments()) {
      if (!sign_coherent(enumerate_matchings(truncated_graph(d, edge)))) {
        ok = false;
        note += std::string(name) + ": incoherent signs at segment " +
                std::to_string(edge) + "; ";
      }
    }
    const LaurentPoly f = state_sum(d, d.canonical_segment());
    if (!is_palindromic_abs(f)) {
      ok = false;
      note += std::string(name) + ": |f| not palindromic; ";
    }
    for (const Int& c : coeff_seq(f).values)
      if (c == 0) {
        ok = false;
        note += std::string(name) + ": support not saturated; ";
      }
    const int crowell = static_cast<int>(d.crossings().size()) -
                        static_cast<int>(d.seifert_circles().size()) + 1;
    if (f.max_dexp() - f.min_dexp() != 2 * crowell) {
      ok = false;
      note += std::string(name) + ": wrong degree span; ";
    }
  }
  report(4, "sign coherence, palindromic magnitudes, saturated support, "
            "degree span",
         ok, note);
}

// --- 5: split identities at lengths 0, 1, 2, 3.
void criterion5() {
  bool ok = true;
  std::string note;

  for (const auto& split : {braid_closure("two-kinks", 4, {1, 3}),
                            braid_closure("fig8+kink", 5, {1, -2, 1, -2, 4})}) {
    if (!state_sum(split, split.canonical_segment()).is_zero()) {
      ok = false;
      note += split.name() + ": nonzero sum on a split diagram; ";
    }
  }

  {
    const LinkDiagram d = braid_closure("hopf-sum", 3, {1, 1, -2, -2});
    const MurasugiSplit s = split_lowest(d);
    const StateSumDecomposition dec = decompose_state_sum(d, s);
    if (s.length != 1 || dec.total != dec.p0 || !dec.remainder.is_zero() ||
        !verify_product_stratum(s, dec)) {
      ok = false;
      note += "length-1 product identity failed; ";
    }
  }

  int two_term = 0;
  std::vector<LinkDiagram> length2{fx("fig8")};
  for (std::uint64_t seed = 1; seed <= 200 && length2.size() < 4; ++seed) {
    try {
      LinkDiagram d = random_alternating_closure(seed);
      if (split_lowest(d).length == 2) length2.push_back(std::move(d));
    } catch (const Error&) {
    }
  }
  for (const LinkDiagram& d : length2) {
    const MurasugiSplit s = split_lowest(d);
    if (s.length != 2) continue;
    const StateSumDecomposition dec = decompose_state_sum(d, s);
    if (dec.remainder.is_zero() && verify_product_stratum(s, dec) &&
        verify_saturated_stratum(d, s, dec) &&
        dec.total == dec.p0 + dec.pmax)
      ++two_term;
    else
      note += d.name() + ": two-term identity failed; ";
  }
  if (two_term < 4) {
    ok = false;
    note += "only " + std::to_string(two_term) + " two-term splits passed; ";
  }

  {
    const LinkDiagram d = fx("l3");
    const MurasugiSplit s = split_lowest(d);
    const StateSumDecomposition dec = decompose_state_sum(d, s);
    LaurentPoly strata;
    for (const auto& [k, p] : dec.strata) strata += p;
    if (s.length != 3 || strata != dec.total ||
        !verify_product_stratum(s, dec) ||
        !verify_saturated_stratum(d, s, dec)) {
      ok = false;
      note += "three-term identity failed; ";
    }
  }

  report(5, "split identities at lengths 0, 1, 2 (fixture + 3 generated), 3",
         ok,
         ok ? std::to_string(two_term) + " two-term splits verified" : note);
}

// Fixture splits (every two-sided circle of every fixture, plus the
// length-1 connected sum) reused by criteria 6 and 7.
std::vector<std::pair<LinkDiagram, MurasugiSplit>> fixture_splits() {
  std::vector<std::pair<LinkDiagram, MurasugiSplit>> out;
  std::vector<LinkDiagram> ds;
  for (const char* name : kAllFixtures) ds.push_back(fx(name));
  ds.push_back(braid_closure("hopf-sum", 3, {1, 1, -2, -2}));
  for (const LinkDiagram& d : ds) {
    if (!d.is_connected()) continue;
    for (const SeifertCircle& c : d.seifert_circles())
      if (d.circle_type(c) == CircleType::T2)
        out.emplace_back(d, split_along(d, c.id));
  }
  return out;
}

// --- 6: structural facts about every fixture split.
void criterion6() {
  bool ok = true;
  std::string note;
  std::size_t splits = 0;
  for (const auto& [d, s] : fixture_splits()) {
    ++splits;
    const FCGraph g = truncated_graph(d, s.segment);
    for (const FlockEdge& f : s.flock) {
      const int idx = g.find_edge(f.crossing, f.region, f.quadrant);
      if (idx < 0 || g.edges[static_cast<std::size_t>(idx)].sign != 1 ||
          g.edges[static_cast<std::size_t>(idx)].dexp != 0) {
        ok = false;
        note += d.name() + ": flock edge not weight 1; ";
      }
    }
    if (!verify_flock_deletion(d, s)) {
      ok = false;
      note += d.name() + ": flock deletion; ";
    }
    if (!verify_tilde_diagrams(d, s)) {
      ok = false;
      note += d.name() + ": tilde equality; ";
    }
    if (!verify_summand_structure(d, s)) {
      ok = false;
      note += d.name() + ": summand structure; ";
    }
    if (!verify_flock_parity(d, s)) {
      ok = false;
      note += d.name() + ": flock parity; ";
    }
  }
  report(6, "flock weights, flock deletion, tilde equality, summand "
            "structure, flock parity",
         ok && splits > 0,
         ok ? std::to_string(splits) + " fixture splits" : note);
}

// --- 7: non-canceling bound and support equality.
void criterion7() {
  bool ok = true;
  std::string note;
  std::size_t splits = 0;
  for (const auto& [d, s] : fixture_splits()) {
    if (!d.is_alternating()) continue;
    ++splits;
    const StateSumDecomposition dec = decompose_state_sum(d, s);
    if (!verify_noncanceling(s, dec)) {
      ok = false;
      note += d.name() + ": noncanceling; ";
    }
    if (!verify_support(dec)) {
      ok = false;
      note += d.name() + ": support; ";
    }
  }
  report(7, "non-canceling coefficient bound and support equality", ok && splits > 0,
         ok ? std::to_string(splits) + " alternating fixture splits" : note);
}

// --- 8: trapezoid certificates on fixtures and generated diagrams.
void criterion8() {
  bool ok = true;
  std::string note;
  for (const char* name : {"fig8", "trefoil", "hopf", "whitehead"}) {
    try {
      const TrapezoidCertificate c = certify_trapezoid(fx(name));
      if (!c.trapezoidal || !c.centered) {
        ok = false;
        note += std::string(name) + ": verdict false; ";
      }
    } catch (const Error& e) {
      ok = false;
      note += std::string(name) + ": " + e.what() + "; ";
    }
  }
  int certified = 0, skipped = 0;
  for (std::uint64_t seed = 1; seed <= 500 && certified < 10; ++seed) {
    try {
      const TrapezoidCertificate c =
          certify_trapezoid(random_alternating_closure(seed));
      if (c.trapezoidal && c.centered)
        ++certified;
      else {
        ok = false;
        note += "seed " + std::to_string(seed) + ": verdict false; ";
      }
    } catch (const HypothesisError&) {
      ++skipped;  // a circle of length >= 3: the certificate does not apply
    } catch (const Error& e) {
      ok = false;
      note += "seed " + std::to_string(seed) + ": " + e.what() + "; ";
    }
  }
  if (certified < 10) {
    ok = false;
    note += "only " + std::to_string(certified) + " random certificates; ";
  }
  report(8, "certificates on 4 fixtures and 10 generated diagrams", ok,
         ok ? std::to_string(certified) + " random certificates, " +
                  std::to_string(skipped) + " seeds outside hypothesis"
            : note);
}

// --- 9: randomized polynomial-shape properties, 1000 cases each.
std::vector<long> random_trapezoid_values(std::mt19937_64& rng, int rise,
                                          int plateau, int fall) {
  std::uniform_int_distribution<long> bump(1, 5);
  std::vector<long> up(rise), down(fall);
  long v = bump(rng);
  for (int i = 0; i < rise; ++i) {
    up[i] = v;
    v += bump(rng);
  }
  long w = bump(rng);
  for (int i = 0; i < fall; ++i) {
    down[fall - 1 - i] = w;
    w += bump(rng);
  }
  const long top = std::max(v, w) + bump(rng) - 1;
  std::vector<long> vals = up;
  vals.insert(vals.end(), plateau, top);
  vals.insert(vals.end(), down.begin(), down.end());
  return vals;
}

std::vector<long> random_centered_trapezoid_values(std::mt19937_64& rng,
                                                   int length) {
  const int rise = std::uniform_int_distribution<int>(0, length / 2)(rng);
  const int plateau = length - 2 * rise;
  const auto head = random_trapezoid_values(rng, rise, plateau, 0);
  std::vector<long> vals = head;
  vals.insert(vals.end(), head.rbegin() + plateau, head.rend());
  return vals;
}

LaurentPoly from_values(const std::vector<long>& vals, int min_dexp) {
  LaurentPoly p;
  for (std::size_t i = 0; i < vals.size(); ++i)
    p.add_term(min_dexp + 2 * static_cast<int>(i), Int(vals[i]));
  return p;
}

void criterion9() {
  bool ok = true;
  std::string note;
  const int kCases = 1000;

  {  // |f + g| = |f| + |g| for sign-aligned summands
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> dexp(-8, 8);
    std::uniform_int_distribution<long> mag(1, 9);
    for (int i = 0; i < kCases && ok; ++i) {
      int sign_at[17];
      for (int& s : sign_at) s = rng() % 2 ? 1 : -1;
      const auto gen = [&] {
        LaurentPoly p;
        const int n = static_cast<int>(rng() % 7);
        for (int k = 0; k < n; ++k) {
          const int e = dexp(rng);
          p.add_term(e, Int(sign_at[e + 8] * mag(rng)));
        }
        return p;
      };
      const LaurentPoly f = gen(), g = gen();
      if (!is_noncanceling_sum({f, g}) ||
          abs_poly(f + g) != abs_poly(f) + abs_poly(g)) {
        ok = false;
        note += "sum distribution failed; ";
      }
    }
  }
  {  // |f g| = |f| |g| for uniform-sign factors
    std::mt19937_64 rng(102);
    std::uniform_int_distribution<int> dexp(-8, 8);
    std::uniform_int_distribution<long> mag(1, 9);
    for (int i = 0; i < kCases && ok; ++i) {
      const auto gen = [&](bool neg) {
        LaurentPoly p;
        const int n = static_cast<int>(rng() % 7);
        for (int k = 0; k < n; ++k)
          p.add_term(dexp(rng), Int((neg ? -1 : 1) * mag(rng)));
        return p;
      };
      const LaurentPoly f = gen(rng() % 2), g = gen(rng() % 2);
      if (!is_noncanceling_product(f, g) ||
          abs_poly(f * g) != abs_poly(f) * abs_poly(g)) {
        ok = false;
        note += "product distribution failed; ";
      }
    }
  }
  {  // products of positive trapezoids stay trapezoidal
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> run(0, 5), plat(1, 4);
    for (int i = 0; i < kCases && ok; ++i) {
      const auto a = random_trapezoid_values(rng, run(rng), plat(rng), run(rng));
      const auto b = random_trapezoid_values(rng, run(rng), plat(rng), run(rng));
      const LaurentPoly A = from_values(a, 0), B = from_values(b, 0);
      if (!is_trapezoidal(coeff_seq(A)) || !is_trapezoidal(coeff_seq(B)) ||
          !is_trapezoidal(coeff_seq(A * B))) {
        ok = false;
        note += "trapezoid product failed; ";
      }
    }
  }
  {  // centered trapezoids with near-equal spans: sum and product closure
    std::mt19937_64 rng(104);
    for (int i = 0; i < kCases && ok; ++i) {
      const int len_a = std::uniform_int_distribution<int>(2, 11)(rng);
      const int len_b = len_a - (rng() % 2 ? 2 : 0);
      const auto a = random_centered_trapezoid_values(rng, len_a);
      const auto b = random_centered_trapezoid_values(rng, len_b);
      const LaurentPoly A = from_values(a, -(len_a - 1));
      const LaurentPoly B = from_values(b, -(len_b - 1));
      const LaurentPoly S = A + B, P = A * B;
      if (!is_centered(A) || !is_centered(B) || !is_centered(S) ||
          !is_centered(P) || !is_trapezoidal(coeff_seq(S)) ||
          !is_trapezoidal(coeff_seq(P))) {
        ok = false;
        note += "centered closure failed; ";
      }
    }
  }
  report(9, "polynomial shape properties, 1000 randomized cases each", ok,
         ok ? "4 suites x 1000 cases" : note);
}

// --- 10: exploration tables conserve the state sum.
void criterion10() {
  bool ok = true;
  std::string note;
  const LinkDiagram d = fx("l3");
  const MurasugiSplit s = split_lowest(d);
  const StateSumDecomposition dec = decompose_state_sum(d, s);

  LaurentPoly rows_sum, rows_abs;
  for (const FlockSubsetRow& r : explore_flock_subsets(d, s)) {
    rows_sum += r.sum;
    rows_abs += abs_poly(r.sum);
  }
  if (rows_sum != dec.total) {
    ok = false;
    note += "table rows do not sum to the state sum; ";
  }
  if (rows_abs != abs_poly(dec.total)) {
    ok = false;
    note += "table magnitudes do not sum to the magnitude polynomial; ";
  }

  const auto tree = explore_tree(d, s);
  for (std::size_t level = 0; level <= s.flock.size(); ++level) {
    LaurentPoly level_sum;
    for (const auto& [prefix, node] : tree)
      if (prefix.size() == level) level_sum += node.sum;
    if (level_sum != dec.total) {
      ok = false;
      note += "tree level " + std::to_string(level) + " broken; ";
    }
  }
  report(10, "exploration rows and tree levels conserve the state sum", ok,
         note);
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
  } catch (const std::exception& e) {
    std::cout << "FAIL  unexpected exception: " << e.what() << "\n";
    ++g_failures;
  }
  std::cout << (g_failures ? "ACCEPTANCE: FAILED (" : "ACCEPTANCE: OK (")
            << (10 - g_failures) << "/10 criteria)\n";
  return g_failures ? 1 : 0;
}
