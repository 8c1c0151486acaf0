#include "report.hpp"

#include <iostream>

#include "alexdimer/laurent.hpp"
#include "alexdimer/murasugi.hpp"

namespace alexdimer::cli {

std::vector<Check> dimer_suite(const LinkDiagram& d, const Caps& caps,
                               bool corrupt_weights) {
  std::vector<Check> out;
  const int seg = d.canonical_segment();
  FCGraph g = truncated_graph(d, seg);
  if (corrupt_weights && !g.edges.empty()) g.edges[0].dexp += 2;
  const LaurentPoly sum = state_sum_of_graph(g, caps);
  const LaurentPoly det = determinant_oracle(truncated_graph(d, seg));

  if (d.is_connected()) {
    out.push_back({"oracle-equivalence", equal_up_to_unit(sum, det),
                   "state sum " + to_string(sum) + "; determinant " +
                       to_string(det)});
  } else {
    out.push_back({"disconnected-sum-vanishes",
                   sum.is_zero() && det.is_zero(),
                   "state sum " + to_string(sum)});
  }
  out.push_back({"segment-independence", segment_independence_check(d, caps),
                 "one polynomial over all distinguished segments"});

  if (d.is_connected() && d.is_alternating()) {
    const auto ms = enumerate_matchings(truncated_graph(d, seg), caps);
    out.push_back({"sign-coherence", sign_coherent(ms),
                   std::to_string(ms.size()) + " matchings"});
    const LaurentPoly f = state_sum(d, seg, caps);
    out.push_back({"alternating-sum-nonzero", !f.is_zero(), to_string(f)});
    if (!f.is_zero()) {
      out.push_back({"centered",
                     f.max_dexp() == -f.min_dexp() && uniform_parity(f),
                     to_string(f)});
      out.push_back({"palindromic-magnitudes", is_palindromic_abs(f), ""});
      bool saturated = true;
      for (const Int& c : coeff_seq(f).values)
        if (c == 0) saturated = false;
      out.push_back({"saturated-support", saturated, ""});
      const int crowell = static_cast<int>(d.crossings().size()) -
                          static_cast<int>(d.seifert_circles().size()) + 1;
      out.push_back({"degree-span",
                     f.max_dexp() - f.min_dexp() == 2 * crowell,
                     "span " + std::to_string((f.max_dexp() - f.min_dexp())) +
                         "/2, crossings - circles + 1 = " +
                         std::to_string(crowell)});
    }
  }
  return out;
}

std::vector<Check> murasugi_suite(const LinkDiagram& d, const Caps& caps) {
  std::vector<Check> out;
  if (!d.is_connected()) return out;
  for (const SeifertCircle& c : d.seifert_circles()) {
    if (d.circle_type(c) != CircleType::T2) continue;
    const MurasugiSplit s = split_along(d, c.id);
    const StateSumDecomposition dec = decompose_state_sum(d, s, caps);
    const std::string at =
        "circle " + std::to_string(c.id) + ", length " + std::to_string(s.length);
    const auto add = [&](const char* id, bool ok, const std::string& extra = "") {
      out.push_back({id, ok, extra.empty() ? at : at + "; " + extra});
    };

    LaurentPoly strata_total;
    for (const auto& [k, p] : dec.strata) strata_total += p;
    add("strata-conservation", strata_total == dec.total);

    const FCGraph g = truncated_graph(d, s.segment);
    bool flock_ok = true;
    for (const FlockEdge& f : s.flock) {
      const int idx = g.find_edge(f.crossing, f.region, f.quadrant);
      if (idx < 0 || g.edges[static_cast<std::size_t>(idx)].sign != 1 ||
          g.edges[static_cast<std::size_t>(idx)].dexp != 0)
        flock_ok = false;
    }
    add("flock-weights", flock_ok,
        std::to_string(s.flock.size()) + " flock edges");

    add("flock-deletion", verify_flock_deletion(d, s));
    add("flock-parity", verify_flock_parity(d, s, caps));
    add("product-stratum", verify_product_stratum(s, dec, caps));
    if (s.length >= 2) {
      add("saturated-stratum", verify_saturated_stratum(d, s, dec, caps));
      add("tilde-diagrams", verify_tilde_diagrams(d, s));
    }
    if (s.length <= 2)
      add("remainder-zero", dec.remainder.is_zero(),
          "remainder " + to_string(dec.remainder));
    add("summand-structure", verify_summand_structure(d, s));
    if (d.is_alternating()) {
      add("noncanceling", verify_noncanceling(s, dec, caps));
      add("support-equality", verify_support(dec));
    }
  }
  return out;
}

bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

json checks_to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& c : checks)
    out.push_back({{"id", c.id}, {"pass", c.pass}, {"details", c.details}});
  return out;
}

void print_checks(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id;
    if (!c.details.empty()) std::cout << " (" << c.details << ")";
    std::cout << "\n";
  }
}

}  // namespace alexdimer::cli
