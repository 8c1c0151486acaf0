#pragma once

#include <string>
#include <vector>

#include "alexdimer/dimer.hpp"
#include "alexdimer/jsonio.hpp"

namespace alexdimer::cli {

struct Check {
  std::string id;
  bool pass = false;
  std::string details;
};

// State-sum invariants: oracle agreement, segment independence, and the
// shape facts that hold for connected alternating diagrams.  The optional
// fault injection perturbs one graph weight before the oracle comparison
// (test-harness hook; a correct build then reports a failure).
std::vector<Check> dimer_suite(const LinkDiagram& d, const Caps& caps,
                               bool corrupt_weights = false);

// Split identities, asserted over every two-sided circle of a connected
// diagram.
std::vector<Check> murasugi_suite(const LinkDiagram& d, const Caps& caps);

bool all_pass(const std::vector<Check>& checks);
json checks_to_json(const std::vector<Check>& checks);
void print_checks(const std::vector<Check>& checks);

}  // namespace alexdimer::cli
