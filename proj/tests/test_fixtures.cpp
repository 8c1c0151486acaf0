#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "alexdimer/braid.hpp"
#include "alexdimer/jsonio.hpp"

using namespace alexdimer;

namespace {

std::string fixture(const std::string& name) {
  const char* d = std::getenv("ALEXDIMER_FIXTURES");
  const std::filesystem::path dir = d ? d : "fixtures";
  return (dir / name).string();
}

bool same_crossings(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.crossings().size() != b.crossings().size()) return false;
  for (const auto& [id, c] : a.crossings()) {
    const auto it = b.crossings().find(id);
    if (it == b.crossings().end()) return false;
    for (int p = 0; p < 4; ++p) {
      const Dart &x = c.darts[p], &y = it->second.darts[p];
      if (x.edge != y.edge || x.dir != y.dir || x.strand != y.strand)
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("shipped fixtures equal their braid-closure derivations") {
  const struct {
    const char* file;
    const char* name;
    int strands;
    std::vector<int> word;
  } table[] = {
      {"unknot1.json", "unknot1", 2, {1}},
      {"hopf.json", "hopf", 2, {1, 1}},
      {"trefoil.json", "trefoil", 2, {1, 1, 1}},
      {"fig8.json", "fig8", 3, {1, -2, 1, -2}},
      {"whitehead.json", "whitehead", 3, {1, -2, 1, -2, 1}},
      {"l3.json", "l3", 3, {1, -2, 1, -2, 1, -2}},
  };
  for (const auto& row : table) {
    CAPTURE(row.file);
    const LinkDiagram shipped = read_diagram(fixture(row.file));
    const LinkDiagram derived = braid_closure(row.name, row.strands, row.word);
    CHECK(shipped.name() == row.name);
    CHECK(same_crossings(shipped, derived));
    CHECK(shipped.is_connected());
    CHECK(shipped.is_alternating());
  }
}
