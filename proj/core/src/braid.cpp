#include "alexdimer/braid.hpp"

#include <algorithm>
#include <optional>

namespace alexdimer {

LinkDiagram braid_closure(std::string name, int strands,
                          const std::vector<int>& word) {
  if (strands < 2) throw ValidationError("braid needs at least 2 strands");
  std::vector<Crossing> crossings;
  std::vector<std::optional<CornerRef>> dangling(strands), pending(strands);
  int next_edge = 1;

  auto connect = [&](const CornerRef& tail, const CornerRef& head) {
    crossings[tail.crossing].darts[tail.pos].edge = next_edge;
    crossings[head.crossing].darts[head.pos].edge = next_edge;
    ++next_edge;
  };

  for (int letter : word) {
    const int k = std::abs(letter) - 1;  // left column, 0-based
    if (letter == 0 || k + 1 >= strands)
      throw ValidationError("braid letter out of range");
    const int c = static_cast<int>(crossings.size());
    Crossing cr;
    for (int p = 0; p < 4; ++p) {
      cr.darts[p].dir = p < 2 ? Dir::In : Dir::Out;
      const bool even_over = letter > 0;  // slots 0,2 over on a positive letter
      cr.darts[p].strand =
          (p % 2 == 0) == even_over ? Strand::Over : Strand::Under;
    }
    crossings.push_back(cr);

    // Top in-slots: slot 1 continues the left column, slot 0 the right.
    std::vector<std::pair<int, int>> tops = {{k, 1}, {k + 1, 0}};
    std::sort(tops.begin(), tops.end(), [&](const auto& a, const auto& b) {
      const auto &da = dangling[a.first], &db = dangling[b.first];
      if (da.has_value() != db.has_value()) return da.has_value();
      return da && *da < *db;
    });
    for (const auto& [col, slot] : tops) {
      if (dangling[col]) {
        connect(*dangling[col], {c, slot});
      } else {
        pending[col] = CornerRef{c, slot};
      }
    }
    dangling[k] = CornerRef{c, 2};
    dangling[k + 1] = CornerRef{c, 3};
  }

  for (int col = 0; col < strands; ++col) {
    if (!dangling[col])
      throw ValidationError("strand " + std::to_string(col + 1) +
                            " meets no crossing");
    connect(*dangling[col], *pending[col]);
  }

  std::map<int, Crossing> by_id;
  for (size_t i = 0; i < crossings.size(); ++i)
    by_id[static_cast<int>(i)] = crossings[i];
  return LinkDiagram(std::move(name), std::move(by_id));
}

LinkDiagram from_pd_code(std::string name,
                         const std::vector<std::array<int, 4>>& code) {
  if (code.empty()) throw ParseError("empty PD code");
  const int n2 = 2 * static_cast<int>(code.size());
  auto succ = [n2](int x) { return x % n2 + 1; };
  std::map<int, Crossing> crossings;
  for (size_t i = 0; i < code.size(); ++i) {
    const auto [a, b, c, d] = std::array<int, 4>(code[i]);
    Crossing cr;
    cr.darts[0] = {a, Dir::In, Strand::Under};
    cr.darts[2] = {c, Dir::Out, Strand::Under};
    const bool b_in = succ(b) == d, d_in = succ(d) == b;
    if (b_in == d_in)
      throw ParseError("crossing " + std::to_string(i) +
                       ": over-strand direction is ambiguous");
    cr.darts[1] = {b, b_in ? Dir::In : Dir::Out, Strand::Over};
    cr.darts[3] = {d, d_in ? Dir::In : Dir::Out, Strand::Over};
    crossings[static_cast<int>(i)] = cr;
  }
  return LinkDiagram(std::move(name), std::move(crossings));
}

}  // namespace alexdimer
