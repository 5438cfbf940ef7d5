#include "monoteq/patterns.hpp"

namespace monoteq {
namespace patterns {

Poset diamond() {
  return Poset::from_cover_edges({"a", "b", "c", "d"},
                                 {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

Poset bowtie() {
  return Poset::from_cover_edges({"e", "f", "g", "h"},
                                 {{"e", "g"}, {"e", "h"}, {"f", "g"}, {"f", "h"}});
}

Poset y_poset() {
  return Poset::from_cover_edges({"e", "f", "g", "h"},
                                 {{"e", "f"}, {"f", "g"}, {"f", "h"}});
}

Poset w_poset() {
  return Poset::from_cover_edges({"e", "f", "g", "h"},
                                 {{"e", "f"}, {"e", "g"}, {"e", "h"}});
}

Poset s1() {
  return Poset::from_cover_edges(
      {"a", "b", "c", "d", "x"},
      {{"x", "a"}, {"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

Poset s4_hat() {
  return Poset::from_cover_edges(
      {"a", "b", "c", "d", "x", "y"},
      {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"c", "y"}, {"x", "c"}});
}

Poset crown(int k) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= k; ++i) {
    elems.push_back("a" + std::to_string(i));
    elems.push_back("b" + std::to_string(i));
  }
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j)
        covers.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
  return Poset::from_cover_edges(elems, covers);
}

Poset chain(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) elems.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    covers.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return Poset::from_cover_edges(elems, covers);
}

}  // namespace patterns
}  // namespace monoteq
