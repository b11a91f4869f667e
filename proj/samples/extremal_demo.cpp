// Extremes of every index over the trees of one degree sequence, and the
// caterpillar spine orderings that reach them.
//
//   extremal_demo [degrees]     default 4,2,2,1,1,1,1

#include <iostream>
#include <string>

#include "irrtree/extremal.hpp"

int main(int argc, char** argv) {
  using namespace irrtree;
  const std::string text = argc > 1 ? argv[1] : "4,2,2,1,1,1,1";
  try {
    const auto d = parse_degree_sequence(text);
    std::cout << "degree sequence (" << d.to_string() << "), " << labeled_tree_count(d)
              << " labeled trees\n\n";
    for (auto kind : kAllIndexKinds) {
      const auto r = extremal_index(d, kind);
      std::cout << to_string(kind) << ": min " << format_value(r.min_value) << ", max "
                << format_value(r.max_value) << " over " << r.count_iso << " trees\n";
    }

    std::vector<Degree> spine;
    for (auto x : d.ascending())
      if (x > 1) spine.push_back(x);
    if (spine.size() < 2) return 0;
    const auto s = spine_permutation_extremal(DegreeSequence(spine), IndexKind::Irr);
    std::cout << "\nspine {" << DegreeSequence(spine).to_string() << "}, irr over "
              << s.valid_orderings << " orderings: min " << format_value(s.extremal.min_value)
              << ", max " << format_value(s.extremal.max_value) << '\n';
    for (const auto& o : s.argmax) {
      std::cout << "  max at";
      for (auto x : o) std::cout << ' ' << x;
      std::cout << '\n';
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
