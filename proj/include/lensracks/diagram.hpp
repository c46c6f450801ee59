#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lensracks/errors.hpp"

namespace lensracks {

struct Crossing {
  int sign = 1;  // +1 or -1
  int over = 0;
  int under_in = 0;
  int under_out = 0;
  bool operator==(const Crossing&) const = default;
};

// One passage of the link through the surgery disk; strand order in the
// diagram is the order of passages along the surgery curve.
struct Strand {
  int in_arc = 0;   // terminates at the disk
  int out_arc = 0;  // originates at the disk
  int eps = 1;      // +1 or -1
  bool operator==(const Strand&) const = default;
};

// Presentation-level diagram of a framed link in L(p,1). Arcs are the
// coloring arcs of the projection (cut at undercrossings and at disk
// passages). Construction normalizes: component cycles rotate to start at
// the lowest arc and are ordered by their given ids, crossings sort by
// their under_in arc; strand order is meaningful and kept as given.
class LensDiagram {
 public:
  static LensDiagram make(int p, int arc_count, std::vector<std::vector<int>> components,
                          std::vector<Crossing> crossings, std::vector<Strand> strands);
  static LensDiagram parse(const std::string& text);
  std::string serialize() const;

  int p() const { return p_; }
  int arc_count() const { return arc_count_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  int disk_degree() const { return static_cast<int>(strands_.size()); }  // d
  int link_crossing_count() const { return arc_count_ - disk_degree(); }  // m = A - d

  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Strand>& strands() const { return strands_; }
  int component_of(int arc) const;  // 1-based component index

  std::vector<int> writhe_vector() const;  // self-crossing signs per component

  LensDiagram add_positive_kink(int component) const;
  LensDiagram apply_omega2(int moving_arc, int over_arc) const;
  LensDiagram mirror() const;  // all crossing signs flipped

  // For every writhe class w in (Z_N)^n in lexicographic order, the diagram
  // with ((w_c - writhe_c) mod N) extra positive kinks on component c.
  std::vector<std::pair<std::vector<int>, LensDiagram>> framing_representatives(int N) const;

  bool operator==(const LensDiagram&) const = default;

 private:
  LensDiagram() = default;
  void validate() const;
  void normalize();

  int p_ = 1;
  int arc_count_ = 0;
  std::vector<std::vector<int>> components_;
  std::vector<Crossing> crossings_;
  std::vector<Strand> strands_;
};

}  // namespace lensracks
