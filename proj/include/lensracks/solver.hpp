#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lensracks/diagram.hpp"
#include "lensracks/rack.hpp"

namespace lensracks {

// colors[arc-1] in 1..|X|, satisfying every crossing relation of one level.
using LevelColoring = std::vector<int>;

// A point of Hom(R(D),X): one tangle coloring per level 0..p-1.
struct Homomorphism {
  std::vector<LevelColoring> levels;

  std::vector<int> flattened() const;  // level-major
  bool operator==(const Homomorphism&) const = default;
};

// How condition (iii) is checked. Closure demands a consistent induced
// permutation on the generated image (the homomorphism condition of the
// augmented structure); GeneratorPairs only compares kernel partitions of the
// generator set under the powers of A. GeneratorPairs admits maps that are not
// homomorphisms of the augmented rack and is kept for comparison studies.
enum class KernelMode { Closure, GeneratorPairs };

// Partition of the index set S = arcs x levels into blocks of equal value;
// block ids are first-occurrence numbered over the level-major flattening.
std::vector<int> kernel_partition(const std::vector<int>& values);

std::vector<LevelColoring> enumerate_level_colorings(const LensDiagram& d, const RackTable& t);

// f(A^k(x_arc, level)): the level shift while j+k < p, then the disk word.
int apply_A_power(const LensDiagram& d, const RackTable& t, const Homomorphism& f, int k, int arc,
                  int level);

// The induced map on the image closure: pairs u -> u' seeded by
// (f(s), f(A s)) and closed under both operation pair rules. nullopt when
// the pairs conflict (two images or two preimages for one element).
std::optional<std::map<int, int>> sigma_closure(const LensDiagram& d, const RackTable& t,
                                                const Homomorphism& f);

// Chain, wrap, and the condition (iii) check in the chosen mode. Assumes
// every level already satisfies the per-level crossing relations.
bool check_conditions(const LensDiagram& d, const RackTable& t, const Homomorphism& f,
                      KernelMode mode = KernelMode::Closure);

std::vector<Homomorphism> enumerate_homomorphisms(const LensDiagram& d, const RackTable& t,
                                                  KernelMode mode = KernelMode::Closure);

// Independent verifier: walks every function S -> X within the search
// budget |X|^(A*p) <= 10^7 and keeps those satisfying the defining
// conditions, checked by code separate from the main enumerator.
std::vector<Homomorphism> oracle_enumerate_homomorphisms(const LensDiagram& d, const RackTable& t,
                                                         KernelMode mode = KernelMode::Closure);

long long count_homomorphisms(const LensDiagram& d, const RackTable& t,
                              KernelMode mode = KernelMode::Closure);

}  // namespace lensracks
