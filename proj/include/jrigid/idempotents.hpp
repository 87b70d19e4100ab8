#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jrigid/kclass.hpp"

namespace jrigid {

struct IdempotentFamily {
  std::vector<std::string> labels;
  std::vector<KClass> members;
};

// For a transitive action with abelian image:
//   t_rho = (1/#Gamma) sum_gamma rho(gamma^{-1}) [O_{Gamma(y1, gamma y1)}]
// over the characters rho of the image group (equivalently, the characters
// of Gamma trivial on the base-point stabilizer).  The family consists of
// orthogonal idempotents summing to the diagonal class.
IdempotentFamily abelian_idempotents(const std::shared_ptr<const PairOrbits>& orbits,
                                     int base_point);

// The classified families for an order-6 nonabelian group: trivial point,
// two points through the sign map, the natural three-point set, the regular
// six-point set, and the two non-transitive three-point sets (fixed point
// plus a two-point orbit; three fixed points).  Anything else raises
// "unclassified case".
IdempotentFamily s3_idempotents(const std::shared_ptr<const PairOrbits>& orbits);

// Isotypic decomposition of C[Y^s] under the image of the centralizer of s,
// with the rank of every family member on each multiplicity space
// Hom(rho1, C[Y^s]).
struct ModuleLine {
  int irr = 0;
  long multiplicity = 0;
  std::vector<long> ranks;  // one entry per family member
};
struct ModuleDecomposition {
  int s;
  std::vector<int> points;  // Y^s, ascending
  GAction image;            // the centralizer image acting on positions
  std::shared_ptr<const CharacterTable> table;  // of the image group
  std::vector<ModuleLine> lines;
};
ModuleDecomposition build_module(const IdempotentFamily& family, int s);

// Solves the linear system pinning down the unique class that acts as the
// identity on every mu_{rho'} line and as zero on the other character lines,
// across all specializations with nonempty fixed sets; checks the solution
// against the closed formula t_{rho'} and returns it.  rho_index follows the
// character order used by abelian_idempotents.
KClass rigid_unique(const std::shared_ptr<const PairOrbits>& orbits, int base_point,
                    int rho_index);

}  // namespace jrigid
