#pragma once

#include <string>
#include <vector>

#include "jrigid/classical.hpp"
#include "jrigid/half_laurent.hpp"
#include "jrigid/int_linalg.hpp"

namespace jrigid {

// Irreducible factor of a finite Weyl group.  Families A, B, C, D as for
// LieType (B and C give the same group), plus G for G_2.
struct WeylFactor {
  char family;  // 'A', 'B', 'C', 'D', 'G'
  int rank;
};

using WeylSpec = std::vector<WeylFactor>;

WeylSpec weyl_of(const LieType& t);
// "B3", "A1xA1", "G2", ...
WeylSpec parse_weyl(const std::string& text);
std::string weyl_str(const WeylSpec& w);

// Degrees of the fundamental invariants, factor by factor.
std::vector<long> weyl_degrees(const WeylSpec& w);
long weyl_order(const WeylSpec& w);

// Product over the degrees d of 1 + q + ... + q^{d-1}.
HalfLaurent poincare_product(const WeylSpec& w);
// Length generating function by breadth-first search of the group in its
// reflection representation.
HalfLaurent poincare_brute(const WeylSpec& w);
// The product formula, cross-checked against the brute count.
HalfLaurent poincare_polynomial(const WeylSpec& w);

}  // namespace jrigid
