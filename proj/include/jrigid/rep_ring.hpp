#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jrigid/cyclotomic.hpp"
#include "jrigid/torus_char.hpp"

namespace jrigid {

// Representation rings of classical groups, connected or not, modeled as
// Weyl-invariant torus characters.  Disconnected groups (O, Pin) are tagged
// direct products over their two Cartan-subgroup classes, so an element of
// such a ring is a pair of ClassFunctionElts with factor_tag 0 and 1.
enum class RingFamily { Sp, SO_odd, SO_even, O_even, O_odd, Spin, Pin, GL, SL, PGL };

struct RingSpec {
  RingFamily family;
  int rank;
};

RingSpec make_ring_spec(RingFamily f, int rank);
RingSpec parse_ring_spec(const std::string& family, int rank);
std::string ring_family_name(RingFamily f);

int n_factors(const RingSpec& s);              // 2 for O_even, O_odd, Pin
int n_torus_vars(const RingSpec& s, int factor = 0);
long defining_dimension(const RingSpec& s);    // 2n, 2n+1, or n (GL)

struct ClassFunctionElt {
  RingSpec spec;
  int factor_tag;
  TorusChar chr;
};

// Character selector: V_i (exterior powers of the defining representation),
// the half-spin characters delta+/delta-, the full (s)pin character pi, the
// determinant character, or the rank-1 irreducible V(k).
struct CharSelector {
  enum Kind { V_I, DELTA_PLUS, DELTA_MINUS, PI, DET, V_K };
  Kind kind;
  long index;  // i for V_I, k for V_K
};

// "V2", "V(3)", "delta+", "delta-", "pi", "det"
CharSelector parse_selector(const std::string& text);
std::string selector_str(const CharSelector& sel);

ClassFunctionElt fundamental_character(const RingSpec& s, const CharSelector& sel,
                                       int factor = 0);

// Invariance of a character under the Weyl group of the given factor,
// checked generator by generator.
bool weyl_invariant(const RingSpec& s, int factor, const TorusChar& chr);

// Expansion of a symmetric one-variable character with integral weights into
// irreducible SL2 characters: highest weight -> multiplicity.
std::map<long, Integer> decompose_sl2(const TorusChar& chr);

// True iff the expansion uses only odd highest weights; cross-checked
// against antisymmetry under z -> -z.
bool in_odd_module(const TorusChar& chr);

struct VanishingCertificate {
  Cyclotomic value;  // evaluation at z = i
  bool vanishes;
};

// Exact evaluation of an odd-module character at z^2 = -1.
VanishingCertificate odd_vanishing_locus(const TorusChar& chr);

struct PresentationReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_ok() const;
};

// Verifies the defining relations of R(SO_2n), R(O_2n), or R(Pin_2n) in
// exact character arithmetic.  Rank budget 4.
PresentationReport verify_presentation(const RingSpec& s);

}  // namespace jrigid
