#pragma once

#include <string>
#include <vector>

#include "jrigid/fin_group.hpp"
#include "jrigid/int_linalg.hpp"
#include "jrigid/rep_ring.hpp"

namespace jrigid {

// Finite-order automorphism of the cocharacter lattice Z^n of a torus.
class LatticeAuto {
 public:
  // Requires a square integer matrix, invertible over Z, of finite
  // multiplicative order (verified up to the known bound for each rank).
  explicit LatticeAuto(linalg::IMat m);

  int rank() const { return m_.rows(); }
  const linalg::IMat& matrix() const { return m_; }
  long order() const { return order_; }

 private:
  linalg::IMat m_;
  long order_;
};

// "0,1;1,0": rows separated by ';', entries by ','.
LatticeAuto parse_lattice_auto(const std::string& text);

// Coinvariant lattice of gamma: L / (1 - gamma)L is free of rank d(gamma)
// plus a torsion group H.
struct CoinvariantReport {
  long free_rank = 0;            // d(gamma)
  std::vector<Integer> torsion;  // elementary divisors of H, each > 1
  long fixed_rank = 0;           // rank of the gamma-fixed sublattice
};

// Smith normal form of (1 - gamma).  The free rank is cross-checked against
// the rank of the fixed sublattice, computed independently over Q; for a
// finite-order automorphism the two agree.
CoinvariantReport coinvariants(const LatticeAuto& a);

// One piece of the adjoint quotient of a torus-by-finite group, taken in two
// steps: the coinvariant torus of a class representative, of dimension
// d(gamma), still carries the centralizer of gamma for the second step.
struct QuotientComponent {
  int rep = 0;  // class representative in Gamma
  long class_size = 0;
  long d = 0;                    // dimension of the coinvariant torus
  std::vector<Integer> torsion;  // H for this class
  std::vector<int> centralizer;  // elements of Gamma(rep)
};

// actions[g] is the lattice action of group element g; the map must be a
// homomorphism into GL_n(Z).  Returns one component per conjugacy class;
// d and torsion are verified to be constant along each class.
std::vector<QuotientComponent> component_quotient(const FinGroup& gamma,
                                                  const std::vector<LatticeAuto>& actions);

// Character-level decomposition for the double cover of an even orthogonal
// group: the weight lattice of the cover splits its representation ring into
// the integral-weight part and a half-integral part that is a module over it.
struct DecompositionReport {
  int n_summands = 1;
  std::vector<std::string> even_members;  // generators with integral weights
  std::vector<std::string> odd_members;   // generators with half-integral weights
  bool members_pure = true;     // every generator lies in a single weight coset
  bool even_closed = true;      // products of even members stay integral
  bool odd_module = true;       // even times odd stays half-integral
  bool odd_squares_even = true;  // products of two odd members are integral

  bool ok() const;
};

// O_even and Pin specs of rank <= 2 get the two-summand cover check; rings
// of connected groups form a single summand and pass vacuously.
DecompositionReport rep_decomposition_check(const RingSpec& spec);

// Element orders of the finite group Z^n / im(a) for nonsingular a, as a
// sorted multiset: once by breadth-first coset enumeration modulo |det a|
// (no Smith form involved), once from the elementary divisors.  Two abelian
// groups are isomorphic exactly when these multisets agree.
std::vector<long> cokernel_orders_naive(const linalg::IMat& a);
std::vector<long> cokernel_orders_from_divisors(const linalg::IMat& a);

}  // namespace jrigid
