#pragma once

#include <optional>
#include <vector>

#include "jrigid/fin_group.hpp"

namespace jrigid {

// Normalized 2-cocycle with values in Z/N on a subgroup of some ambient
// group.  Normalized means c(e,.) = c(.,e) = 0, and the cocycle identity
//   c(g,h) + c(gh,k) = c(h,k) + c(g,hk)  (mod N)
// is verified on all triples at construction.
class Cocycle2 {
 public:
  // `values` is row-major over pairs of subgroup indices, entries reduced
  // into [0, N) on input.
  Cocycle2(Subgroup domain, long modulus, std::vector<long> values);

  static Cocycle2 zero(Subgroup domain, long modulus);
  // c(g,h) = b(g) + b(h) - b(gh); requires b[identity] = 0 mod N.
  static Cocycle2 coboundary_of(Subgroup domain, long modulus,
                                const std::vector<long>& b);
  // c(g,h) = phi(g) * psi(h) for homomorphisms phi, psi : domain -> Z/N,
  // given as image vectors over subgroup indices.
  static Cocycle2 bilinear(Subgroup domain, long modulus,
                           const std::vector<long>& phi,
                           const std::vector<long>& psi);

  const Subgroup& domain() const { return domain_; }
  long modulus() const { return n_; }
  long value(int a, int b) const;              // subgroup indices
  long value_at_parent(int pa, int pb) const;  // ambient-group elements

  Cocycle2 operator+(const Cocycle2& o) const;
  Cocycle2 negated() const;

  // Restriction to a subgroup of the same ambient group whose elements all
  // lie in the current domain.
  Cocycle2 restricted_to(const Subgroup& smaller) const;

  // Pullback along an injective homomorphism new_domain.group -> domain.group
  // given by to_old[i] = ambient element that new-domain index i maps to.
  Cocycle2 pulled_back(const Subgroup& new_domain,
                       const std::vector<int>& to_old) const;

  bool is_coboundary() const { return coboundary_witness().has_value(); }
  // b with b(e) = 0 and c(g,h) = b(g) + b(h) - b(gh) mod N, or nullopt.
  std::optional<std::vector<long>> coboundary_witness() const;

  bool operator==(const Cocycle2& o) const;
  bool operator!=(const Cocycle2& o) const { return !(*this == o); }

 private:
  Subgroup domain_;
  long n_ = 0;
  std::vector<long> vals_;  // m x m row-major over subgroup indices
};

}  // namespace jrigid
