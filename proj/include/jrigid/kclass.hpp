#pragma once

#include <memory>
#include <vector>

#include "jrigid/character.hpp"
#include "jrigid/fin_group.hpp"
#include "jrigid/group_action.hpp"
#include "jrigid/int_linalg.hpp"

namespace jrigid {

// One orbit of the diagonal action on Y x Y: a chosen base pair, its
// stabilizer inside the acting group, and that stabilizer's character table.
struct PairOrbit {
  int base_x = 0, base_y = 0;
  Subgroup stab;
  std::shared_ptr<const CharacterTable> table;
};

// Orbit decomposition of Y x Y under the diagonal action, with a transporter
// from the base pair to every pair of its orbit.  Construction is
// deterministic (row-major scan), so equal actions yield equal orbit
// indexings.
class PairOrbits {
 public:
  explicit PairOrbits(GAction action);

  const GAction& action() const { return act_; }
  int n_orbits() const { return static_cast<int>(orbits_.size()); }
  const PairOrbit& orbit(int k) const { return orbits_[static_cast<size_t>(k)]; }
  int orbit_of(int x, int y) const;
  // g with (g base_x, g base_y) = (x, y) for the base pair of orbit_of(x,y).
  int transporter_to(int x, int y) const;

 private:
  GAction act_;
  std::vector<PairOrbit> orbits_;
  std::vector<int> index_, transport_;  // n x n row-major
};

std::shared_ptr<const PairOrbits> pair_orbits(const GAction& action);

// Element of the equivariant convolution algebra on Y x Y: for each orbit, a
// virtual character of the base-pair stabilizer, stored as cyclotomic
// coefficients in the irreducible basis.  Equivariance is automatic; values
// elsewhere on the orbit are obtained by transport.
class KClass {
 public:
  static KClass zero(std::shared_ptr<const PairOrbits> orbits);
  // The diagonal class: trivial character on every diagonal orbit; this is
  // the identity of the convolution product.
  static KClass diagonal(std::shared_ptr<const PairOrbits> orbits);
  // Single orbit carrying the irreducible `irr` of its base-pair stabilizer.
  static KClass orbit_class(std::shared_ptr<const PairOrbits> orbits, int orbit, int irr);

  const PairOrbits& orbits() const { return *orb_; }
  const std::shared_ptr<const PairOrbits>& orbits_ptr() const { return orb_; }
  const std::vector<Cyclotomic>& coeffs(int orbit) const {
    return coeffs_[static_cast<size_t>(orbit)];
  }
  bool is_zero() const;

  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass& operator+=(const KClass& o);
  bool operator==(const KClass& o) const;
  bool operator!=(const KClass& o) const { return !(*this == o); }

  // Character value of the transported data at the pair (x, y), evaluated at
  // a group element g fixing both x and y.
  Cyclotomic value_at(int x, int y, int g) const;

  // Every coefficient coordinate lies in Z[1/base].
  bool coefficients_integral_over(const Integer& base) const;

 private:
  KClass(std::shared_ptr<const PairOrbits> orb, std::vector<std::vector<Cyclotomic>> coeffs)
      : orb_(std::move(orb)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const PairOrbits> orb_;
  std::vector<std::vector<Cyclotomic>> coeffs_;  // [orbit][irr index]

  friend KClass convolve(const KClass& a, const KClass& b);
  friend KClass operator*(const Cyclotomic& c, const KClass& a);
};

// Convolution: at a pair (x,z) and g fixing both, the value is
// sum over g-fixed y of a(x,y)(g) * b(y,z)(g); specialization then takes
// products to matrix products.
KClass convolve(const KClass& a, const KClass& b);
inline KClass operator*(const KClass& a, const KClass& b) { return convolve(a, b); }
KClass operator*(const Cyclotomic& c, const KClass& a);

// Exact matrix of a class acting on functions on the fixed-point set of s.
struct SpecMatrix {
  int s = 0;
  std::vector<int> points;      // Y^s, ascending
  linalg::Mat<Cyclotomic> mat;  // entry (i,j) = value at (points[i], points[j])
};
SpecMatrix specialize_at(const KClass& a, int s);

}  // namespace jrigid
