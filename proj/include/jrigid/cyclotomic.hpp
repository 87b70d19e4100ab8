#pragma once

#include <string>
#include <vector>

#include "jrigid/qpoly.hpp"
#include "jrigid/rational.hpp"

namespace jrigid {

// An element of the cyclotomic field Q(zeta_N), stored as coordinates with
// respect to the power basis 1, zeta, ..., zeta^{phi(N)-1} of
// Q[x]/(Phi_N(x)).  Mixed-order arithmetic lifts both operands to the lcm
// order first; equality is representation-independent.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coords_(1, Rational(0)) {}
  /* implicit */ Cyclotomic(const Rational& r) : order_(1), coords_(1, r) {}
  /* implicit */ Cyclotomic(long n) : order_(1), coords_(1, Rational(n)) {}

  static Cyclotomic from_coords(long order, std::vector<Rational> coords);
  // zeta_order^power
  static Cyclotomic root_of_unity(long order, long power);

  long order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;          // power-basis coords beyond degree 0 vanish
  Rational rational_value() const;   // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // extended gcd with Phi_N; requires nonzero
  Cyclotomic pow(long k) const;

  // Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
  Cyclotomic galois(long k) const;
  // Complex conjugation, i.e. galois(-1).
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Re-expresses the element in Q(zeta_M) for a multiple M of the order.
  Cyclotomic lifted_to(long M) const;

  std::string str() const;

  // Denominators of all coordinates lie in Z[1/base].
  bool coords_in_z_inv(const Integer& base) const;

  static long euler_phi(long n);
  // Phi_n as a dense polynomial over Q (integer coefficients).
  static const qpoly::Poly& cyclotomic_polynomial(long n);

 private:
  long order_;
  std::vector<Rational> coords_;  // size euler_phi(order_)
};

Cyclotomic operator*(const Rational& r, const Cyclotomic& c);

}  // namespace jrigid
