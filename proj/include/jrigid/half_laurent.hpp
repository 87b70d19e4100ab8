#pragma once

#include <map>
#include <optional>
#include <string>

#include "jrigid/cyclotomic.hpp"
#include "jrigid/rational.hpp"

namespace jrigid {

// Laurent polynomial in q with exponents in (1/2)Z, i.e. an element of
// Q[v, v^-1] for v = q^{1/2}.  Exponents are stored doubled (the exponent of
// v), so q^{a/2} has key a and q^k has key 2k.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  /* implicit */ HalfLaurent(const Rational& r) {
    if (r != 0) terms_[0] = r;
  }
  /* implicit */ HalfLaurent(long n) : HalfLaurent(Rational(n)) {}

  // c * q^{num/den}, den in {1, 2}.
  static HalfLaurent monomial(const Rational& coeff, long exp_num, long exp_den);
  // v^k = q^{k/2}
  static HalfLaurent v_pow(long k);
  static HalfLaurent q() { return v_pow(2); }
  static HalfLaurent v() { return v_pow(1); }

  // Grammar: terms joined by '+'/'-'; a term is an optional rational
  // coefficient, optional '*', and an optional power "q^a" or "q^a/b"
  // (b in {1,2}; "q" alone means q^1).
  static HalfLaurent parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Rational>& terms() const { return terms_; }
  long min_key() const;  // doubled exponent of lowest term; requires nonzero
  long max_key() const;

  HalfLaurent operator-() const;
  HalfLaurent operator+(const HalfLaurent& o) const;
  HalfLaurent operator-(const HalfLaurent& o) const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  HalfLaurent& operator+=(const HalfLaurent& o) { return *this = *this + o; }
  HalfLaurent& operator-=(const HalfLaurent& o) { return *this = *this - o; }
  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }
  bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const HalfLaurent& o) const { return !(*this == o); }

  HalfLaurent pow(long k) const;

  // Evaluation at v = v0 (the value of q^{1/2}); exact field arithmetic.
  // The substitution v -> v0 is a ring homomorphism Q[v,v^-1] -> Q(zeta),
  // which requires v0 != 0.
  Cyclotomic eval_at_v(const Cyclotomic& v0) const;
  Rational eval_at_v(const Rational& v0) const;

  std::string str() const;  // canonical, highest exponent first

  // All coefficient denominators lie in Z[1/base].
  bool coeffs_in_z_inv(const Integer& base) const;

 private:
  std::map<long, Rational> terms_;  // doubled exponent -> coefficient, no zeros
  void put(long key, const Rational& c);
};

inline HalfLaurent operator*(const Rational& c, const HalfLaurent& p) {
  return HalfLaurent(c) * p;
}

// Least k in [0, bound] with den | base^k in Q[v, v^-1] (divisibility up to
// units, i.e. up to monomial factors), or nullopt if none exists.
std::optional<long> poly_divides_power(const HalfLaurent& den,
                                       const HalfLaurent& base, long bound);

}  // namespace jrigid
