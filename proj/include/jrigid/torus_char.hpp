#pragma once

#include <map>
#include <string>
#include <vector>

#include "jrigid/cyclotomic.hpp"
#include "jrigid/error.hpp"
#include "jrigid/rational.hpp"

namespace jrigid {

// Virtual character of a torus (Z/2-extended weight lattice): an integer
// combination of monomials z_1^{a_1/2} ... z_n^{a_n/2}.  Exponents are stored
// doubled, so the key (a_1, ..., a_n) encodes the weight (a_1/2, ..., a_n/2);
// genuinely half-integral weights (spin weights) have odd entries.
class TorusChar {
 public:
  using Key = std::vector<long>;

  explicit TorusChar(int n_vars) : n_(n_vars) { require(n_vars >= 0, "negative variable count"); }
  TorusChar(int n_vars, const Integer& c) : TorusChar(n_vars) {
    put(Key(static_cast<size_t>(n_vars), 0), c);
  }

  static TorusChar monomial(int n_vars, const Integer& coeff, const Key& doubled_exps);
  // Convenience for integral weights: exponents as given, not doubled.
  static TorusChar var_pow(int n_vars, int var, long exp);

  int n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Integer>& terms() const { return terms_; }
  Integer coeff(const Key& doubled_exps) const;

  TorusChar operator-() const;
  TorusChar operator+(const TorusChar& o) const;
  TorusChar operator-(const TorusChar& o) const;
  TorusChar operator*(const TorusChar& o) const;
  TorusChar& operator+=(const TorusChar& o) { return *this = *this + o; }
  TorusChar& operator-=(const TorusChar& o) { return *this = *this - o; }
  TorusChar& operator*=(const TorusChar& o) { return *this = *this * o; }
  TorusChar operator*(const Integer& c) const;
  bool operator==(const TorusChar& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const TorusChar& o) const { return !(*this == o); }

  TorusChar pow(long k) const;
  // Exact division by a nonzero integer; throws if any coefficient resists.
  TorusChar divide_exact(const Integer& d) const;

  // Variable substitutions used for Weyl-symmetry checks.
  TorusChar swap_vars(int i, int j) const;
  TorusChar invert_var(int i) const;
  TorusChar invert_all() const;
  // Invariance under permutations and inversions of the variables.
  bool is_hyperoctahedral_symmetric() const;

  // True if every monomial has integral exponents (all doubled entries even).
  bool has_integral_exponents() const;
  // True if every monomial's total (integral) exponent sum has the given
  // parity; requires integral exponents.
  bool total_degree_parity_is(int parity) const;

  // Evaluation at a point given by square roots: w_i with z_i = w_i^2, so a
  // doubled exponent vector (a_1, ..., a_n) contributes prod w_i^{a_i}.
  Cyclotomic eval_sqrt(const std::vector<Cyclotomic>& w) const;
  Rational eval_sqrt(const std::vector<Rational>& w) const;

  std::string str() const;

 private:
  void put(const Key& k, const Integer& c);

  int n_;
  std::map<Key, Integer> terms_;
};

inline TorusChar operator*(const Integer& c, const TorusChar& t) { return t * c; }

}  // namespace jrigid
