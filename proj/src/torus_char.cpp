#include "jrigid/torus_char.hpp"

#include <algorithm>
#include <sstream>

namespace jrigid {

void TorusChar::put(const Key& k, const Integer& c) {
  require(k.size() == static_cast<size_t>(n_), "exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TorusChar TorusChar::monomial(int n_vars, const Integer& coeff, const Key& doubled_exps) {
  TorusChar t(n_vars);
  t.put(doubled_exps, coeff);
  return t;
}

TorusChar TorusChar::var_pow(int n_vars, int var, long exp) {
  require(var >= 0 && var < n_vars, "variable index out of range");
  Key k(static_cast<size_t>(n_vars), 0);
  k[static_cast<size_t>(var)] = 2 * exp;
  return monomial(n_vars, Integer(1), k);
}

Integer TorusChar::coeff(const Key& doubled_exps) const {
  auto it = terms_.find(doubled_exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

TorusChar TorusChar::operator-() const {
  TorusChar r(n_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

TorusChar TorusChar::operator+(const TorusChar& o) const {
  require(n_ == o.n_, "variable count mismatch");
  TorusChar r = *this;
  for (const auto& [k, c] : o.terms_) r.put(k, c);
  return r;
}

TorusChar TorusChar::operator-(const TorusChar& o) const {
  require(n_ == o.n_, "variable count mismatch");
  TorusChar r = *this;
  for (const auto& [k, c] : o.terms_) r.put(k, -c);
  return r;
}

TorusChar TorusChar::operator*(const TorusChar& o) const {
  require(n_ == o.n_, "variable count mismatch");
  TorusChar r(n_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Key k = k1;
      for (size_t i = 0; i < k.size(); ++i) k[i] += k2[i];
      r.put(k, c1 * c2);
    }
  return r;
}

TorusChar TorusChar::operator*(const Integer& c) const {
  TorusChar r(n_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

TorusChar TorusChar::pow(long k) const {
  require(k >= 0, "negative power of a torus character");
  TorusChar result(n_, Integer(1));
  TorusChar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

TorusChar TorusChar::divide_exact(const Integer& d) const {
  require(d != 0, "division by zero");
  TorusChar r(n_);
  for (const auto& [k, c] : terms_) {
    require(c % d == 0, "inexact integer division of a torus character");
    r.terms_[k] = c / d;
  }
  return r;
}

TorusChar TorusChar::swap_vars(int i, int j) const {
  require(i >= 0 && i < n_ && j >= 0 && j < n_, "variable index out of range");
  TorusChar r(n_);
  for (const auto& [k, c] : terms_) {
    Key kk = k;
    std::swap(kk[static_cast<size_t>(i)], kk[static_cast<size_t>(j)]);
    r.put(kk, c);
  }
  return r;
}

TorusChar TorusChar::invert_var(int i) const {
  require(i >= 0 && i < n_, "variable index out of range");
  TorusChar r(n_);
  for (const auto& [k, c] : terms_) {
    Key kk = k;
    kk[static_cast<size_t>(i)] = -kk[static_cast<size_t>(i)];
    r.put(kk, c);
  }
  return r;
}

TorusChar TorusChar::invert_all() const {
  TorusChar r(n_);
  for (const auto& [k, c] : terms_) {
    Key kk = k;
    for (auto& e : kk) e = -e;
    r.put(kk, c);
  }
  return r;
}

bool TorusChar::is_hyperoctahedral_symmetric() const {
  for (int i = 0; i + 1 < n_; ++i)
    if (swap_vars(i, i + 1) != *this) return false;
  if (n_ >= 1 && invert_var(n_ - 1) != *this) return false;
  return true;
}

bool TorusChar::has_integral_exponents() const {
  for (const auto& [k, c] : terms_)
    for (long e : k)
      if (e % 2 != 0) return false;
  return true;
}

bool TorusChar::total_degree_parity_is(int parity) const {
  require(parity == 0 || parity == 1, "parity must be 0 or 1");
  for (const auto& [k, c] : terms_) {
    long total = 0;
    for (long e : k) {
      require(e % 2 == 0, "parity test on a half-integral weight");
      total += e / 2;
    }
    if (((total % 2) + 2) % 2 != parity) return false;
  }
  return true;
}

Cyclotomic TorusChar::eval_sqrt(const std::vector<Cyclotomic>& w) const {
  require(w.size() == static_cast<size_t>(n_), "evaluation point has wrong length");
  Cyclotomic acc;
  for (const auto& [k, c] : terms_) {
    Cyclotomic term = Rational(c);
    for (size_t i = 0; i < k.size(); ++i) term *= w[i].pow(k[i]);
    acc += term;
  }
  return acc;
}

Rational TorusChar::eval_sqrt(const std::vector<Rational>& w) const {
  require(w.size() == static_cast<size_t>(n_), "evaluation point has wrong length");
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    Rational term(c);
    for (size_t i = 0; i < k.size(); ++i) {
      long e = k[i];
      if (e == 0) continue;
      require(w[i] != 0 || e > 0, "evaluation at zero with a negative exponent");
      Rational p(1);
      for (long j = 0; j < (e > 0 ? e : -e); ++j) p *= w[i];
      if (e > 0)
        term = term * p;
      else
        term = term / p;
    }
    acc += term;
  }
  return acc;
}

std::string TorusChar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Integer a = abs(c);
    bool all_zero = std::all_of(k.begin(), k.end(), [](long e) { return e == 0; });
    if (all_zero) {
      out << a.get_str();
      continue;
    }
    bool wrote = false;
    if (a != 1) {
      out << a.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (wrote) out << "*";
      out << "z" << (i + 1);
      if (k[i] != 2) {
        out << "^";
        if (k[i] % 2 == 0)
          out << k[i] / 2;
        else
          out << k[i] << "/2";
      }
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace jrigid
