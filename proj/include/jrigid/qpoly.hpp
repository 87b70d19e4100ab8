#pragma once

#include <utility>
#include <vector>

#include "jrigid/rational.hpp"

// Dense univariate polynomials over Q, coefficient vector indexed by degree.
// Internal helper layer shared by the cyclotomic field and Laurent-polynomial
// code; zero polynomial is the empty vector.

namespace jrigid::qpoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Poly& p) { return p.empty(); }

inline long degree(const Poly& p) { return static_cast<long>(p.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Euclidean division: returns (quotient, remainder) with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require(!is_zero(b), "polynomial division by zero");
  Poly r = a, q;
  trim(r);
  if (degree(r) >= degree(b)) q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    Rational c = r.back() / lead;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

inline Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

// Extended gcd: g = s*a + t*b with g monic (or zero).
struct XgcdResult {
  Poly g, s, t;
};

inline XgcdResult xgcd(Poly a, Poly b) {
  Poly s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    auto [q, r] = divmod(a, b);
    a = std::exchange(b, r);
    Poly s2 = sub(s0, mul(q, s1));
    s0 = std::exchange(s1, s2);
    Poly t2 = sub(t0, mul(q, t1));
    t0 = std::exchange(t1, t2);
  }
  if (!is_zero(a)) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
  }
  return {a, s0, t0};
}

}  // namespace jrigid::qpoly
