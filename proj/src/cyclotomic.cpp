#include "jrigid/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace jrigid {

namespace {

// Memo for Phi_n; read-mostly, so a shared mutex keeps concurrent readers
// cheap while inserts stay exclusive.
std::shared_mutex phi_mutex;
std::map<long, qpoly::Poly> phi_cache;

qpoly::Poly x_pow_minus_one(long n) {
  qpoly::Poly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  return p;
}

}  // namespace

long Cyclotomic::euler_phi(long n) {
  require(n >= 1, "euler_phi of non-positive order");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const qpoly::Poly& Cyclotomic::cyclotomic_polynomial(long n) {
  require(n >= 1, "cyclotomic polynomial of non-positive order");
  {
    std::shared_lock lock(phi_mutex);
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  qpoly::Poly p = x_pow_minus_one(n);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = qpoly::divmod(p, cyclotomic_polynomial(d));
    require(qpoly::is_zero(r), "cyclotomic polynomial division not exact");
    p = std::move(q);
  }
  std::unique_lock lock(phi_mutex);
  return phi_cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic Cyclotomic::from_coords(long order, std::vector<Rational> coords) {
  require(order >= 1, "cyclotomic order must be positive");
  long phi = euler_phi(order);
  require(static_cast<long>(coords.size()) <= phi,
          "too many coordinates for cyclotomic order");
  coords.resize(phi, Rational(0));
  Cyclotomic c;
  c.order_ = order;
  c.coords_ = std::move(coords);
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(long order, long power) {
  require(order >= 1, "root_of_unity with non-positive order");
  power %= order;
  if (power < 0) power += order;
  const auto& phi = cyclotomic_polynomial(order);
  qpoly::Poly x(power + 1, Rational(0));
  x[power] = 1;
  x = qpoly::mod(x, phi);
  return from_coords(order, std::move(x));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  require(is_rational(), "cyclotomic element is not rational");
  return coords_[0];
}

Cyclotomic Cyclotomic::lifted_to(long M) const {
  require(M % order_ == 0, "cyclotomic lift target must be a multiple of order");
  if (M == order_) return *this;
  const long step = M / order_;
  const auto& phi = cyclotomic_polynomial(M);
  qpoly::Poly acc;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    qpoly::Poly term(step * i + 1, Rational(0));
    term[step * i] = coords_[i];
    acc = qpoly::add(acc, term);
  }
  acc = qpoly::mod(acc, phi);
  return from_coords(M, std::move(acc));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long M = std::lcm(order_, o.order_);
  Cyclotomic a = lifted_to(M), b = o.lifted_to(M);
  for (size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long M = std::lcm(order_, o.order_);
  Cyclotomic a = lifted_to(M), b = o.lifted_to(M);
  qpoly::Poly pa(a.coords_.begin(), a.coords_.end());
  qpoly::Poly pb(b.coords_.begin(), b.coords_.end());
  qpoly::trim(pa);
  qpoly::trim(pb);
  qpoly::Poly prod = qpoly::mod(qpoly::mul(pa, pb), cyclotomic_polynomial(M));
  return from_coords(M, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  require(!is_zero(), "inverse of zero cyclotomic element");
  if (is_rational()) return Cyclotomic(Rational(1) / coords_[0]);
  qpoly::Poly p(coords_.begin(), coords_.end());
  qpoly::trim(p);
  auto res = qpoly::xgcd(p, cyclotomic_polynomial(order_));
  // Phi_N is irreducible over Q, so the gcd with any nonzero reduced element
  // is 1 and the Bezout coefficient is the inverse.
  require(qpoly::degree(res.g) == 0, "cyclotomic inverse: gcd not constant");
  qpoly::Poly inv = qpoly::mod(res.s, cyclotomic_polynomial(order_));
  return from_coords(order_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result(Rational(1));
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Cyclotomic Cyclotomic::galois(long k) const {
  long N = order_;
  long kk = k % N;
  if (kk < 0) kk += N;
  require(std::gcd(kk, N) == 1, "galois exponent not coprime to order");
  const auto& phi = cyclotomic_polynomial(N);
  qpoly::Poly acc;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    long e = (static_cast<long>(i) * kk) % N;
    qpoly::Poly term(e + 1, Rational(0));
    term[e] = coords_[i];
    acc = qpoly::add(acc, term);
  }
  acc = qpoly::mod(acc, phi);
  return from_coords(N, std::move(acc));
}

Cyclotomic Cyclotomic::conj() const {
  if (order_ <= 2) return *this;
  return galois(order_ - 1);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long M = std::lcm(order_, o.order_);
  return lifted_to(M).coords_ == o.lifted_to(M).coords_;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return to_string(coords_[0]);
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    Rational c = coords_[i];
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (i == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << "z" << order_;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

bool Cyclotomic::coords_in_z_inv(const Integer& base) const {
  for (const auto& c : coords_)
    if (!denominator_divides_power_of(c, base)) return false;
  return true;
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& c) {
  return Cyclotomic(r) * c;
}

}  // namespace jrigid
