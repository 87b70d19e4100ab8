#include "jrigid/half_laurent.hpp"

#include <cctype>
#include <sstream>

#include "jrigid/qpoly.hpp"

namespace jrigid {

void HalfLaurent::put(long key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent HalfLaurent::monomial(const Rational& coeff, long exp_num, long exp_den) {
  require(exp_den == 1 || exp_den == 2, "exponent denominator must be 1 or 2");
  HalfLaurent p;
  p.put(exp_den == 1 ? 2 * exp_num : exp_num, coeff);
  return p;
}

HalfLaurent HalfLaurent::v_pow(long k) {
  HalfLaurent p;
  p.put(k, Rational(1));
  return p;
}

long HalfLaurent::min_key() const {
  require(!is_zero(), "min_key of zero polynomial");
  return terms_.begin()->first;
}

long HalfLaurent::max_key() const {
  require(!is_zero(), "max_key of zero polynomial");
  return terms_.rbegin()->first;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [k, c] : o.terms_) r.put(k, c);
  return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [k, c] : o.terms_) r.put(k, -c);
  return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.put(k1 + k2, c1 * c2);
  return r;
}

HalfLaurent HalfLaurent::pow(long k) const {
  require(k >= 0, "negative power of a Laurent polynomial");
  HalfLaurent result(Rational(1));
  HalfLaurent base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Cyclotomic HalfLaurent::eval_at_v(const Cyclotomic& v0) const {
  require(!v0.is_zero(), "evaluation of Laurent polynomial at v = 0");
  Cyclotomic acc;
  for (const auto& [k, c] : terms_) acc += Cyclotomic(c) * v0.pow(k);
  return acc;
}

Rational HalfLaurent::eval_at_v(const Rational& v0) const {
  require(v0 != 0, "evaluation of Laurent polynomial at v = 0");
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    Rational p(1);
    long e = k >= 0 ? k : -k;
    for (long i = 0; i < e; ++i) p *= v0;
    if (k >= 0)
      acc += c * p;
    else
      acc += c / p;
  }
  return acc;
}

std::string HalfLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (k == 0) {
      out << to_string(a);
      continue;
    }
    if (a != 1) out << to_string(a) << "*";
    out << "q";
    if (k != 2) {
      out << "^";
      if (k % 2 == 0)
        out << k / 2;
      else
        out << k << "/2";
    }
  }
  return out.str();
}

bool HalfLaurent::coeffs_in_z_inv(const Integer& base) const {
  for (const auto& [k, c] : terms_)
    if (!denominator_divides_power_of(c, base)) return false;
  return true;
}

HalfLaurent HalfLaurent::parse(const std::string& text) {
  HalfLaurent result;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long {
    skip_ws();
    size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    require(i > start && std::isdigit(static_cast<unsigned char>(text[i - 1])),
            "expected integer in polynomial at offset " + std::to_string(start));
    return std::stol(text.substr(start, i - start));
  };
  skip_ws();
  require(i < text.size(), "empty polynomial text");
  bool first_term = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else {
      require(first_term, "expected '+' or '-' between terms");
    }
    first_term = false;
    skip_ws();
    require(i < text.size(), "dangling sign in polynomial text");
    Rational coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      long num = parse_int();
      long den = 1;
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = parse_int();
        require(den != 0, "zero denominator in coefficient");
      }
      coeff = make_rational(num, den);
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long key = 0;  // doubled exponent
    if (i < text.size() && (text[i] == 'q' || text[i] == 'v')) {
      bool is_v = text[i] == 'v';
      ++i;
      skip_ws();
      long en = 1, ed = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        en = parse_int();
        skip_ws();
        if (i < text.size() && text[i] == '/') {
          ++i;
          ed = parse_int();
          require(ed == 1 || ed == 2, "exponent denominator must be 1 or 2");
        }
      }
      if (is_v) {
        require(ed == 1, "fractional exponent of v not supported");
        key = en;
      } else {
        key = ed == 1 ? 2 * en : en;
      }
    } else {
      require(saw_coeff, "expected coefficient or q-power in term");
    }
    result.put(key, sign < 0 ? -coeff : coeff);
  }
  return result;
}

namespace {

// Converts a nonzero HalfLaurent into an ordinary polynomial in v by
// stripping its lowest monomial (a unit of the Laurent ring).
qpoly::Poly normalize_to_poly(const HalfLaurent& p) {
  const long lo = p.min_key();
  qpoly::Poly poly(p.max_key() - lo + 1, Rational(0));
  for (const auto& [k, c] : p.terms()) poly[k - lo] = c;
  return poly;
}

}  // namespace

std::optional<long> poly_divides_power(const HalfLaurent& den,
                                       const HalfLaurent& base, long bound) {
  require(!den.is_zero(), "poly_divides_power with zero denominator");
  require(bound >= 0, "poly_divides_power with negative bound");
  qpoly::Poly d = normalize_to_poly(den);
  if (qpoly::degree(d) == 0) return 0;  // unit: divides base^0 = 1
  if (base.is_zero()) return std::nullopt;
  qpoly::Poly b = qpoly::mod(normalize_to_poly(base), d);
  qpoly::Poly r{Rational(1)};
  for (long k = 1; k <= bound; ++k) {
    r = qpoly::mod(qpoly::mul(r, b), d);
    if (qpoly::is_zero(r)) return k;
  }
  return std::nullopt;
}

}  // namespace jrigid
