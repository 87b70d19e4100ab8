#include <random>

#include "doctest.h"
#include "jrigid/cyclotomic.hpp"
#include "jrigid/error.hpp"
#include "jrigid/half_laurent.hpp"
#include "jrigid/rational.hpp"
#include "jrigid/torus_char.hpp"

using namespace jrigid;

namespace {

HalfLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expd(-4, 4), coeff(-5, 5), den(1, 3);
  HalfLaurent p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p += HalfLaurent::monomial(make_rational(coeff(rng), den(rng)), expd(rng), expd(rng) % 2 == 0 ? 1 : 2);
  return p;
}

TorusChar random_torus(std::mt19937& rng, int n_vars) {
  std::uniform_int_distribution<int> nterms(0, 4), expd(-3, 3), coeff(-5, 5);
  TorusChar t(n_vars);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    TorusChar::Key key(static_cast<size_t>(n_vars));
    for (auto& e : key) e = expd(rng);
    t += TorusChar::monomial(n_vars, Integer(coeff(rng)), key);
  }
  return t;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-4/2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), MathError);
  CHECK(denominator_divides_power_of(make_rational(1, 8), Integer(2)));
  CHECK(denominator_divides_power_of(make_rational(5, 36), Integer(6)));
  CHECK(denominator_divides_power_of(Rational(7), Integer(3)));
  CHECK(!denominator_divides_power_of(make_rational(1, 5), Integer(6)));
  CHECK(!denominator_divides_power_of(make_rational(1, 12), Integer(2)));
}

TEST_CASE("cyclotomic polynomial table") {
  using qpoly::Poly;
  CHECK(Cyclotomic::euler_phi(1) == 1);
  CHECK(Cyclotomic::euler_phi(12) == 4);
  CHECK(Cyclotomic::euler_phi(36) == 12);
  // Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
  CHECK(Cyclotomic::cyclotomic_polynomial(3) == Poly{Rational(1), Rational(1), Rational(1)});
  CHECK(Cyclotomic::cyclotomic_polynomial(4) == Poly{Rational(1), Rational(0), Rational(1)});
  CHECK(Cyclotomic::cyclotomic_polynomial(6) == Poly{Rational(1), Rational(-1), Rational(1)});
  CHECK(Cyclotomic::cyclotomic_polynomial(12) ==
        Poly{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("cyclotomic arithmetic oracles") {
  Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4 * z4 == Cyclotomic(Rational(-1)));

  Cyclotomic z2 = Cyclotomic::root_of_unity(2, 1);
  CHECK((z2 + Cyclotomic(Rational(1))).is_zero());

  // (1 + z3)(-z3) = -z3 - z3^2 = 1 because z3^2 + z3 + 1 = 0.
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic one_plus = Cyclotomic(Rational(1)) + z3;
  CHECK(one_plus.inverse() == -z3);
  CHECK(one_plus.inverse() == Cyclotomic::from_coords(3, {Rational(0), Rational(-1)}));
  CHECK((one_plus * one_plus.inverse()).rational_value() == 1);

  // z6 + z6^-1 = 2 cos(pi/3) = 1.
  Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
  Cyclotomic s = z6 + z6.inverse();
  CHECK(s.is_rational());
  CHECK(s.rational_value() == 1);

  CHECK_THROWS_AS(Cyclotomic().inverse(), MathError);
}

TEST_CASE("cyclotomic lift compatibility") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic x = Cyclotomic(Rational(1)) + Rational(2) * z3;
  CHECK(x.lifted_to(12) == x);
  CHECK(x.lifted_to(12).lifted_to(36) == x);
  // Mixed-order arithmetic lands at the lcm: z4 * z3 = z12^7.
  Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4 * z3 == Cyclotomic::root_of_unity(12, 7));
}

TEST_CASE("cyclotomic galois and conjugation") {
  Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  CHECK(z5.conj() == z5.inverse());
  CHECK(z5.galois(2) == z5 * z5);
  // Conjugation fixes the rationals.
  CHECK(Cyclotomic(make_rational(7, 3)).conj() == Cyclotomic(make_rational(7, 3)));
}

TEST_CASE("cyclotomic random inverse property") {
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> coeff(-4, 4);
  int tested = 0;
  while (tested < 50) {
    std::vector<Rational> coords(4);  // phi(12) = 4
    for (auto& c : coords) c = Rational(coeff(rng));
    Cyclotomic x = Cyclotomic::from_coords(12, coords);
    if (x.is_zero()) continue;
    CHECK((x * x.inverse()).rational_value() == 1);
    ++tested;
  }
}

TEST_CASE("laurent evaluation oracles") {
  HalfLaurent p = HalfLaurent::v_pow(1) + HalfLaurent::v_pow(-1);
  CHECK(p.eval_at_v(Rational(1)) == 2);
  CHECK(p.eval_at_v(Cyclotomic::root_of_unity(4, 1)).is_zero());
  CHECK(HalfLaurent::q().eval_at_v(Rational(2)) == 4);
  CHECK_THROWS_AS(p.eval_at_v(Rational(0)), MathError);
}

TEST_CASE("laurent parse and canonical text") {
  CHECK(HalfLaurent::parse("q^-1/2 + q^1/2").str() == "q^-1/2 + q^1/2");
  CHECK(HalfLaurent::parse("1 + 2*q + q^2").str() == "1 + 2*q + q^2");
  CHECK(HalfLaurent::parse("q^2 + 2q + 1") == HalfLaurent::parse("1+2*q+q^2"));
  CHECK(HalfLaurent::parse("-q^3/2 + 1/2").str() == "1/2 - q^3/2");
  CHECK(HalfLaurent::parse("0").is_zero());
  CHECK(HalfLaurent().str() == "0");
  CHECK(HalfLaurent::parse("v^2") == HalfLaurent::q());
  CHECK(HalfLaurent::parse("3") == HalfLaurent(Rational(3)));
  CHECK_THROWS_AS(HalfLaurent::parse("q^1/3"), MathError);
  CHECK_THROWS_AS(HalfLaurent::parse("q +"), MathError);
  CHECK_THROWS_AS(HalfLaurent::parse(""), MathError);
}

TEST_CASE("poly_divides_power oracles") {
  HalfLaurent one_plus_q = HalfLaurent(Rational(1)) + HalfLaurent::q();
  CHECK(poly_divides_power(one_plus_q, one_plus_q, 16) == 1);
  CHECK(poly_divides_power(one_plus_q * one_plus_q, one_plus_q, 16) == 2);
  HalfLaurent cyclo3 = HalfLaurent(Rational(1)) + HalfLaurent::q() + HalfLaurent::q() * HalfLaurent::q();
  CHECK(!poly_divides_power(cyclo3, one_plus_q, 16).has_value());
  // Units divide everything at k = 0, and Laurent monomials are units.
  CHECK(poly_divides_power(HalfLaurent::q(), one_plus_q, 16) == 0);
  CHECK(poly_divides_power(HalfLaurent(Rational(5)), one_plus_q, 16) == 0);
  CHECK(!poly_divides_power(one_plus_q, HalfLaurent(), 4).has_value());
  CHECK_THROWS_AS(poly_divides_power(HalfLaurent(), one_plus_q, 4), MathError);
}

TEST_CASE("laurent ring axioms and eval homomorphism") {
  std::mt19937 rng(42);
  Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  for (int trial = 0; trial < 40; ++trial) {
    HalfLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a.eval_at_v(z5) * b.eval_at_v(z5) == (a * b).eval_at_v(z5));
    CHECK(a.eval_at_v(make_rational(3, 2)) * b.eval_at_v(make_rational(3, 2)) ==
          (a * b).eval_at_v(make_rational(3, 2)));
  }
}

TEST_CASE("laurent pow and unit structure") {
  HalfLaurent v = HalfLaurent::v();
  CHECK(v.pow(2) == HalfLaurent::q());
  HalfLaurent p = HalfLaurent(Rational(1)) + v;
  CHECK(p.pow(2) == HalfLaurent(Rational(1)) + Rational(2) * v + HalfLaurent::q());
  CHECK(p.pow(0) == HalfLaurent(Rational(1)));
  CHECK(HalfLaurent::monomial(Rational(1), -3, 2).str() == "q^-3/2");
  CHECK(HalfLaurent::monomial(make_rational(1, 2), 1, 1).str() == "1/2*q");
}

TEST_CASE("torus character basics") {
  TorusChar z = TorusChar::var_pow(1, 0, 1);
  TorusChar zi = TorusChar::var_pow(1, 0, -1);
  TorusChar s = z + zi;
  CHECK(s * s == z * z + TorusChar(1, Integer(2)) + zi * zi);
  CHECK(s.is_hyperoctahedral_symmetric());
  CHECK(!z.is_hyperoctahedral_symmetric());
  CHECK(s.pow(3) == s * s * s);
  CHECK((s - s).is_zero());
}

TEST_CASE("torus character spin weights") {
  // Half-spin characters in two variables: even/odd numbers of minus signs.
  TorusChar dplus = TorusChar::monomial(2, Integer(1), {1, 1}) +
                    TorusChar::monomial(2, Integer(1), {-1, -1});
  TorusChar dminus = TorusChar::monomial(2, Integer(1), {1, -1}) +
                     TorusChar::monomial(2, Integer(1), {-1, 1});
  TorusChar e1 = TorusChar::var_pow(2, 0, 1) + TorusChar::var_pow(2, 0, -1) +
                 TorusChar::var_pow(2, 1, 1) + TorusChar::var_pow(2, 1, -1);
  CHECK(dplus * dminus == e1);
  CHECK(!dplus.has_integral_exponents());
  CHECK(e1.has_integral_exponents());
  CHECK(e1.total_degree_parity_is(1));
  CHECK((dplus * dminus).total_degree_parity_is(1));
  CHECK((e1 * e1).total_degree_parity_is(0));
  CHECK_THROWS_AS(dplus.total_degree_parity_is(0), MathError);
}

TEST_CASE("torus character evaluation") {
  TorusChar s = TorusChar::var_pow(1, 0, 1) + TorusChar::var_pow(1, 0, -1);
  // z + z^-1 at z = i vanishes; square roots parameterize the point, w = z8.
  Cyclotomic z8 = Cyclotomic::root_of_unity(8, 1);
  CHECK(s.eval_sqrt(std::vector<Cyclotomic>{z8}).is_zero());
  CHECK(s.eval_sqrt(std::vector<Rational>{Rational(2)}) == make_rational(17, 4));
  // Spin weight z^{1/2} evaluates through the square root directly.
  TorusChar half = TorusChar::monomial(1, Integer(1), {1});
  CHECK(half.eval_sqrt(std::vector<Rational>{Rational(3)}) == 3);
}

TEST_CASE("torus character exact division") {
  TorusChar z = TorusChar::var_pow(1, 0, 1);
  TorusChar two = (z + z) + TorusChar(1, Integer(2));
  TorusChar half = two.divide_exact(Integer(2));
  CHECK(half == z + TorusChar(1, Integer(1)));
  CHECK_THROWS_AS((z + TorusChar(1, Integer(1))).divide_exact(Integer(2)), MathError);
}

TEST_CASE("torus character ring axioms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    TorusChar a = random_torus(rng, 2), b = random_torus(rng, 2), c = random_torus(rng, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("torus character text form") {
  TorusChar t = TorusChar::var_pow(2, 0, 1) * TorusChar::var_pow(2, 1, -2) * Integer(3) -
                TorusChar::monomial(2, Integer(1), {1, 0});
  CHECK(t.str() == "-z1^1/2 + 3*z1*z2^-2");
}
