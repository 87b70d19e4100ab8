#include "doctest.h"

#include <random>

#include "jrigid/error.hpp"
#include "jrigid/rep_ring.hpp"

using namespace jrigid;

namespace {

Integer binom(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer out(1);
  for (long j = 0; j < k; ++j) out = out * Integer(n - j) / Integer(j + 1);
  return out;
}

Rational dim_at_one(const TorusChar& chr) {
  std::vector<Rational> ones(static_cast<size_t>(chr.n_vars()), Rational(1));
  return chr.eval_sqrt(ones);
}

TorusChar fund(const std::string& fam, int rank, const std::string& which, int factor = 0) {
  return fundamental_character(parse_ring_spec(fam, rank), parse_selector(which), factor).chr;
}

}  // namespace

TEST_CASE("fundamental characters") {
  SUBCASE("defining representation of a rank-one symplectic group") {
    TorusChar v1 = fund("Sp", 1, "V1");
    CHECK(v1 == TorusChar::var_pow(1, 0, 1) + TorusChar::var_pow(1, 0, -1));
    CHECK(fund("SL", 1, "V(1)") == v1);
  }
  SUBCASE("half-spin characters of Spin4") {
    TorusChar dp = fund("Spin", 2, "delta+");
    CHECK(dp == TorusChar::monomial(2, Integer(1), {1, 1}) +
                    TorusChar::monomial(2, Integer(1), {-1, -1}));
    TorusChar dm = fund("Spin", 2, "delta-");
    CHECK(dm == TorusChar::monomial(2, Integer(1), {1, -1}) +
                    TorusChar::monomial(2, Integer(1), {-1, 1}));
    CHECK(dim_at_one(dp) == Rational(2));
  }
  SUBCASE("pi restricted to the connected double cover") {
    CHECK(fund("Pin", 1, "pi") ==
          TorusChar::monomial(1, Integer(1), {1}) + TorusChar::monomial(1, Integer(1), {-1}));
    CHECK(fund("Spin", 1, "pi") == fund("Spin", 1, "delta+") + fund("Spin", 1, "delta-"));
  }
  SUBCASE("dimensions") {
    for (int n = 1; n <= 4; ++n)
      for (long i = 0; i <= 2 * n; ++i) {
        CAPTURE(n);
        CAPTURE(i);
        CHECK(dim_at_one(fund("Sp", n, "V" + std::to_string(i))) == Rational(binom(2 * n, i)));
        CHECK(dim_at_one(fund("SO_odd", n, "V" + std::to_string(i))) ==
              Rational(binom(2 * n + 1, i)));
      }
    for (int n = 2; n <= 4; ++n) {
      CHECK(dim_at_one(fund("Spin", n, "delta+")) == Rational(Integer(1) << (n - 1)));
      CHECK(dim_at_one(fund("Spin", n, "delta-")) == Rational(Integer(1) << (n - 1)));
    }
  }
  SUBCASE("determinant characters") {
    CHECK(fund("O_even", 2, "det", 0) == TorusChar(2, Integer(1)));
    CHECK(fund("O_even", 2, "det", 1) == TorusChar(1, Integer(-1)));
    CHECK(fund("O_odd", 1, "det", 1) == TorusChar(1, Integer(-1)));
    CHECK(fund("GL", 2, "det") == TorusChar::monomial(2, Integer(1), {2, 2}));
  }
  SUBCASE("reflection-component exterior powers") {
    // Eigenvalues on the second Cartan component include the pair {1, -1}.
    TorusChar v1 = fund("O_even", 2, "V1", 1);
    CHECK(v1 == TorusChar::var_pow(1, 0, 1) + TorusChar::var_pow(1, 0, -1));
    // Odd exterior powers change sign on the -1 component of O_odd.
    CHECK(fund("O_odd", 1, "V1", 1) == -(fund("O_odd", 1, "V1", 0)));
    CHECK(fund("O_odd", 1, "V2", 1) == fund("O_odd", 1, "V2", 0));
  }
  SUBCASE("every character is Weyl-invariant for its factor") {
    for (const char* fam : {"Sp", "SO_odd", "SO_even"})
      for (int n = 1; n <= 3; ++n) {
        RingSpec s = parse_ring_spec(fam, n);
        for (long i = 0; i <= defining_dimension(s); ++i)
          CHECK(weyl_invariant(s, 0, fund(fam, n, "V" + std::to_string(i))));
      }
    RingSpec spin = parse_ring_spec("Spin", 3);
    CHECK(weyl_invariant(spin, 0, fund("Spin", 3, "delta+")));
    // Half-spin characters are swapped by a single sign change, so they are
    // invariant for type D but not type B.
    CHECK(fund("Spin", 3, "delta+").invert_var(0) == fund("Spin", 3, "delta-"));
  }
  SUBCASE("selector parsing and rejections") {
    CHECK(parse_selector("V3").kind == CharSelector::V_I);
    CHECK(parse_selector("V3").index == 3);
    CHECK(parse_selector("V(4)").index == 4);
    CHECK(parse_selector("V(4)").kind == CharSelector::V_K);
    CHECK(selector_str(parse_selector("delta+")) == "delta+");
    CHECK_THROWS(parse_selector("W2"));
    CHECK_THROWS(parse_selector("V"));
    CHECK_THROWS(parse_selector("V(x)"));
    CHECK_THROWS(fund("Sp", 2, "delta+"));
    CHECK_THROWS(fund("Sp", 2, "det"));
    CHECK_THROWS(fund("PGL", 1, "V1"));
    CHECK_THROWS(fund("PGL", 1, "V(3)"));  // odd weight is not a PGL character
    CHECK_THROWS(fund("Sp", 2, "V(2)"));   // rank-one selector only
    CHECK_THROWS(fund("Sp", 1, "V9"));
    CHECK_THROWS(parse_ring_spec("SU", 2));
    CHECK_THROWS(make_ring_spec(RingFamily::SL, 2));
  }
}

TEST_CASE("rank-one decomposition and the odd module") {
  SUBCASE("decomposition by leading-term subtraction") {
    auto d = decompose_sl2(fund("SL", 1, "V(2)"));
    REQUIRE(d.size() == 1);
    CHECK(d[2] == 1);
    TorusChar sq = fund("SL", 1, "V(1)") * fund("SL", 1, "V(1)");
    d = decompose_sl2(sq);
    REQUIRE(d.size() == 2);
    CHECK(d[2] == 1);
    CHECK(d[0] == 1);
    d = decompose_sl2(fund("SL", 1, "V(1)"));
    REQUIRE(d.size() == 1);
    CHECK(d[1] == 1);
    // Virtual characters decompose with integer (possibly negative) weights.
    d = decompose_sl2(TorusChar(1, Integer(1)) - fund("SL", 1, "V(2)"));
    CHECK(d[0] == 1);
    CHECK(d[2] == -1);
    CHECK_THROWS(decompose_sl2(TorusChar::var_pow(1, 0, 1)));  // not symmetric
    CHECK_THROWS(decompose_sl2(fund("Spin", 1, "delta+")));    // not integral
  }
  SUBCASE("odd-module membership") {
    CHECK(in_odd_module(fund("SL", 1, "V(1)")));
    CHECK(in_odd_module(fund("SL", 1, "V(3)")));
    CHECK_FALSE(in_odd_module(fund("SL", 1, "V(2)")));
    TorusChar v3 = TorusChar::var_pow(1, 0, 3) + TorusChar::var_pow(1, 0, 1) +
                   TorusChar::var_pow(1, 0, -1) + TorusChar::var_pow(1, 0, -3);
    CHECK(in_odd_module(v3));  // this string of weights is exactly V(3)
    CHECK(decompose_sl2(v3) == std::map<long, Integer>{{3, Integer(1)}});
    CHECK(in_odd_module(TorusChar(1)));
  }
  SUBCASE("parity of products") {
    std::mt19937_64 rng(2026);
    auto random_char = [&](bool odd) {
      TorusChar out(1);
      for (int t = 0; t < 3; ++t) {
        long k = static_cast<long>(rng() % 4) * 2 + (odd ? 1 : 0);
        long c = static_cast<long>(rng() % 5) - 2;
        out += fundamental_character(parse_ring_spec("SL", 1),
                                     CharSelector{CharSelector::V_K, k})
                   .chr *
               Integer(c);
      }
      return out;
    };
    for (int trial = 0; trial < 25; ++trial) {
      TorusChar a = random_char(true), b = random_char(true), c = random_char(false);
      CHECK(in_odd_module(a * c));          // odd times even is odd
      CHECK_FALSE(in_odd_module(a * b + fund("SL", 1, "V(0)")));  // odd times odd is even
      CHECK(in_odd_module(a + b));
    }
  }
  SUBCASE("odd characters vanish where z squares to minus one") {
    VanishingCertificate cert = odd_vanishing_locus(fund("SL", 1, "V(1)"));
    CHECK(cert.vanishes);
    CHECK(cert.value.is_zero());
    CHECK(odd_vanishing_locus(fund("SL", 1, "V(3)")).vanishes);
    CHECK_THROWS(odd_vanishing_locus(fund("SL", 1, "V(2)")));
    // The even character V(2) instead evaluates to -1 there.
    Cyclotomic i8 = Cyclotomic::root_of_unity(8, 1);
    CHECK(fund("SL", 1, "V(2)").eval_sqrt({i8}) == Cyclotomic(Rational(-1)));
  }
}

TEST_CASE("presentations of the even orthogonal family") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(verify_presentation(parse_ring_spec("SO_even", n)).all_ok());
    CHECK(verify_presentation(parse_ring_spec("O_even", n)).all_ok());
    CHECK(verify_presentation(parse_ring_spec("Pin", n)).all_ok());
  }
  CHECK_THROWS(verify_presentation(parse_ring_spec("O_even", 5)));
  CHECK_THROWS(verify_presentation(parse_ring_spec("Sp", 2)));
  PresentationReport rep = verify_presentation(parse_ring_spec("SO_even", 2));
  CHECK(rep.checks.size() >= 4);
  for (const auto& [name, ok] : rep.checks) {
    CAPTURE(name);
    CHECK(ok);
  }
}
