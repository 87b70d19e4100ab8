#include "doctest.h"

#include "jrigid/classical.hpp"
#include "jrigid/error.hpp"
#include "jrigid/weyl.hpp"

using namespace jrigid;

namespace {

Partition pp(const std::string& s) { return parse_partition(s); }

}  // namespace

TEST_CASE("types and partitions") {
  LieType c3 = parse_lie_type("C", 3);
  CHECK(partition_size(c3) == 6);
  CHECK(partition_size(parse_lie_type("B", 3)) == 7);
  CHECK(partition_size(parse_lie_type("D", 4)) == 8);
  CHECK(partition_size(parse_lie_type("A", 2)) == 3);
  CHECK(lie_rank(c3) == 3);
  CHECK_THROWS(parse_lie_type("E", 8));
  CHECK_THROWS(make_lie_type(Family::D, 1));

  Partition p = pp("1,2,2");  // sorted on parse
  CHECK(p.parts() == std::vector<long>{2, 2, 1});
  CHECK(p.sum() == 5);
  CHECK(p.str() == "2,2,1");
  CHECK(p.dual() == std::vector<long>{3, 2});
  auto wm = pp("3,3,1").with_multiplicities();
  REQUIRE(wm.size() == 2);
  CHECK(wm[0] == std::pair<long, long>{3, 2});
  CHECK(wm[1] == std::pair<long, long>{1, 1});
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({}));
  CHECK_THROWS(Partition({2, 0}));
  CHECK_THROWS(parse_partition("2,,1"));
  CHECK_THROWS(parse_partition(""));
}

TEST_CASE("partition validity by parity") {
  // Even parts of a symplectic partition are unconstrained; odd parts pair up.
  CHECK(validate_partition(parse_lie_type("C", 3), pp("2,2,2")));
  CHECK(validate_partition(parse_lie_type("C", 3), pp("6")));
  CHECK(validate_partition(parse_lie_type("C", 3), pp("3,3")));
  CHECK_FALSE(validate_partition(parse_lie_type("C", 2), pp("3,1")));
  CHECK_FALSE(validate_partition(parse_lie_type("C", 3), pp("5,1")));
  // Orthogonal partitions pair up their even parts.
  CHECK(validate_partition(parse_lie_type("B", 3), pp("3,2,2")));
  CHECK_FALSE(validate_partition(parse_lie_type("B", 3), pp("4,2,1")));
  CHECK_FALSE(validate_partition(parse_lie_type("D", 3), pp("4,2")));
  CHECK(validate_partition(parse_lie_type("D", 3), pp("3,3")));
  // Wrong size fails regardless of parity.
  CHECK_FALSE(validate_partition(parse_lie_type("C", 3), pp("2,2")));
  // Type A has no parity condition.
  CHECK(validate_partition(parse_lie_type("A", 3), pp("3,1")));

  CHECK(valid_partitions(parse_lie_type("C", 3)).size() == 8);
  for (const Partition& q : valid_partitions(parse_lie_type("B", 3)))
    CHECK(validate_partition(parse_lie_type("B", 3), q));
}

TEST_CASE("centralizer descriptors") {
  LieType c3 = parse_lie_type("C", 3);
  SUBCASE("subregular symplectic class has orthogonal centralizer") {
    CentralizerDescriptor z = centralizer(c3, pp("2,2,2"));
    REQUIRE(z.factors.size() == 1);
    CHECK(z.factors[0].kind == "O");
    CHECK(z.factors[0].size == 3);
    CHECK_FALSE(z.det_condition);
    CHECK(z.component_group.order() == 2);
    CHECK(z.reductive_dimension() == 3);
    CHECK_FALSE(z.very_even);
  }
  SUBCASE("identity class centralizer is the whole group") {
    CentralizerDescriptor z = centralizer(c3, pp("1,1,1,1,1,1"));
    REQUIRE(z.factors.size() == 1);
    CHECK(z.factors[0].kind == "Sp");
    CHECK(z.factors[0].size == 6);
    CHECK(z.component_group.order() == 1);
    CHECK(z.reductive_dimension() == 21);
    CHECK(z.reductive_dimension() == centralizer_dimension(c3, pp("1,1,1,1,1,1")));
  }
  SUBCASE("regular symplectic class") {
    CentralizerDescriptor z = centralizer(c3, pp("6"));
    REQUIRE(z.factors.size() == 1);
    CHECK(z.factors[0].kind == "O");
    CHECK(z.factors[0].size == 1);
    CHECK(z.component_group.order() == 2);
  }
  SUBCASE("orthogonal classes carry the joint determinant condition") {
    LieType b3 = parse_lie_type("B", 3);
    CentralizerDescriptor id = centralizer(b3, pp("1,1,1,1,1,1,1"));
    REQUIRE(id.factors.size() == 2);  // SO_7 x Z2 inside the S(...) condition
    CHECK(id.factors[0].kind == "SO");
    CHECK(id.factors[0].size == 7);
    CHECK(id.det_condition);
    CHECK(id.component_group.order() == 1);
    CHECK(id.reductive_dimension() == 21);

    CentralizerDescriptor z = centralizer(b3, pp("3,3,1"));
    CHECK(z.det_condition);
    CHECK(z.component_group.order() == 2);  // S(O_2 x O_1) has two components
    bool has_o2 = false;
    for (const auto& f : z.factors) has_o2 = has_o2 || (f.kind == "O" && f.size == 2);
    CHECK(has_o2);

    CentralizerDescriptor reg = centralizer(b3, pp("7"));
    CHECK(reg.component_group.order() == 1);  // S(Z/2) is trivial
    CHECK(reg.reductive_dimension() == 0);
  }
  SUBCASE("very even partitions are flagged in type D") {
    CHECK(centralizer(parse_lie_type("D", 2), pp("2,2")).very_even);
    CHECK_FALSE(centralizer(parse_lie_type("D", 3), pp("3,3")).very_even);
    CHECK_FALSE(centralizer(c3, pp("2,2,2")).very_even);
  }
  SUBCASE("rejections") {
    CHECK_THROWS(centralizer(parse_lie_type("A", 2), pp("2,1")));
    CHECK_THROWS(centralizer(c3, pp("5,1")));
  }
  SUBCASE("reductive part never exceeds the full centralizer") {
    for (const char* fam : {"B", "C", "D"})
      for (int rank = 2; rank <= 3; ++rank) {
        LieType t = parse_lie_type(fam, rank);
        for (const Partition& u : valid_partitions(t))
          CHECK(centralizer(t, u).reductive_dimension() <= centralizer_dimension(t, u));
      }
  }
}

TEST_CASE("centralizer dimension agrees with the ad-kernel computation") {
  for (const char* fam : {"A", "B", "C", "D"})
    for (int rank = (fam[0] == 'D' ? 2 : 1); rank <= (fam[0] == 'D' ? 4 : 3); ++rank) {
      LieType t = parse_lie_type(fam, rank);
      for (const Partition& u : valid_partitions(t)) {
        CAPTURE(fam);
        CAPTURE(rank);
        CAPTURE(u.str());
        CHECK(centralizer_dimension(t, u) == ad_kernel_dimension(t, u));
      }
    }
}

TEST_CASE("a-values for the symplectic partitions of six") {
  LieType c3 = parse_lie_type("C", 3);
  CHECK(a_value(c3, pp("1,1,1,1,1,1")) == 9);
  CHECK(a_value(c3, pp("2,1,1,1,1")) == 6);
  CHECK(a_value(c3, pp("2,2,1,1")) == 4);
  CHECK(a_value(c3, pp("2,2,2")) == 3);
  CHECK(a_value(c3, pp("4,1,1")) == 2);
  CHECK(a_value(c3, pp("3,3")) == 2);
  CHECK(a_value(c3, pp("4,2")) == 1);
  CHECK(a_value(c3, pp("6")) == 0);
}

TEST_CASE("dominance order reverses the a-value") {
  CHECK(dominates(pp("6"), pp("4,2")));
  CHECK(dominates(pp("4,2"), pp("4,1,1")));
  CHECK(dominates(pp("4,1,1"), pp("2,2,2")));
  CHECK_FALSE(dominates(pp("4,1,1"), pp("3,3")));
  CHECK_FALSE(dominates(pp("3,3"), pp("4,1,1")));
  CHECK(dominates(pp("3,3"), pp("3,3")));
  for (const char* fam : {"B", "C"}) {
    LieType t = parse_lie_type(fam, 3);
    auto all = valid_partitions(t);
    for (const Partition& p : all)
      for (const Partition& q : all)
        if (p != q && dominates(p, q)) CHECK(a_value(t, p) < a_value(t, q));
  }
}

TEST_CASE("Poincare polynomials") {
  SUBCASE("product formula matches the length count") {
    for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
      CAPTURE(name);
      WeylSpec w = parse_weyl(name);
      HalfLaurent p = poincare_polynomial(w);
      CHECK(p == poincare_brute(w));
      CHECK(p.eval_at_v(Rational(1)) == Rational(weyl_order(w)));
    }
  }
  SUBCASE("orders and degrees") {
    CHECK(weyl_order(parse_weyl("A3")) == 24);
    CHECK(weyl_order(parse_weyl("B3")) == 48);
    CHECK(weyl_order(parse_weyl("C3")) == 48);
    CHECK(weyl_order(parse_weyl("D4")) == 192);
    CHECK(weyl_order(parse_weyl("G2")) == 12);
    CHECK(weyl_order(parse_weyl("A1xA1")) == 4);
    CHECK(weyl_degrees(parse_weyl("B3")) == std::vector<long>{2, 4, 6});
    CHECK(weyl_degrees(parse_weyl("D4")) == std::vector<long>{2, 4, 6, 4});
    // Top degree is twice the number of positive roots.
    CHECK(poincare_polynomial(parse_weyl("B3")).max_key() / 2 == 9);
    CHECK(poincare_polynomial(parse_weyl("G2")).max_key() / 2 == 6);
  }
  SUBCASE("coincidences of small groups") {
    CHECK(poincare_polynomial(parse_weyl("B2")) == poincare_polynomial(parse_weyl("C2")));
    CHECK(poincare_polynomial(parse_weyl("D3")) == poincare_polynomial(parse_weyl("A3")));
    CHECK(poincare_polynomial(parse_weyl("D2")) == poincare_polynomial(parse_weyl("A1xA1")));
  }
  SUBCASE("parse rejections") {
    CHECK_THROWS(parse_weyl(""));
    CHECK_THROWS(parse_weyl("H3"));
    CHECK_THROWS(parse_weyl("A1x"));
    CHECK_THROWS(parse_weyl("G3"));
    CHECK_THROWS(parse_weyl("A1yA1"));
  }
}

TEST_CASE("Levi candidates") {
  LieType c3 = parse_lie_type("C", 3);
  SUBCASE("odd multiplicity forces one copy into the tail") {
    auto cands = levi_candidates(c3, pp("2,2,2"));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].gl_blocks == std::vector<long>{2});
    CHECK(cands[0].tail == std::vector<long>{2});
    CHECK(cands[0].tail_group_kind == "SO");
    CHECK(cands[0].tail_group_size == 3);
    CHECK(cands[0].rules_consistent);
  }
  SUBCASE("odd parts of a symplectic class pair into GL blocks") {
    auto cands = levi_candidates(c3, pp("1,1,1,1,1,1"));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].gl_blocks == std::vector<long>{1, 1, 1});
    CHECK(cands[0].tail.empty());
    CHECK(cands[0].tail_group_kind == "SO");
    CHECK(cands[0].tail_group_size == 1);
  }
  SUBCASE("distinct even parts go whole into the tail") {
    auto cands = levi_candidates(c3, pp("4,2"));
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].gl_blocks.empty());
    CHECK(cands[0].tail == std::vector<long>{4, 2});
    CHECK(cands[0].tail_group_size == 7);
  }
  SUBCASE("even multiplicity branches") {
    auto cands = levi_candidates(c3, pp("3,3"));  // odd parts: GL only
    REQUIRE(cands.size() == 1);
    CHECK(cands[0].gl_blocks == std::vector<long>{3});
    CHECK(cands[0].tail.empty());

    auto b = levi_candidates(parse_lie_type("B", 3), pp("3,3,1"));
    REQUIRE(b.size() == 2);  // m''(3) in {0,2}
    for (const auto& cand : b) {
      CHECK(cand.tail_group_kind == "Sp");
      CHECK(cand.rules_consistent);
      long tail_sum = 0;
      for (long a : cand.tail) tail_sum += a;
      CHECK(cand.tail_group_size == tail_sum - 1);
      CHECK(tail_sum % 2 == 1);
    }
  }
  SUBCASE("the literal rules never disagree with the parity rule") {
    for (const char* fam : {"B", "C", "D"})
      for (int rank = 2; rank <= 4; ++rank) {
        LieType t = parse_lie_type(fam, rank);
        for (const Partition& u : valid_partitions(t))
          for (const auto& cand : levi_candidates(t, u)) {
            CHECK(cand.rules_consistent);
            // Bookkeeping: parts are preserved.
            std::map<long, long> recount;
            for (long a : cand.gl_blocks) recount[a] += 2;
            for (long a : cand.tail) recount[a] += 1;
            std::map<long, long> original;
            for (long a : u.parts()) original[a] += 1;
            CHECK(recount == original);
          }
      }
  }
  SUBCASE("rejections") {
    CHECK_THROWS(levi_candidates(parse_lie_type("A", 2), pp("2,1")));
    CHECK_THROWS(levi_candidates(c3, pp("3,2,1")));
  }
}
