#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "jrigid/character.hpp"
#include "jrigid/cocycle.hpp"
#include "jrigid/error.hpp"
#include "jrigid/fin_group.hpp"
#include "jrigid/group_action.hpp"

using namespace jrigid;

namespace {

std::vector<long> sorted_degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (int i = 0; i < t.n_chars(); ++i) d.push_back(t.degree(i));
  std::sort(d.begin(), d.end());
  return d;
}

// Alternating group on 4 points from its even permutations, lex order so the
// identity lands at index 0.
FinGroup a4() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    for (int i = 0; i < n; ++i)
      if (perms[static_cast<size_t>(i)] == q) return i;
    throw MathError("composition left the group");
  };
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> q(4);
      for (int x = 0; x < 4; ++x)
        q[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
      table[static_cast<size_t>(a) * n + b] = index_of(q);
    }
  return FinGroup::from_table(table, n, "A4");
}

Subgroup whole(const FinGroup& g) {
  std::vector<int> all(static_cast<size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<size_t>(i)] = i;
  return subgroup_from(g, all);
}

}  // namespace

TEST_CASE("group construction and parsing") {
  CHECK(FinGroup::trivial().order() == 1);
  CHECK(FinGroup::cyclic(5).order() == 5);
  CHECK(FinGroup::elementary_abelian_2(2).order() == 4);
  CHECK(FinGroup::s3().order() == 6);
  CHECK(FinGroup::parse("Z2xS3").order() == 12);
  CHECK(FinGroup::parse("E8").order() == 8);
  CHECK(FinGroup::parse("1").order() == 1);
  CHECK_THROWS_AS(FinGroup::parse("Q8"), MathError);
  CHECK_THROWS_AS(FinGroup::cyclic(0), MathError);

  FinGroup s3 = FinGroup::s3();
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.exponent() == 6);
  CHECK(s3.element_order(3) == 3);
  CHECK(s3.element_order(1) == 2);
  CHECK(FinGroup::parse("Z12").exponent() == 12);
  CHECK(FinGroup::parse("E8").exponent() == 2);

  // Product indexing is compatible with the factor laws.
  FinGroup p = FinGroup::parse("Z2xZ3");
  CHECK(p.is_product());
  CHECK(p.mult(p.pair_index(1, 2), p.pair_index(1, 1)) == p.pair_index(0, 0));
}

TEST_CASE("conjugacy classes and subgroup machinery") {
  FinGroup s3 = FinGroup::s3();
  auto classes = s3.conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});
  std::multiset<size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});

  CHECK(s3.centralizer_elements(3) == std::vector<int>{0, 3, 4});
  CHECK(s3.commutator_subgroup() == std::vector<int>{0, 3, 4});

  CHECK(FinGroup::parse("Z8").all_subgroups().size() == 4);
  CHECK(FinGroup::parse("E8").all_subgroups().size() == 16);
  CHECK(FinGroup::parse("Z12").all_subgroups().size() == 6);
  CHECK(FinGroup::parse("E4").all_subgroups().size() == 5);
  CHECK(s3.all_subgroups().size() == 6);

  Subgroup a3 = subgroup_from(s3, {0, 3, 4});
  CHECK(a3.group.order() == 3);
  CHECK(a3.group.is_abelian());
  CHECK(a3.index_of_parent(4) == 2);
  CHECK_THROWS_AS(subgroup_from(s3, {0, 1, 3}), MathError);  // not closed

  Quotient q = quotient_by_normal(s3, {0, 3, 4});
  CHECK(q.group.order() == 2);
  CHECK(q.proj[1] == q.proj[2]);
  CHECK(q.proj[0] == 0);
  CHECK_THROWS_AS(quotient_by_normal(s3, {0, 1}), MathError);  // not normal
}

TEST_CASE("homomorphisms to cyclic groups") {
  CHECK(homs_to_cyclic(FinGroup::cyclic(2), 2).size() == 2);
  CHECK(homs_to_cyclic(FinGroup::s3(), 3).size() == 1);
  CHECK(homs_to_cyclic(FinGroup::s3(), 2).size() == 2);
  CHECK(homs_to_cyclic(FinGroup::elementary_abelian_2(2), 2).size() == 4);
  CHECK(homs_to_cyclic(FinGroup::cyclic(4), 2).size() == 2);
  CHECK(homs_to_cyclic(FinGroup::cyclic(6), 3).size() == 3);
  // The sign map lands among the S3 -> Z/2 homomorphisms.
  auto homs = homs_to_cyclic(FinGroup::s3(), 2);
  bool has_sign = false;
  for (const auto& h : homs)
    if (h == std::vector<long>{0, 1, 1, 0, 0, 1}) has_sign = true;
  CHECK(has_sign);
}

TEST_CASE("actions: orbits, stabilizers, transporters") {
  GAction nat = GAction::natural_s3();
  CHECK(nat.is_transitive());
  CHECK(nat.n_points() == 3);
  CHECK(nat.stabilizer(0) == std::vector<int>{0, 1});
  CHECK(nat.pair_stabilizer(1, 2) == std::vector<int>{0});
  CHECK(nat.pair_stabilizer(0, 0) == std::vector<int>{0, 1});
  CHECK(nat.fixed_points(1) == std::vector<int>{0});
  CHECK(nat.permutation_character() == std::vector<long>{3, 1, 0});
  int t = nat.transporter(0, 2);
  CHECK(nat.apply(t, 0) == 2);

  GAction two = GAction::two_point_s3();
  CHECK(two.kernel_elements() == std::vector<int>{0, 3, 4});
  CHECK(two.apply(1, 0) == 1);

  GAction mixed = GAction::point_plus_swap_s3();
  CHECK_FALSE(mixed.is_transitive());
  CHECK(mixed.orbits().size() == 2);
  CHECK_THROWS_AS(mixed.transporter(0, 2), MathError);

  GAction reg = GAction::regular(FinGroup::s3());
  CHECK(reg.is_transitive());
  CHECK(reg.stabilizer(0) == std::vector<int>{0});

  // Orbit-stabilizer across every coset action of every small abelian group.
  for (const FinGroup& g : abelian_groups_up_to_8())
    for (const GAction& act : all_transitive_actions(g)) {
      CHECK(act.is_transitive());
      for (int y = 0; y < act.n_points(); ++y)
        CHECK(static_cast<int>(act.stabilizer(y).size()) * act.n_points() == g.order());
    }

  // A generator image that breaks the group law is rejected.
  CHECK_THROWS_AS(GAction::from_generator_images(FinGroup::cyclic(2), {{1, 2, 0}}), MathError);
}

TEST_CASE("character tables: abelian, S3, products, A4") {
  auto z2 = character_table(FinGroup::cyclic(2));
  CHECK(z2->n_chars() == 2);
  CHECK(z2->value(0, 1) == Cyclotomic(1));
  CHECK(z2->value(1, 1) == Cyclotomic(-1));

  auto z3 = character_table(FinGroup::cyclic(3));
  REQUIRE(z3->n_chars() == 3);
  bool has_omega = false;
  for (int i = 0; i < 3; ++i)
    if (z3->value(i, 1) == Cyclotomic::root_of_unity(3, 1)) has_omega = true;
  CHECK(has_omega);

  auto s3 = character_table(FinGroup::s3());
  CHECK(sorted_degrees(*s3) == std::vector<long>{1, 1, 2});
  CHECK(s3->index_of_trivial() >= 0);

  auto e4 = character_table(FinGroup::elementary_abelian_2(2));
  CHECK(sorted_degrees(*e4) == std::vector<long>{1, 1, 1, 1});

  auto prod = character_table(FinGroup::parse("Z2xS3"));
  CHECK(sorted_degrees(*prod) == std::vector<long>{1, 1, 1, 1, 2, 2});

  FinGroup g = a4();
  auto t = character_table(g);
  CHECK(sorted_degrees(*t) == std::vector<long>{1, 1, 1, 3});
  for (int i = 0; i < t->n_chars(); ++i)
    for (int j = 0; j < t->n_chars(); ++j)
      CHECK(t->inner(t->chars[static_cast<size_t>(i)], t->chars[static_cast<size_t>(j)]) ==
            Cyclotomic(i == j ? 1 : 0));

  // Memoized: same table object on repeated lookup.
  CHECK(character_table(FinGroup::s3()).get() == character_table(FinGroup::s3()).get());
}

TEST_CASE("permutation character decompositions") {
  // Regular Z/2 on two points: trivial + sign.
  GAction swap = GAction::regular(FinGroup::cyclic(2));
  CHECK(decompose_permutation_character(swap) == std::vector<long>{1, 1});

  // Natural S3 on three points: trivial + the 2-dimensional character.
  GAction nat = GAction::natural_s3();
  auto t = character_table(FinGroup::s3());
  auto mult = decompose_permutation_character(nat);
  long total = 0;
  for (int i = 0; i < t->n_chars(); ++i) {
    total += mult[static_cast<size_t>(i)] * t->degree(i);
    if (t->degree(i) == 2) CHECK(mult[static_cast<size_t>(i)] == 1);
  }
  CHECK(total == 3);
  CHECK(mult[static_cast<size_t>(t->index_of_trivial())] == 1);

  // Trivial S3 action on three points: three copies of the trivial character.
  GAction triv = GAction::trivial(FinGroup::s3(), 3);
  auto m2 = decompose_permutation_character(triv);
  for (int i = 0; i < t->n_chars(); ++i)
    CHECK(m2[static_cast<size_t>(i)] == (i == t->index_of_trivial() ? 3 : 0));

  // Natural A4 on four points: trivial + the 3-dimensional character.
  FinGroup g = a4();
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p = {0, 1, 2, 3};
    do {
      int inv = 0;
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
          if (p[i] > p[j]) ++inv;
      if (inv % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  GAction nat4 = GAction::from_perms(g, perms);
  auto t4 = character_table(g);
  auto m4 = decompose_permutation_character(nat4);
  for (int i = 0; i < t4->n_chars(); ++i) {
    long expect = (i == t4->index_of_trivial() || t4->degree(i) == 3) ? 1 : 0;
    CHECK(m4[static_cast<size_t>(i)] == expect);
  }
}

TEST_CASE("cocycles: construction, coboundaries, witnesses") {
  FinGroup z2 = FinGroup::cyclic(2);
  Subgroup d2 = whole(z2);

  CHECK(Cocycle2::zero(d2, 2).is_coboundary());

  // The extension Z/4 of Z/2 by Z/2: c(1,1) = 1 is not a coboundary.
  Cocycle2 c4(d2, 2, {0, 0, 0, 1});
  CHECK_FALSE(c4.is_coboundary());

  // A cocycle plus its negative is a verified coboundary.
  Cocycle2 diff = c4 + c4.negated();
  auto w = diff.coboundary_witness();
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 0);

  // Bilinear k*x*y on Z/3 with modulus 3 is a coboundary: b(x) = -k x^2 / 2
  // works since 2 is invertible mod 3.
  FinGroup z3 = FinGroup::cyclic(3);
  Subgroup d3 = whole(z3);
  Cocycle2 bl = Cocycle2::bilinear(d3, 3, {0, 1, 2}, {0, 2, 4});
  CHECK(bl.is_coboundary());

  // Non-cocycle and non-normalized tables are rejected.
  CHECK_THROWS_AS(Cocycle2(d2, 2, {1, 0, 0, 0}), MathError);
  CHECK_THROWS_AS(Cocycle2::coboundary_of(d2, 2, {1, 0}), MathError);

  // Restriction: a coboundary on S3 stays one on A3.
  FinGroup s3 = FinGroup::s3();
  Subgroup ds3 = whole(s3);
  Cocycle2 cb = Cocycle2::coboundary_of(ds3, 4, {0, 1, 2, 3, 1, 2});
  Subgroup a3 = subgroup_from(s3, {0, 3, 4});
  Cocycle2 r = cb.restricted_to(a3);
  CHECK(r.domain().group.order() == 3);
  CHECK(r.is_coboundary());
  CHECK(r.value_at_parent(3, 4) == cb.value_at_parent(3, 4));
}

TEST_CASE("cocycle transport across a nonabelian twist can leave the split class") {
  // Klein four group inside its order-3 symmetry: pulling the bilinear
  // cocycle x1*y1 back along a |-> ab, b |-> a and adding the original gives
  // a symmetric cocycle whose restriction to the diagonal is the nonzero
  // homomorphism x2, which no mod-2 coboundary matches (every g here squares
  // to the identity, so coboundaries vanish on the diagonal).
  FinGroup v4 = FinGroup::elementary_abelian_2(2);
  Subgroup d = whole(v4);
  Cocycle2 c0 = Cocycle2::bilinear(d, 2, {0, 1, 0, 1}, {0, 1, 0, 1});
  Cocycle2 moved = c0.pulled_back(d, {0, 3, 1, 2});
  Cocycle2 sum = c0 + moved;
  CHECK(sum.value(1, 1) == 0);   // diagonal at a
  CHECK(sum.value(2, 2) == 1);   // diagonal at b
  CHECK(sum.value(3, 3) == 1);   // diagonal at ab
  CHECK_FALSE(sum.is_coboundary());

  // The identity pullback is inert.
  CHECK(c0.pulled_back(d, {0, 1, 2, 3}) == c0);
  // Non-homomorphism pullback maps are rejected.
  CHECK_THROWS_AS(c0.pulled_back(d, {0, 1, 1, 2}), MathError);
}
