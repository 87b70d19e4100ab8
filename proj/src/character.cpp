#include "jrigid/character.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace jrigid {

long CharacterTable::degree(int i) const {
  Cyclotomic d = chars[static_cast<size_t>(i)][0];
  require(d.is_rational(), "character degree must be rational");
  Rational r = d.rational_value();
  require(is_integer(r), "character degree must be an integer");
  return r.get_num().get_si();
}

Cyclotomic CharacterTable::inner(const std::vector<Cyclotomic>& a,
                                 const std::vector<Cyclotomic>& b) const {
  require(a.size() == classes.size() && b.size() == classes.size(),
          "class-function value count mismatch");
  Cyclotomic sum;
  for (size_t c = 0; c < classes.size(); ++c)
    sum += Rational(static_cast<long>(classes[c].size())) * (a[c] * b[c].conj());
  return Rational(1, group.order()) * sum;
}

int CharacterTable::index_of_trivial() const {
  for (int i = 0; i < n_chars(); ++i) {
    bool all_one = true;
    for (const Cyclotomic& v : chars[static_cast<size_t>(i)])
      if (v != Cyclotomic(1)) all_one = false;
    if (all_one) return i;
  }
  throw MathError("table lacks the trivial character");
}

namespace {

long integer_inner(const CharacterTable& t, const std::vector<Cyclotomic>& a,
                   const std::vector<Cyclotomic>& b) {
  Cyclotomic v = t.inner(a, b);
  require(v.is_rational(), "inner product of characters must be rational");
  Rational r = v.rational_value();
  require(is_integer(r), "inner product of characters must be an integer");
  return r.get_num().get_si();
}

void verify_table(const CharacterTable& t) {
  require(t.n_chars() == t.n_classes(), "character count must equal class count");
  long sq = 0;
  for (int i = 0; i < t.n_chars(); ++i) sq += t.degree(i) * t.degree(i);
  require(sq == t.group.order(), "squared degrees must sum to the group order");
  for (int i = 0; i < t.n_chars(); ++i)
    for (int j = i; j < t.n_chars(); ++j)
      require(integer_inner(t, t.chars[static_cast<size_t>(i)], t.chars[static_cast<size_t>(j)]) ==
                  (i == j ? 1 : 0),
              "character rows are not orthonormal");
}

void attach_classes(CharacterTable& t) {
  t.classes = t.group.conjugacy_classes();
  t.class_of.assign(static_cast<size_t>(t.group.order()), -1);
  for (size_t c = 0; c < t.classes.size(); ++c)
    for (int g : t.classes[c]) t.class_of[static_cast<size_t>(g)] = static_cast<int>(c);
}

CharacterTable abelian_table(const FinGroup& g) {
  CharacterTable t{g, {}, {}, {}};
  attach_classes(t);
  require(t.n_classes() == g.order(), "abelian group must have singleton classes");
  long e = g.exponent();
  std::vector<std::vector<long>> homs = homs_to_cyclic(g, e);
  require(static_cast<int>(homs.size()) == g.order(),
          "abelian group must have |G| characters into Z/exponent");
  for (const auto& h : homs) {
    std::vector<Cyclotomic> row(static_cast<size_t>(t.n_classes()));
    for (int c = 0; c < t.n_classes(); ++c)
      row[static_cast<size_t>(c)] = Cyclotomic::root_of_unity(e, h[static_cast<size_t>(t.classes[static_cast<size_t>(c)][0])]);
    t.chars.push_back(std::move(row));
  }
  return t;
}

// Any nonabelian group of order 6 has classes {e}, three order-2 elements,
// two order-3 elements, and the character table of the symmetric group on
// three letters.
CharacterTable order6_table(const FinGroup& g) {
  CharacterTable t{g, {}, {}, {}};
  attach_classes(t);
  require(t.n_classes() == 3, "nonabelian order-6 group must have 3 classes");
  std::vector<Cyclotomic> triv, sgn, std_char;
  for (int c = 0; c < 3; ++c) {
    int o = g.element_order(t.classes[static_cast<size_t>(c)][0]);
    triv.push_back(Cyclotomic(1));
    if (o == 1) {
      sgn.push_back(Cyclotomic(1));
      std_char.push_back(Cyclotomic(2));
    } else if (o == 2) {
      sgn.push_back(Cyclotomic(-1));
      std_char.push_back(Cyclotomic(0));
    } else {
      require(o == 3, "unexpected element order in an order-6 group");
      sgn.push_back(Cyclotomic(1));
      std_char.push_back(Cyclotomic(-1));
    }
  }
  t.chars = {triv, sgn, std_char};
  return t;
}

CharacterTable product_table(const FinGroup& g) {
  std::shared_ptr<const CharacterTable> ta = character_table(g.left_factor());
  std::shared_ptr<const CharacterTable> tb = character_table(g.right_factor());
  CharacterTable t{g, {}, {}, {}};
  attach_classes(t);
  int nb = g.right_factor().order();
  for (int i = 0; i < ta->n_chars(); ++i)
    for (int j = 0; j < tb->n_chars(); ++j) {
      std::vector<Cyclotomic> row(static_cast<size_t>(t.n_classes()));
      for (int c = 0; c < t.n_classes(); ++c) {
        int e = t.classes[static_cast<size_t>(c)][0];
        row[static_cast<size_t>(c)] = ta->value(i, e / nb) * tb->value(j, e % nb);
      }
      t.chars.push_back(std::move(row));
    }
  return t;
}

// Linear characters pulled back from the abelianization, permutation
// characters of coset actions, and products of known characters, with new
// irreducibles peeled off by exact inner products.
CharacterTable greedy_table(const FinGroup& g) {
  CharacterTable t{g, {}, {}, {}};
  attach_classes(t);

  std::vector<std::vector<Cyclotomic>> pool;
  Quotient ab = quotient_by_normal(g, g.commutator_subgroup());
  std::shared_ptr<const CharacterTable> abt = character_table(ab.group);
  for (int i = 0; i < abt->n_chars(); ++i) {
    std::vector<Cyclotomic> row(static_cast<size_t>(t.n_classes()));
    for (int c = 0; c < t.n_classes(); ++c)
      row[static_cast<size_t>(c)] =
          abt->value(i, ab.proj[static_cast<size_t>(t.classes[static_cast<size_t>(c)][0])]);
    pool.push_back(std::move(row));
  }
  std::vector<std::vector<int>> subgroups;
  if (g.order() <= 16) {
    subgroups = g.all_subgroups();
  } else {
    for (int x = 0; x < g.order(); ++x) subgroups.push_back(g.closure({x}));
  }
  for (const auto& sub : subgroups) {
    GAction a = GAction::coset_action(g, sub);
    std::vector<long> pc = a.permutation_character();
    std::vector<Cyclotomic> row(static_cast<size_t>(t.n_classes()));
    for (int c = 0; c < t.n_classes(); ++c) row[static_cast<size_t>(c)] = Cyclotomic(pc[static_cast<size_t>(c)]);
    pool.push_back(std::move(row));
  }

  auto try_peel = [&](const std::vector<Cyclotomic>& phi) {
    std::vector<Cyclotomic> psi = phi;
    for (const auto& chi : t.chars) {
      Cyclotomic m = t.inner(psi, chi);
      for (size_t c = 0; c < psi.size(); ++c) psi[c] -= m * chi[c];
    }
    bool zero = true;
    for (const auto& v : psi)
      if (!v.is_zero()) zero = false;
    if (zero) return false;
    if (integer_inner(t, psi, psi) != 1) return false;
    require(psi[0].is_rational(), "peeled character has nonrational degree");
    if (psi[0].rational_value() <= 0) {
      for (auto& v : psi) v = -v;
    }
    t.chars.push_back(std::move(psi));
    return true;
  };

  auto degrees_done = [&]() {
    long sq = 0;
    for (int i = 0; i < t.n_chars(); ++i) sq += t.degree(i) * t.degree(i);
    require(sq <= g.order(), "squared degrees exceed the group order");
    return sq == g.order();
  };

  size_t next = 0;
  int rounds = 0;
  while (!degrees_done()) {
    bool progress = false;
    for (; next < pool.size(); ++next)
      if (try_peel(pool[next])) progress = true;
    if (degrees_done()) break;
    if (!progress) {
      // Enlarge the pool with pointwise products of what is known so far.
      require(++rounds <= 8, "character table construction failed to converge");
      std::vector<std::vector<Cyclotomic>> known = t.chars;
      size_t before = pool.size();
      for (const auto& x : known)
        for (const auto& y : pool) {
          std::vector<Cyclotomic> prod(x.size());
          for (size_t c = 0; c < x.size(); ++c) prod[c] = x[c] * y[c];
          pool.push_back(std::move(prod));
        }
      for (const auto& x : known)
        for (const auto& y : known) {
          std::vector<Cyclotomic> prod(x.size());
          for (size_t c = 0; c < x.size(); ++c) prod[c] = x[c] * y[c];
          pool.push_back(std::move(prod));
        }
      require(pool.size() > before, "no candidate characters left");
      next = before;
    }
  }
  std::sort(t.chars.begin(), t.chars.end(),
            [](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
              Rational da = a[0].rational_value(), db = b[0].rational_value();
              if (da != db) return da < db;
              for (size_t c = 0; c < a.size(); ++c)
                if (a[c] != b[c]) return a[c].str() < b[c].str();
              return false;
            });
  return t;
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(const FinGroup& g) {
  static std::map<std::vector<int>, std::shared_ptr<const CharacterTable>> memo;
  static std::shared_mutex memo_mutex;
  std::vector<int> key = g.table();
  {
    std::shared_lock<std::shared_mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  CharacterTable t{g, {}, {}, {}};
  if (g.is_abelian()) {
    t = abelian_table(g);
  } else if (g.order() == 6) {
    t = order6_table(g);
  } else if (g.is_product()) {
    t = product_table(g);
  } else {
    t = greedy_table(g);
  }
  verify_table(t);
  auto ptr = std::make_shared<const CharacterTable>(std::move(t));
  std::unique_lock<std::shared_mutex> lock(memo_mutex);
  auto [it, inserted] = memo.emplace(std::move(key), ptr);
  return it->second;
}

std::vector<long> decompose_permutation_character(const GAction& a) {
  std::shared_ptr<const CharacterTable> t = character_table(a.group());
  std::vector<long> pc = a.permutation_character();
  std::vector<Cyclotomic> phi(pc.size());
  for (size_t c = 0; c < pc.size(); ++c) phi[c] = Cyclotomic(pc[c]);
  std::vector<long> mult;
  for (int i = 0; i < t->n_chars(); ++i) {
    long m = integer_inner(*t, phi, t->chars[static_cast<size_t>(i)]);
    require(m >= 0, "permutation character multiplicity must be nonnegative");
    mult.push_back(m);
  }
  return mult;
}

}  // namespace jrigid
