#include "jrigid/idempotents.hpp"

#include <algorithm>
#include <map>

namespace jrigid {

namespace {

Cyclotomic rat(long num, long den) { return Cyclotomic(make_rational(num, den)); }

// Coefficient-weighted sum of structure-sheaf classes over the orbits of
// pairs (base, gamma base), weights w(gamma); gammas in one coset contribute
// to the same orbit.
KClass weighted_orbit_sum(const std::shared_ptr<const PairOrbits>& orbits, int base,
                          const std::vector<Cyclotomic>& weight) {
  const GAction& act = orbits->action();
  const FinGroup& g = act.group();
  std::map<int, Cyclotomic> per_orbit;
  for (int gamma = 0; gamma < g.order(); ++gamma)
    per_orbit[orbits->orbit_of(base, act.apply(gamma, base))] += weight[static_cast<size_t>(gamma)];
  KClass out = KClass::zero(orbits);
  for (const auto& [k, c] : per_orbit) {
    if (c.is_zero()) continue;
    out += c * KClass::orbit_class(orbits, k, orbits->orbit(k).table->index_of_trivial());
  }
  return out;
}

}  // namespace

IdempotentFamily abelian_idempotents(const std::shared_ptr<const PairOrbits>& orbits,
                                     int base_point) {
  const GAction& act = orbits->action();
  require(act.is_transitive(), "action must be transitive");
  require(act.image_is_abelian(), "action image must be abelian");
  const FinGroup& g = act.group();
  // With an abelian transitive image the base stabilizer equals the kernel,
  // so it is normal and the occurring characters are those of the quotient.
  Quotient q = quotient_by_normal(g, act.stabilizer(base_point));
  std::shared_ptr<const CharacterTable> qt = character_table(q.group);
  IdempotentFamily fam;
  for (int c = 0; c < qt->n_chars(); ++c) {
    std::vector<Cyclotomic> weight(static_cast<size_t>(g.order()));
    for (int gamma = 0; gamma < g.order(); ++gamma)
      weight[static_cast<size_t>(gamma)] =
          rat(1, g.order()) * qt->value(c, q.proj[static_cast<size_t>(g.inverse(gamma))]);
    fam.members.push_back(weighted_orbit_sum(orbits, base_point, weight));
    fam.labels.push_back(c == qt->index_of_trivial() ? "triv" : "rho" + std::to_string(c));
  }
  return fam;
}

IdempotentFamily s3_idempotents(const std::shared_ptr<const PairOrbits>& orbits) {
  const GAction& act = orbits->action();
  const FinGroup& g = act.group();
  require(g.order() == 6 && !g.is_abelian(), "expected the order-6 nonabelian group");
  int n = act.n_points();
  IdempotentFamily fam;

  if (act.is_transitive()) {
    if (n == 1) {
      fam.members.push_back(KClass::diagonal(orbits));
      fam.labels.push_back("triv");
      return fam;
    }
    if (n == 2) return abelian_idempotents(orbits, 0);
    if (n == 3) {
      // Diagonal orbit with its order-2 pair stabilizer, one off-diagonal
      // orbit with trivial stabilizer.
      require(orbits->n_orbits() == 2, "unexpected orbit structure on pairs");
      int kd = orbits->orbit_of(0, 0), ko = orbits->orbit_of(0, 1);
      const PairOrbit& od = orbits->orbit(kd);
      require(od.table->n_chars() == 2, "diagonal pair stabilizer should have order 2");
      int tv = od.table->index_of_trivial();
      KClass dp = KClass::orbit_class(orbits, kd, tv);
      KClass dm = KClass::orbit_class(orbits, kd, 1 - tv);
      KClass t = KClass::orbit_class(orbits, ko, 0);
      fam.members.push_back(rat(1, 6) * (dp + dm + Cyclotomic(2) * t));
      fam.members.push_back(rat(1, 2) * (dp - dm));
      fam.members.push_back(rat(1, 3) * (dp + dm - t));
      fam.labels = {"triv", "sgn", "std"};
      return fam;
    }
    if (n == 6) {
      require(act.stabilizer(0) == std::vector<int>{0}, "six-point case must be regular");
      // K is the group algebra: the orbit of (y0, sigma y0) multiplies like
      // sigma.  Young symmetrizers give the four orthogonal idempotents.
      auto cls = [&](int sigma) {
        return KClass::orbit_class(orbits, orbits->orbit_of(0, act.apply(sigma, 0)), 0);
      };
      KClass t_triv = KClass::zero(orbits), t_sgn = KClass::zero(orbits);
      std::vector<std::vector<long>> homs = homs_to_cyclic(g, 2);
      require(homs.size() == 2, "order-6 nonabelian group has two maps to Z/2");
      const std::vector<long>& sgn = homs[0] == std::vector<long>(6, 0) ? homs[1] : homs[0];
      for (int sigma = 0; sigma < 6; ++sigma) {
        t_triv += rat(1, 6) * cls(sigma);
        t_sgn += rat(sgn[static_cast<size_t>(sigma)] == 0 ? 1 : -1, 6) * cls(sigma);
      }
      std::vector<int> invs;
      for (int sigma = 1; sigma < 6; ++sigma)
        if (g.element_order(sigma) == 2) invs.push_back(sigma);
      require(invs.size() == 3, "expected three transpositions");
      int u = invs[0], w = invs[1];
      KClass t_std = rat(1, 3) * (cls(0) + cls(u) - cls(w) - cls(g.mult(u, w)));
      KClass t_std2 = KClass::diagonal(orbits) - t_triv - t_sgn - t_std;
      fam.members = {t_triv, t_sgn, t_std, t_std2};
      fam.labels = {"triv", "sgn", "std", "std'"};
      return fam;
    }
    throw MathError("unclassified case");
  }

  if (n == 3) {
    std::vector<std::vector<int>> obs = act.orbits();
    if (obs.size() == 3) {
      // Three fixed points: the diagonal classes split the identity.
      for (int i = 0; i < 3; ++i) {
        int k = orbits->orbit_of(i, i);
        fam.members.push_back(
            KClass::orbit_class(orbits, k, orbits->orbit(k).table->index_of_trivial()));
        fam.labels.push_back("delta" + std::to_string(i));
      }
      return fam;
    }
    if (obs.size() == 2) {
      // A fixed point and a two-point orbit through the sign map.
      const std::vector<int>& two = obs[0].size() == 2 ? obs[0] : obs[1];
      const std::vector<int>& one = obs[0].size() == 1 ? obs[0] : obs[1];
      require(two.size() == 2 && one.size() == 1, "unexpected orbit sizes");
      int kd = orbits->orbit_of(two[0], two[0]);
      int ko = orbits->orbit_of(two[0], two[1]);
      int kp = orbits->orbit_of(one[0], one[0]);
      KClass d2 =
          KClass::orbit_class(orbits, kd, orbits->orbit(kd).table->index_of_trivial());
      KClass o =
          KClass::orbit_class(orbits, ko, orbits->orbit(ko).table->index_of_trivial());
      KClass dp =
          KClass::orbit_class(orbits, kp, orbits->orbit(kp).table->index_of_trivial());
      fam.members = {rat(1, 2) * (d2 + o), rat(1, 2) * (d2 - o), dp};
      fam.labels = {"orbit-triv", "orbit-sgn", "point"};
      return fam;
    }
  }
  throw MathError("unclassified case");
}

ModuleDecomposition build_module(const IdempotentFamily& family, int s) {
  require(!family.members.empty(), "empty idempotent family");
  const std::shared_ptr<const PairOrbits>& po = family.members[0].orbits_ptr();
  const GAction& act = po->action();
  const FinGroup& g = act.group();
  std::vector<int> points = act.fixed_points(s);
  require(!points.empty(), "empty fixed set");
  int m = static_cast<int>(points.size());
  auto pos_of = [&](int y) {
    return static_cast<int>(std::lower_bound(points.begin(), points.end(), y) - points.begin());
  };

  // Image of the centralizer of s on the fixed points.
  std::vector<std::vector<int>> perms;
  for (int z : g.centralizer_elements(s)) {
    std::vector<int> p(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = pos_of(act.apply(z, points[static_cast<size_t>(i)]));
    perms.push_back(std::move(p));
  }
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  int m1 = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(perms.begin(), perms.end(), p);
    require(it != perms.end() && *it == p, "image is not closed under composition");
    return static_cast<int>(it - perms.begin());
  };
  std::vector<int> table(static_cast<size_t>(m1) * m1);
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m1; ++b) {
      std::vector<int> comp(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i)
        comp[static_cast<size_t>(i)] =
            perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
      table[static_cast<size_t>(a) * m1 + b] = index_of(comp);
    }
  GAction image = GAction::from_perms(FinGroup::from_table(table, m1, "image"), perms);
  std::shared_ptr<const CharacterTable> t1 = character_table(image.group());
  std::vector<long> mult = decompose_permutation_character(image);

  std::vector<SpecMatrix> specs;
  for (const KClass& f : family.members) specs.push_back(specialize_at(f, s));

  ModuleDecomposition out{s, points, image, t1, {}};
  for (int i = 0; i < t1->n_chars(); ++i) {
    if (mult[static_cast<size_t>(i)] == 0) continue;
    long deg = t1->degree(i);
    // Isotypic projector (deg/|G1|) sum_z conj(chi(z)) T_z.
    linalg::Mat<Cyclotomic> proj(m, m);
    for (int z = 0; z < m1; ++z) {
      Cyclotomic w = rat(deg, m1) * t1->value(i, z).conj();
      for (int c = 0; c < m; ++c) proj.at(image.apply(z, c), c) += w;
    }
    ModuleLine line;
    line.irr = i;
    line.multiplicity = mult[static_cast<size_t>(i)];
    for (const SpecMatrix& sm : specs) {
      // The specialization commutes with the image, so on the isotypic part
      // it is id x (map of the multiplicity space); ranks divide accordingly.
      int r = linalg::rank(proj * sm.mat * proj);
      require(r % deg == 0, "isotypic rank is not a multiple of the degree");
      line.ranks.push_back(r / deg);
    }
    out.lines.push_back(std::move(line));
  }
  return out;
}

KClass rigid_unique(const std::shared_ptr<const PairOrbits>& orbits, int base_point,
                    int rho_index) {
  const GAction& act = orbits->action();
  const FinGroup& g = act.group();
  IdempotentFamily fam = abelian_idempotents(orbits, base_point);
  require(rho_index >= 0 && rho_index < static_cast<int>(fam.members.size()),
          "character index out of range");
  Quotient q = quotient_by_normal(g, act.stabilizer(base_point));
  std::shared_ptr<const CharacterTable> qt = character_table(q.group);

  // Unknowns: one coefficient per (orbit, irreducible) pair.
  std::vector<int> offset(static_cast<size_t>(orbits->n_orbits()) + 1, 0);
  for (int k = 0; k < orbits->n_orbits(); ++k)
    offset[static_cast<size_t>(k) + 1] = offset[static_cast<size_t>(k)] + orbits->orbit(k).table->n_chars();
  int n_unknowns = offset.back();

  auto mu = [&](int c, int y) {  // mu_c(y) = chi_c(transporter base -> y)
    return qt->value(c, q.proj[static_cast<size_t>(act.transporter(base_point, y))]);
  };

  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<Cyclotomic> rhs;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> points = act.fixed_points(s);
    if (points.empty()) continue;
    int m = static_cast<int>(points.size());
    // Spec matrices of the basis classes at s.
    std::vector<linalg::Mat<Cyclotomic>> basis;
    for (int k = 0; k < orbits->n_orbits(); ++k)
      for (int i = 0; i < orbits->orbit(k).table->n_chars(); ++i)
        basis.push_back(specialize_at(KClass::orbit_class(orbits, k, i), s).mat);
    for (int c = 0; c < qt->n_chars(); ++c)
      for (int xp = 0; xp < m; ++xp) {
        std::vector<Cyclotomic> row(static_cast<size_t>(n_unknowns));
        for (int u = 0; u < n_unknowns; ++u) {
          Cyclotomic acc;
          for (int zp = 0; zp < m; ++zp)
            acc += basis[static_cast<size_t>(u)].at(xp, zp) * mu(c, points[static_cast<size_t>(zp)]);
          row[static_cast<size_t>(u)] = acc;
        }
        rows.push_back(std::move(row));
        rhs.push_back(c == rho_index ? mu(c, points[static_cast<size_t>(xp)]) : Cyclotomic());
      }
  }
  linalg::Mat<Cyclotomic> a(static_cast<int>(rows.size()), n_unknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int u = 0; u < n_unknowns; ++u) a.at(static_cast<int>(r), u) = rows[r][static_cast<size_t>(u)];
  require(linalg::kernel_basis(a).empty(), "trace conditions do not pin the class down");
  std::optional<std::vector<Cyclotomic>> sol = linalg::solve(a, rhs);
  require(sol.has_value(), "inconsistent constraints");

  KClass j = KClass::zero(orbits);
  for (int k = 0; k < orbits->n_orbits(); ++k)
    for (int i = 0; i < orbits->orbit(k).table->n_chars(); ++i) {
      const Cyclotomic& c = (*sol)[static_cast<size_t>(offset[static_cast<size_t>(k)] + i)];
      if (!c.is_zero()) j += c * KClass::orbit_class(orbits, k, i);
    }
  require(j == fam.members[static_cast<size_t>(rho_index)],
          "solved class disagrees with the closed formula");
  return j;
}

}  // namespace jrigid
