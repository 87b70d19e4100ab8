#include "jrigid/group_action.hpp"

#include <algorithm>
#include <deque>

namespace jrigid {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

}  // namespace

GAction GAction::from_perms(FinGroup g, std::vector<std::vector<int>> perms) {
  require(static_cast<int>(perms.size()) == g.order(), "one permutation per group element");
  require(!perms.empty() && !perms[0].empty(), "action needs at least one point");
  int n = static_cast<int>(perms[0].size());
  for (const auto& p : perms) require(is_permutation(p, n), "action value is not a permutation");
  for (int y = 0; y < n; ++y) require(perms[0][static_cast<size_t>(y)] == y, "identity must act trivially");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int ab = g.mult(a, b);
      for (int y = 0; y < n; ++y)
        require(perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(y)])] ==
                    perms[static_cast<size_t>(ab)][static_cast<size_t>(y)],
                "permutations do not define a left action");
    }
  return GAction(std::move(g), std::move(perms), n);
}

GAction GAction::from_generator_images(const FinGroup& g,
                                       const std::vector<std::vector<int>>& images) {
  const std::vector<int>& gens = g.generators();
  require(images.size() == gens.size(), "one image permutation per generator");
  int n = images.empty() ? 1 : static_cast<int>(images[0].size());
  std::vector<std::vector<int>> perms(static_cast<size_t>(g.order()));
  std::vector<bool> known(static_cast<size_t>(g.order()), false);
  perms[0].resize(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) perms[0][static_cast<size_t>(y)] = y;
  known[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < gens.size(); ++i) {
      int b = g.mult(a, gens[static_cast<size_t>(i)]);
      if (known[static_cast<size_t>(b)]) continue;
      require(is_permutation(images[i], n), "generator image is not a permutation");
      std::vector<int> p(static_cast<size_t>(n));
      for (int y = 0; y < n; ++y)
        p[static_cast<size_t>(y)] = perms[static_cast<size_t>(a)][static_cast<size_t>(images[i][static_cast<size_t>(y)])];
      perms[static_cast<size_t>(b)] = std::move(p);
      known[static_cast<size_t>(b)] = true;
      queue.push_back(b);
    }
  }
  for (bool k : known) require(k, "generators do not reach the whole group");
  return from_perms(g, std::move(perms));
}

GAction GAction::regular(const FinGroup& g) {
  std::vector<std::vector<int>> perms(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    perms[static_cast<size_t>(a)].resize(static_cast<size_t>(g.order()));
    for (int y = 0; y < g.order(); ++y) perms[static_cast<size_t>(a)][static_cast<size_t>(y)] = g.mult(a, y);
  }
  return from_perms(g, std::move(perms));
}

GAction GAction::trivial(const FinGroup& g, int n_points) {
  require(n_points >= 1, "action needs at least one point");
  std::vector<int> id(static_cast<size_t>(n_points));
  for (int y = 0; y < n_points; ++y) id[static_cast<size_t>(y)] = y;
  std::vector<std::vector<int>> perms(static_cast<size_t>(g.order()), id);
  return from_perms(g, std::move(perms));
}

GAction GAction::coset_action(const FinGroup& g, const std::vector<int>& subgroup_elements) {
  std::vector<int> sub = subgroup_elements;
  std::sort(sub.begin(), sub.end());
  require(!sub.empty() && sub[0] == 0, "subgroup must contain the identity");
  for (int a : sub)
    for (int b : sub)
      require(std::binary_search(sub.begin(), sub.end(), g.mult(a, b)), "subset is not a subgroup");
  std::vector<int> coset_of(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int s : sub) coset_of[static_cast<size_t>(g.mult(x, s))] = c;
  }
  int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> perms(static_cast<size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    perms[static_cast<size_t>(a)].resize(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y)
      perms[static_cast<size_t>(a)][static_cast<size_t>(y)] = coset_of[static_cast<size_t>(g.mult(a, reps[static_cast<size_t>(y)]))];
  }
  return from_perms(g, std::move(perms));
}

GAction GAction::natural_s3() {
  FinGroup s3 = FinGroup::s3();
  // Elements are the permutations of {0,1,2} in lexicographic one-line order;
  // the generators are element 1 = (12) and element 3 = the 3-cycle 0->1->2.
  std::vector<std::vector<int>> images;
  images.push_back({0, 2, 1});
  images.push_back({1, 2, 0});
  return from_generator_images(s3, images);
}

GAction GAction::two_point_s3() {
  FinGroup s3 = FinGroup::s3();
  std::vector<std::vector<int>> perms(6);
  for (int gidx = 0; gidx < 6; ++gidx)
    perms[static_cast<size_t>(gidx)] = s3.element_order(gidx) == 2 ? std::vector<int>{1, 0}
                                                                   : std::vector<int>{0, 1};
  return from_perms(s3, std::move(perms));
}

GAction GAction::point_plus_swap_s3() {
  FinGroup s3 = FinGroup::s3();
  std::vector<std::vector<int>> perms(6);
  for (int gidx = 0; gidx < 6; ++gidx)
    perms[static_cast<size_t>(gidx)] = s3.element_order(gidx) == 2 ? std::vector<int>{1, 0, 2}
                                                                   : std::vector<int>{0, 1, 2};
  return from_perms(s3, std::move(perms));
}

bool GAction::is_transitive() const { return static_cast<int>(orbit_of(0).size()) == n_points_; }

bool GAction::image_is_abelian() const {
  for (int a = 0; a < group_.order(); ++a)
    for (int b = a + 1; b < group_.order(); ++b)
      for (int y = 0; y < n_points_; ++y)
        if (apply(a, apply(b, y)) != apply(b, apply(a, y))) return false;
  return true;
}

std::vector<std::vector<int>> GAction::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(n_points_), false);
  for (int y = 0; y < n_points_; ++y) {
    if (seen[static_cast<size_t>(y)]) continue;
    std::vector<int> orb = orbit_of(y);
    for (int z : orb) seen[static_cast<size_t>(z)] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<int> GAction::orbit_of(int y) const {
  std::vector<bool> in(static_cast<size_t>(n_points_), false);
  in[static_cast<size_t>(y)] = true;
  for (int g = 0; g < group_.order(); ++g) in[static_cast<size_t>(apply(g, y))] = true;
  std::vector<int> out;
  for (int z = 0; z < n_points_; ++z)
    if (in[static_cast<size_t>(z)]) out.push_back(z);
  return out;
}

std::vector<int> GAction::stabilizer(int y) const {
  std::vector<int> out;
  for (int g = 0; g < group_.order(); ++g)
    if (apply(g, y) == y) out.push_back(g);
  return out;
}

std::vector<int> GAction::pair_stabilizer(int y1, int y2) const {
  std::vector<int> out;
  for (int g = 0; g < group_.order(); ++g)
    if (apply(g, y1) == y1 && apply(g, y2) == y2) out.push_back(g);
  return out;
}

std::vector<int> GAction::fixed_points(int g) const {
  std::vector<int> out;
  for (int y = 0; y < n_points_; ++y)
    if (apply(g, y) == y) out.push_back(y);
  return out;
}

std::vector<int> GAction::kernel_elements() const {
  std::vector<int> out;
  for (int g = 0; g < group_.order(); ++g)
    if (static_cast<int>(fixed_points(g).size()) == n_points_) out.push_back(g);
  return out;
}

int GAction::transporter(int from, int to) const {
  for (int g = 0; g < group_.order(); ++g)
    if (apply(g, from) == to) return g;
  throw MathError("points lie in different orbits");
}

std::vector<long> GAction::permutation_character() const {
  std::vector<long> out;
  for (const auto& cl : group_.conjugacy_classes())
    out.push_back(static_cast<long>(fixed_points(cl[0]).size()));
  return out;
}

std::vector<GAction> all_transitive_actions(const FinGroup& g) {
  std::vector<GAction> out;
  for (const auto& sub : g.all_subgroups()) out.push_back(GAction::coset_action(g, sub));
  return out;
}

std::vector<FinGroup> abelian_groups_up_to_8() {
  std::vector<FinGroup> out;
  out.push_back(FinGroup::trivial());
  out.push_back(FinGroup::cyclic(2));
  out.push_back(FinGroup::cyclic(3));
  out.push_back(FinGroup::cyclic(4));
  out.push_back(FinGroup::elementary_abelian_2(2));
  out.push_back(FinGroup::cyclic(5));
  out.push_back(FinGroup::cyclic(6));
  out.push_back(FinGroup::cyclic(7));
  out.push_back(FinGroup::cyclic(8));
  out.push_back(FinGroup::direct_product(FinGroup::cyclic(4), FinGroup::cyclic(2)));
  out.push_back(FinGroup::elementary_abelian_2(3));
  return out;
}

}  // namespace jrigid
