#pragma once

#include <vector>

#include "jrigid/fin_group.hpp"

namespace jrigid {

// A finite group acting on {0, ..., n_points-1} by a stored permutation per
// element.  Left-action convention: apply(g, apply(h, y)) == apply(mult(g,h), y).
class GAction {
 public:
  static GAction from_perms(FinGroup g, std::vector<std::vector<int>> perms);
  // Completes generator images to a full action and validates the result.
  static GAction from_generator_images(const FinGroup& g,
                                       const std::vector<std::vector<int>>& images);
  static GAction regular(const FinGroup& g);
  static GAction trivial(const FinGroup& g, int n_points);
  // Left multiplication on left cosets of the given subgroup; point 0 is the
  // coset of the identity, whose stabilizer is the subgroup itself.
  static GAction coset_action(const FinGroup& g, const std::vector<int>& subgroup_elements);

  // The classified S3 test actions.
  static GAction natural_s3();         // permutation action on 3 points
  static GAction two_point_s3();       // through the sign quotient on 2 points
  static GAction point_plus_swap_s3(); // swap {0,1} by sign, point 2 fixed

  const FinGroup& group() const { return group_; }
  int n_points() const { return n_points_; }
  int apply(int g, int y) const { return perms_[static_cast<size_t>(g)][static_cast<size_t>(y)]; }
  const std::vector<int>& perm(int g) const { return perms_[static_cast<size_t>(g)]; }

  bool is_transitive() const;
  bool image_is_abelian() const;
  std::vector<std::vector<int>> orbits() const;
  std::vector<int> orbit_of(int y) const;
  std::vector<int> stabilizer(int y) const;                 // sorted group elements
  std::vector<int> pair_stabilizer(int y1, int y2) const;   // sorted group elements
  std::vector<int> fixed_points(int g) const;
  std::vector<int> kernel_elements() const;
  // Some g with apply(g, from) == to; throws MathError when the points lie in
  // different orbits.
  int transporter(int from, int to) const;

  // Values of the permutation character, one per conjugacy class of the group
  // (in conjugacy_classes() order): number of fixed points of a representative.
  std::vector<long> permutation_character() const;

  bool operator==(const GAction& o) const {
    return group_ == o.group_ && perms_ == o.perms_;
  }
  bool operator!=(const GAction& o) const { return !(*this == o); }

 private:
  GAction(FinGroup g, std::vector<std::vector<int>> perms, int n_points)
      : group_(std::move(g)), perms_(std::move(perms)), n_points_(n_points) {}
  FinGroup group_;
  std::vector<std::vector<int>> perms_;
  int n_points_ = 0;
};

// All transitive actions of the group, one per subgroup, as coset actions
// (order <= 16 only, via all_subgroups).
std::vector<GAction> all_transitive_actions(const FinGroup& g);

// The abelian groups of order <= 8, each with a canonical spec tag.
std::vector<FinGroup> abelian_groups_up_to_8();

}  // namespace jrigid
