#pragma once

#include <vector>

#include "jrigid/cocycle.hpp"
#include "jrigid/group_action.hpp"

namespace jrigid {

// Centrally extended set: a group set carrying, at each point, a Z/N-valued
// 2-cocycle on that point's stabilizer.  Along each orbit the stored cocycles
// must agree with the transport of the base point's cocycle up to coboundary
// (checked on construction).
class CEOrbitData {
 public:
  CEOrbitData(GAction action, long modulus, std::vector<Cocycle2> per_point);
  // One cocycle per orbit, on the stabilizer of the orbit's first point;
  // the rest of the orbit is filled in by transport along the transversal.
  static CEOrbitData from_base_cocycles(GAction action, long modulus,
                                        const std::vector<Cocycle2>& base);

  const GAction& action() const { return act_; }
  long modulus() const { return n_; }
  const Cocycle2& cocycle_at(int y) const { return at_[static_cast<size_t>(y)]; }

 private:
  GAction act_;
  long n_;
  std::vector<Cocycle2> at_;
};

// Restricts the cocycles at y1 and at y2 to the pair stabilizer, forms the
// cocycle of the product with the opposite extension (the difference), and
// exhibits a coboundary witness on the pair stabilizer when one exists.
struct SplitResult {
  bool split = false;
  std::vector<long> witness;  // indexed by the pair-stabilizer subgroup
};
SplitResult opp_product_is_split(const CEOrbitData& ce, int y1, int y2);

}  // namespace jrigid
