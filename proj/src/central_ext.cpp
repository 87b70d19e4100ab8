#include "jrigid/central_ext.hpp"

namespace jrigid {

namespace {

// Cocycle at y obtained from the base cocycle of its orbit: pull back along
// conjugation a -> t^{-1} a t, where t carries the base point to y.
Cocycle2 transported(const GAction& act, const Cocycle2& c0, int y0, int y) {
  const FinGroup& g = act.group();
  int t = act.transporter(y0, y);
  Subgroup stab_y = subgroup_from(g, act.stabilizer(y));
  std::vector<int> to_old(static_cast<size_t>(stab_y.group.order()));
  for (int i = 0; i < stab_y.group.order(); ++i)
    to_old[static_cast<size_t>(i)] =
        g.mult(g.mult(g.inverse(t), stab_y.embed[static_cast<size_t>(i)]), t);
  return c0.pulled_back(stab_y, to_old);
}

}  // namespace

CEOrbitData::CEOrbitData(GAction action, long modulus, std::vector<Cocycle2> per_point)
    : act_(std::move(action)), n_(modulus), at_(std::move(per_point)) {
  require(at_.size() == static_cast<size_t>(act_.n_points()),
          "one cocycle per point required");
  const FinGroup& g = act_.group();
  for (int y = 0; y < act_.n_points(); ++y) {
    const Cocycle2& c = at_[static_cast<size_t>(y)];
    require(c.modulus() == n_, "cocycle modulus mismatch");
    require(c.domain().embed == act_.stabilizer(y),
            "cocycle domain must be the point stabilizer");
    (void)g;
  }
  for (const std::vector<int>& orbit : act_.orbits()) {
    int y0 = orbit[0];
    for (int y : orbit) {
      Cocycle2 expected = transported(act_, at_[static_cast<size_t>(y0)], y0, y);
      require((at_[static_cast<size_t>(y)] + expected.negated()).is_coboundary(),
              "transported cocycles disagree beyond a coboundary along the orbit");
    }
  }
}

CEOrbitData CEOrbitData::from_base_cocycles(GAction action, long modulus,
                                            const std::vector<Cocycle2>& base) {
  std::vector<std::vector<int>> orbits = action.orbits();
  require(base.size() == orbits.size(), "one base cocycle per orbit required");
  std::vector<Cocycle2> per_point;
  for (int y = 0; y < action.n_points(); ++y)
    per_point.push_back(Cocycle2::zero(subgroup_from(action.group(), action.stabilizer(y)), modulus));
  for (size_t k = 0; k < orbits.size(); ++k) {
    int y0 = orbits[k][0];
    require(base[k].modulus() == modulus, "cocycle modulus mismatch");
    require(base[k].domain().embed == action.stabilizer(y0),
            "base cocycle domain must be the base-point stabilizer");
    for (int y : orbits[k])
      per_point[static_cast<size_t>(y)] = transported(action, base[k], y0, y);
  }
  return CEOrbitData(std::move(action), modulus, std::move(per_point));
}

SplitResult opp_product_is_split(const CEOrbitData& ce, int y1, int y2) {
  const GAction& act = ce.action();
  require(act.is_transitive(), "centrally extended set must be transitive");
  Subgroup pair = subgroup_from(act.group(), act.pair_stabilizer(y1, y2));
  Cocycle2 product = ce.cocycle_at(y1).restricted_to(pair) +
                     ce.cocycle_at(y2).restricted_to(pair).negated();
  std::optional<std::vector<long>> w = product.coboundary_witness();
  SplitResult out;
  out.split = w.has_value();
  if (w) out.witness = *w;
  return out;
}

}  // namespace jrigid
