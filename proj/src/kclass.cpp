#include "jrigid/kclass.hpp"

#include <algorithm>

namespace jrigid {

PairOrbits::PairOrbits(GAction action) : act_(std::move(action)) {
  int n = act_.n_points();
  const FinGroup& g = act_.group();
  index_.assign(static_cast<size_t>(n) * n, -1);
  transport_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (index_[static_cast<size_t>(x) * n + y] >= 0) continue;
      int k = n_orbits();
      for (int e = 0; e < g.order(); ++e) {
        size_t pos = static_cast<size_t>(act_.apply(e, x)) * n + act_.apply(e, y);
        if (index_[pos] < 0) {
          index_[pos] = k;
          transport_[pos] = e;
        }
      }
      Subgroup stab = subgroup_from(g, act_.pair_stabilizer(x, y));
      std::shared_ptr<const CharacterTable> table = character_table(stab.group);
      orbits_.push_back(PairOrbit{x, y, std::move(stab), std::move(table)});
    }
}

int PairOrbits::orbit_of(int x, int y) const {
  int n = act_.n_points();
  require(x >= 0 && x < n && y >= 0 && y < n, "pair out of range");
  return index_[static_cast<size_t>(x) * n + y];
}

int PairOrbits::transporter_to(int x, int y) const {
  int n = act_.n_points();
  require(x >= 0 && x < n && y >= 0 && y < n, "pair out of range");
  return transport_[static_cast<size_t>(x) * n + y];
}

std::shared_ptr<const PairOrbits> pair_orbits(const GAction& action) {
  return std::make_shared<PairOrbits>(action);
}

KClass KClass::zero(std::shared_ptr<const PairOrbits> orbits) {
  std::vector<std::vector<Cyclotomic>> coeffs(static_cast<size_t>(orbits->n_orbits()));
  for (int k = 0; k < orbits->n_orbits(); ++k)
    coeffs[static_cast<size_t>(k)].assign(
        static_cast<size_t>(orbits->orbit(k).table->n_chars()), Cyclotomic());
  return KClass(std::move(orbits), std::move(coeffs));
}

KClass KClass::diagonal(std::shared_ptr<const PairOrbits> orbits) {
  KClass d = zero(orbits);
  for (int k = 0; k < d.orb_->n_orbits(); ++k) {
    const PairOrbit& o = d.orb_->orbit(k);
    if (o.base_x == o.base_y)
      d.coeffs_[static_cast<size_t>(k)][static_cast<size_t>(o.table->index_of_trivial())] =
          Cyclotomic(1);
  }
  return d;
}

KClass KClass::orbit_class(std::shared_ptr<const PairOrbits> orbits, int orbit, int irr) {
  require(orbit >= 0 && orbit < orbits->n_orbits(), "orbit index out of range");
  require(irr >= 0 && irr < orbits->orbit(orbit).table->n_chars(),
          "irreducible index out of range");
  KClass c = zero(orbits);
  c.coeffs_[static_cast<size_t>(orbit)][static_cast<size_t>(irr)] = Cyclotomic(1);
  return c;
}

bool KClass::is_zero() const {
  for (const auto& orbit : coeffs_)
    for (const Cyclotomic& c : orbit)
      if (!c.is_zero()) return false;
  return true;
}

KClass KClass::operator+(const KClass& o) const {
  KClass r = *this;
  r += o;
  return r;
}

KClass& KClass::operator+=(const KClass& o) {
  require(orb_->action() == o.orb_->action(), "classes over different actions");
  for (size_t k = 0; k < coeffs_.size(); ++k)
    for (size_t i = 0; i < coeffs_[k].size(); ++i) coeffs_[k][i] += o.coeffs_[k][i];
  return *this;
}

KClass KClass::operator-(const KClass& o) const { return *this + Cyclotomic(-1) * o; }

bool KClass::operator==(const KClass& o) const {
  if (orb_->action() != o.orb_->action()) return false;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    for (size_t i = 0; i < coeffs_[k].size(); ++i)
      if (coeffs_[k][i] != o.coeffs_[k][i]) return false;
  return true;
}

Cyclotomic KClass::value_at(int x, int y, int g) const {
  const GAction& act = orb_->action();
  require(act.apply(g, x) == x && act.apply(g, y) == y,
          "evaluation element must fix both coordinates");
  int k = orb_->orbit_of(x, y);
  int t = orb_->transporter_to(x, y);
  const PairOrbit& o = orb_->orbit(k);
  const FinGroup& gr = act.group();
  int h = gr.mult(gr.mult(gr.inverse(t), g), t);
  int hs = o.stab.index_of_parent(h);
  Cyclotomic v;
  for (size_t i = 0; i < coeffs_[static_cast<size_t>(k)].size(); ++i) {
    const Cyclotomic& c = coeffs_[static_cast<size_t>(k)][i];
    if (c.is_zero()) continue;
    v += c * o.table->value(static_cast<int>(i), hs);
  }
  return v;
}

bool KClass::coefficients_integral_over(const Integer& base) const {
  for (const auto& orbit : coeffs_)
    for (const Cyclotomic& c : orbit)
      if (!c.coords_in_z_inv(base)) return false;
  return true;
}

KClass convolve(const KClass& a, const KClass& b) {
  require(a.orb_->action() == b.orb_->action(), "classes over different actions");
  const GAction& act = a.orb_->action();
  int n = act.n_points();
  KClass r = KClass::zero(a.orb_);
  for (int k = 0; k < a.orb_->n_orbits(); ++k) {
    const PairOrbit& o = a.orb_->orbit(k);
    int m = o.stab.group.order();
    // Value of a*b at the base pair, element by element of the stabilizer.
    std::vector<Cyclotomic> vals(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      int g = o.stab.embed[static_cast<size_t>(i)];
      Cyclotomic sum;
      for (int y = 0; y < n; ++y) {
        if (act.apply(g, y) != y) continue;
        Cyclotomic va = a.value_at(o.base_x, y, g);
        if (va.is_zero()) continue;
        sum += va * b.value_at(y, o.base_y, g);
      }
      vals[static_cast<size_t>(i)] = sum;
    }
    // The sum is a class function on the stabilizer; decompose it in the
    // irreducible basis.
    std::vector<Cyclotomic> per_class(o.table->classes.size());
    for (size_t c = 0; c < o.table->classes.size(); ++c) {
      per_class[c] = vals[static_cast<size_t>(o.table->classes[c][0])];
      for (int e : o.table->classes[c])
        require(vals[static_cast<size_t>(e)] == per_class[c],
                "convolution value is not a class function");
    }
    for (int j = 0; j < o.table->n_chars(); ++j)
      r.coeffs_[static_cast<size_t>(k)][static_cast<size_t>(j)] =
          o.table->inner(per_class, o.table->chars[static_cast<size_t>(j)]);
  }
  return r;
}

KClass operator*(const Cyclotomic& c, const KClass& a) {
  KClass r = a;
  for (auto& orbit : r.coeffs_)
    for (Cyclotomic& v : orbit) v = c * v;
  return r;
}

SpecMatrix specialize_at(const KClass& a, int s) {
  const GAction& act = a.orbits().action();
  SpecMatrix out;
  out.s = s;
  out.points = act.fixed_points(s);
  int m = static_cast<int>(out.points.size());
  out.mat = linalg::Mat<Cyclotomic>(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.mat.at(i, j) =
          a.value_at(out.points[static_cast<size_t>(i)], out.points[static_cast<size_t>(j)], s);
  return out;
}

}  // namespace jrigid
