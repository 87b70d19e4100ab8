#include "jrigid/coinvariants.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "jrigid/error.hpp"

namespace jrigid {

namespace {

// Largest order of a finite-order element of GL_n(Z), n = 1..8.
constexpr long kMaxOrder[9] = {1, 2, 6, 6, 12, 12, 30, 30, 60};

long order_bound(int n) { return n <= 8 ? kMaxOrder[n] : 60L * n; }

// Weight-lattice coset of a character of the double cover: 0 when every
// exponent is integral, 1 when every exponent is half-integral in every
// coordinate, -1 when mixed.  The zero character counts as integral.
int weight_coset(const TorusChar& c) {
  if (c.is_zero()) return 0;
  bool all_even = true;
  bool all_odd = true;
  for (const auto& [key, coeff] : c.terms())
    for (long e : key) {
      if (e % 2 != 0)
        all_even = false;
      else
        all_odd = false;
    }
  if (all_even) return 0;
  if (all_odd) return 1;
  return -1;
}

}  // namespace

LatticeAuto::LatticeAuto(linalg::IMat m) : m_(std::move(m)), order_(0) {
  const int n = m_.rows();
  require(n >= 1 && m_.cols() == n, "lattice automorphism must be square");
  const Integer det = linalg::det_bareiss(m_);
  require(det == 1 || det == -1, "matrix is not invertible over the integers");
  const linalg::IMat one = linalg::IMat::identity(n);
  linalg::IMat p = m_;
  const long bound = order_bound(n);
  for (long k = 1; k <= bound; ++k) {
    if (p == one) {
      order_ = k;
      return;
    }
    p = p * m_;
  }
  throw MathError("matrix does not have finite order (checked up to " +
                  std::to_string(bound) + ")");
}

LatticeAuto parse_lattice_auto(const std::string& text) {
  std::vector<std::vector<long>> rows;
  std::istringstream lines(text);
  std::string row_text;
  while (std::getline(lines, row_text, ';')) {
    std::vector<long> row;
    std::istringstream cells(row_text);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stol(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        require(used == cell.size(), "trailing junk in matrix entry '" + cell + "'");
      } catch (const std::logic_error&) {
        throw MathError("bad matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  require(n >= 1, "empty matrix text");
  linalg::IMat m(n, n);
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(rows[i].size()) == n, "matrix text is not square");
    for (int j = 0; j < n; ++j) m.at(i, j) = Integer(rows[i][j]);
  }
  return LatticeAuto(std::move(m));
}

CoinvariantReport coinvariants(const LatticeAuto& a) {
  const int n = a.rank();
  linalg::IMat one_minus = linalg::IMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) one_minus.at(i, j) -= a.matrix().at(i, j);

  CoinvariantReport r;
  const linalg::SnfResult snf = linalg::smith_normal_form(one_minus);
  for (int i = 0; i < n; ++i) {
    const Integer& d = snf.d.at(i, i);
    if (d == 0)
      ++r.free_rank;
    else if (d > 1)
      r.torsion.push_back(d);
  }
  r.fixed_rank = n - linalg::rank(linalg::to_rational(one_minus));
  require(r.free_rank == r.fixed_rank,
          "coinvariant free rank differs from the fixed-lattice rank");
  return r;
}

std::vector<QuotientComponent> component_quotient(const FinGroup& gamma,
                                                  const std::vector<LatticeAuto>& actions) {
  const int g = gamma.order();
  require(static_cast<int>(actions.size()) == g,
          "need one lattice action per group element");
  const int n = actions[0].rank();
  for (const auto& a : actions)
    require(a.rank() == n, "lattice actions have mixed ranks");
  require(actions[0].matrix() == linalg::IMat::identity(n),
          "the identity element must act trivially");
  for (int x = 0; x < g; ++x)
    for (int y = 0; y < g; ++y)
      require(actions[gamma.mult(x, y)].matrix() ==
                  actions[x].matrix() * actions[y].matrix(),
              "lattice actions do not form a homomorphism");

  std::vector<QuotientComponent> out;
  long covered = 0;
  for (const auto& cls : gamma.conjugacy_classes()) {
    QuotientComponent c;
    c.rep = cls.front();
    c.class_size = static_cast<long>(cls.size());
    covered += c.class_size;
    const CoinvariantReport rep_report = coinvariants(actions[c.rep]);
    c.d = rep_report.free_rank;
    c.torsion = rep_report.torsion;
    // d and H are class functions; recompute for every member.
    for (int h : cls) {
      const CoinvariantReport hr = coinvariants(actions[h]);
      require(hr.free_rank == c.d && hr.torsion == c.torsion,
              "coinvariant data is not constant on a conjugacy class");
    }
    c.centralizer = gamma.centralizer_elements(c.rep);
    require(static_cast<long>(c.centralizer.size()) * c.class_size == g,
            "centralizer size does not complement the class size");
    out.push_back(c);
  }
  require(covered == g, "conjugacy classes do not partition the group");
  return out;
}

bool DecompositionReport::ok() const {
  return members_pure && even_closed && odd_module && odd_squares_even;
}

DecompositionReport rep_decomposition_check(const RingSpec& spec) {
  DecompositionReport r;
  if (spec.family != RingFamily::O_even && spec.family != RingFamily::Pin) {
    // No nontrivial weight-coset grading: a single summand.
    r.n_summands = 1;
    r.even_members = {"1"};
    return r;
  }
  require(spec.rank <= 2, "cover decomposition is implemented for rank <= 2");
  const RingSpec pin = make_ring_spec(RingFamily::Pin, spec.rank);
  r.n_summands = 2;

  std::vector<TorusChar> even, odd;
  const int n = n_torus_vars(pin, 0);
  even.push_back(TorusChar(n, Integer(1)));
  r.even_members.push_back("1");
  for (int i = 1; i <= spec.rank; ++i) {
    const CharSelector sel{CharSelector::V_I, i};
    even.push_back(fundamental_character(pin, sel, 0).chr);
    r.even_members.push_back(selector_str(sel));
  }
  even.push_back(fundamental_character(pin, {CharSelector::DET, 0}, 0).chr);
  r.even_members.push_back("det");
  odd.push_back(fundamental_character(pin, {CharSelector::PI, 0}, 0).chr);
  r.odd_members.push_back("pi");

  for (const auto& c : even)
    if (weight_coset(c) != 0) r.members_pure = false;
  for (const auto& c : odd)
    if (weight_coset(c) != 1) r.members_pure = false;
  for (const auto& x : even)
    for (const auto& y : even)
      if (weight_coset(x * y) != 0) r.even_closed = false;
  for (const auto& x : even)
    for (const auto& y : odd)
      if (!(x * y).is_zero() && weight_coset(x * y) != 1) r.odd_module = false;
  for (const auto& x : odd)
    for (const auto& y : odd)
      if (weight_coset(x * y) != 0) r.odd_squares_even = false;
  return r;
}

std::vector<long> cokernel_orders_naive(const linalg::IMat& a) {
  const int n = a.rows();
  require(n >= 1 && a.cols() == n, "cokernel enumeration needs a square matrix");
  Integer det = linalg::det_bareiss(a);
  require(det != 0, "cokernel enumeration needs a nonsingular matrix");
  if (det < 0) det = -det;
  require(det <= 64, "cokernel enumeration bound exceeded");
  const long k = det.get_si();

  // Subgroup of (Z/k)^n spanned by the columns; k Z^n lies in the image, so
  // the quotient by this subgroup is exactly Z^n / im(a).
  std::vector<std::vector<long>> gens;
  for (int j = 0; j < n; ++j) {
    std::vector<long> col(n);
    for (int i = 0; i < n; ++i) col[i] = ((a.at(i, j).get_si() % k) + k) % k;
    gens.push_back(col);
  }
  std::set<std::vector<long>> span;
  std::vector<std::vector<long>> frontier;
  span.insert(std::vector<long>(n, 0));
  frontier.push_back(std::vector<long>(n, 0));
  while (!frontier.empty()) {
    const std::vector<long> cur = frontier.back();
    frontier.pop_back();
    for (const auto& gvec : gens) {
      std::vector<long> w(n);
      for (int i = 0; i < n; ++i) w[i] = (cur[i] + gvec[i]) % k;
      if (span.insert(w).second) frontier.push_back(w);
    }
  }

  // Walk the grid once, marking a whole coset the first time it is met; the
  // representative's order is the least m with m*v in the span.
  std::set<std::vector<long>> seen;
  std::vector<long> orders;
  std::vector<long> v(n, 0);
  while (true) {
    if (!seen.count(v)) {
      for (const auto& s : span) {
        std::vector<long> w(n);
        for (int i = 0; i < n; ++i) w[i] = (v[i] + s[i]) % k;
        seen.insert(w);
      }
      std::vector<long> cur = v;
      long m = 1;
      while (!span.count(cur)) {
        for (int i = 0; i < n; ++i) cur[i] = (cur[i] + v[i]) % k;
        ++m;
        require(m <= k, "element order exceeds the group size");
      }
      orders.push_back(m);
    }
    int pos = 0;
    while (pos < n && ++v[pos] == k) v[pos++] = 0;
    if (pos == n) break;
  }
  require(static_cast<long>(orders.size()) == k,
          "cokernel size does not match the determinant");
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<long> cokernel_orders_from_divisors(const linalg::IMat& a) {
  require(a.rows() >= 1 && a.cols() == a.rows(),
          "cokernel of a non-square matrix");
  require(linalg::det_bareiss(a) != 0, "cokernel of a singular matrix");
  std::vector<long> ds;
  long total = 1;
  for (const Integer& d : linalg::elementary_divisors(a)) {
    require(d <= 4096, "elementary divisor too large to enumerate");
    ds.push_back(d.get_si());
    total *= ds.back();
    require(total <= 4096, "cokernel too large to enumerate");
  }
  std::vector<long> orders;
  std::vector<long> x(ds.size(), 0);
  while (true) {
    long ord = 1;
    for (std::size_t i = 0; i < ds.size(); ++i)
      ord = std::lcm(ord, ds[i] / std::gcd(x[i], ds[i]));
    orders.push_back(ord);
    std::size_t pos = 0;
    while (pos < ds.size() && ++x[pos] == ds[pos]) x[pos++] = 0;
    if (pos == ds.size()) break;
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace jrigid
