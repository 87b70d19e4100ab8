#include "jrigid/fin_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "jrigid/int_linalg.hpp"

namespace jrigid {

void FinGroup::finish_construction() {
  require(n_ >= 1, "group must have at least one element");
  require(table_.size() == static_cast<size_t>(n_) * n_, "multiplication table has wrong size");
  for (int v : table_) require(v >= 0 && v < n_, "table entry out of range");
  for (int i = 0; i < n_; ++i) {
    require(mult(0, i) == i && mult(i, 0) == i, "index 0 must be the identity");
  }
  require(n_ <= 64, "groups of order > 64 are out of scope");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        require(mult(mult(a, b), c) == mult(a, mult(b, c)), "multiplication is not associative");

  inv_.assign(static_cast<size_t>(n_), -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mult(a, b) == 0) {
        require(mult(b, a) == 0, "one-sided inverse");
        inv_[static_cast<size_t>(a)] = b;
      }
  for (int v : inv_) require(v >= 0, "element without inverse");

  if (gens_.empty()) {
    std::vector<int> have = closure({});
    while (static_cast<int>(have.size()) < n_) {
      for (int g = 0; g < n_; ++g)
        if (!std::binary_search(have.begin(), have.end(), g)) {
          gens_.push_back(g);
          have = closure(gens_);
          break;
        }
    }
  } else {
    require(static_cast<int>(closure(gens_).size()) == n_, "declared generators do not generate");
  }
}

FinGroup FinGroup::from_table(std::vector<int> table, int order, std::string tag) {
  FinGroup g;
  g.n_ = order;
  g.table_ = std::move(table);
  g.tag_ = std::move(tag);
  g.finish_construction();
  return g;
}

FinGroup FinGroup::trivial() { return cyclic(1); }

FinGroup FinGroup::cyclic(int n) {
  require(n >= 1, "cyclic group order must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
  FinGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.tag_ = n == 1 ? "1" : "Z" + std::to_string(n);
  if (n > 1) g.gens_ = {1};
  g.finish_construction();
  return g;
}

FinGroup FinGroup::elementary_abelian_2(int k) {
  require(k >= 0 && k <= 6, "elementary abelian rank out of range");
  int n = 1 << k;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = a ^ b;
  FinGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.tag_ = "E" + std::to_string(n);
  for (int i = 0; i < k; ++i) g.gens_.push_back(1 << i);
  g.finish_construction();
  return g;
}

namespace {

// The six permutations of {0,1,2} in lexicographic one-line order; index 0 is
// the identity.  Composition convention: (g o h)(x) = g(h(x)).
const int kS3Perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

int s3_compose(int g, int h) {
  int r[3];
  for (int x = 0; x < 3; ++x) r[x] = kS3Perms[g][kS3Perms[h][x]];
  for (int i = 0; i < 6; ++i)
    if (r[0] == kS3Perms[i][0] && r[1] == kS3Perms[i][1] && r[2] == kS3Perms[i][2]) return i;
  throw MathError("permutation composition table corrupt");
}

}  // namespace

FinGroup FinGroup::s3() {
  std::vector<int> table(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) table[static_cast<size_t>(a) * 6 + b] = s3_compose(a, b);
  FinGroup g;
  g.n_ = 6;
  g.table_ = std::move(table);
  g.tag_ = "S3";
  g.gens_ = {1, 3};  // a transposition and a 3-cycle generate
  g.finish_construction();
  return g;
}

FinGroup FinGroup::direct_product(const FinGroup& a, const FinGroup& b) {
  int n = a.order() * b.order();
  require(n <= 64, "product order exceeds scope bound");
  std::vector<int> table(static_cast<size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              idx(a.mult(x1, x2), b.mult(y1, y2));
  FinGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.tag_ = a.tag() + "x" + b.tag();
  for (int ga : a.generators()) g.gens_.push_back(idx(ga, 0));
  for (int gb : b.generators()) g.gens_.push_back(idx(0, gb));
  g.left_ = std::make_shared<FinGroup>(a);
  g.right_ = std::make_shared<FinGroup>(b);
  g.finish_construction();
  return g;
}

int FinGroup::pair_index(int a, int b) const {
  require(is_product(), "pair_index on a non-product group");
  return a * right_->order() + b;
}

FinGroup FinGroup::parse(const std::string& spec) {
  require(!spec.empty(), "empty group spec");
  size_t x = spec.find('x');
  if (x != std::string::npos) {
    return direct_product(parse(spec.substr(0, x)), parse(spec.substr(x + 1)));
  }
  if (spec == "1") return trivial();
  if (spec == "S3") return s3();
  if (spec.size() >= 2 && spec[0] == 'Z') {
    int n = 0;
    for (size_t i = 1; i < spec.size(); ++i) {
      require(spec[i] >= '0' && spec[i] <= '9', "bad group spec '" + spec + "'");
      n = n * 10 + (spec[i] - '0');
    }
    return cyclic(n);
  }
  if (spec.size() >= 2 && spec[0] == 'E') {
    int n = 0;
    for (size_t i = 1; i < spec.size(); ++i) {
      require(spec[i] >= '0' && spec[i] <= '9', "bad group spec '" + spec + "'");
      n = n * 10 + (spec[i] - '0');
    }
    int k = 0;
    while ((1 << k) < n) ++k;
    require((1 << k) == n, "elementary abelian order must be a power of 2");
    return elementary_abelian_2(k);
  }
  throw MathError("unrecognized group spec '" + spec + "'");
}

int FinGroup::element_order(int g) const {
  int k = 1, x = g;
  while (x != 0) {
    x = mult(x, g);
    ++k;
    require(k <= n_, "element order exceeds group order");
  }
  return k;
}

int FinGroup::exponent() const {
  long e = 1;
  for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
  return static_cast<int>(e);
}

bool FinGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> FinGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  for (int g = 0; g < n_; ++g) {
    if (seen[static_cast<size_t>(g)]) continue;
    std::set<int> cl;
    for (int h = 0; h < n_; ++h) cl.insert(conjugate(h, g));
    std::vector<int> v(cl.begin(), cl.end());
    for (int e : v) seen[static_cast<size_t>(e)] = true;
    classes.push_back(std::move(v));
  }
  return classes;  // identity's class comes first because g scans from 0
}

std::vector<int> FinGroup::centralizer_elements(int g) const {
  std::vector<int> out;
  for (int h = 0; h < n_; ++h)
    if (mult(h, g) == mult(g, h)) out.push_back(h);
  return out;
}

std::vector<int> FinGroup::closure(std::vector<int> seed) const {
  std::set<int> have{0};
  for (int s : seed) have.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(have.begin(), have.end());
    for (int a : cur)
      for (int b : cur)
        if (have.insert(mult(a, b)).second) grew = true;
  }
  return std::vector<int>(have.begin(), have.end());
}

std::vector<int> FinGroup::commutator_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      comms.push_back(mult(mult(a, b), mult(inverse(a), inverse(b))));
  return closure(comms);
}

std::vector<std::vector<int>> FinGroup::all_subgroups() const {
  require(n_ <= 16, "subgroup enumeration supported only for order <= 16");
  std::set<std::vector<int>> found;
  found.insert(closure({}));
  // Every subgroup of a group of order <= 16 is generated by at most 3
  // elements, so closing all small generator sets is exhaustive.
  for (int a = 0; a < n_; ++a) {
    found.insert(closure({a}));
    for (int b = a + 1; b < n_; ++b) {
      found.insert(closure({a, b}));
      for (int c = b + 1; c < n_; ++c) found.insert(closure({a, b, c}));
    }
  }
  return std::vector<std::vector<int>>(found.begin(), found.end());
}

int Subgroup::index_of_parent(int parent_element) const {
  for (size_t i = 0; i < embed.size(); ++i)
    if (embed[i] == parent_element) return static_cast<int>(i);
  throw MathError("element does not belong to the subgroup");
}

Subgroup subgroup_from(const FinGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require(!elements.empty() && elements.front() == 0,
          "subgroup must contain the identity (index 0)");
  // Identity first, then the rest in parent order.
  std::vector<int> embed = elements;
  int m = static_cast<int>(embed.size());
  auto pos = [&](int parent_el) {
    auto it = std::lower_bound(embed.begin(), embed.end(), parent_el);
    require(it != embed.end() && *it == parent_el, "subset is not closed under multiplication");
    return static_cast<int>(it - embed.begin());
  };
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = pos(parent.mult(embed[i], embed[j]));
  // Reuse the parent object when the subgroup is everything, keeping any
  // product structure usable by the character-table builder.
  if (m == parent.order()) return Subgroup{parent, std::move(embed)};
  FinGroup g = FinGroup::from_table(std::move(table), m, parent.tag() + "-sub" + std::to_string(m));
  return Subgroup{std::move(g), std::move(embed)};
}

Quotient quotient_by_normal(const FinGroup& g, const std::vector<int>& normal_elements) {
  std::vector<int> nset = normal_elements;
  std::sort(nset.begin(), nset.end());
  require(!nset.empty() && nset.front() == 0, "normal subgroup must contain the identity");
  auto in_n = [&](int x) { return std::binary_search(nset.begin(), nset.end(), x); };
  for (int x : nset)
    for (int h = 0; h < g.order(); ++h)
      require(in_n(g.conjugate(h, x)), "subgroup is not normal");

  std::vector<int> proj(static_cast<size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (proj[static_cast<size_t>(x)] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int n : nset) proj[static_cast<size_t>(g.mult(x, n))] = c;
  }
  int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<size_t>(i) * m + j] = proj[static_cast<size_t>(g.mult(reps[i], reps[j]))];
  FinGroup q = FinGroup::from_table(std::move(table), m, g.tag() + "-quot" + std::to_string(m));
  return Quotient{std::move(q), std::move(proj)};
}

std::vector<std::vector<long>> homs_to_cyclic(const FinGroup& g, long n) {
  require(n >= 1, "modulus must be positive");
  const int ord = g.order();
  // Unknowns x_g; equations x_g + x_gen - x_{g*gen} = 0 over Z/n force
  // multiplicativity by induction over words in the generators.
  const std::vector<int>& gens = g.generators();
  linalg::IMat a(ord * std::max<int>(1, static_cast<int>(gens.size())) + 1, ord);
  int row = 0;
  for (int x = 0; x < ord; ++x)
    for (int gen : gens) {
      a.at(row, x) += 1;
      a.at(row, gen) += 1;
      a.at(row, g.mult(x, gen)) -= 1;
      ++row;
    }
  a.at(row, 0) = 1;  // x_identity = 0

  linalg::SnfResult snf = linalg::smith_normal_form(a);
  // Solutions of a x = 0 (mod n) are x = V y with d_i y_i = 0 (mod n).
  const Integer N(n);
  std::vector<std::vector<Integer>> ycoords(static_cast<size_t>(ord));
  for (int i = 0; i < ord; ++i) {
    Integer d = i < std::min(snf.d.rows(), snf.d.cols()) ? snf.d.at(i, i) : Integer(0);
    Integer gshared = gcd(d, N);
    Integer step = N / (gshared == 0 ? Integer(1) : gshared);
    if (d == 0) step = 1;  // free coordinate
    for (Integer y(0); y < N; y += step) ycoords[static_cast<size_t>(i)].push_back(y);
  }
  std::vector<std::vector<long>> homs;
  std::vector<size_t> pick(static_cast<size_t>(ord), 0);
  for (;;) {
    std::vector<Integer> y(static_cast<size_t>(ord));
    for (int i = 0; i < ord; ++i) y[static_cast<size_t>(i)] = ycoords[static_cast<size_t>(i)][pick[static_cast<size_t>(i)]];
    std::vector<Integer> x = snf.v * y;
    std::vector<long> h(static_cast<size_t>(ord));
    for (int i = 0; i < ord; ++i) {
      Integer r = x[static_cast<size_t>(i)] % N;
      if (r < 0) r += N;
      h[static_cast<size_t>(i)] = r.get_si();
    }
    homs.push_back(std::move(h));
    int i = 0;
    while (i < ord && ++pick[static_cast<size_t>(i)] == ycoords[static_cast<size_t>(i)].size()) {
      pick[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == ord) break;
  }
  std::sort(homs.begin(), homs.end());
  homs.erase(std::unique(homs.begin(), homs.end()), homs.end());
  for (const auto& h : homs)
    for (int x = 0; x < ord; ++x)
      for (int y = 0; y < ord; ++y)
        require((h[static_cast<size_t>(x)] + h[static_cast<size_t>(y)] -
                 h[static_cast<size_t>(g.mult(x, y))]) % n == 0,
                "hom enumeration produced a non-homomorphism");
  return homs;
}

}  // namespace jrigid
