#include "jrigid/cocycle.hpp"

#include <algorithm>

#include "jrigid/int_linalg.hpp"

namespace jrigid {

namespace {

long reduce_mod(long v, long n) {
  long r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Cocycle2::Cocycle2(Subgroup domain, long modulus, std::vector<long> values)
    : domain_(std::move(domain)), n_(modulus), vals_(std::move(values)) {
  require(n_ >= 2, "cocycle modulus must be at least 2");
  int m = domain_.group.order();
  require(vals_.size() == static_cast<size_t>(m) * m, "cocycle value table has wrong size");
  for (long& v : vals_) v = reduce_mod(v, n_);
  for (int g = 0; g < m; ++g) {
    require(value(0, g) == 0 && value(g, 0) == 0, "cocycle is not normalized");
    for (int h = 0; h < m; ++h)
      for (int k = 0; k < m; ++k) {
        long lhs = value(g, h) + value(domain_.group.mult(g, h), k);
        long rhs = value(h, k) + value(g, domain_.group.mult(h, k));
        require(reduce_mod(lhs - rhs, n_) == 0, "cocycle identity fails");
      }
  }
}

Cocycle2 Cocycle2::zero(Subgroup domain, long modulus) {
  int m = domain.group.order();
  return Cocycle2(std::move(domain), modulus,
                  std::vector<long>(static_cast<size_t>(m) * m, 0));
}

Cocycle2 Cocycle2::coboundary_of(Subgroup domain, long modulus,
                                 const std::vector<long>& b) {
  int m = domain.group.order();
  require(b.size() == static_cast<size_t>(m), "coboundary data has wrong length");
  require(reduce_mod(b[0], modulus) == 0, "coboundary data must vanish at the identity");
  std::vector<long> vals(static_cast<size_t>(m) * m);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      vals[static_cast<size_t>(g) * m + h] =
          reduce_mod(b[static_cast<size_t>(g)] + b[static_cast<size_t>(h)] -
                         b[static_cast<size_t>(domain.group.mult(g, h))],
                     modulus);
  return Cocycle2(std::move(domain), modulus, std::move(vals));
}

Cocycle2 Cocycle2::bilinear(Subgroup domain, long modulus,
                            const std::vector<long>& phi,
                            const std::vector<long>& psi) {
  int m = domain.group.order();
  require(phi.size() == static_cast<size_t>(m) && psi.size() == static_cast<size_t>(m),
          "homomorphism image vector has wrong length");
  for (const std::vector<long>* f : {&phi, &psi})
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h) {
        long want = (*f)[static_cast<size_t>(domain.group.mult(g, h))];
        require(reduce_mod((*f)[static_cast<size_t>(g)] + (*f)[static_cast<size_t>(h)] - want,
                           modulus) == 0,
                "image vector is not a homomorphism to Z/N");
      }
  std::vector<long> vals(static_cast<size_t>(m) * m);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      vals[static_cast<size_t>(g) * m + h] =
          reduce_mod(phi[static_cast<size_t>(g)] * psi[static_cast<size_t>(h)], modulus);
  return Cocycle2(std::move(domain), modulus, std::move(vals));
}

long Cocycle2::value(int a, int b) const {
  int m = domain_.group.order();
  require(a >= 0 && a < m && b >= 0 && b < m, "cocycle argument out of range");
  return vals_[static_cast<size_t>(a) * m + b];
}

long Cocycle2::value_at_parent(int pa, int pb) const {
  return value(domain_.index_of_parent(pa), domain_.index_of_parent(pb));
}

Cocycle2 Cocycle2::operator+(const Cocycle2& o) const {
  require(n_ == o.n_, "cocycle modulus mismatch");
  require(domain_.group == o.domain_.group && domain_.embed == o.domain_.embed,
          "cocycle domain mismatch");
  std::vector<long> vals(vals_.size());
  for (size_t i = 0; i < vals_.size(); ++i) vals[i] = reduce_mod(vals_[i] + o.vals_[i], n_);
  return Cocycle2(domain_, n_, std::move(vals));
}

Cocycle2 Cocycle2::negated() const {
  std::vector<long> vals(vals_.size());
  for (size_t i = 0; i < vals_.size(); ++i) vals[i] = reduce_mod(-vals_[i], n_);
  return Cocycle2(domain_, n_, std::move(vals));
}

Cocycle2 Cocycle2::restricted_to(const Subgroup& smaller) const {
  int m = smaller.group.order();
  std::vector<long> vals(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      vals[static_cast<size_t>(a) * m + b] =
          value_at_parent(smaller.embed[static_cast<size_t>(a)],
                          smaller.embed[static_cast<size_t>(b)]);
  return Cocycle2(smaller, n_, std::move(vals));
}

Cocycle2 Cocycle2::pulled_back(const Subgroup& new_domain,
                               const std::vector<int>& to_old) const {
  int m = new_domain.group.order();
  require(to_old.size() == static_cast<size_t>(m), "pullback map has wrong length");
  std::vector<int> img(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) img[static_cast<size_t>(i)] = domain_.index_of_parent(to_old[static_cast<size_t>(i)]);
  std::vector<int> seen = img;
  std::sort(seen.begin(), seen.end());
  require(std::unique(seen.begin(), seen.end()) == seen.end(), "pullback map is not injective");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      require(domain_.group.mult(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]) ==
                  img[static_cast<size_t>(new_domain.group.mult(a, b))],
              "pullback map is not a homomorphism");
  std::vector<long> vals(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      vals[static_cast<size_t>(a) * m + b] = value(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]);
  return Cocycle2(new_domain, n_, std::move(vals));
}

std::optional<std::vector<long>> Cocycle2::coboundary_witness() const {
  // Solve b(g) + b(h) - b(gh) = c(g,h) mod N for b, one equation per pair.
  int m = domain_.group.order();
  linalg::IMat a(m * m, m);
  std::vector<Integer> rhs(static_cast<size_t>(m) * m);
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      int row = g * m + h;
      a.at(row, g) += 1;
      a.at(row, h) += 1;
      a.at(row, domain_.group.mult(g, h)) -= 1;
      rhs[static_cast<size_t>(row)] = value(g, h);
    }
  std::optional<std::vector<Integer>> sol = linalg::solve_mod(a, rhs, Integer(n_));
  if (!sol) return std::nullopt;
  std::vector<long> b(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) b[static_cast<size_t>(i)] = (*sol)[static_cast<size_t>(i)].get_si();
  // Normalized cocycles force b(e) = 0 through the (e,e) equation.
  require(b[0] == 0, "witness fails identity normalization");
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      require(reduce_mod(b[static_cast<size_t>(g)] + b[static_cast<size_t>(h)] -
                             b[static_cast<size_t>(domain_.group.mult(g, h))] - value(g, h),
                         n_) == 0,
              "coboundary witness fails verification");
  return b;
}

bool Cocycle2::operator==(const Cocycle2& o) const {
  return n_ == o.n_ && domain_.group == o.domain_.group && domain_.embed == o.domain_.embed &&
         vals_ == o.vals_;
}

}  // namespace jrigid
