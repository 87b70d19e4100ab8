#include "jrigid/weyl.hpp"

#include <map>
#include <sstream>

#include "jrigid/error.hpp"

namespace jrigid {

namespace {

void check_factor(const WeylFactor& f) {
  switch (f.family) {
    case 'A':
    case 'B':
    case 'C': require(f.rank >= 1, "rank must be positive"); break;
    case 'D': require(f.rank >= 2, "type D requires rank at least 2"); break;
    case 'G': require(f.rank == 2, "type G has rank 2"); break;
    default: throw MathError(std::string("unknown Weyl family: ") + f.family);
  }
}

// Cartan matrix, rows indexed by simple roots: a_{ij} = <alpha_i^v, alpha_j>.
linalg::IMat cartan_matrix(const WeylFactor& f) {
  int n = f.rank;
  linalg::IMat c(n, n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto link = [&](int i, int j) { c.at(i, j) = -1; c.at(j, i) = -1; };
  switch (f.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // last simple root short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) c.at(n - 2, n - 1) = -2;
      break;
    case 'C':  // last simple root long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) c.at(n - 1, n - 2) = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      if (n >= 3) link(n - 3, n - 1);
      if (n == 2) { /* A1 x A1: no links */ }
      break;
    case 'G':
      c.at(0, 1) = -3;
      c.at(1, 0) = -1;
      break;
  }
  return c;
}

std::vector<long> factor_degrees(const WeylFactor& f) {
  std::vector<long> d;
  switch (f.family) {
    case 'A':
      for (int k = 2; k <= f.rank + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= f.rank; ++k) d.push_back(2L * k);
      break;
    case 'D':
      for (int k = 1; k <= f.rank - 1; ++k) d.push_back(2L * k);
      d.push_back(f.rank);
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  return d;
}

}  // namespace

WeylSpec weyl_of(const LieType& t) {
  char fam = family_name(t.family)[0];
  return {WeylFactor{fam, t.rank}};
}

WeylSpec parse_weyl(const std::string& text) {
  WeylSpec out;
  size_t pos = 0;
  while (pos < text.size()) {
    char fam = text[pos++];
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    require(pos > start, "bad Weyl type: " + text);
    WeylFactor f{fam, std::stoi(text.substr(start, pos - start))};
    check_factor(f);
    out.push_back(f);
    if (pos < text.size()) {
      require(text[pos] == 'x', "bad Weyl type: " + text);
      ++pos;
      require(pos < text.size(), "bad Weyl type: " + text);
    }
  }
  require(!out.empty(), "bad Weyl type: " + text);
  return out;
}

std::string weyl_str(const WeylSpec& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << 'x';
    os << w[i].family << w[i].rank;
  }
  return os.str();
}

std::vector<long> weyl_degrees(const WeylSpec& w) {
  std::vector<long> out;
  for (const WeylFactor& f : w) {
    check_factor(f);
    auto d = factor_degrees(f);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

long weyl_order(const WeylSpec& w) {
  long n = 1;
  for (long d : weyl_degrees(w)) n *= d;
  return n;
}

HalfLaurent poincare_product(const WeylSpec& w) {
  HalfLaurent p = HalfLaurent::monomial(Rational(1), 0, 1);
  for (long d : weyl_degrees(w)) {
    HalfLaurent g;
    for (long k = 0; k < d; ++k) g = g + HalfLaurent::monomial(Rational(1), k, 1);
    p = p * g;
  }
  return p;
}

HalfLaurent poincare_brute(const WeylSpec& w) {
  // One BFS per factor in the reflection representation; lengths add over
  // factors, so the generating functions multiply.
  HalfLaurent total = HalfLaurent::monomial(Rational(1), 0, 1);
  for (const WeylFactor& f : w) {
    check_factor(f);
    linalg::IMat c = cartan_matrix(f);
    int n = f.rank;
    // Simple reflection s_i on root coordinates: (s_i)_{kj} = delta_{kj} - c_{ij} delta_{ki}.
    std::vector<linalg::IMat> gens;
    for (int i = 0; i < n; ++i) {
      linalg::IMat s = linalg::Mat<Integer>::identity(n);
      for (int j = 0; j < n; ++j) s.at(i, j) -= c.at(i, j);
      gens.push_back(s);
    }
    auto key = [n](const linalg::IMat& m) {
      std::vector<long> flat;
      flat.reserve(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat.push_back(m.at(i, j).get_si());
      return flat;
    };
    std::map<std::vector<long>, long> length;
    std::vector<linalg::IMat> frontier{linalg::Mat<Integer>::identity(n)};
    length[key(frontier[0])] = 0;
    HalfLaurent p = HalfLaurent::monomial(Rational(1), 0, 1);
    long depth = 0;
    while (!frontier.empty()) {
      ++depth;
      std::vector<linalg::IMat> next;
      for (const linalg::IMat& m : frontier)
        for (const linalg::IMat& s : gens) {
          linalg::IMat ms = m * s;
          auto k = key(ms);
          if (length.emplace(k, depth).second) next.push_back(ms);
        }
      if (!next.empty()) p = p + HalfLaurent::monomial(Rational(next.size()), depth, 1);
      frontier = std::move(next);
    }
    total = total * p;
  }
  return total;
}

HalfLaurent poincare_polynomial(const WeylSpec& w) {
  HalfLaurent p = poincare_product(w);
  if (weyl_order(w) <= 50000) require(p == poincare_brute(w), "length count disagrees with the product formula");
  return p;
}

}  // namespace jrigid
