#include "jrigid/int_linalg.hpp"

namespace jrigid::linalg {

QMat to_rational(const IMat& a) {
  QMat q(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) q.at(i, j) = Rational(a.at(i, j));
  return q;
}

Integer det_bareiss(IMat a) {
  require(a.rows() == a.cols(), "determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return Integer(1);
  Integer sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Integer(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        require(num % prev == 0, "Bareiss exactness violated");
        a.at(i, j) = num / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// True if some entry of the trailing submatrix (from (t,t), excluding the
// pivot) is nonzero; reports the smallest-magnitude one.
bool find_nonzero(const IMat& a, int t, int* oi, int* oj) {
  bool found = false;
  Integer best;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      Integer m = abs(a.at(i, j));
      if (!found || m < best) {
        found = true;
        best = m;
        *oi = i;
        *oj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IMat& a) {
  const IMat orig = a;
  IMat d = a;
  IMat u = IMat::identity(a.rows());
  IMat v = IMat::identity(a.cols());

  const int bound = std::min(d.rows(), d.cols());
  for (int t = 0; t < bound; ++t) {
    int pi = 0, pj = 0;
    if (!find_nonzero(d, t, &pi, &pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      // Clear column t; truncated division keeps remainders strictly smaller
      // than the pivot, so re-pivoting on a nonzero remainder terminates.
      bool retry = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Integer q = d.at(i, t) / d.at(t, t);
        if (q != 0)
          for (int j = 0; j < d.cols(); ++j) {
            d.at(i, j) -= q * d.at(t, j);
          }
        if (q != 0)
          for (int j = 0; j < u.cols(); ++j) u.at(i, j) -= q * u.at(t, j);
        if (d.at(i, t) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          retry = true;
          break;
        }
      }
      if (retry) continue;
      bool retry_col = false;
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Integer q = d.at(t, j) / d.at(t, t);
        if (q != 0)
          for (int i = 0; i < d.rows(); ++i) {
            d.at(i, j) -= q * d.at(i, t);
          }
        if (q != 0)
          for (int i = 0; i < v.rows(); ++i) v.at(i, j) -= q * v.at(i, t);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          retry_col = true;
          break;
        }
      }
      if (retry_col) continue;
      // Row and column are clear; enforce that the pivot divides the rest of
      // the submatrix so the diagonal forms a divisibility chain.
      bool fixed = false;
      for (int i = t + 1; i < d.rows() && !fixed; ++i)
        for (int j = t + 1; j < d.cols() && !fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            for (int k = 0; k < d.cols(); ++k) d.at(t, k) += d.at(i, k);
            for (int k = 0; k < u.cols(); ++k) u.at(t, k) += u.at(i, k);
            fixed = true;
          }
      if (!fixed) break;
    }

    if (d.at(t, t) < 0) {
      for (int j = 0; j < d.cols(); ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < u.cols(); ++j) u.at(t, j) = -u.at(t, j);
    }
  }

  require(u * orig * v == d, "Smith normal form transform check failed");
  return SnfResult{d, u, v};
}

std::vector<Integer> elementary_divisors(const IMat& a) {
  SnfResult snf = smith_normal_form(a);
  std::vector<Integer> divs;
  const int bound = std::min(a.rows(), a.cols());
  for (int i = 0; i < bound; ++i)
    if (snf.d.at(i, i) != 0) divs.push_back(snf.d.at(i, i));
  return divs;
}

namespace {

Integer mod_reduce(const Integer& x, const Integer& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

// Solves d y = c (mod n) for a single unknown, d >= 0.
std::optional<Integer> solve_scalar_mod(const Integer& d, const Integer& c, const Integer& n) {
  if (d == 0) {
    if (mod_reduce(c, n) != 0) return std::nullopt;
    return Integer(0);
  }
  Integer g = gcd(d, n);
  if (c % g != 0) return std::nullopt;
  Integer n1 = n / g;
  if (n1 == 1) return Integer(0);
  Integer d1 = mod_reduce(d / g, n1), c1 = mod_reduce(c / g, n1);
  Integer inv;
  int ok = mpz_invert(inv.get_mpz_t(), d1.get_mpz_t(), n1.get_mpz_t());
  require(ok != 0, "modular inverse must exist after dividing out the gcd");
  return mod_reduce(c1 * inv, n1);
}

}  // namespace

std::optional<std::vector<Integer>> solve_mod(const IMat& a, const std::vector<Integer>& b,
                                              const Integer& n) {
  require(static_cast<int>(b.size()) == a.rows(), "right-hand side has wrong length");
  require(n > 0, "modulus must be positive");
  SnfResult snf = smith_normal_form(a);
  std::vector<Integer> c = snf.u * b;
  std::vector<Integer> y(static_cast<size_t>(a.cols()), Integer(0));
  for (int i = 0; i < a.rows(); ++i) {
    Integer d = i < a.cols() ? snf.d.at(i, i) : Integer(0);
    std::optional<Integer> yi = solve_scalar_mod(d, c[static_cast<size_t>(i)], n);
    if (!yi) return std::nullopt;
    if (i < a.cols()) y[static_cast<size_t>(i)] = *yi;
  }
  std::vector<Integer> x = snf.v * y;
  for (Integer& e : x) e = mod_reduce(e, n);
  return x;
}

}  // namespace jrigid::linalg
