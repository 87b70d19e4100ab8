#include "jrigid/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "jrigid/error.hpp"
#include "jrigid/int_linalg.hpp"

namespace jrigid {

LieType make_lie_type(Family f, int rank) {
  require(rank >= 1, "rank must be positive");
  require(f != Family::D || rank >= 2, "type D requires rank at least 2");
  return LieType{f, rank};
}

LieType parse_lie_type(const std::string& family, int rank) {
  require(family.size() == 1, "unknown family: " + family);
  switch (family[0]) {
    case 'A': return make_lie_type(Family::A, rank);
    case 'B': return make_lie_type(Family::B, rank);
    case 'C': return make_lie_type(Family::C, rank);
    case 'D': return make_lie_type(Family::D, rank);
    default: throw MathError("unknown family: " + family);
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  throw MathError("unknown family");
}

long partition_size(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2L * t.rank + 1;
    case Family::C: return 2L * t.rank;
    case Family::D: return 2L * t.rank;
  }
  throw MathError("unknown family");
}

long lie_rank(const LieType& t) { return t.rank; }

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  require(!parts_.empty(), "empty partition");
  for (size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 1, "partition parts must be positive");
    require(i == 0 || parts_[i - 1] >= parts_[i], "partition parts must be weakly decreasing");
  }
}

long Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<long> Partition::dual() const {
  std::vector<long> cols(static_cast<size_t>(parts_[0]), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
  return cols;
}

std::vector<std::pair<long, long>> Partition::with_multiplicities() const {
  std::vector<std::pair<long, long>> out;
  for (long p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::vector<long> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    require(!tok.empty(), "bad partition text: " + text);
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    require(pos == tok.size(), "bad partition text: " + text);
    parts.push_back(v);
  }
  require(!parts.empty(), "bad partition text: " + text);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

bool validate_partition(const LieType& t, const Partition& u) {
  if (u.sum() != partition_size(t)) return false;
  if (t.family == Family::A) return true;
  for (const auto& [a, m] : u.with_multiplicities()) {
    bool constrained = (t.family == Family::C) ? (a % 2 == 1) : (a % 2 == 0);
    if (constrained && m % 2 == 1) return false;
  }
  return true;
}

long CentralizerDescriptor::reductive_dimension() const {
  long d = 0;
  for (const auto& f : factors) {
    if (f.kind == "Sp")
      d += f.size * (f.size + 1) / 2;
    else if (f.kind == "O" || f.kind == "SO")
      d += f.size * (f.size - 1) / 2;
  }
  return d;
}

CentralizerDescriptor centralizer(const LieType& t, const Partition& u) {
  require(t.family != Family::A, "centralizer descriptors cover types B, C, D only");
  require(validate_partition(t, u), "invalid partition for the type");
  std::vector<CentralizerFactor> factors;
  int two_torsion = 0;  // number of O- and Z2-factors
  bool det_condition = false;
  if (t.family == Family::C) {
    for (const auto& [a, m] : u.with_multiplicities()) {
      if (a % 2 == 1) {
        factors.push_back({"Sp", m});
      } else {
        factors.push_back({"O", m});
        ++two_torsion;
      }
    }
  } else {
    // Inside SO_n the odd parts carry the determinant condition jointly.
    int s_factors = 0;
    for (const auto& [a, m] : u.with_multiplicities()) {
      if (a % 2 == 0) {
        factors.push_back({"Sp", m});
      } else if (m % 2 == 1) {
        factors.push_back({"SO", m});
        factors.push_back({"Z2", 1});
        ++s_factors;
      } else {
        factors.push_back({"O", m});
        ++s_factors;
      }
    }
    det_condition = s_factors >= 1;
    two_torsion = det_condition ? s_factors - 1 : 0;
  }
  FinGroup pi0 = two_torsion == 0 ? FinGroup::trivial()
                                  : FinGroup::elementary_abelian_2(two_torsion);
  bool very_even = t.family == Family::D &&
                   std::all_of(u.parts().begin(), u.parts().end(),
                               [](long p) { return p % 2 == 0; });
  return CentralizerDescriptor{std::move(factors), det_condition, std::move(pi0), very_even};
}

long centralizer_dimension(const LieType& t, const Partition& u) {
  require(validate_partition(t, u), "invalid partition for the type");
  long s2 = 0;
  for (long s : u.dual()) s2 += s * s;
  long odd = 0;
  for (long p : u.parts())
    if (p % 2 == 1) ++odd;
  switch (t.family) {
    case Family::A: return s2 - 1;  // inside SL
    case Family::C: return (s2 + odd) / 2;
    case Family::B:
    case Family::D: return (s2 - odd) / 2;
  }
  throw MathError("unknown family");
}

namespace {

using QMat = linalg::QMat;

// Nilpotent u of Jordan type the partition, together with a nondegenerate
// bilinear form S it is compatible with (u^T S + S u = 0): symmetric for the
// orthogonal types, alternating for the symplectic one.  Parts of the
// "wrong" parity come in pairs and are assembled hyperbolically.
void build_nilpotent_and_form(const LieType& t, const Partition& u, QMat& n, QMat& s) {
  long m_total = u.sum();
  int m = static_cast<int>(m_total);
  n = QMat(m, m);
  s = QMat(m, m);
  bool symmetric_form = t.family != Family::C;
  Rational eps(symmetric_form ? 1 : -1);
  int off = 0;
  auto single_block = [&](long a) {
    for (long k = 1; k < a; ++k) n.at(off + static_cast<int>(k) - 1, off + static_cast<int>(k)) = 1;
    for (long i = 1; i <= a; ++i) {
      long j = a + 1 - i;
      s.at(off + static_cast<int>(i) - 1, off + static_cast<int>(j) - 1) =
          Rational(i % 2 == 0 ? 1 : -1);
    }
    off += static_cast<int>(a);
  };
  auto paired_block = [&](long a) {
    int e = off, f = off + static_cast<int>(a);
    for (long k = 1; k < a; ++k) {
      n.at(e + static_cast<int>(k) - 1, e + static_cast<int>(k)) = 1;
      n.at(f + static_cast<int>(k), f + static_cast<int>(k) - 1) = -1;
    }
    for (long i = 0; i < a; ++i) {
      s.at(e + static_cast<int>(i), f + static_cast<int>(i)) = 1;
      s.at(f + static_cast<int>(i), e + static_cast<int>(i)) = eps;
    }
    off += 2 * static_cast<int>(a);
  };
  for (const auto& [a, mult] : u.with_multiplicities()) {
    bool single_ok = symmetric_form ? (a % 2 == 1) : (a % 2 == 0);
    if (single_ok) {
      for (long c = 0; c < mult; ++c) single_block(a);
    } else {
      require(mult % 2 == 0, "invalid partition for the type");
      for (long c = 0; c < mult / 2; ++c) paired_block(a);
    }
  }
  // u lies in the algebra of the form.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational acc(0);
      for (int k = 0; k < m; ++k) acc += n.at(k, i) * s.at(k, j) + s.at(i, k) * n.at(k, j);
      require(acc == 0, "nilpotent does not preserve the form");
    }
}

}  // namespace

long ad_kernel_dimension(const LieType& t, const Partition& u) {
  require(validate_partition(t, u), "invalid partition for the type");
  if (t.family == Family::A) {
    // gl: basis all matrix units; centralizer of u, then cut by the trace.
    int m = static_cast<int>(u.sum());
    QMat n(m, m);
    int off = 0;
    for (long p : u.parts()) {
      for (long k = 1; k < p; ++k) n.at(off + static_cast<int>(k) - 1, off + static_cast<int>(k)) = 1;
      off += static_cast<int>(p);
    }
    int d = m * m;
    QMat ad(d, d);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        int col = a * m + b;
        // ad(n) E_ab = n E_ab - E_ab n.
        for (int i = 0; i < m; ++i)
          if (n.at(i, a) != 0) ad.at(i * m + b, col) += n.at(i, a);
        for (int j = 0; j < m; ++j)
          if (n.at(b, j) != 0) ad.at(a * m + j, col) -= n.at(b, j);
      }
    long ker = d - linalg::rank(ad);
    return ker - 1;  // restrict to trace zero: the identity is in the kernel
  }

  QMat n(1, 1), s(1, 1);
  build_nilpotent_and_form(t, u, n, s);
  int m = n.rows();
  bool symmetric_form = t.family != Family::C;
  auto inv = linalg::inverse(s);
  require(inv.has_value(), "degenerate form");
  const QMat& s_inv = *inv;

  // Basis of the algebra: X = S^{-1} Y with Y running over symmetric
  // (symplectic case) or antisymmetric (orthogonal case) elementary matrices.
  struct Slot {
    int i, j;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      if (symmetric_form && i == j) continue;  // antisymmetric Y: no diagonal
      slots.push_back({i, j});
    }
  int d = static_cast<int>(slots.size());
  QMat ad(d, d);
  for (int col = 0; col < d; ++col) {
    auto [bi, bj] = slots[static_cast<size_t>(col)];
    QMat y(m, m);
    y.at(bi, bj) = 1;
    if (bi != bj) y.at(bj, bi) = Rational(symmetric_form ? -1 : 1);
    QMat x = s_inv * y;
    QMat z = n * x - x * n;
    QMat yz = s * z;
    for (int row = 0; row < d; ++row) {
      auto [ri, rj] = slots[static_cast<size_t>(row)];
      ad.at(row, col) = yz.at(ri, rj);
    }
  }
  return d - linalg::rank(ad);
}

long a_value(const LieType& t, const Partition& u) {
  long dim = centralizer_dimension(t, u);
  long diff = dim - lie_rank(t);
  require(diff >= 0 && diff % 2 == 0, "centralizer dimension and rank disagree");
  return diff / 2;
}

bool dominates(const Partition& a, const Partition& b) {
  size_t k = std::max(a.parts().size(), b.parts().size());
  long sa = 0, sb = 0;
  for (size_t i = 0; i < k; ++i) {
    sa += i < a.parts().size() ? a.parts()[i] : 0;
    sb += i < b.parts().size() ? b.parts()[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

namespace {

void enumerate_partitions(long remaining, long max_part, std::vector<long>& acc,
                          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (long p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> valid_partitions(const LieType& t) {
  long n = partition_size(t);
  std::vector<Partition> all;
  std::vector<long> acc;
  enumerate_partitions(n, n, acc, all);
  std::vector<Partition> out;
  for (const Partition& p : all)
    if (validate_partition(t, p)) out.push_back(p);
  return out;
}

std::vector<LeviCandidate> levi_candidates(const LieType& t, const Partition& u) {
  require(t.family != Family::A, "Levi candidates cover types B, C, D only");
  require(validate_partition(t, u), "invalid partition for the type");
  bool ambient_sp = t.family == Family::C;
  auto mults = u.with_multiplicities();

  // Parity-derived options, and the literal per-family statement, per part.
  bool consistent = true;
  std::vector<std::vector<long>> options;
  for (const auto& [a, m] : mults) {
    bool gl_only = ambient_sp ? (a % 2 == 1) : (a % 2 == 0);
    std::vector<long> opts;
    if (gl_only) {
      opts = {0};
    } else if (m % 2 == 1) {
      opts = {1};
    } else {
      opts = {0, 2};
    }
    // Literal statements: the Sp ambient zeroes its odd parts and takes
    // m'' = m mod 2 or 2; the SO ambients zero even parts, with m''=1
    // exactly for odd multiplicity.  Both reduce to the same sets.
    std::vector<long> literal;
    if (gl_only) {
      literal = {0};
    } else {
      for (long v : {0L, 1L, 2L})
        if (v <= m && (v - m) % 2 == 0) literal.push_back(v);
    }
    if (literal != opts) consistent = false;
    options.push_back(std::move(opts));
  }

  std::vector<LeviCandidate> out;
  std::vector<size_t> idx(options.size(), 0);
  while (true) {
    LeviCandidate cand;
    cand.rules_consistent = consistent;
    long tail_sum = 0;
    for (size_t i = 0; i < mults.size(); ++i) {
      auto [a, m] = mults[i];
      long mpp = options[i][idx[i]];
      cand.split.push_back({a, m - mpp, mpp});
      for (long c = 0; c < (m - mpp) / 2; ++c) cand.gl_blocks.push_back(a);
      for (long c = 0; c < mpp; ++c) cand.tail.push_back(a);
      tail_sum += mpp * a;
    }
    switch (t.family) {
      case Family::C:
        cand.tail_group_kind = "SO";
        cand.tail_group_size = tail_sum + 1;
        break;
      case Family::B:
        require(tail_sum % 2 == 1, "tail of a unipotent in an odd orthogonal group must have odd size");
        cand.tail_group_kind = "Sp";
        cand.tail_group_size = tail_sum - 1;
        break;
      case Family::D:
        cand.tail_group_kind = "SO";
        cand.tail_group_size = tail_sum;
        break;
      default: throw MathError("unknown family");
    }
    out.push_back(std::move(cand));
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

}  // namespace jrigid
