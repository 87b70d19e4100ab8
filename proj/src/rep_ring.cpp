#include "jrigid/rep_ring.hpp"

#include <algorithm>

#include "jrigid/error.hpp"

namespace jrigid {

namespace {

bool is_disconnected(RingFamily f) {
  return f == RingFamily::O_even || f == RingFamily::O_odd || f == RingFamily::Pin;
}

bool rank_one_only(RingFamily f) { return f == RingFamily::SL || f == RingFamily::PGL; }

// Eigenvalue list of the defining representation restricted to the chosen
// Cartan component, each entry a (possibly signed) monomial.
std::vector<TorusChar> defining_eigenvalues(const RingSpec& s, int factor) {
  int n = n_torus_vars(s, factor);
  std::vector<TorusChar> eig;
  auto push_pairs = [&](int count) {
    for (int j = 0; j < count; ++j) {
      eig.push_back(TorusChar::var_pow(n, j, 1));
      eig.push_back(TorusChar::var_pow(n, j, -1));
    }
  };
  switch (s.family) {
    case RingFamily::Sp:
    case RingFamily::SO_even:
    case RingFamily::Spin:
      push_pairs(n);
      break;
    case RingFamily::SO_odd:
      push_pairs(n);
      eig.push_back(TorusChar(n, Integer(1)));
      break;
    case RingFamily::O_odd:
      // Second component: eigenvalues of -g, handled by the caller's sign.
      push_pairs(n);
      eig.push_back(TorusChar(n, Integer(1)));
      break;
    case RingFamily::O_even:
    case RingFamily::Pin:
      if (factor == 0) {
        push_pairs(n);
      } else {
        // Reflection component: a rank n-1 torus plus the two-dimensional
        // reflection plane with eigenvalues 1 and -1.
        push_pairs(n);
        eig.push_back(TorusChar(n, Integer(1)));
        eig.push_back(TorusChar(n, Integer(-1)));
      }
      break;
    case RingFamily::GL:
      for (int j = 0; j < n; ++j) eig.push_back(TorusChar::var_pow(n, j, 1));
      break;
    case RingFamily::SL:
      push_pairs(1);
      break;
    case RingFamily::PGL:
      throw MathError("PGL has no defining representation in this model");
  }
  return eig;
}

TorusChar elementary_symmetric(const std::vector<TorusChar>& eig, long i, int n_vars) {
  require(i >= 0 && i <= static_cast<long>(eig.size()), "invalid selector");
  // Coefficients of prod_j (1 + t x_j) up to degree i.
  std::vector<TorusChar> e(static_cast<size_t>(i) + 1, TorusChar(n_vars));
  e[0] = TorusChar(n_vars, Integer(1));
  for (const TorusChar& x : eig)
    for (long k = i; k >= 1; --k)
      e[static_cast<size_t>(k)] += e[static_cast<size_t>(k - 1)] * x;
  return e[static_cast<size_t>(i)];
}

// Half-spin character: sum over sign vectors of the given parity.
TorusChar half_spin(int n, int minus_parity) {
  TorusChar out(n);
  for (long mask = 0; mask < (1L << n); ++mask) {
    int minus = __builtin_popcountl(static_cast<unsigned long>(mask));
    if (minus % 2 != minus_parity) continue;
    TorusChar::Key key(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) key[static_cast<size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
    out += TorusChar::monomial(n, Integer(1), key);
  }
  return out;
}

TorusChar rank1_irreducible(long k) {
  TorusChar out(1);
  for (long w = -k; w <= k; w += 2) out += TorusChar::monomial(1, Integer(1), {2 * w});
  return out;
}

char weyl_kind(const RingSpec& s) {
  switch (s.family) {
    case RingFamily::SO_even:
    case RingFamily::Spin: return 'D';
    case RingFamily::GL: return 'A';
    default: return 'B';
  }
}

}  // namespace

RingSpec make_ring_spec(RingFamily f, int rank) {
  require(rank >= 1, "rank must be positive");
  require(!rank_one_only(f) || rank == 1, "family requires rank 1");
  return RingSpec{f, rank};
}

RingSpec parse_ring_spec(const std::string& family, int rank) {
  static const std::vector<std::pair<std::string, RingFamily>> names = {
      {"Sp", RingFamily::Sp},     {"SO_odd", RingFamily::SO_odd},
      {"SO_even", RingFamily::SO_even}, {"O_even", RingFamily::O_even},
      {"O_odd", RingFamily::O_odd},     {"Spin", RingFamily::Spin},
      {"Pin", RingFamily::Pin},   {"GL", RingFamily::GL},
      {"SL", RingFamily::SL},     {"PGL", RingFamily::PGL}};
  for (const auto& [name, fam] : names)
    if (name == family) return make_ring_spec(fam, rank);
  throw MathError("unknown ring family: " + family);
}

std::string ring_family_name(RingFamily f) {
  switch (f) {
    case RingFamily::Sp: return "Sp";
    case RingFamily::SO_odd: return "SO_odd";
    case RingFamily::SO_even: return "SO_even";
    case RingFamily::O_even: return "O_even";
    case RingFamily::O_odd: return "O_odd";
    case RingFamily::Spin: return "Spin";
    case RingFamily::Pin: return "Pin";
    case RingFamily::GL: return "GL";
    case RingFamily::SL: return "SL";
    case RingFamily::PGL: return "PGL";
  }
  throw MathError("unknown ring family");
}

int n_factors(const RingSpec& s) { return is_disconnected(s.family) ? 2 : 1; }

int n_torus_vars(const RingSpec& s, int factor) {
  require(factor >= 0 && factor < n_factors(s), "no such factor");
  switch (s.family) {
    case RingFamily::SL:
    case RingFamily::PGL: return 1;
    case RingFamily::O_even:
    case RingFamily::Pin: return factor == 0 ? s.rank : s.rank - 1;
    default: return s.rank;
  }
}

long defining_dimension(const RingSpec& s) {
  switch (s.family) {
    case RingFamily::Sp:
    case RingFamily::SO_even:
    case RingFamily::O_even:
    case RingFamily::Spin:
    case RingFamily::Pin: return 2L * s.rank;
    case RingFamily::SO_odd:
    case RingFamily::O_odd: return 2L * s.rank + 1;
    case RingFamily::GL: return s.rank;
    case RingFamily::SL: return 2;
    case RingFamily::PGL: throw MathError("PGL has no defining representation in this model");
  }
  throw MathError("unknown ring family");
}

CharSelector parse_selector(const std::string& text) {
  if (text == "delta+") return {CharSelector::DELTA_PLUS, 0};
  if (text == "delta-") return {CharSelector::DELTA_MINUS, 0};
  if (text == "pi") return {CharSelector::PI, 0};
  if (text == "det") return {CharSelector::DET, 0};
  if (text.size() >= 2 && text[0] == 'V') {
    bool paren = text[1] == '(';
    std::string digits = paren ? text.substr(2, text.size() - 3) : text.substr(1);
    if (paren) require(text.back() == ')', "bad selector: " + text);
    require(!digits.empty() &&
                std::all_of(digits.begin(), digits.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
            "bad selector: " + text);
    return {paren ? CharSelector::V_K : CharSelector::V_I, std::stol(digits)};
  }
  throw MathError("bad selector: " + text);
}

std::string selector_str(const CharSelector& sel) {
  switch (sel.kind) {
    case CharSelector::V_I: return "V" + std::to_string(sel.index);
    case CharSelector::V_K: return "V(" + std::to_string(sel.index) + ")";
    case CharSelector::DELTA_PLUS: return "delta+";
    case CharSelector::DELTA_MINUS: return "delta-";
    case CharSelector::PI: return "pi";
    case CharSelector::DET: return "det";
  }
  throw MathError("unknown selector");
}

bool weyl_invariant(const RingSpec& s, int factor, const TorusChar& chr) {
  int n = n_torus_vars(s, factor);
  require(chr.n_vars() == n, "variable count mismatch");
  for (int i = 0; i + 1 < n; ++i)
    if (chr.swap_vars(i, i + 1) != chr) return false;
  char kind = weyl_kind(s);
  if (kind == 'B' && n >= 1 && chr.invert_var(0) != chr) return false;
  if (kind == 'D' && n >= 2 && chr.invert_var(0).invert_var(1) != chr) return false;
  return true;
}

ClassFunctionElt fundamental_character(const RingSpec& s, const CharSelector& sel,
                                       int factor) {
  require(factor >= 0 && factor < n_factors(s), "no such factor");
  int n = n_torus_vars(s, factor);
  TorusChar chr(n);
  switch (sel.kind) {
    case CharSelector::V_I: {
      require(s.family != RingFamily::PGL, "invalid selector");
      chr = elementary_symmetric(defining_eigenvalues(s, factor), sel.index, n);
      if (s.family == RingFamily::O_odd && factor == 1 && sel.index % 2 == 1)
        chr = -chr;  // eigenvalues of -g flip odd exterior powers
      break;
    }
    case CharSelector::V_K: {
      bool ok = s.family == RingFamily::SL || s.family == RingFamily::PGL ||
                (s.family == RingFamily::Sp && s.rank == 1);
      require(ok, "invalid selector");
      require(sel.index >= 0, "invalid selector");
      require(s.family != RingFamily::PGL || sel.index % 2 == 0,
              "odd highest weight is not a PGL character");
      chr = rank1_irreducible(sel.index);
      break;
    }
    case CharSelector::DELTA_PLUS:
    case CharSelector::DELTA_MINUS: {
      require(s.family == RingFamily::Spin, "invalid selector");
      chr = half_spin(n, sel.kind == CharSelector::DELTA_PLUS ? 0 : 1);
      break;
    }
    case CharSelector::PI: {
      require(s.family == RingFamily::Spin || s.family == RingFamily::Pin,
              "invalid selector");
      // The full (s)pin character: the whole sign-vector sum on the identity
      // component's Cartan, zero on the reflection component.
      chr = factor == 0 ? half_spin(n, 0) + half_spin(n, 1) : TorusChar(n);
      break;
    }
    case CharSelector::DET: {
      bool ok = is_disconnected(s.family) || s.family == RingFamily::GL;
      require(ok, "invalid selector");
      if (s.family == RingFamily::GL) {
        TorusChar::Key key(static_cast<size_t>(n), 2);  // z_1 ... z_n
        chr = TorusChar::monomial(n, Integer(1), key);
      } else {
        chr = TorusChar(n, Integer(factor == 0 ? 1 : -1));
      }
      break;
    }
  }
  ClassFunctionElt elt{s, factor, std::move(chr)};
  // Half-spin characters are invariant only under the even sign changes, so
  // the Spin factor checks type D; everything else checks its full group.
  require(weyl_invariant(s, factor, elt.chr), "character is not Weyl-invariant");
  return elt;
}

std::map<long, Integer> decompose_sl2(const TorusChar& chr) {
  require(chr.n_vars() == 1, "rank-1 characters only");
  require(chr.has_integral_exponents(), "integral weights only");
  require(chr.invert_var(0) == chr, "character is not symmetric");
  std::map<long, Integer> out;
  TorusChar rest = chr;
  while (!rest.is_zero()) {
    auto lead = std::prev(rest.terms().end());
    long m = lead->first[0] / 2;
    require(m >= 0, "leading term has negative weight");
    Integer c = lead->second;
    rest -= rank1_irreducible(m) * c;
    out[m] += c;
  }
  return out;
}

bool in_odd_module(const TorusChar& chr) {
  auto parts = decompose_sl2(chr);
  bool odd = true;
  for (const auto& [w, c] : parts) odd = odd && (w % 2 == 1);
  // Cross-check: odd weights exactly when the character is antisymmetric
  // under z -> -z, i.e. supported on odd exponents.
  require(odd == chr.total_degree_parity_is(1), "odd-module predicates disagree");
  return odd;
}

VanishingCertificate odd_vanishing_locus(const TorusChar& chr) {
  require(in_odd_module(chr), "character is not in the odd module");
  Cyclotomic i8 = Cyclotomic::root_of_unity(8, 1);  // w with w^2 = i
  Cyclotomic value = chr.eval_sqrt({i8});
  return VanishingCertificate{value, value.is_zero()};
}

bool PresentationReport::all_ok() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

namespace {

// V_n = V_n^+ + V_n^- with V_n^+ - V_n^- = prod_j (z_j - z_j^{-1}).
std::pair<TorusChar, TorusChar> half_exterior_powers(int n) {
  RingSpec so{RingFamily::SO_even, n};
  TorusChar vn = elementary_symmetric(defining_eigenvalues(so, 0), n, n);
  TorusChar diff(n, Integer(1));
  for (int j = 0; j < n; ++j)
    diff *= TorusChar::var_pow(n, j, 1) - TorusChar::var_pow(n, j, -1);
  return {(vn + diff).divide_exact(2), (vn - diff).divide_exact(2)};
}

}  // namespace

PresentationReport verify_presentation(const RingSpec& s) {
  require(s.rank <= 4, "rank too large for the exact expansion budget");
  PresentationReport rep;
  auto add = [&](const std::string& name, bool ok) { rep.checks.emplace_back(name, ok); };
  int n = s.rank;
  switch (s.family) {
    case RingFamily::SO_even: {
      auto [plus, minus] = half_exterior_powers(n);
      TorusChar vn =
          fundamental_character(s, CharSelector{CharSelector::V_I, n}).chr;
      add("V_n = V_n+ + V_n-", plus + minus == vn);
      add("V_n+ is Weyl-invariant", weyl_invariant(s, 0, plus));
      add("V_n- is Weyl-invariant", weyl_invariant(s, 0, minus));
      auto chain = [&](long top) {
        TorusChar acc(n);
        for (long i = top; i >= 0; i -= 2)
          acc += fundamental_character(s, CharSelector{CharSelector::V_I, i}).chr;
        return acc;
      };
      TorusChar lhs = (plus + chain(n - 2)) * (minus + chain(n - 2));
      TorusChar rhs = chain(n - 1) * chain(n - 1);
      add("(V_n+ + V_n-2 + ...)(V_n- + V_n-2 + ...) = (V_n-1 + ...)^2", lhs == rhs);
      break;
    }
    case RingFamily::O_even: {
      for (int f = 0; f < 2; ++f) {
        TorusChar det = fundamental_character(s, CharSelector{CharSelector::DET, 0}, f).chr;
        TorusChar one(n_torus_vars(s, f), Integer(1));
        add("det^2 = 1 (factor " + std::to_string(f) + ")", det * det == one);
        TorusChar vn =
            fundamental_character(s, CharSelector{CharSelector::V_I, n}, f).chr;
        add("det V_n = V_n (factor " + std::to_string(f) + ")", det * vn == vn);
      }
      break;
    }
    case RingFamily::Pin: {
      for (int f = 0; f < 2; ++f) {
        TorusChar det = fundamental_character(s, CharSelector{CharSelector::DET, 0}, f).chr;
        TorusChar pi = fundamental_character(s, CharSelector{CharSelector::PI, 0}, f).chr;
        TorusChar one(n_torus_vars(s, f), Integer(1));
        add("det^2 = 1 (factor " + std::to_string(f) + ")", det * det == one);
        add("pi det = pi (factor " + std::to_string(f) + ")", pi * det == pi);
      }
      RingSpec spin{RingFamily::Spin, n};
      TorusChar pi0 = fundamental_character(s, CharSelector{CharSelector::PI, 0}, 0).chr;
      TorusChar dplus =
          fundamental_character(spin, CharSelector{CharSelector::DELTA_PLUS, 0}).chr;
      TorusChar dminus =
          fundamental_character(spin, CharSelector{CharSelector::DELTA_MINUS, 0}).chr;
      add("pi restricted to Spin = delta+ + delta-", pi0 == dplus + dminus);
      break;
    }
    default:
      throw MathError("presentations cover SO_even, O_even, and Pin");
  }
  return rep;
}

}  // namespace jrigid
