#include "jrigid/rigid_example.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "jrigid/error.hpp"
#include "jrigid/weyl.hpp"

namespace jrigid {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& key) {
  std::vector<std::string> out;
  for (const auto& item : j.at(key)) out.push_back(item.get<std::string>());
  return out;
}

RigidExample example_from_json(const json& j) {
  require(j.is_object(), "fixture must be a JSON object");
  RigidExample e;
  e.name = j.at("name").get<std::string>();
  e.alpha_labels = string_list(j, "alpha_labels");
  e.beta_labels = string_list(j, "beta_labels");
  const int n = static_cast<int>(e.alpha_labels.size());
  require(n > 0, "fixture has no basis labels");
  require(static_cast<int>(e.beta_labels.size()) == n,
          "alpha and beta label lists differ in length");

  const json& rows = j.at("B");
  require(static_cast<int>(rows.size()) == n, "B has the wrong number of rows");
  e.b = linalg::IMat(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    require(static_cast<int>(row.size()) == n, "B has a row of the wrong length");
    for (int k = 0; k < n; ++k) e.b.at(i, k) = Integer(row.at(k).get<long>());
  }

  int total = 0;
  for (const auto& bj : j.at("blocks")) {
    RigidBlock blk;
    blk.cell = bj.at("cell").get<std::string>();
    blk.a_value = bj.at("a_value").get<int>();
    blk.size = bj.at("size").get<int>();
    require(blk.size > 0, "block of nonpositive size");
    total += blk.size;
    e.blocks.push_back(blk);
  }
  require(total == n, "block sizes do not sum to the matrix size");

  if (j.contains("phi")) {
    const json& prows = j.at("phi");
    require(static_cast<int>(prows.size()) == n, "phi has the wrong number of rows");
    linalg::Mat<HalfLaurent> p(n, n);
    for (int i = 0; i < n; ++i) {
      const json& row = prows.at(i);
      require(static_cast<int>(row.size()) == n, "phi has a row of the wrong length");
      for (int k = 0; k < n; ++k) p.at(i, k) = HalfLaurent::parse(row.at(k).get<std::string>());
    }
    e.phi = std::move(p);
  }
  return e;
}

}  // namespace

std::string data_directory() {
  if (const char* env = std::getenv("JRIGID_DATA_DIR")) {
    if (*env != '\0') return env;
  }
#ifdef JRIGID_DATA_DIR
  return JRIGID_DATA_DIR;
#else
  return "data";
#endif
}

RigidExample load_example_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw MathError("malformed JSON in " + path + ": " + ex.what());
  }
  try {
    return example_from_json(j);
  } catch (const json::exception& ex) {
    throw MathError("bad fixture shape in " + path + ": " + ex.what());
  }
}

RigidExample load_example(const std::string& name) {
  require(name == "sl2" || name == "pgl2" || name == "so7",
          "unknown example '" + name + "' (expected sl2, pgl2, or so7)");
  return load_example_file(data_directory() + "/rigid/" + name + ".json");
}

bool StructureReport::ok() const { return violations.empty(); }

StructureReport check_structure(const RigidExample& e) {
  StructureReport r;
  const int n = e.size();
  auto flag = [&r](const std::string& what) { r.violations.push_back(what); };

  if (static_cast<int>(e.beta_labels.size()) != n) flag("label lists differ in length");
  if (e.b.rows() != n || e.b.cols() != n) {
    flag("B is not n x n");
    return r;
  }

  int total = 0;
  for (const auto& blk : e.blocks) {
    r.block_sizes.push_back(blk.size);
    total += blk.size;
  }
  if (total != n) {
    flag("block sizes do not sum to the matrix size");
    return r;
  }

  r.a_values_decreasing = true;
  for (std::size_t i = 1; i < e.blocks.size(); ++i)
    if (e.blocks[i].a_value > e.blocks[i - 1].a_value) r.a_values_decreasing = false;
  if (!r.a_values_decreasing) flag("block a-values are not weakly decreasing");

  // Entries of b outside the diagonal blocks must vanish.
  r.block_diagonal = true;
  std::vector<int> block_of(n);
  for (int start = 0, bi = 0; bi < static_cast<int>(e.blocks.size()); ++bi) {
    for (int k = 0; k < e.blocks[bi].size; ++k) block_of[start + k] = bi;
    start += e.blocks[bi].size;
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (block_of[i] != block_of[k] && e.b.at(i, k) != 0) r.block_diagonal = false;
  if (!r.block_diagonal) flag("B has a nonzero entry outside the diagonal blocks");

  r.det_b = linalg::det_bareiss(e.b);
  r.det_nonzero = (r.det_b != 0);
  if (!r.det_nonzero) flag("B is singular");

  r.has_phi = e.phi.has_value();
  r.phi_upper_triangular = true;
  if (r.has_phi) {
    const auto& p = *e.phi;
    if (p.rows() != n || p.cols() != n) {
      flag("phi is not n x n");
      r.phi_upper_triangular = false;
    } else {
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k)
          if (!p.at(i, k).is_zero()) r.phi_upper_triangular = false;
        if (p.at(i, i).is_zero()) r.phi_upper_triangular = false;
      }
      if (!r.phi_upper_triangular)
        flag("phi is not upper triangular with nonzero diagonal");
    }
  }
  return r;
}

HalfLaurent rigid_determinant(const RigidExample& e) {
  require(e.phi.has_value(),
          "fixture '" + e.name + "' carries no change-of-basis matrix");
  const int n = e.size();
  const auto& p = *e.phi;
  require(p.rows() == n && p.cols() == n && e.b.rows() == n && e.b.cols() == n,
          "fixture matrices are not n x n");
  linalg::Mat<HalfLaurent> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      HalfLaurent acc;
      for (int t = 0; t < n; ++t)
        acc = acc + p.at(t, i) * HalfLaurent(Rational(e.b.at(t, k)));
      m.at(i, k) = acc;
    }
  return linalg::det_cofactor(m);
}

VanishingReport vanishing_vs_poincare(const RigidExample& e, const LieType& t) {
  HalfLaurent det = rigid_determinant(e);
  require(!det.is_zero(), "pairing determinant is identically zero");
  HalfLaurent p = poincare_product(weyl_of(t));
  // A root of det has multiplicity at most the v-degree span, so if det
  // divides any power of p it divides p^span.
  const long bound = std::max<long>(1, det.max_key() - det.min_key());
  VanishingReport r;
  if (auto k = poly_divides_power(det, p, bound)) {
    r.pass = true;
    r.power = *k;
  } else {
    r.offending = "det = " + det.str() + " does not divide any power of " +
                  p.str() + " up to exponent " + std::to_string(bound);
  }
  return r;
}

}  // namespace jrigid
