#include "jrigid/block_model.hpp"

#include <map>

#include "jrigid/error.hpp"
#include "jrigid/int_linalg.hpp"
#include "jrigid/rep_ring.hpp"

namespace jrigid {

namespace {

void validate_model(const BlockAlgebraModel& m) {
  require(!m.block_sizes.empty(), "model needs at least one block");
  for (int s : m.block_sizes) require(s >= 1, "block sizes must be positive");
  int nb = m.n_blocks();
  require(static_cast<int>(m.tags.size()) == nb, "tag table shape mismatch");
  for (const auto& row : m.tags)
    require(static_cast<int>(row.size()) == nb, "tag table shape mismatch");
  // Parity coherence makes multiplication close: tag adds like Z/2.
  auto parity = [&](int i, int j) { return m.tags[i][j] == BlockTag::ODD ? 1 : 0; };
  for (int i = 0; i < nb; ++i) {
    require(parity(i, i) == 0, "diagonal blocks must be FULL");
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nb; ++k)
        require((parity(i, j) + parity(j, k)) % 2 == parity(i, k),
                "tag pattern is not parity-coherent");
  }
}

TorusChar rank1_char(long k) {
  return fundamental_character(make_ring_spec(RingFamily::SL, 1),
                               CharSelector{CharSelector::V_K, k})
      .chr;
}

}  // namespace

int BlockAlgebraModel::dim() const {
  int d = 0;
  for (int s : block_sizes) d += s;
  return d;
}

int BlockAlgebraModel::block_of(int index) const {
  int acc = 0;
  for (int b = 0; b < n_blocks(); ++b) {
    acc += block_sizes[static_cast<size_t>(b)];
    if (index < acc) return b;
  }
  throw MathError("index out of range");
}

BlockTag BlockAlgebraModel::tag_at(int row, int col) const {
  return tags[static_cast<size_t>(block_of(row))][static_cast<size_t>(block_of(col))];
}

BlockAlgebraModel sl2_j0_model() {
  BlockAlgebraModel m{"sl2-j0",
                      {1, 1},
                      {{BlockTag::FULL, BlockTag::ODD}, {BlockTag::ODD, BlockTag::FULL}}};
  validate_model(m);
  return m;
}

BlockAlgebraModel bdd_sp6_model() {
  BlockAlgebraModel m{"bdd-sp6",
                      {3, 9},
                      {{BlockTag::FULL, BlockTag::ODD}, {BlockTag::ODD, BlockTag::FULL}}};
  validate_model(m);
  return m;
}

BlockAlgebraModel full_matrix_model(int n) {
  BlockAlgebraModel m{"full-" + std::to_string(n), {n}, {{BlockTag::FULL}}};
  validate_model(m);
  return m;
}

BlockAlgebraModel model_by_name(const std::string& name) {
  if (name == "sl2-j0") return sl2_j0_model();
  if (name == "bdd-sp6") return bdd_sp6_model();
  throw MathError("unknown model: " + name);
}

bool entry_admissible(BlockTag tag, const TorusChar& chr) {
  if (chr.n_vars() != 1 || !chr.has_integral_exponents()) return false;
  if (chr.invert_var(0) != chr) return false;
  return tag == BlockTag::FULL ? chr.total_degree_parity_is(0) : in_odd_module(chr);
}

BlockElement make_element(const BlockAlgebraModel& model,
                          std::vector<std::vector<TorusChar>> entries) {
  validate_model(model);
  int d = model.dim();
  require(static_cast<int>(entries.size()) == d, "entry matrix shape mismatch");
  for (int r = 0; r < d; ++r) {
    require(static_cast<int>(entries[static_cast<size_t>(r)].size()) == d,
            "entry matrix shape mismatch");
    for (int c = 0; c < d; ++c)
      require(entry_admissible(model.tag_at(r, c), entries[static_cast<size_t>(r)][static_cast<size_t>(c)]),
              "entry outside its block's ring at (" + std::to_string(r) + "," +
                  std::to_string(c) + ")");
  }
  return BlockElement{model, std::move(entries)};
}

BlockElement zero_element(const BlockAlgebraModel& model) {
  int d = model.dim();
  std::vector<std::vector<TorusChar>> e(static_cast<size_t>(d),
                                        std::vector<TorusChar>(static_cast<size_t>(d), TorusChar(1)));
  return make_element(model, std::move(e));
}

BlockElement identity_element(const BlockAlgebraModel& model) {
  int d = model.dim();
  auto e = zero_element(model).entries;
  for (int r = 0; r < d; ++r)
    e[static_cast<size_t>(r)][static_cast<size_t>(r)] = TorusChar(1, Integer(1));
  return make_element(model, std::move(e));
}

BlockElement model_multiply(const BlockElement& a, const BlockElement& b) {
  require(a.model.name == b.model.name && a.model.block_sizes == b.model.block_sizes,
          "model mismatch");
  int d = a.model.dim();
  std::vector<std::vector<TorusChar>> out(static_cast<size_t>(d),
                                          std::vector<TorusChar>(static_cast<size_t>(d), TorusChar(1)));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      TorusChar acc(1);
      for (int k = 0; k < d; ++k)
        acc += a.entries[static_cast<size_t>(r)][static_cast<size_t>(k)] *
               b.entries[static_cast<size_t>(k)][static_cast<size_t>(c)];
      out[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::move(acc);
    }
  return make_element(a.model, std::move(out));  // asserts closure
}

Cyclotomic eval_at_point(const TorusChar& chr, const Cyclotomic& z0) {
  require(chr.n_vars() == 1, "one-variable characters only");
  require(chr.has_integral_exponents(), "integral weights only");
  Cyclotomic out{Rational(0)};
  for (const auto& [key, coeff] : chr.terms()) {
    long k = key[0] / 2;
    Cyclotomic zk = k >= 0 ? z0.pow(k) : z0.inverse().pow(-k);
    out = out + Rational(coeff) * zk;
  }
  return out;
}

FiberReport fiber_image_rank(const BlockAlgebraModel& model, const Cyclotomic& z0) {
  validate_model(model);
  require(!z0.is_zero(), "evaluation point must be nonzero");
  int d = model.dim();
  // Generator values at z0, per matrix position: 1 and V(2) on FULL
  // positions, V(1) on ODD positions.
  Cyclotomic v1 = eval_at_point(rank1_char(1), z0);
  Cyclotomic v2 = eval_at_point(rank1_char(2), z0);
  Cyclotomic one{Rational(1)};
  auto values_at = [&](int r, int c) {
    return model.tag_at(r, c) == BlockTag::FULL ? std::vector<Cyclotomic>{one, v2}
                                                : std::vector<Cyclotomic>{v1};
  };
  // Every generator and every product of two is a scalar times a matrix
  // unit, so the span is determined position by position.
  std::map<std::pair<int, int>, Cyclotomic> covered;
  long family_size = 0;
  bool block_diagonal = true;
  auto record = [&](int r, int c, const Cyclotomic& value) {
    ++family_size;
    if (value.is_zero()) return;
    if (model.block_of(r) != model.block_of(c)) block_diagonal = false;
    covered.emplace(std::make_pair(r, c), value);
  };
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      for (const Cyclotomic& g : values_at(r, c)) record(r, c, g);
      for (int k = 0; k < d; ++k)  // products E_{rc} g . E_{ck} h = gh E_{rk}
        for (const Cyclotomic& g : values_at(r, c))
          for (const Cyclotomic& h : values_at(c, k)) record(r, k, g * h);
    }
  // Exact rank of the evaluated members, one representative per position.
  linalg::Mat<Cyclotomic> rows(static_cast<int>(covered.size()), d * d);
  int row = 0;
  for (const auto& [pos, value] : covered) {
    rows.at(row, pos.first * d + pos.second) = value;
    ++row;
  }
  return FiberReport{linalg::rank(rows), block_diagonal, family_size};
}

std::vector<Cyclotomic> unique_nonisomorphism_locus(const BlockAlgebraModel& model) {
  validate_model(model);
  bool has_odd = false;
  for (const auto& row : model.tags)
    for (BlockTag t : row) has_odd = has_odd || t == BlockTag::ODD;
  if (!has_odd) return {};
  require(model.name == "sl2-j0" || model.name == "bdd-sp6", "unsupported model");
  // The off-diagonal entries are multiples of V(1) = z + z^{-1}, which
  // vanishes exactly on the class x = z + z^{-1} = 0, i.e. z^2 = -1.
  return {Cyclotomic(Rational(0))};
}

}  // namespace jrigid
