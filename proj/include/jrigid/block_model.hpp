#pragma once

#include <string>
#include <vector>

#include "jrigid/cyclotomic.hpp"
#include "jrigid/torus_char.hpp"

namespace jrigid {

// Block matrix algebra over the rank-one character ring: entries of FULL
// blocks range over the symmetric characters of even weight, entries of ODD
// blocks over the odd submodule.  Matrix multiplication closes because the
// tag pattern is parity-coherent.
enum class BlockTag { FULL, ODD };

struct BlockAlgebraModel {
  std::string name;
  std::vector<int> block_sizes;
  std::vector<std::vector<BlockTag>> tags;  // per block pair

  int n_blocks() const { return static_cast<int>(block_sizes.size()); }
  int dim() const;
  int block_of(int index) const;
  BlockTag tag_at(int row, int col) const;
};

// The two shipped fixtures: a 2x2 model with scalar blocks, and the
// (3+9)-block model; plus a degenerate single-block model with no ODD part.
BlockAlgebraModel sl2_j0_model();
BlockAlgebraModel bdd_sp6_model();
BlockAlgebraModel full_matrix_model(int n);
BlockAlgebraModel model_by_name(const std::string& name);

struct BlockElement {
  BlockAlgebraModel model;
  std::vector<std::vector<TorusChar>> entries;
};

// Membership of a one-variable character in a block's entry ring.
bool entry_admissible(BlockTag tag, const TorusChar& chr);

// Validates shape and every entry's membership predicate.
BlockElement make_element(const BlockAlgebraModel& model,
                          std::vector<std::vector<TorusChar>> entries);
BlockElement identity_element(const BlockAlgebraModel& model);
BlockElement zero_element(const BlockAlgebraModel& model);

// Ordinary matrix product; closure is asserted entry by entry.
BlockElement model_multiply(const BlockElement& a, const BlockElement& b);

// Evaluation of an integral-weight character at z = z0.
Cyclotomic eval_at_point(const TorusChar& chr, const Cyclotomic& z0);

struct FiberReport {
  long image_dim;       // dimension of the span of the evaluated family
  bool block_diagonal;  // every nonzero member lands in the diagonal blocks
  long family_size;     // size of the spanning family used
};

// Dimension of the image of the fiber map at z0, from the spanning family of
// products of at most two generators (matrix units times V(1), V(2), 1).
FiberReport fiber_image_rank(const BlockAlgebraModel& model, const Cyclotomic& z0);

// Evaluation classes x = z + z^{-1} where the fiber map degenerates: the
// vanishing locus of the odd generator V(1), i.e. x = 0, for the shipped
// fixtures; empty for a model with no ODD blocks.
std::vector<Cyclotomic> unique_nonisomorphism_locus(const BlockAlgebraModel& model);

}  // namespace jrigid
