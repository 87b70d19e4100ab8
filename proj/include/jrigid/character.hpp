#pragma once

#include <memory>
#include <vector>

#include "jrigid/cyclotomic.hpp"
#include "jrigid/fin_group.hpp"
#include "jrigid/group_action.hpp"

namespace jrigid {

// Complete table of irreducible characters, exact in cyclotomic arithmetic.
// Row/column orthogonality and sum of squared degrees are verified at
// construction; failure throws MathError.
struct CharacterTable {
  FinGroup group;
  std::vector<std::vector<int>> classes;  // conjugacy classes, identity class first
  std::vector<int> class_of;              // element -> class index
  std::vector<std::vector<Cyclotomic>> chars;  // chars[i][c] = chi_i on class c

  int n_classes() const { return static_cast<int>(classes.size()); }
  int n_chars() const { return static_cast<int>(chars.size()); }
  long degree(int i) const;                       // chi_i(identity)
  const Cyclotomic& value(int i, int element) const {
    return chars[static_cast<size_t>(i)][static_cast<size_t>(class_of[static_cast<size_t>(element)])];
  }
  // <a, b> = (1/|G|) sum_g a(g) conj(b(g)) for class functions given by values
  // per class.
  Cyclotomic inner(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const;
  int index_of_trivial() const;
};

// Memoized per multiplication table; safe for concurrent readers.
std::shared_ptr<const CharacterTable> character_table(const FinGroup& g);

// Multiplicity of each irreducible character in C[points]; entries are
// nonnegative integers.
std::vector<long> decompose_permutation_character(const GAction& a);

}  // namespace jrigid
