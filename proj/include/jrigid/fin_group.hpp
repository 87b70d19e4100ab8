#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jrigid/error.hpp"

namespace jrigid {

// Finite group given by an explicit multiplication table; identity has index
// 0.  Everything in scope has order <= 64, so the group law is verified on
// all triples at construction.
class FinGroup {
 public:
  static FinGroup from_table(std::vector<int> table, int order, std::string tag);
  static FinGroup trivial();
  static FinGroup cyclic(int n);
  static FinGroup elementary_abelian_2(int k);
  static FinGroup s3();
  static FinGroup direct_product(const FinGroup& a, const FinGroup& b);
  // Mini-language: "1", "Z2", "Z12", "E8" (elementary abelian 2^3), "S3",
  // and x-separated products such as "Z2xS3".
  static FinGroup parse(const std::string& spec);

  int order() const { return n_; }
  int mult(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inv_[static_cast<size_t>(a)]; }
  int identity() const { return 0; }
  int conjugate(int g, int x) const { return mult(mult(g, x), inverse(g)); }
  const std::vector<int>& generators() const { return gens_; }
  const std::string& tag() const { return tag_; }
  const std::vector<int>& table() const { return table_; }

  int element_order(int g) const;
  int exponent() const;
  bool is_abelian() const;

  std::vector<std::vector<int>> conjugacy_classes() const;  // class 0 = {identity}
  std::vector<int> centralizer_elements(int g) const;
  std::vector<int> closure(std::vector<int> seed) const;  // sorted subgroup elements
  std::vector<int> commutator_subgroup() const;
  // All subgroups as sorted element lists (order <= 16 only).
  std::vector<std::vector<int>> all_subgroups() const;

  // Direct-product components when this group was built as one.
  bool is_product() const { return static_cast<bool>(left_); }
  const FinGroup& left_factor() const { return *left_; }
  const FinGroup& right_factor() const { return *right_; }
  int pair_index(int a, int b) const;  // product groups only

  bool operator==(const FinGroup& o) const { return n_ == o.n_ && table_ == o.table_; }
  bool operator!=(const FinGroup& o) const { return !(*this == o); }

 private:
  FinGroup() = default;
  void finish_construction();  // checks the law, fills inverses, finds generators

  int n_ = 0;
  std::vector<int> table_;  // row-major n x n
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::string tag_;
  std::shared_ptr<const FinGroup> left_, right_;
};

// A subgroup re-packaged as a standalone group: `group` has its own indexing
// with embed[i] = the parent element behind index i (identity first).
struct Subgroup {
  FinGroup group;
  std::vector<int> embed;
  int index_of_parent(int parent_element) const;
};
Subgroup subgroup_from(const FinGroup& parent, std::vector<int> elements);

// Quotient by a normal subgroup: `proj[g]` is the coset index of g.
struct Quotient {
  FinGroup group;
  std::vector<int> proj;
};
Quotient quotient_by_normal(const FinGroup& g, const std::vector<int>& normal_elements);

// All homomorphisms G -> Z/n, each as the vector of images per element.
std::vector<std::vector<long>> homs_to_cyclic(const FinGroup& g, long n);

}  // namespace jrigid
