#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jrigid/fin_group.hpp"

namespace jrigid {

// Classical families; rank n means C_n = Sp_{2n}, B_n = SO_{2n+1}, D_n =
// SO_{2n}, A_n = SL_{n+1}.  The type names the group the unipotent lives in.
enum class Family { A, B, C, D };

struct LieType {
  Family family;
  int rank;
};

LieType make_lie_type(Family f, int rank);
LieType parse_lie_type(const std::string& family, int rank);
std::string family_name(Family f);
// Size of the partitions labelling unipotent classes: n+1, 2n+1, 2n, 2n.
long partition_size(const LieType& t);
long lie_rank(const LieType& t);

class Partition {
 public:
  explicit Partition(std::vector<long> parts);
  const std::vector<long>& parts() const { return parts_; }
  long sum() const;
  std::vector<long> dual() const;  // column lengths
  // (value, multiplicity) pairs, values strictly decreasing.
  std::vector<std::pair<long, long>> with_multiplicities() const;
  std::string str() const;  // "2,2,2"
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  std::vector<long> parts_;
};

Partition parse_partition(const std::string& text);

// Parity test: sums to partition_size(t) and, in type C, odd parts have even
// multiplicity; in types B and D, even parts have even multiplicity.  Type A
// imposes no parity condition.
bool validate_partition(const LieType& t, const Partition& u);

// Reductive centralizer of the unipotent class, as a product of classical
// factors with an optional simultaneous-determinant condition.
struct CentralizerFactor {
  std::string kind;  // "Sp", "O", "SO", "Z2"
  long size;
};

struct CentralizerDescriptor {
  std::vector<CentralizerFactor> factors;
  bool det_condition;       // the S(...)-constraint is in force
  FinGroup component_group; // elementary abelian 2-group
  bool very_even;           // type D, all parts even: two classes share this data
  long reductive_dimension() const;
};

CentralizerDescriptor centralizer(const LieType& t, const Partition& u);

// Dimension of the full centralizer from the partition formula
// (sum of squared column lengths, corrected by the count of odd parts).
long centralizer_dimension(const LieType& t, const Partition& u);
// The same dimension computed independently as dim ker ad(u) on the Lie
// algebra, with u assembled block-wise and the algebra realized inside
// matrices preserving an explicit bilinear form.
long ad_kernel_dimension(const LieType& t, const Partition& u);
// Springer fibre dimension (dim Z - rank)/2.
long a_value(const LieType& t, const Partition& u);

// Dominance order: a >= b (sum of the first k parts of a dominates b's).
bool dominates(const Partition& a, const Partition& b);
std::vector<Partition> valid_partitions(const LieType& t);

// One admissible rewriting u = (GL-paired parts) + tail: per part value,
// m = m' + m'' with m' even (the GL blocks) and m'' in {0,1,2} of the same
// parity as m, forced to 0 for the parity that only pairs into GL blocks
// (odd parts inside Sp, even parts inside SO).  The tail is distinguished in
// a two-factor semisimple centralizer (each part survives at most twice).
struct LeviPart {
  long part;
  long m_prime;
  long m_double_prime;
};

struct LeviCandidate {
  std::vector<LeviPart> split;
  std::vector<long> gl_blocks;   // one entry a per GL_a block (m'/2 copies)
  std::vector<long> tail;        // weakly decreasing
  std::string tail_group_kind;   // classical tail on the group side
  long tail_group_size;
  bool rules_consistent;         // literal per-family statement == parity rule
};

std::vector<LeviCandidate> levi_candidates(const LieType& t, const Partition& u);

}  // namespace jrigid
