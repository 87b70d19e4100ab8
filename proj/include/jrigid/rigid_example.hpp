#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jrigid/classical.hpp"
#include "jrigid/half_laurent.hpp"
#include "jrigid/int_linalg.hpp"

namespace jrigid {

// One two-sided-cell block of a pairing fixture: the unipotent class label,
// its a-value, and the number of basis elements the cell contributes.
struct RigidBlock {
  std::string cell;
  int a_value = 0;
  int size = 0;
};

// Finite pairing fixture between a basis alpha of representations and a basis
// beta of asymptotic-algebra elements.  b is the integer Gram matrix of the
// pairing; phi, when present, is the upper-triangular change of basis whose
// columns express the standard modules in the alpha basis (entries are
// Laurent polynomials in q^{1/2}).
struct RigidExample {
  std::string name;
  std::vector<std::string> alpha_labels;
  std::vector<std::string> beta_labels;
  linalg::IMat b;
  std::optional<linalg::Mat<HalfLaurent>> phi;
  std::vector<RigidBlock> blocks;

  int size() const { return static_cast<int>(alpha_labels.size()); }
};

// Directory holding the bundled fixture files: the JRIGID_DATA_DIR
// environment variable if set, else the compiled-in default, else "data".
std::string data_directory();

// Load a bundled fixture by name ("sl2", "pgl2", "so7") or from an explicit
// JSON file.  Shape and parse errors throw MathError.
RigidExample load_example(const std::string& name);
RigidExample load_example_file(const std::string& path);

// Structural facts about a fixture, checked exactly.
struct StructureReport {
  bool block_diagonal = false;     // b vanishes outside the diagonal blocks
  std::vector<int> block_sizes;    // sizes in the fixture's printed order
  Integer det_b = 0;               // exact integer determinant of b
  bool det_nonzero = false;
  bool a_values_decreasing = false;  // printed order sorts by decreasing a
  bool has_phi = false;
  bool phi_upper_triangular = false;  // vacuously true when phi is absent
  std::vector<std::string> violations;

  bool ok() const;
};

StructureReport check_structure(const RigidExample& e);

// det(phi^T b) as an exact Laurent polynomial in q^{1/2}.  Requires phi.
HalfLaurent rigid_determinant(const RigidExample& e);

// Divisibility of the pairing determinant into a power of the Poincare
// polynomial of the named Weyl group: the determinant's zeros must lie among
// roots of the length generating function.
struct VanishingReport {
  bool pass = false;
  long power = 0;          // least k with det | P^k (up to monomial units)
  std::string offending;   // diagnostic when the division fails
};

VanishingReport vanishing_vs_poincare(const RigidExample& e, const LieType& t);

}  // namespace jrigid
