#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mono/matrix.hpp"

namespace mono {

struct QuiverArrow {
  std::string name, from, to;
};

// One term of a relation: coeff * (path), the path listing arrows in
// application order (["a","b"] means "apply a first, then b").
struct RelTerm {
  Rational coeff;
  std::vector<std::string> arrows;
};

struct QuiverPresentation {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<RelTerm>> relations;
  int path_cap = 64;
};

// Finite-dimensional unital associative algebra over Q, given by structure
// constants: mult[i][j] = coordinates of b_i * b_j. Products compose like
// functions: for paths, b_i * b_j means "apply b_j first, then b_i".
//
// Instances are immutable after construction and shared by pointer.
class Algebra {
 public:
  std::string name;
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> mult;
  std::vector<Rational> unit;
  std::vector<std::string> basis_labels;
  std::optional<QuiverPresentation> provenance;

  // A complete orthogonal idempotent set (sum = unit) and a small set of
  // further elements that together generate the algebra. Hom-space solvers
  // exploit these to cut the intertwiner system down to blocks.
  std::vector<std::vector<Rational>> idempotents;
  std::vector<std::vector<Rational>> generators;

  std::vector<Rational> mult_vec(const std::vector<Rational>& u,
                                 const std::vector<Rational>& v) const;
  // Matrix of left multiplication by the coordinate vector u.
  Matrix left_mult(const std::vector<Rational>& u) const;
  const Matrix& left_mult_basis(int k) const { return left_mults_[k]; }
  const std::vector<Matrix>& left_mult_all() const { return left_mults_; }

  int basis_index(const std::string& label) const;

 private:
  friend std::shared_ptr<const Algebra> make_algebra(Algebra a, bool validate);
  std::vector<Matrix> left_mults_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates (associativity, unit law, idempotent axioms, generator closure)
// and freezes an algebra. Throws InputError on violations.
AlgebraPtr make_algebra(Algebra a, bool validate = true);

// Quotient of the path algebra of q by the two-sided ideal generated by the
// relations. Basis: residues of paths (vertices as trivial paths). Throws
// InputError naming a growing cycle when the quotient is not visibly
// finite-dimensional under q.path_cap.
AlgebraPtr path_algebra(const QuiverPresentation& q);

// Upper triangular matrix algebra T_n(a): basis e_ij (x) b_k for i <= j,
// multiplication (e_ij (x) x)(e_kl (x) y) = delta_jk e_il (x) xy.
AlgebraPtr triangular_algebra(const AlgebraPtr& a, int n);

AlgebraPtr opposite(const AlgebraPtr& a);

// Jacobson radical over Q, computed as the radical of the trace form
// <x,y> = trace(L_x L_y) on the regular representation (char 0).
// Columns of the result are coordinate vectors of a radical basis.
Matrix radical_basis(const Algebra& a);

}  // namespace mono
