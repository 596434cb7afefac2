#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhydro/kernels.hpp"
#include "qhydro/qnumerics.hpp"
#include "qhydro/repspace.hpp"

namespace qhydro {

using BasisPtr = std::shared_ptr<const TruncatedBasis>;

inline BasisPtr make_basis(int n_max) { return std::make_shared<const TruncatedBasis>(n_max); }

/// Dense operator matrix on an explicit truncated basis.
class LabeledOperator {
 public:
  LabeledOperator(BasisPtr basis, kernels::Matrix matrix, std::string name);

  const TruncatedBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const kernels::Matrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }

  /// <row|A|col> by states; zero if either lies outside the box.
  kernels::Complex element(const TwoModeState& row, const TwoModeState& col) const;
  bool is_diagonal() const;

  LabeledOperator operator*(const LabeledOperator& rhs) const;
  LabeledOperator operator+(const LabeledOperator& rhs) const;
  LabeledOperator operator-(const LabeledOperator& rhs) const;
  LabeledOperator scaled(kernels::Complex factor, std::string name) const;
  LabeledOperator renamed(std::string name) const;

 private:
  void require_same_basis(const LabeledOperator& other) const;

  BasisPtr basis_;
  kernels::Matrix matrix_;
  std::string name_;
};

enum class Mode { Plus, Minus };
enum class LadderKind { Lower, Raise };

/// a_±, a_±^+ acting as a_+|n1 n2> = sqrt([n1]) |n1-1, n2>, a_+^+|n1 n2> = sqrt([n1+1]) |n1+1, n2>
/// (and the same on n2 for the minus mode). Raising out of the box gives a zero column.
LabeledOperator build_ladder(const BasisPtr& basis, Mode mode, LadderKind kind, const QParam& q);

/// N_1 or N_2.
LabeledOperator build_number(const BasisPtr& basis, Mode mode);

/// q^{N} for the given mode.
LabeledOperator build_q_power_number(const BasisPtr& basis, Mode mode, const QParam& q);

/// Identity on the basis.
LabeledOperator build_identity(const BasisPtr& basis);

/// [A]_q for a diagonal operator A. Throws DomainError if A is not diagonal.
LabeledOperator q_bracket(const LabeledOperator& diagonal, const QParam& q, std::string name);

struct SuQ2 {
  LabeledOperator j_minus;
  LabeledOperator j_3;
  LabeledOperator j_plus;
};

struct SuQ11 {
  LabeledOperator k_minus;
  LabeledOperator k_3;
  LabeledOperator k_plus;
};

/// k_+^+ = -a_+^+ a_+^+, k_-^+ = a_-^+ a_-^+, k_-^- = -a_+ a_+, k_+^- = a_- a_-.
struct ShiftBilinears {
  LabeledOperator k_pp;
  LabeledOperator k_pm;
  LabeledOperator k_mm;
  LabeledOperator k_mp;
};

/// J_- = a_-^+ a_+, J_3 = (N1 - N2)/2, J_+ = a_+^+ a_-.
SuQ2 build_su_q2(const BasisPtr& basis, const QParam& q);
/// The same generators from their closed-form action on |j m>.
SuQ2 build_su_q2_direct(const BasisPtr& basis, const QParam& q);

/// J^2 = (J_+J_- + J_-J_+)/2 + ([2]/2) [J_3]^2.
LabeledOperator build_casimir(const BasisPtr& basis, const QParam& q);

/// K_- = a_+ a_-, K_3 = (N1 + N2 + 1)/2, K_+ = a_+^+ a_-^+.
SuQ11 build_su_q11(const BasisPtr& basis, const QParam& q);
SuQ11 build_su_q11_direct(const BasisPtr& basis, const QParam& q);

ShiftBilinears build_shift_bilinears(const BasisPtr& basis, const QParam& q);

/// AB - BA. Throws DomainError on basis mismatch.
LabeledOperator commutator(const LabeledOperator& a, const LabeledOperator& b);

struct RelationTerm {
  std::string expression;
  double residual = 0.0;
};

struct RelationReport {
  std::string relation_name;
  double max_interior_residual = 0.0;
  std::size_t interior_dimension = 0;
  QParam q_used;
  std::vector<RelationTerm> terms;
};

/// Budget used for all quadratic relation checks.
inline constexpr int kQuadraticShiftBudget = 2;
/// Budget used for the so(3,2) closure.
inline constexpr int kClosureShiftBudget = 4;

RelationReport check_qboson_relations(const BasisPtr& basis, const QParam& q);
RelationReport check_su_q2_relations(const BasisPtr& basis, const QParam& q);
RelationReport check_su_q11_relations(const BasisPtr& basis, const QParam& q);
/// Max interior deviation between bilinear products and closed-form matrix elements.
RelationReport check_construction_paths(const BasisPtr& basis, const QParam& q);

struct CasimirBlock {
  int two_j = 0;
  double eigenvalue = 0.0;  // worst eigenvalue of the block
  double expected = 0.0;    // [j][j+1]
  double deviation = 0.0;
};

/// Eigenvalues of J^2 on each j block with 2j <= n_max.
std::vector<CasimirBlock> casimir_block_spectrum(const BasisPtr& basis, const QParam& q);

struct ClosureReport {
  double max_residual = 0.0;
  std::string worst_pair;
  std::size_t interior_dimension = 0;
};

/// Projects every pairwise commutator of the ten bilinears onto their span
/// (plus identity) on the budget-4 interior and returns the worst residual.
ClosureReport so32_closure(const BasisPtr& basis, const QParam& q);
double so32_closure_residual(const BasisPtr& basis, const QParam& q);

}  // namespace qhydro
