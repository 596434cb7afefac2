#include "qhydro/operators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "qhydro/errors.hpp"

namespace qhydro {

using kernels::Complex;
using kernels::Matrix;
using kernels::Real;

namespace {

Real sqrt_q(Real x, const QParam& q) { return std::sqrt(std::max(Real(0), q_real_extended(x, q))); }

// sqrt([x][y]) for the closed-form matrix elements.
Real sqrt_qq(Real x, Real y, const QParam& q) {
  return std::sqrt(std::max(Real(0), q_real_extended(x, q) * q_real_extended(y, q)));
}

Matrix zeros(const TruncatedBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  return Matrix::Zero(n, n);
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Fills a matrix column by column from a per-state action returning (target, amplitude).
template <typename Action>
Matrix from_action(const TruncatedBasis& basis, Action action) {
  Matrix m = zeros(basis);
  for (std::size_t c = 0; c < basis.dimension(); ++c) {
    const auto [target, amplitude] = action(basis.state(c));
    if (amplitude == Real(0)) continue;
    if (auto r = basis.index_of(target)) m(idx(*r), idx(c)) = amplitude;
  }
  return m;
}

template <typename F>
LabeledOperator diagonal(const BasisPtr& basis, F value, std::string name) {
  Matrix m = zeros(*basis);
  for (std::size_t i = 0; i < basis->dimension(); ++i) m(idx(i), idx(i)) = value(basis->state(i));
  return LabeledOperator(basis, std::move(m), std::move(name));
}

RelationReport make_report(std::string name, const BasisPtr& basis, const QParam& q,
                           const std::vector<std::pair<std::string, LabeledOperator>>& residuals) {
  const auto interior = interior_subspace(*basis, kQuadraticShiftBudget);
  RelationReport report{std::move(name), 0.0, interior.size(), q, {}};
  for (const auto& [expr, op] : residuals) {
    const double r = kernels::max_abs_on(op.matrix(), interior);
    report.terms.push_back({expr, r});
    report.max_interior_residual = std::max(report.max_interior_residual, r);
  }
  return report;
}

}  // namespace

LabeledOperator::LabeledOperator(BasisPtr basis, Matrix matrix, std::string name)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), name_(std::move(name)) {
  if (!basis_) throw DomainError("operator requires a basis");
  const auto n = static_cast<Eigen::Index>(basis_->dimension());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw DomainError("operator matrix dimension does not match its basis");
  }
  if (!matrix_.allFinite()) throw DomainError("operator " + name_ + " has non-finite entries");
}

Complex LabeledOperator::element(const TwoModeState& row, const TwoModeState& col) const {
  const auto r = basis_->index_of(row);
  const auto c = basis_->index_of(col);
  if (!r || !c) return Complex(0);
  return matrix_(idx(*r), idx(*c));
}

bool LabeledOperator::is_diagonal() const {
  for (Eigen::Index c = 0; c < matrix_.cols(); ++c)
    for (Eigen::Index r = 0; r < matrix_.rows(); ++r)
      if (r != c && matrix_(r, c) != Complex(0)) return false;
  return true;
}

void LabeledOperator::require_same_basis(const LabeledOperator& other) const {
  if (!(*basis_ == *other.basis_)) {
    throw DomainError("operators " + name_ + " and " + other.name_ + " live on different bases");
  }
}

LabeledOperator LabeledOperator::operator*(const LabeledOperator& rhs) const {
  require_same_basis(rhs);
  return {basis_, kernels::multiply(matrix_, rhs.matrix_), name_ + " " + rhs.name_};
}

LabeledOperator LabeledOperator::operator+(const LabeledOperator& rhs) const {
  require_same_basis(rhs);
  return {basis_, matrix_ + rhs.matrix_, name_ + " + " + rhs.name_};
}

LabeledOperator LabeledOperator::operator-(const LabeledOperator& rhs) const {
  require_same_basis(rhs);
  return {basis_, matrix_ - rhs.matrix_, name_ + " - " + rhs.name_};
}

LabeledOperator LabeledOperator::scaled(Complex factor, std::string name) const {
  return {basis_, matrix_ * factor, std::move(name)};
}

LabeledOperator LabeledOperator::renamed(std::string name) const { return {basis_, matrix_, std::move(name)}; }

LabeledOperator build_ladder(const BasisPtr& basis, Mode mode, LadderKind kind, const QParam& q) {
  q.require_real("q-boson ladder operators");
  const bool plus = mode == Mode::Plus;
  const bool lower = kind == LadderKind::Lower;
  Matrix m = from_action(*basis, [&](const TwoModeState& s) {
    const int n = plus ? s.n1 : s.n2;
    const int step = lower ? -1 : 1;
    const Real amp = lower ? sqrt_q(n, q) : sqrt_q(n + 1, q);
    TwoModeState t = s;
    (plus ? t.n1 : t.n2) += step;
    return std::pair{t, amp};
  });
  std::string name = std::string("a") + (plus ? "+" : "-") + (lower ? "" : "^+");
  return {basis, std::move(m), std::move(name)};
}

LabeledOperator build_number(const BasisPtr& basis, Mode mode) {
  const bool plus = mode == Mode::Plus;
  return diagonal(basis, [plus](const TwoModeState& s) { return Complex(plus ? s.n1 : s.n2); },
                  plus ? "N1" : "N2");
}

LabeledOperator build_q_power_number(const BasisPtr& basis, Mode mode, const QParam& q) {
  const bool plus = mode == Mode::Plus;
  return diagonal(
      basis, [&](const TwoModeState& s) { return std::exp(Real(plus ? s.n1 : s.n2) * q.log_extended()); },
      plus ? "q^N1" : "q^N2");
}

LabeledOperator build_identity(const BasisPtr& basis) {
  return diagonal(basis, [](const TwoModeState&) { return Complex(1); }, "1");
}

LabeledOperator q_bracket(const LabeledOperator& diag, const QParam& q, std::string name) {
  if (!diag.is_diagonal()) throw DomainError("q_bracket needs a diagonal operator, got " + diag.name());
  const Matrix& m = diag.matrix();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, i) = q_number_extended(m(i, i).real(), q);
  return {diag.basis_ptr(), std::move(out), std::move(name)};
}

SuQ2 build_su_q2(const BasisPtr& basis, const QParam& q) {
  const auto ap = build_ladder(basis, Mode::Plus, LadderKind::Lower, q);
  const auto ap_dag = build_ladder(basis, Mode::Plus, LadderKind::Raise, q);
  const auto am = build_ladder(basis, Mode::Minus, LadderKind::Lower, q);
  const auto am_dag = build_ladder(basis, Mode::Minus, LadderKind::Raise, q);
  const auto n1 = build_number(basis, Mode::Plus);
  const auto n2 = build_number(basis, Mode::Minus);
  return {(am_dag * ap).renamed("J-"), (n1 - n2).scaled(Real(0.5), "J3"), (ap_dag * am).renamed("J+")};
}

SuQ2 build_su_q2_direct(const BasisPtr& basis, const QParam& q) {
  q.require_real("su_q(2) generators");
  const auto& b = *basis;
  Matrix jm = from_action(b, [&](const TwoModeState& s) {
    const auto l = modes_to_jm(s);
    const Real amp = sqrt_qq(l.j() + l.m(), l.j() - l.m() + 1, q);
    return std::pair{TwoModeState{(l.two_j + l.two_m - 2) / 2, (l.two_j - l.two_m + 2) / 2}, amp};
  });
  Matrix jp = from_action(b, [&](const TwoModeState& s) {
    const auto l = modes_to_jm(s);
    const Real amp = sqrt_qq(l.j() - l.m(), l.j() + l.m() + 1, q);
    return std::pair{TwoModeState{(l.two_j + l.two_m + 2) / 2, (l.two_j - l.two_m - 2) / 2}, amp};
  });
  auto j3 = diagonal(basis, [](const TwoModeState& s) { return Complex(modes_to_jm(s).m()); }, "J3");
  return {LabeledOperator(basis, std::move(jm), "J-"), std::move(j3), LabeledOperator(basis, std::move(jp), "J+")};
}

LabeledOperator build_casimir(const BasisPtr& basis, const QParam& q) {
  const auto su2 = build_su_q2(basis, q);
  const auto bracket_j3 = q_bracket(su2.j_3, q, "[J3]");
  const auto symmetric = (su2.j_plus * su2.j_minus + su2.j_minus * su2.j_plus).scaled(Real(0.5), "sym");
  const auto quadratic = (bracket_j3 * bracket_j3).scaled(Real(0.5) * q_real_extended(2, q), "quad");
  return (symmetric + quadratic).renamed("J^2");
}

SuQ11 build_su_q11(const BasisPtr& basis, const QParam& q) {
  const auto ap = build_ladder(basis, Mode::Plus, LadderKind::Lower, q);
  const auto ap_dag = build_ladder(basis, Mode::Plus, LadderKind::Raise, q);
  const auto am = build_ladder(basis, Mode::Minus, LadderKind::Lower, q);
  const auto am_dag = build_ladder(basis, Mode::Minus, LadderKind::Raise, q);
  const auto n1 = build_number(basis, Mode::Plus);
  const auto n2 = build_number(basis, Mode::Minus);
  const auto one = build_identity(basis);
  return {(ap * am).renamed("K-"), (n1 + n2 + one).scaled(Real(0.5), "K3"), (ap_dag * am_dag).renamed("K+")};
}

SuQ11 build_su_q11_direct(const BasisPtr& basis, const QParam& q) {
  q.require_real("su_q(1,1) generators");
  const auto& b = *basis;
  Matrix km = from_action(b, [&](const TwoModeState& s) {
    const auto l = modes_to_jm(s);
    const Real amp = sqrt_qq(l.j() - l.m(), l.j() + l.m(), q);
    return std::pair{TwoModeState{(l.two_j - 2 + l.two_m) / 2, (l.two_j - 2 - l.two_m) / 2}, amp};
  });
  Matrix kp = from_action(b, [&](const TwoModeState& s) {
    const auto l = modes_to_jm(s);
    const Real amp = sqrt_qq(l.j() - l.m() + 1, l.j() + l.m() + 1, q);
    return std::pair{jm_to_modes({l.two_j + 2, l.two_m}), amp};
  });
  auto k3 = diagonal(basis, [](const TwoModeState& s) { return Complex(modes_to_jm(s).j() + 0.5); }, "K3");
  return {LabeledOperator(basis, std::move(km), "K-"), std::move(k3), LabeledOperator(basis, std::move(kp), "K+")};
}

ShiftBilinears build_shift_bilinears(const BasisPtr& basis, const QParam& q) {
  const auto ap = build_ladder(basis, Mode::Plus, LadderKind::Lower, q);
  const auto ap_dag = build_ladder(basis, Mode::Plus, LadderKind::Raise, q);
  const auto am = build_ladder(basis, Mode::Minus, LadderKind::Lower, q);
  const auto am_dag = build_ladder(basis, Mode::Minus, LadderKind::Raise, q);
  return {(ap_dag * ap_dag).scaled(Real(-1), "k++"), (am_dag * am_dag).renamed("k-+"),
          (ap * ap).scaled(Real(-1), "k--"), (am * am).renamed("k+-")};
}

LabeledOperator commutator(const LabeledOperator& a, const LabeledOperator& b) {
  if (!(a.basis() == b.basis())) {
    throw DomainError("commutator of operators on different bases: " + a.name() + ", " + b.name());
  }
  return {a.basis_ptr(), kernels::commutator(a.matrix(), b.matrix()), "[" + a.name() + ", " + b.name() + "]"};
}

RelationReport check_qboson_relations(const BasisPtr& basis, const QParam& q) {
  const auto ap = build_ladder(basis, Mode::Plus, LadderKind::Lower, q);
  const auto ap_dag = build_ladder(basis, Mode::Plus, LadderKind::Raise, q);
  const auto am = build_ladder(basis, Mode::Minus, LadderKind::Lower, q);
  const auto am_dag = build_ladder(basis, Mode::Minus, LadderKind::Raise, q);
  const Complex q_inv = std::exp(-q.log_extended());
  const auto qn1 = build_q_power_number(basis, Mode::Plus, q);
  const auto qn2 = build_q_power_number(basis, Mode::Minus, q);

  return make_report("q-boson", basis, q,
                     {
                         {"a+ a+^+ - q^-1 a+^+ a+ - q^N1", ap * ap_dag - (ap_dag * ap).scaled(q_inv, "") - qn1},
                         {"a- a-^+ - q^-1 a-^+ a- - q^N2", am * am_dag - (am_dag * am).scaled(q_inv, "") - qn2},
                         {"[a+, a-]", commutator(ap, am)},
                         {"[a+^+, a-^+]", commutator(ap_dag, am_dag)},
                         {"[a+, a-^+]", commutator(ap, am_dag)},
                         {"[a+^+, a-]", commutator(ap_dag, am)},
                     });
}

RelationReport check_su_q2_relations(const BasisPtr& basis, const QParam& q) {
  const auto su2 = build_su_q2(basis, q);
  const auto two_j3 = q_bracket(su2.j_3.scaled(Real(2), "2J3"), q, "[2J3]");
  return make_report("su_q(2)", basis, q,
                     {
                         {"[J3, J+] - J+", commutator(su2.j_3, su2.j_plus) - su2.j_plus},
                         {"[J3, J-] + J-", commutator(su2.j_3, su2.j_minus) + su2.j_minus},
                         {"[J+, J-] - [2J3]", commutator(su2.j_plus, su2.j_minus) - two_j3},
                     });
}

RelationReport check_su_q11_relations(const BasisPtr& basis, const QParam& q) {
  const auto su11 = build_su_q11(basis, q);
  const auto two_k3 = q_bracket(su11.k_3.scaled(Real(2), "2K3"), q, "[2K3]");
  return make_report("su_q(1,1)", basis, q,
                     {
                         {"[K3, K+] - K+", commutator(su11.k_3, su11.k_plus) - su11.k_plus},
                         {"[K3, K-] + K-", commutator(su11.k_3, su11.k_minus) + su11.k_minus},
                         {"[K+, K-] + [2K3]", commutator(su11.k_plus, su11.k_minus) + two_k3},
                     });
}

RelationReport check_construction_paths(const BasisPtr& basis, const QParam& q) {
  const auto su2 = build_su_q2(basis, q);
  const auto su2_direct = build_su_q2_direct(basis, q);
  const auto su11 = build_su_q11(basis, q);
  const auto su11_direct = build_su_q11_direct(basis, q);
  return make_report("construction paths", basis, q,
                     {
                         {"J- bilinear - direct", su2.j_minus - su2_direct.j_minus},
                         {"J3 bilinear - direct", su2.j_3 - su2_direct.j_3},
                         {"J+ bilinear - direct", su2.j_plus - su2_direct.j_plus},
                         {"K- bilinear - direct", su11.k_minus - su11_direct.k_minus},
                         {"K3 bilinear - direct", su11.k_3 - su11_direct.k_3},
                         {"K+ bilinear - direct", su11.k_plus - su11_direct.k_plus},
                     });
}

std::vector<CasimirBlock> casimir_block_spectrum(const BasisPtr& basis, const QParam& q) {
  const auto casimir = build_casimir(basis, q);
  std::vector<CasimirBlock> blocks;
  for (int two_j = 0; two_j <= basis->n_max(); ++two_j) {
    std::vector<std::size_t> members;
    for (int n1 = 0; n1 <= two_j; ++n1) members.push_back(*basis->index_of({n1, two_j - n1}));
    const Matrix block = kernels::restrict_to(casimir.matrix(), members);
    using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    const RealMatrix hermitian = (Real(0.5) * (block + block.adjoint())).real();
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    const Real j = Real(0.5) * two_j;
    const Real expected = q_real_extended(j, q) * q_real_extended(j + 1, q);
    CasimirBlock out{two_j, double(expected), double(expected), 0.0};
    Real worst = -1;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      const Real ev = solver.eigenvalues()(i);
      const Real dev = std::abs(ev - expected);
      if (dev > worst) {
        worst = dev;
        out = {two_j, double(ev), double(expected), double(dev)};
      }
    }
    blocks.push_back(out);
  }
  return blocks;
}

ClosureReport so32_closure(const BasisPtr& basis, const QParam& q) {
  const auto su2 = build_su_q2(basis, q);
  const auto su11 = build_su_q11(basis, q);
  const auto shifts = build_shift_bilinears(basis, q);
  const std::array<const LabeledOperator*, 10> generators = {
      &su2.j_minus, &su2.j_3,     &su2.j_plus,  &su11.k_minus, &su11.k_3,
      &su11.k_plus, &shifts.k_pp, &shifts.k_pm, &shifts.k_mm,  &shifts.k_mp};
  const auto identity = build_identity(basis);

  const auto interior = interior_subspace(*basis, kClosureShiftBudget);
  const auto n = static_cast<Eigen::Index>(interior.size());
  auto vectorize = [&](const Matrix& full) {
    const Matrix block = kernels::restrict_to(full, interior);
    return kernels::Vector(Eigen::Map<const kernels::Vector>(block.data(), n * n));
  };

  Matrix span(n * n, static_cast<Eigen::Index>(generators.size() + 1));
  for (std::size_t g = 0; g < generators.size(); ++g) span.col(idx(g)) = vectorize(generators[g]->matrix());
  span.col(idx(generators.size())) = vectorize(identity.matrix());
  const Eigen::ColPivHouseholderQR<Matrix> qr(span);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < generators.size(); ++a)
    for (std::size_t b = a + 1; b < generators.size(); ++b) pairs.emplace_back(a, b);

  std::vector<double> residuals(pairs.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs.size()); ++p) {
    const auto [a, b] = pairs[static_cast<std::size_t>(p)];
    const Matrix comm = kernels::commutator(generators[a]->matrix(), generators[b]->matrix());
    const kernels::Vector target = vectorize(comm);
    const kernels::Vector coeffs = qr.solve(target);
    residuals[static_cast<std::size_t>(p)] = double((target - span * coeffs).cwiseAbs().maxCoeff());
  }

  ClosureReport report{0.0, "", interior.size()};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (residuals[p] >= report.max_residual) {
      report.max_residual = residuals[p];
      report.worst_pair = "[" + generators[pairs[p].first]->name() + ", " + generators[pairs[p].second]->name() + "]";
    }
  }
  return report;
}

double so32_closure_residual(const BasisPtr& basis, const QParam& q) { return so32_closure(basis, q).max_residual; }

}  // namespace qhydro
