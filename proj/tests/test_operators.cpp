#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qhydro/errors.hpp"
#include "qhydro/operators.hpp"

using namespace qhydro;
using Catch::Approx;
using kernels::Complex;

namespace {

double re(Complex z) { return double(z.real()); }

TwoModeState jm(int two_j, int two_m) { return jm_to_modes({two_j, two_m}); }

double max_abs(const kernels::Matrix& m) { return m.size() ? double(m.cwiseAbs().maxCoeff()) : 0.0; }

// Every nonzero entry (r, c) of `op` must satisfy shift(r) - shift(c) == (dn1, dn2).
bool pure_shift(const LabeledOperator& op, int dn1, int dn2) {
  const auto& b = op.basis();
  for (std::size_t c = 0; c < b.dimension(); ++c)
    for (std::size_t r = 0; r < b.dimension(); ++r) {
      if (op.matrix()(Eigen::Index(r), Eigen::Index(c)) == Complex(0)) continue;
      if (b.state(r).n1 - b.state(c).n1 != dn1 || b.state(r).n2 - b.state(c).n2 != dn2) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("ladder operators", "[operators]") {
  const auto basis = make_basis(6);
  const auto ap = build_ladder(basis, Mode::Plus, LadderKind::Lower, QParam::real(2.0));
  for (int n2 = 0; n2 <= 6; ++n2) {
    const auto col = *basis->index_of({0, n2});
    CHECK(max_abs(ap.matrix().col(Eigen::Index(col))) == 0.0);
  }
  CHECK(re(ap.element({1, 0}, {2, 0})) == Approx(std::sqrt(2.5)).epsilon(1e-15));

  const auto ap_dag1 = build_ladder(basis, Mode::Plus, LadderKind::Raise, QParam::real(1.0));
  CHECK(re(ap_dag1.element({2, 0}, {1, 0})) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  // raising out of the box gives a zero column
  CHECK(max_abs(ap_dag1.matrix().col(Eigen::Index(*basis->index_of({6, 3})))) == 0.0);

  const auto am = build_ladder(basis, Mode::Minus, LadderKind::Lower, QParam::real(1.3));
  CHECK(re(am.element({4, 2}, {4, 3})) == Approx(std::sqrt(q_real(3.0, QParam::real(1.3)))));
  CHECK(pure_shift(am, 0, -1));
  CHECK(pure_shift(ap, -1, 0));

  CHECK_THROWS_AS(build_ladder(basis, Mode::Plus, LadderKind::Lower, QParam::unit_circle(1.0)),
                  UnsupportedRegimeError);
}

TEST_CASE("number operators", "[operators]") {
  const auto basis = make_basis(4);
  const auto n1 = build_number(basis, Mode::Plus);
  const auto n2 = build_number(basis, Mode::Minus);
  CHECK(n1.is_diagonal());
  CHECK(re(n1.element({0, 0}, {0, 0})) == 0.0);
  CHECK(re(n1.element({3, 1}, {3, 1})) == 3.0);
  CHECK(re(n2.element({3, 1}, {3, 1})) == 1.0);
}

TEST_CASE("adjointness of the q-boson pairs", "[operators][property]") {
  for (double q : {0.5, 0.9, 1.0, 1.1, 2.0}) {
    const auto basis = make_basis(8);
    const auto qp = QParam::real(q);
    for (Mode mode : {Mode::Plus, Mode::Minus}) {
      const auto a = build_ladder(basis, mode, LadderKind::Lower, qp);
      const auto a_dag = build_ladder(basis, mode, LadderKind::Raise, qp);
      // a^+ drops the top row; compare where both are defined
      const auto interior = interior_subspace(*basis, 1);
      const kernels::Matrix diff = a_dag.matrix() - a.matrix().adjoint();
      CHECK(kernels::max_abs_on(diff, interior) == 0.0);
    }
  }
}

TEST_CASE("su_q(2) generators", "[operators]") {
  const auto basis = make_basis(8);
  const auto su2 = build_su_q2(basis, QParam::real(2.0));
  CHECK(re(su2.j_3.element(jm(1, 1), jm(1, 1))) == 0.5);
  for (int two_j = 0; two_j <= 6; ++two_j) {
    CHECK(max_abs(su2.j_plus.matrix().col(Eigen::Index(*basis->index_of(jm(two_j, two_j))))) == 0.0);
  }
  CHECK(re(su2.j_plus.element(jm(2, 2), jm(2, 0))) == Approx(std::sqrt(2.5)).epsilon(1e-15));
  CHECK(pure_shift(su2.j_plus, 1, -1));
  CHECK(pure_shift(su2.j_minus, -1, 1));
  CHECK(su2.j_3.is_diagonal());
}

TEST_CASE("Casimir operator", "[operators]") {
  const auto basis = make_basis(6);
  const auto c2 = build_casimir(basis, QParam::real(2.0));
  CHECK(re(c2.element({0, 0}, {0, 0})) == 0.0);
  CHECK(re(c2.element(jm(1, 1), jm(1, 1))) == Approx(7.0 / 9.0).epsilon(1e-14));
  CHECK(re(c2.element(jm(1, -1), jm(1, -1))) == Approx(7.0 / 9.0).epsilon(1e-14));
  const auto c1 = build_casimir(basis, QParam::real(1.0));
  for (int two_m = -4; two_m <= 4; two_m += 2) CHECK(re(c1.element(jm(4, two_m), jm(4, two_m))) == Approx(6.0));

  for (const auto& block : casimir_block_spectrum(basis, QParam::real(1.1))) {
    if (block.two_j == 0) {
      CHECK(block.eigenvalue == Approx(0.0).margin(1e-15));
      CHECK(block.expected == 0.0);
    }
    if (block.two_j == 2) CHECK(block.eigenvalue == Approx(2.0090909090909091).epsilon(1e-14));
    CHECK(block.deviation <= 1e-12);
  }
  const auto at_one = casimir_block_spectrum(basis, QParam::real(1.0));
  CHECK(at_one[4].eigenvalue == Approx(6.0).epsilon(1e-15));
  CHECK(at_one.size() == 7);
}

TEST_CASE("su_q(1,1) generators", "[operators]") {
  const auto basis = make_basis(8);
  const auto su11 = build_su_q11(basis, QParam::real(1.0));
  CHECK(max_abs(su11.k_minus.matrix().col(Eigen::Index(*basis->index_of({0, 0})))) == 0.0);
  CHECK(re(su11.k_3.element(jm(2, 0), jm(2, 0))) == 1.5);
  CHECK(re(su11.k_plus.element(jm(3, 1), jm(1, 1))) == Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(pure_shift(su11.k_plus, 1, 1));
  CHECK(pure_shift(su11.k_minus, -1, -1));
  CHECK(su11.k_3.is_diagonal());
}

TEST_CASE("shift bilinears", "[operators]") {
  const auto basis = make_basis(8);
  const auto k = build_shift_bilinears(basis, QParam::real(1.0));
  CHECK(re(k.k_pp.element({2, 0}, {0, 0})) == Approx(-std::sqrt(2.0)).epsilon(1e-15));
  for (int n1 = 0; n1 <= 8; ++n1) {
    CHECK(max_abs(k.k_mp.matrix().col(Eigen::Index(*basis->index_of({n1, 0})))) == 0.0);
  }
  for (int n2 = 0; n2 <= 8; ++n2) {
    CHECK(max_abs(k.k_mm.matrix().col(Eigen::Index(*basis->index_of({0, n2})))) == 0.0);
    CHECK(max_abs(k.k_mm.matrix().col(Eigen::Index(*basis->index_of({1, n2})))) == 0.0);
  }
  CHECK(pure_shift(k.k_pp, 2, 0));
  CHECK(pure_shift(k.k_pm, 0, 2));
  CHECK(pure_shift(k.k_mm, -2, 0));
  CHECK(pure_shift(k.k_mp, 0, -2));

  // q-deformed entries: -a_+ a_+ on (2, n2) is -sqrt([2][1])
  const auto kq = build_shift_bilinears(basis, QParam::real(2.0));
  CHECK(re(kq.k_mm.element({0, 3}, {2, 3})) == Approx(-std::sqrt(2.5)).epsilon(1e-15));
}

TEST_CASE("commutator", "[operators]") {
  const auto basis = make_basis(6);
  const auto q = QParam::real(1.3);
  const auto ap_dag = build_ladder(basis, Mode::Plus, LadderKind::Raise, q);
  CHECK(max_abs(commutator(ap_dag, ap_dag).matrix()) == 0.0);
  const auto n1 = build_number(basis, Mode::Plus);
  CHECK(max_abs((commutator(n1, ap_dag) - ap_dag).matrix()) < 1e-15);

  const auto su2 = build_su_q2(basis, q);
  const auto interior = interior_subspace(*basis, kQuadraticShiftBudget);
  CHECK(kernels::max_abs_on((commutator(su2.j_3, su2.j_plus) - su2.j_plus).matrix(), interior) < 1e-14);

  const auto other = make_basis(5);
  CHECK_THROWS_AS(commutator(n1, build_number(other, Mode::Plus)), DomainError);
}

TEST_CASE("relation checks", "[operators]") {
  const auto b8 = make_basis(8);
  const auto b10 = make_basis(10);
  for (auto check : {check_qboson_relations, check_su_q2_relations, check_su_q11_relations}) {
    const auto at_one = check(b8, QParam::real(1.0));
    CHECK(at_one.max_interior_residual <= 1e-12);
    CHECK(at_one.interior_dimension == 49);
    CHECK(check(b10, QParam::real(1.3)).max_interior_residual <= 1e-10);

    const auto low = check(b10, QParam::real(0.5));
    const auto high = check(b10, QParam::real(2.0));
    CHECK(low.relation_name == high.relation_name);
    REQUIRE(low.terms.size() == high.terms.size());
    for (std::size_t i = 0; i < low.terms.size(); ++i) {
      CHECK(low.terms[i].expression == high.terms[i].expression);
      CHECK(low.terms[i].residual <= 1e-10);
      CHECK(high.terms[i].residual <= 1e-10);
    }
  }
  CHECK(check_qboson_relations(b8, QParam::real(1.0)).terms.size() == 6);
  CHECK(check_construction_paths(b10, QParam::real(1.7)).max_interior_residual <= 1e-12);
}

TEST_CASE("truncation only spoils the boundary", "[operators]") {
  // On the full box the boson relation fails at n1 = n_max; the interior check excludes it.
  const auto basis = make_basis(6);
  const auto q = QParam::real(1.0);
  const auto a = build_ladder(basis, Mode::Plus, LadderKind::Lower, q);
  const auto a_dag = build_ladder(basis, Mode::Plus, LadderKind::Raise, q);
  const auto residual = commutator(a, a_dag) - build_identity(basis);
  CHECK(kernels::max_abs_on(residual.matrix(), interior_subspace(*basis, 0)) == Approx(7.0));
  CHECK(kernels::max_abs_on(residual.matrix(), interior_subspace(*basis, 1)) < 1e-15);
}

TEST_CASE("so(3,2) closure", "[operators]") {
  const auto basis = make_basis(10);
  const auto closed = so32_closure(basis, QParam::real(1.0));
  CHECK(closed.max_residual <= 1e-9);
  CHECK(closed.interior_dimension == 49);

  const double deformed = so32_closure_residual(basis, QParam::real(1.2));
  CHECK(std::isfinite(deformed));

  for (double q : {0.7, 1.0, 1.2}) {
    const auto qp = QParam::real(q);
    const auto su2 = build_su_q2(basis, qp);
    const auto su11 = build_su_q11(basis, qp);
    CHECK(max_abs(commutator(su2.j_3, su11.k_3).matrix()) == 0.0);
  }
}

TEST_CASE("operator matrices are invariant under q -> 1/q", "[operators][property]") {
  const auto basis = make_basis(8);
  for (double q : {0.4, 0.8, 1.05, 1.6, 3.0}) {
    const auto qp = QParam::real(q);
    const auto qi = qp.inverse();
    const auto a = build_su_q2(basis, qp);
    const auto b = build_su_q2(basis, qi);
    const auto c = build_su_q11(basis, qp);
    const auto d = build_su_q11(basis, qi);
    const auto e = build_shift_bilinears(basis, qp);
    const auto f = build_shift_bilinears(basis, qi);
    auto rel = [](const LabeledOperator& x, const LabeledOperator& y) {
      return max_abs((x.matrix() - y.matrix())) / std::max(1.0, max_abs(x.matrix()));
    };
    CHECK(rel(a.j_plus, b.j_plus) <= 1e-12);
    CHECK(rel(a.j_minus, b.j_minus) <= 1e-12);
    CHECK(rel(c.k_plus, d.k_plus) <= 1e-12);
    CHECK(rel(c.k_minus, d.k_minus) <= 1e-12);
    CHECK(rel(e.k_pp, f.k_pp) <= 1e-12);
    CHECK(rel(e.k_mp, f.k_mp) <= 1e-12);
    CHECK(rel(build_casimir(basis, qp), build_casimir(basis, qi)) <= 1e-12);
  }
}
