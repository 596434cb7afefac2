#include "qhydro/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qhydro/errors.hpp"

namespace qhydro {

double pauli_energy(int two_j, const QParam& q) {
  if (two_j < 0) throw DomainError("pauli_energy requires 2j >= 0");
  q.require_real("pauli_energy");
  const double j = 0.5 * two_j;
  return 1.0 / (4.0 * q_real(j, q) * q_real(j + 1.0, q) + 1.0);
}

std::vector<PauliLevel> pauli_spectrum(int max_two_j, const QParam& q) {
  if (max_two_j < 0) throw DomainError("pauli_spectrum requires max 2j >= 0");
  std::vector<PauliLevel> out;
  out.reserve(static_cast<std::size_t>(max_two_j + 1));
  for (int two_j = 0; two_j <= max_two_j; ++two_j) {
    out.push_back({two_j, pauli_energy(two_j, q), (two_j + 1) * (two_j + 1)});
  }
  return out;
}

std::string quadruple_label(const KSQuadruple& quad) {
  std::string s;
  for (int n : quad) s += std::to_string(n);
  return s;
}

double ks_nu(const KSQuadruple& quad, const QParam& q) {
  q.require_real("ks_nu");
  double nu = 0.0;
  for (int n : quad) {
    if (n < 0) throw DomainError("oscillator quanta must be >= 0");
    nu += q_real(n, q) + q_real(n + 1, q);
  }
  return nu;
}

double ks_energy(const KSQuadruple& quad, const QParam& q) {
  const double nu = ks_nu(quad, q);
  return 16.0 / (nu * nu);
}

std::vector<KSQuadruple> ks_shell_quadruples(int shell) {
  if (shell < 1) throw DomainError("shell index must be >= 1");
  const int total = 2 * shell - 2;
  std::vector<KSQuadruple> out;
  for (int a = total; a >= 0; --a)
    for (int b = total - a; b >= 0; --b)
      for (int c = total - a - b; c >= 0; --c) out.push_back({a, b, c, total - a - b - c});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<int> physical_multiplicity(int shell, const std::vector<KSQuadruple>& members) {
  if (shell == 1) return 1;
  if (shell != 2) return std::nullopt;
  // Psi_200, Psi_210 live on the 2000-type states, Psi_21±1 on the 1100-type ones.
  bool has_2000 = false;
  bool has_1100 = false;
  for (const auto& m : members) {
    const bool doubled = std::ranges::find(m, 2) != m.end();
    has_2000 = has_2000 || doubled;
    has_1100 = has_1100 || !doubled;
  }
  return (has_2000 ? 2 : 0) + (has_1100 ? 2 : 0);
}

}  // namespace

std::vector<KSLevel> ks_shell_levels(int shell, const QParam& q, double grouping_tol) {
  q.require_real("ks_shell_levels");
  if (!(grouping_tol >= 0.0)) throw DomainError("grouping tolerance must be >= 0");
  const auto quads = ks_shell_quadruples(shell);

  std::vector<std::pair<double, KSQuadruple>> valued;
  valued.reserve(quads.size());
  for (const auto& quad : quads) valued.emplace_back(ks_nu(quad, q), quad);
  std::stable_sort(valued.begin(), valued.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<KSLevel> levels;
  for (const auto& [nu, quad] : valued) {
    if (!levels.empty() && std::abs(nu - levels.back().nu) <= grouping_tol * levels.back().nu) {
      levels.back().members.push_back(quad);
      continue;
    }
    KSLevel level;
    level.shell = shell;
    level.nu = nu;
    level.members.push_back(quad);
    levels.push_back(std::move(level));
  }
  for (auto& level : levels) {
    std::sort(level.members.begin(), level.members.end());
    level.energy_ratio = 16.0 / (level.nu * level.nu);
    level.oscillator_multiplicity = static_cast<int>(level.members.size());
    level.physical_multiplicity = physical_multiplicity(shell, level.members);
  }
  return levels;
}

std::vector<KSLevel> ks_spectrum(int max_shell, const QParam& q, double grouping_tol) {
  if (max_shell < 1) throw DomainError("max shell must be >= 1");
  q.require_real("ks_spectrum");
  std::vector<std::vector<KSLevel>> per_shell(static_cast<std::size_t>(max_shell));
#pragma omp parallel for schedule(dynamic)
  for (int shell = 1; shell <= max_shell; ++shell) {
    per_shell[static_cast<std::size_t>(shell - 1)] = ks_shell_levels(shell, q, grouping_tol);
  }
  std::vector<KSLevel> out;
  for (auto& levels : per_shell) std::move(levels.begin(), levels.end(), std::back_inserter(out));
  return out;
}

DoubletTable doublet_table() {
  constexpr double n = 0.5;
  const Scalar i(0.0, 1.0);
  DoubletTable table;
  table.normalization = n;
  table.levels[0] = {
      {2, 0, 0, 0},
      {{
          {"Psi_200", {{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}}, {n, n, n, n}},
          {"Psi_210", {{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}}, {n, n, -n, -n}},
      }},
  };
  table.levels[1] = {
      {1, 1, 0, 0},
      {{
          {"Psi_211", {{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}}, {n, -n, n * i, -n * i}},
          {"Psi_21-1", {{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}}, {n, -n, -n * i, n * i}},
      }},
  };
  return table;
}

Scalar overlap(const DoubletState& a, const DoubletState& b) {
  Scalar sum(0.0);
  for (std::size_t ia = 0; ia < a.components.size(); ++ia)
    for (std::size_t ib = 0; ib < b.components.size(); ++ib)
      if (a.components[ia] == b.components[ib]) sum += std::conj(a.coefficients[ia]) * b.coefficients[ib];
  return sum;
}

}  // namespace qhydro
