#include "qhydro/repspace.hpp"

#include <cstdlib>
#include <sstream>

#include "qhydro/errors.hpp"

namespace qhydro {

bool AngularLabel::valid() const {
  return two_j >= 0 && std::abs(two_m) <= two_j && (two_j + two_m) % 2 == 0;
}

TwoModeState jm_to_modes(const AngularLabel& label) {
  if (!label.valid()) {
    std::ostringstream os;
    os << "invalid angular label (2j=" << label.two_j << ", 2m=" << label.two_m << ")";
    throw DomainError(os.str());
  }
  return {(label.two_j + label.two_m) / 2, (label.two_j - label.two_m) / 2};
}

AngularLabel modes_to_jm(const TwoModeState& state) {
  return {state.n1 + state.n2, state.n1 - state.n2};
}

TruncatedBasis::TruncatedBasis(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw DomainError("truncation n_max must be >= 1");
  states_.reserve(std::size_t(n_max + 1) * std::size_t(n_max + 1));
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n2 <= n_max; ++n2) states_.push_back({n1, n2});
}

std::optional<std::size_t> TruncatedBasis::index_of(const TwoModeState& s) const {
  if (!contains(s)) return std::nullopt;
  return std::size_t(s.n1) * std::size_t(n_max_ + 1) + std::size_t(s.n2);
}

std::vector<std::size_t> interior_subspace(const TruncatedBasis& basis, int shift_budget) {
  if (shift_budget < 0 || shift_budget > basis.n_max()) {
    throw DomainError("shift budget must lie in [0, n_max]");
  }
  const int bound = basis.n_max() - shift_budget;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    const auto& s = basis.state(i);
    if (s.n1 <= bound && s.n2 <= bound) out.push_back(i);
  }
  return out;
}

}  // namespace qhydro
