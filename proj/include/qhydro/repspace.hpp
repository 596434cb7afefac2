#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace qhydro {

/// Occupations |n1, n2> of the + and - q-boson modes.
struct TwoModeState {
  int n1 = 0;
  int n2 = 0;
  auto operator<=>(const TwoModeState&) const = default;
};

/// Angular label |j m> stored as the integers 2j and 2m.
struct AngularLabel {
  int two_j = 0;
  int two_m = 0;
  auto operator<=>(const AngularLabel&) const = default;

  double j() const { return 0.5 * two_j; }
  double m() const { return 0.5 * two_m; }
  bool valid() const;
};

/// n1 = j + m, n2 = j - m. Throws DomainError for an invalid label.
TwoModeState jm_to_modes(const AngularLabel& label);
/// j = (n1 + n2)/2, m = (n1 - n2)/2.
AngularLabel modes_to_jm(const TwoModeState& state);

/// Square truncation 0 <= n1, n2 <= n_max of the two-mode Fock space.
///
/// States are ordered lexicographically by (n1, n2), so the state (n1, n2)
/// sits at index n1 * (n_max + 1) + n2.
class TruncatedBasis {
 public:
  explicit TruncatedBasis(int n_max);

  int n_max() const { return n_max_; }
  std::size_t dimension() const { return states_.size(); }
  const std::vector<TwoModeState>& states() const { return states_; }
  const TwoModeState& state(std::size_t index) const { return states_[index]; }

  bool contains(const TwoModeState& s) const {
    return s.n1 >= 0 && s.n2 >= 0 && s.n1 <= n_max_ && s.n2 <= n_max_;
  }
  /// Position of a state, or nullopt if it lies outside the box.
  std::optional<std::size_t> index_of(const TwoModeState& s) const;

  bool operator==(const TruncatedBasis& other) const { return n_max_ == other.n_max_; }

 private:
  int n_max_;
  std::vector<TwoModeState> states_;
};

/// Indices of states with n1, n2 <= n_max - shift_budget, in basis order.
/// Matrix elements between these states of any product raising each mode by
/// at most shift_budget are unaffected by the truncation.
std::vector<std::size_t> interior_subspace(const TruncatedBasis& basis, int shift_budget);

}  // namespace qhydro
