#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace finsler::jets {

/// Exponent vector over the 2n chart variables (x^1..x^n, y^1..y^n).
using MultiIndex = std::vector<int>;

inline constexpr int kMaxVariables = 12;
inline constexpr int kMaxOrder = 15;

/// Shared coefficient layout for truncated Taylor expansions in a fixed number
/// of variables up to a maximum total order.
///
/// Monomials are stored in graded order: all degree-0 terms, then degree 1,
/// and so on; within one degree the exponent tuples are in descending
/// lexicographic order. A jet of order r < max_order therefore occupies a
/// prefix of the table, which makes truncation a resize.
///
/// For every target monomial t the space keeps the ordered list of factor
/// pairs (b, t - b) with b running in storage order. That list is a
/// palindrome under b -> t - b, which the multiplication kernels use to sum
/// symmetric pairs together.
class JetSpace {
 public:
  static std::shared_ptr<const JetSpace> get(int nvars, int max_order);

  int nvars() const { return nvars_; }
  int max_order() const { return max_order_; }

  /// Number of coefficients of a jet truncated at `order`.
  std::size_t size(int order) const { return degree_begin_[order + 1]; }

  int degree(std::size_t idx) const { return degree_[idx]; }
  MultiIndex exponents(std::size_t idx) const;
  int exponent(std::size_t idx, int var) const { return exps_[idx * kMaxVariables + var]; }

  /// Storage index of `alpha`, or -1 when |alpha| > max_order.
  std::ptrdiff_t index_of(std::span<const int> alpha) const;

  /// Index of t + e_var, or -1 when that would exceed max_order.
  std::int32_t shifted(std::size_t idx, int var) const { return shift_[var * total_ + idx]; }

  /// Factor-pair table, CSR layout: pairs of target t live in
  /// [pair_offsets()[t], pair_offsets()[t + 1]).
  std::span<const std::uint32_t> pair_offsets() const { return pair_offsets_; }
  std::span<const std::uint32_t> pair_lhs() const { return pair_lhs_; }
  std::span<const std::uint32_t> pair_rhs() const { return pair_rhs_; }

  JetSpace(int nvars, int max_order);

 private:
  std::uint64_t key_of(std::span<const int> alpha) const;

  int nvars_;
  int max_order_;
  std::size_t total_ = 0;
  std::vector<std::uint8_t> exps_;
  std::vector<int> degree_;
  std::vector<std::size_t> degree_begin_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::int32_t> shift_;
  std::vector<std::uint32_t> pair_offsets_;
  std::vector<std::uint32_t> pair_lhs_;
  std::vector<std::uint32_t> pair_rhs_;
};

/// Binomial coefficient C(n, k) for small arguments.
std::size_t binomial(int n, int k);

}  // namespace finsler::jets
