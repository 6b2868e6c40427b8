#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "finsler/jets/jet.hpp"

namespace finsler::geometry {

enum class Slot { Up, Down };

/// Components of a pi-tensor in the coordinate basis, row-major with the
/// first slot varying slowest. T is double (values at a point) or a Jet
/// (values together with their derivatives).
template <class T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, std::vector<Slot> slots, T fill) : n_(n), slots_(std::move(slots)) {
    std::size_t sz = 1;
    for (std::size_t i = 0; i < slots_.size(); ++i) sz *= static_cast<std::size_t>(n_);
    data_.assign(sz, fill);
  }

  int dim() const { return n_; }
  int rank() const { return static_cast<int>(slots_.size()); }
  const std::vector<Slot>& slots() const { return slots_; }
  Slot slot(int s) const { return slots_[static_cast<std::size_t>(s)]; }
  int contravariant() const { return static_cast<int>(std::count(slots_.begin(), slots_.end(), Slot::Up)); }
  int covariant() const { return rank() - contravariant(); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return slots_.empty() && data_.empty(); }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  std::size_t flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (int i : idx) f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
    return f;
  }
  T& at(std::span<const int> idx) { return data_[flat(idx)]; }
  const T& at(std::span<const int> idx) const { return data_[flat(idx)]; }

  template <class... I>
  T& operator()(I... idx) {
    const int a[] = {static_cast<int>(idx)...};
    return data_[flat(a)];
  }
  template <class... I>
  const T& operator()(I... idx) const {
    const int a[] = {static_cast<int>(idx)...};
    return data_[flat(a)];
  }

  /// Multi-index of a flat position.
  std::vector<int> unflatten(std::size_t f) const {
    std::vector<int> idx(slots_.size());
    for (int s = rank() - 1; s >= 0; --s) {
      idx[s] = static_cast<int>(f % static_cast<std::size_t>(n_));
      f /= static_cast<std::size_t>(n_);
    }
    return idx;
  }

 private:
  int n_ = 0;
  std::vector<Slot> slots_;
  std::vector<T> data_;
};

using PiTensor = Tensor<double>;
using JetTensor = Tensor<jets::Jet>;

inline std::vector<Slot> slots(std::initializer_list<char> spec) {
  std::vector<Slot> s;
  for (char c : spec) s.push_back(c == 'u' ? Slot::Up : Slot::Down);
  return s;
}

/// Values at the expansion point.
PiTensor values(const JetTensor& t);
/// Jet tensor with the same shape, all components equal to `zero`.
JetTensor zeros_like(const JetTensor& t, const jets::Jet& zero);
/// Lowest jet order among the components.
int min_order(const JetTensor& t);
/// Truncate every component to `order`.
JetTensor truncated(const JetTensor& t, int order);

double max_abs(const PiTensor& t);
/// Exact zero test over all components.
bool is_exactly_zero(const PiTensor& t);
bool is_exactly_zero(const JetTensor& t);

/// Elementwise a - b (shapes must agree).
PiTensor operator-(const PiTensor& a, const PiTensor& b);
PiTensor operator+(const PiTensor& a, const PiTensor& b);
PiTensor operator*(double s, const PiTensor& a);

/// Lower slot `s` (must be Up) with g_ij: result slot is Down at the same position.
template <class T>
Tensor<T> lower(const Tensor<T>& t, const Tensor<T>& g, int s);
/// Raise slot `s` (must be Down) with g^ij.
template <class T>
Tensor<T> raise(const Tensor<T>& t, const Tensor<T>& g_inv, int s);
/// Trace of an Up slot against a Down slot.
template <class T>
Tensor<T> contract(const Tensor<T>& t, int up, int down);
/// Feed the vector v into slot s (must be Down); the slot disappears.
template <class T>
Tensor<T> insert(const Tensor<T>& t, int s, const std::vector<T>& v);
/// Tensor product a (x) b; slots of a first.
template <class T>
Tensor<T> outer(const Tensor<T>& a, const Tensor<T>& b);
/// Permute slots: result slot k is source slot perm[k].
template <class T>
Tensor<T> permute(const Tensor<T>& t, const std::vector<int>& perm);

std::string slot_signature(const std::vector<Slot>& s);

}  // namespace finsler::geometry
