#include "finsler/geometry/tensor.hpp"

namespace finsler::geometry {

using jets::Jet;

PiTensor values(const JetTensor& t) {
  PiTensor out(t.dim(), t.slots(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) out.data()[i] = t.data()[i].value();
  return out;
}

JetTensor zeros_like(const JetTensor& t, const Jet& zero) { return JetTensor(t.dim(), t.slots(), zero); }

int min_order(const JetTensor& t) {
  int m = jets::kMaxOrder;
  for (const auto& j : t.data()) m = std::min(m, j.order());
  return m;
}

JetTensor truncated(const JetTensor& t, int order) {
  JetTensor out = t;
  for (auto& j : out.data()) j = j.truncated(order);
  return out;
}

double max_abs(const PiTensor& t) {
  double m = 0.0;
  for (double v : t.data()) m = std::max(m, std::abs(v));
  return m;
}

bool is_exactly_zero(const PiTensor& t) {
  return std::all_of(t.data().begin(), t.data().end(), [](double v) { return v == 0.0; });
}

bool is_exactly_zero(const JetTensor& t) {
  return std::all_of(t.data().begin(), t.data().end(), [](const Jet& j) { return j.is_zero(); });
}

namespace {
void same_shape(const PiTensor& a, const PiTensor& b) {
  if (a.dim() != b.dim() || a.slots() != b.slots()) throw std::invalid_argument("tensor shapes differ");
}

template <class T>
T mul(const T& a, const T& b) {
  return a * b;
}

template <class T>
void accumulate(T& acc, bool& started, const T& term) {
  if (!started) {
    acc = term;
    started = true;
  } else {
    acc += term;
  }
}
}  // namespace

PiTensor operator-(const PiTensor& a, const PiTensor& b) {
  same_shape(a, b);
  PiTensor r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.data()[i] -= b.data()[i];
  return r;
}

PiTensor operator+(const PiTensor& a, const PiTensor& b) {
  same_shape(a, b);
  PiTensor r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.data()[i] += b.data()[i];
  return r;
}

PiTensor operator*(double s, const PiTensor& a) {
  PiTensor r = a;
  for (auto& v : r.data()) v *= s;
  return r;
}

template <class T>
static Tensor<T> apply_metric(const Tensor<T>& t, const Tensor<T>& m, int s, Slot from, Slot to) {
  if (s < 0 || s >= t.rank()) throw std::out_of_range("slot " + std::to_string(s) + " out of range");
  if (t.slot(s) != from) throw std::invalid_argument("slot has the wrong variance");
  auto sl = t.slots();
  sl[static_cast<std::size_t>(s)] = to;
  Tensor<T> out(t.dim(), sl, t.data()[0]);
  const int n = t.dim();
  for (std::size_t f = 0; f < out.size(); ++f) {
    auto idx = out.unflatten(f);
    const int i = idx[s];
    T acc{};
    bool started = false;
    for (int mm = 0; mm < n; ++mm) {
      idx[s] = mm;
      accumulate(acc, started, mul(m(i, mm), t.at(idx)));
    }
    out.data()[f] = acc;
  }
  return out;
}

template <class T>
Tensor<T> lower(const Tensor<T>& t, const Tensor<T>& g, int s) {
  return apply_metric(t, g, s, Slot::Up, Slot::Down);
}

template <class T>
Tensor<T> raise(const Tensor<T>& t, const Tensor<T>& g_inv, int s) {
  return apply_metric(t, g_inv, s, Slot::Down, Slot::Up);
}

template <class T>
Tensor<T> contract(const Tensor<T>& t, int up, int down) {
  if (up < 0 || up >= t.rank() || down < 0 || down >= t.rank() || up == down)
    throw std::out_of_range("contraction slots out of range");
  if (t.slot(up) != Slot::Up || t.slot(down) != Slot::Down) throw std::invalid_argument("contraction needs up/down pair");
  std::vector<Slot> sl;
  for (int k = 0; k < t.rank(); ++k)
    if (k != up && k != down) sl.push_back(t.slot(k));
  Tensor<T> out(t.dim(), sl, t.data()[0]);
  const int n = t.dim();
  std::vector<int> full(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto idx = out.unflatten(f);
    for (int k = 0, r = 0; k < t.rank(); ++k)
      if (k != up && k != down) full[k] = idx[r++];
    T acc{};
    bool started = false;
    for (int mm = 0; mm < n; ++mm) {
      full[up] = full[down] = mm;
      accumulate(acc, started, t.at(full));
    }
    out.data()[f] = acc;
  }
  return out;
}

template <class T>
Tensor<T> insert(const Tensor<T>& t, int s, const std::vector<T>& v) {
  if (s < 0 || s >= t.rank()) throw std::out_of_range("slot out of range");
  if (t.slot(s) != Slot::Down) throw std::invalid_argument("vectors go into covariant slots");
  std::vector<Slot> sl = t.slots();
  sl.erase(sl.begin() + s);
  Tensor<T> out(t.dim(), sl, t.data()[0]);
  const int n = t.dim();
  std::vector<int> full(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto idx = out.unflatten(f);
    for (int k = 0, r = 0; k < t.rank(); ++k)
      if (k != s) full[k] = idx[r++];
    T acc{};
    bool started = false;
    for (int mm = 0; mm < n; ++mm) {
      full[s] = mm;
      accumulate(acc, started, mul(v[mm], t.at(full)));
    }
    out.data()[f] = acc;
  }
  return out;
}

template <class T>
Tensor<T> outer(const Tensor<T>& a, const Tensor<T>& b) {
  std::vector<Slot> sl = a.slots();
  sl.insert(sl.end(), b.slots().begin(), b.slots().end());
  Tensor<T> out(a.dim(), sl, a.data()[0]);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out.data()[i * b.size() + j] = a.data()[i] * b.data()[j];
  return out;
}

template <class T>
Tensor<T> permute(const Tensor<T>& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.rank()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Slot> sl;
  for (int p : perm) sl.push_back(t.slot(p));
  Tensor<T> out(t.dim(), sl, t.data()[0]);
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto idx = out.unflatten(f);
    for (int k = 0; k < t.rank(); ++k) src[perm[k]] = idx[k];
    out.data()[f] = t.at(src);
  }
  return out;
}

std::string slot_signature(const std::vector<Slot>& s) {
  std::string out;
  for (auto v : s) out += v == Slot::Up ? 'u' : 'd';
  return out;
}

#define FINSLER_TENSOR_INSTANTIATE(T)                                                \
  template Tensor<T> lower<T>(const Tensor<T>&, const Tensor<T>&, int);              \
  template Tensor<T> raise<T>(const Tensor<T>&, const Tensor<T>&, int);              \
  template Tensor<T> contract<T>(const Tensor<T>&, int, int);                        \
  template Tensor<T> insert<T>(const Tensor<T>&, int, const std::vector<T>&);        \
  template Tensor<T> outer<T>(const Tensor<T>&, const Tensor<T>&);                   \
  template Tensor<T> permute<T>(const Tensor<T>&, const std::vector<int>&);

FINSLER_TENSOR_INSTANTIATE(double)
FINSLER_TENSOR_INSTANTIATE(jets::Jet)

}  // namespace finsler::geometry
