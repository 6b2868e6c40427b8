#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "finsler/jets/jet_space.hpp"

namespace finsler::jets {

class JetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elementary function evaluated outside its domain (zero divisor, log or
/// sqrt of a non-positive constant term).
class JetDomainError : public JetError {
 public:
  using JetError::JetError;
};

/// A derivative was requested beyond the truncation order.
class JetOrderError : public JetError {
 public:
  JetOrderError(int required, int available);
  int required() const { return required_; }
  int available() const { return available_; }

 private:
  int required_;
  int available_;
};

using SpacePtr = std::shared_ptr<const JetSpace>;

/// Truncated Taylor expansion f(p + h) = sum_a c_a h^a, |a| <= order, of a
/// scalar function of the chart variables around an expansion point p.
/// Coefficients are the scaled partials c_a = d^a f / a!.
///
/// Binary operations between jets of different order truncate to the lower
/// order; both operands must have the same variable count.
class Jet {
 public:
  Jet() = default;
  /// Zero jet.
  Jet(SpacePtr space, int order);

  static Jet constant(SpacePtr space, int order, double c);
  static Jet variable(SpacePtr space, int order, int var, double value);

  bool empty() const { return !space_; }
  int order() const { return order_; }
  int nvars() const { return space_->nvars(); }
  const JetSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }

  std::size_t size() const { return c_.size(); }
  double value() const { return c_[0]; }
  std::span<const double> coeffs() const { return c_; }
  std::span<double> coeffs() { return c_; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  /// Taylor coefficient at multi-index alpha.
  double coeff(std::span<const int> alpha) const;
  /// Raw partial derivative alpha! * c_alpha. Throws JetOrderError when
  /// |alpha| exceeds the order.
  double partial(std::span<const int> alpha) const;
  double partial(std::initializer_list<int> alpha) const {
    return partial(std::span<const int>(alpha.begin(), alpha.size()));
  }

  /// Same jet at a lower order; coefficients are a bit-identical prefix.
  Jet truncated(int order) const;

  /// Jet of df/dvar, one order lower.
  Jet d(int var) const;
  /// Jet of d^alpha f, |alpha| orders lower. The combined integer factor is
  /// applied with one multiply, so the result does not depend on the order
  /// in which the variables are differentiated.
  Jet d(std::span<const int> alpha) const;
  /// Mixed second derivative d^2 f / dvar1 dvar2 (fused, exactly symmetric).
  Jet d2(int var1, int var2) const;

  bool is_zero() const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(double c);
  Jet& operator-=(double c);
  Jet& operator*=(double c);
  Jet& operator/=(double c);

  /// this += s * o
  Jet& add_scaled(double s, const Jet& o);
  /// this += a * b
  Jet& add_product(const Jet& a, const Jet& b);
  /// this -= a * b
  Jet& sub_product(const Jet& a, const Jet& b);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, double c) { return a += c; }
  friend Jet operator+(double c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, double c) { return a -= c; }
  friend Jet operator-(double c, const Jet& a) { return (-a) += c; }
  friend Jet operator*(Jet a, double c) { return a *= c; }
  friend Jet operator*(double c, Jet a) { return a *= c; }
  friend Jet operator/(Jet a, double c) { return a /= c; }
  friend Jet operator/(double c, const Jet& a);

 private:
  friend Jet make_like(const Jet&, int);
  SpacePtr space_;
  int order_ = 0;
  std::vector<double> c_;
};

Jet sqrt(const Jet& f);
Jet exp(const Jet& f);
Jet log(const Jet& f);
Jet sin(const Jet& f);
Jet cos(const Jet& f);
/// f^p for a real exponent; requires a positive constant term unless p is
/// an integer (then pow_int is used).
Jet pow(const Jet& f, double p);
Jet pow_int(const Jet& f, int k);

/// Coordinate jets x^1..x^n, y^1..y^n at (x, y), truncated at `order`.
std::vector<Jet> seed_variables(std::span<const double> x, std::span<const double> y, int order);

}  // namespace finsler::jets
