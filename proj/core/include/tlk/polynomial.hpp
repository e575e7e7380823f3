#pragma once

#include <string>
#include <vector>

#include "tlk/scalar.hpp"

namespace tlk {

// Univariate polynomial in X over Scalar; coefficient k multiplies X^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);
  static UPoly constant(const Scalar& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Scalar(0), Scalar(1)}); }
  // X - r
  static UPoly linear(const Scalar& r) { return UPoly({-r, Scalar(1)}); }
  // Product of (X - r) over the given roots.
  static UPoly from_roots(const std::vector<Scalar>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int k) const;
  const Scalar& leading() const { return coeffs_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& p, const UPoly& q);
  friend UPoly operator-(const UPoly& p, const UPoly& q);
  friend UPoly operator*(const UPoly& p, const UPoly& q);
  friend bool operator==(const UPoly& p, const UPoly& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const UPoly& p, const UPoly& q) { return !(p == q); }

  Scalar evaluate(const Scalar& x) const;
  UPoly specialize(const Specialization& s) const;
  std::string to_string() const;

 private:
  std::vector<Scalar> coeffs_;
  void trim();
};

}  // namespace tlk
