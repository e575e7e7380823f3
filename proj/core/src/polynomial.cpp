#include "tlk/polynomial.hpp"

#include <algorithm>

namespace tlk {

UPoly::UPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::from_roots(const std::vector<Scalar>& roots) {
  UPoly p = constant(Scalar(1));
  for (const auto& r : roots) p = p * linear(r);
  return p;
}

Scalar UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar();
  return coeffs_[k];
}

UPoly UPoly::operator-() const {
  UPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

UPoly operator+(const UPoly& p, const UPoly& q) {
  std::vector<Scalar> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }

UPoly operator*(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return UPoly();
  std::vector<Scalar> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      if (q.coeffs_[j].is_zero()) continue;
      out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return UPoly(std::move(out));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::specialize(const Specialization& s) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.specialize(s));
  return UPoly(std::move(out));
}

std::string UPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool simple = c.denominator().is_one() && c.numerator().terms().size() == 1;
    if (!out.empty()) out += " + ";
    std::string xs = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    if (k == 0) {
      out += simple ? cs : "(" + cs + ")";
    } else if (c.is_one()) {
      out += xs;
    } else {
      out += (simple ? cs : "(" + cs + ")") + "*" + xs;
    }
  }
  return out;
}

}  // namespace tlk
