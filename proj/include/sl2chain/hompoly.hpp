#pragma once

#include <string>
#include <vector>

#include "sl2chain/rational.hpp"

namespace sl2chain {

enum class Variable { X, Y };

/// Basis of sl2 realized as the derivations e = x d/dy, f = y d/dx,
/// h = x d/dx - y d/dy.
enum class Sl2Generator { E, F, H };

/// Homogeneous polynomial of degree d in x, y: an element of the irreducible
/// module V_d. Coefficient a multiplies x^(d-a) y^a. The degree is part of
/// the value, so the zero polynomial of V_3 differs from the zero of V_2 and
/// mixing degrees in sums is an error.
class HomPoly {
 public:
  /// Zero polynomial of the given degree.
  explicit HomPoly(int degree);
  HomPoly(int degree, std::vector<Rational> coeffs);

  int degree() const { return degree_; }
  int dimension() const { return degree_ + 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(int a) const;

  bool is_zero() const;
  /// Number of nonzero coefficients.
  int support_size() const;

  HomPoly& operator+=(const HomPoly& other);
  HomPoly& operator-=(const HomPoly& other);
  HomPoly& operator*=(const Rational& scalar);

  friend HomPoly operator+(HomPoly lhs, const HomPoly& rhs) { return lhs += rhs; }
  friend HomPoly operator-(HomPoly lhs, const HomPoly& rhs) { return lhs -= rhs; }
  friend HomPoly operator*(HomPoly lhs, const Rational& s) { return lhs *= s; }
  friend HomPoly operator*(const Rational& s, HomPoly rhs) { return rhs *= s; }
  friend HomPoly operator-(HomPoly p) { return p *= Rational(-1); }
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same_degree(const HomPoly& other) const;

  int degree_;
  std::vector<Rational> coeffs_;
};

/// x^(d-a) y^a.
HomPoly monomial(int d, int a);

/// Partial derivative. The derivative of a degree-0 polynomial is the zero
/// polynomial of degree 0.
HomPoly diff(const HomPoly& p, Variable v);

/// Ordinary polynomial product, of degree p.degree() + q.degree().
HomPoly multiply(const HomPoly& p, const HomPoly& q);

/// The sl2 action on V_d by the differential operators above.
HomPoly act(Sl2Generator g, const HomPoly& p);

/// Human-readable form, e.g. "2*x^2*y - 1/3*y^3".
std::string to_string(const HomPoly& p);

std::string to_string(Sl2Generator g);

}  // namespace sl2chain
