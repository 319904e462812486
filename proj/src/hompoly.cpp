#include "sl2chain/hompoly.hpp"

#include <utility>

namespace sl2chain {

HomPoly::HomPoly(int degree) : degree_(degree) {
  if (degree < 0) throw ArgumentError("negative polynomial degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

HomPoly::HomPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw ArgumentError("negative polynomial degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw ArgumentError("degree " + std::to_string(degree) + " needs " +
                        std::to_string(degree + 1) + " coefficients, got " +
                        std::to_string(coeffs_.size()));
  }
}

const Rational& HomPoly::coeff(int a) const {
  if (a < 0 || a > degree_) throw ArgumentError("monomial index out of range");
  return coeffs_[static_cast<std::size_t>(a)];
}

bool HomPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

int HomPoly::support_size() const {
  int n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

void HomPoly::check_same_degree(const HomPoly& other) const {
  if (other.degree_ != degree_) {
    throw ArgumentError("cannot add polynomials of degrees " + std::to_string(degree_) +
                        " and " + std::to_string(other.degree_));
  }
}

HomPoly& HomPoly::operator+=(const HomPoly& other) {
  check_same_degree(other);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] += other.coeffs_[a];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& other) {
  check_same_degree(other);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) coeffs_[a] -= other.coeffs_[a];
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

HomPoly monomial(int d, int a) {
  if (d < 0 || a < 0 || a > d) {
    throw ArgumentError("monomial(" + std::to_string(d) + ", " + std::to_string(a) +
                        "): need 0 <= a <= d");
  }
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  c[static_cast<std::size_t>(a)] = 1;
  return HomPoly(d, std::move(c));
}

HomPoly diff(const HomPoly& p, Variable v) {
  const int d = p.degree();
  if (d == 0) return HomPoly(0);
  std::vector<Rational> out(static_cast<std::size_t>(d), Rational(0));
  for (int a = 0; a <= d; ++a) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(a)];
    if (c == 0) continue;
    if (v == Variable::X) {
      // x^(d-a) y^a -> (d-a) x^(d-1-a) y^a
      if (d - a > 0) out[static_cast<std::size_t>(a)] += c * (d - a);
    } else {
      // x^(d-a) y^a -> a x^(d-a) y^(a-1)
      if (a > 0) out[static_cast<std::size_t>(a - 1)] += c * a;
    }
  }
  return HomPoly(d - 1, std::move(out));
}

HomPoly multiply(const HomPoly& p, const HomPoly& q) {
  const int n = p.degree();
  const int m = q.degree();
  std::vector<Rational> out(static_cast<std::size_t>(n + m) + 1, Rational(0));
  for (int a = 0; a <= n; ++a) {
    const auto& ca = p.coeffs()[static_cast<std::size_t>(a)];
    if (ca == 0) continue;
    for (int b = 0; b <= m; ++b) {
      const auto& cb = q.coeffs()[static_cast<std::size_t>(b)];
      if (cb == 0) continue;
      out[static_cast<std::size_t>(a + b)] += ca * cb;
    }
  }
  return HomPoly(n + m, std::move(out));
}

HomPoly act(Sl2Generator g, const HomPoly& p) {
  const int d = p.degree();
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
  for (int a = 0; a <= d; ++a) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(a)];
    if (c == 0) continue;
    switch (g) {
      case Sl2Generator::E:  // x d/dy: x^(d-a) y^a -> a x^(d-a+1) y^(a-1)
        if (a > 0) out[static_cast<std::size_t>(a - 1)] += c * a;
        break;
      case Sl2Generator::F:  // y d/dx: x^(d-a) y^a -> (d-a) x^(d-a-1) y^(a+1)
        if (a < d) out[static_cast<std::size_t>(a + 1)] += c * (d - a);
        break;
      case Sl2Generator::H:
        out[static_cast<std::size_t>(a)] += c * (d - 2 * a);
        break;
    }
  }
  return HomPoly(d, std::move(out));
}

namespace {

std::string power(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const HomPoly& p) {
  std::string out;
  const int d = p.degree();
  for (int a = 0; a <= d; ++a) {
    Rational c = p.coeffs()[static_cast<std::size_t>(a)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = power("x", d - a);
    const std::string ypart = power("y", a);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    mono += ypart;
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(Sl2Generator g) {
  switch (g) {
    case Sl2Generator::E: return "e";
    case Sl2Generator::F: return "f";
    case Sl2Generator::H: return "h";
  }
  return "?";
}

}  // namespace sl2chain
