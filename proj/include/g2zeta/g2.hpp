#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "g2zeta/padic.hpp"
#include "g2zeta/zeta_expr.hpp"

namespace Eigen {
template <>
struct NumTraits<g2zeta::Rational> : GenericNumTraits<g2zeta::Rational> {
  typedef g2zeta::Rational Real;
  typedef g2zeta::Rational NonInteger;
  typedef g2zeta::Rational Nested;
  static inline Real epsilon() { return g2zeta::Rational(0); }
  static inline Real dummy_precision() { return g2zeta::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};
}  // namespace Eigen

namespace g2zeta {
namespace g2 {

using Mat2 = Eigen::Matrix<Rational, 2, 2>;
using Mat4 = Eigen::Matrix<Rational, 4, 4>;
using Mat8 = Eigen::Matrix<Rational, 8, 8>;
using Quadruple = Eigen::Matrix<Rational, 1, 4>;
using NuVector = Eigen::Matrix<Rational, 1, 4>;

template <typename M>
bool mat_equal(const M& a, const M& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Exact 8x8 realization of a G2 element together with the constructor word
/// that produced it.
struct G2Element {
  Mat8 matrix;
  std::string provenance;

  G2Element operator*(const G2Element& o) const {
    return {matrix * o.matrix, provenance + "*" + o.provenance};
  }
  G2Element inverse() const { return {matrix.inverse(), "inv(" + provenance + ")"}; }
  friend bool operator==(const G2Element& a, const G2Element& b) {
    return mat_equal(a.matrix, b.matrix);
  }
};

// Root-subgroup and Weyl constructors, entry-for-entry the displayed
// matrices.
G2Element x_alpha(const Rational& a);
G2Element x_beta(const Rational& b);
/// x_{alpha+3beta}, the one-parameter subgroup sitting in the first slot of n.
G2Element x_alpha3beta(const Rational& a);
G2Element n_elem(const Rational& x, const Rational& y, const Rational& z, const Rational& u,
                 const Rational& v);
G2Element n_minus(const Rational& x, const Rational& y, const Rational& z, const Rational& u,
                  const Rational& v);
/// m: GL2 -> GL8, the Levi embedding. Throws InvalidInput on singular g.
G2Element m_levi(const Mat2& g);
G2Element w0();
Mat4 w1();

Mat2 mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
Mat2 mat2_inverse(const Mat2& g);

/// Coordinates (x,y,z,u,v) of an element of N; validates the full displayed
/// shape and throws InvalidInput for matrices outside N.
std::array<Rational, 5> n_coordinates(const Mat8& m);
/// nu(n(x,y,z,u,v)) = [x, y, u, v].
NuVector nu(const Mat8& n_matrix);

/// varrho on the three displayed generator families, extended
/// multiplicatively through a Gaussian-elimination decomposition of g.
Mat4 varrho(const Mat2& g);
/// rho(g) = w1 varrho(det(g)^-1 g) w1^-1.
Mat4 rho(const Mat2& g);

/// Wright's quartic invariant of a binary cubic.
Rational disc_P(const Quadruple& c);

/// F_c([x,y]) = c1 x^3 + c2 x^2 y + c3 x y^2 + c4 y^3.
Rational binary_cubic(const Quadruple& c, const Rational& x, const Rational& y);

enum class OrbitKind { ThreeDistinctLinear, LinearTimesIrreducibleQuadratic, IrreducibleCubic, RepeatedRoot };

struct OrbitLabel {
  OrbitKind kind;
  long disc_valuation = 0;  // kOrdInfinity when P(c) = 0 in Q
  bool degenerate() const { return kind == OrbitKind::RepeatedRoot; }
  std::string str() const;
};

/// Classifies the reduction mod p of the cubic attached to the character
/// parameter sigma: sigma is first turned into coefficient form by
/// c = sigma * w1 (so sigma = (1,0,b,c) classifies g = -u^3 + b u + c), the
/// quadruple is made primitive, and the projective roots of F_c mod p are
/// counted. A vanishing discriminant mod p is reported as RepeatedRoot,
/// never silently reclassified.
OrbitLabel orbit_classify(const Quadruple& sigma, long p);

/// Same classification on a coefficient quadruple directly (no w1 twist);
/// constant on varrho-orbits of GL2(Z/p).
OrbitLabel classify_form(const Quadruple& c, long p);

/// f_s on the supported matrix family n^-(-x,0,0,0,0) (and its torus
/// conjugates, which have the same shape): 1 for x in Z_p, |x|^(-3s)
/// otherwise. Throws UnsupportedElement outside the family.
ZetaExpr f_circ(const G2Element& element, long p);
/// f_s with an explicit Iwasawa witness n m(g) k: |det g|^s.
ZetaExpr f_circ_witness(const Mat2& g, long p);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  int trials = 0;
  std::string detail;
};

struct IdentityReport {
  unsigned long long seed = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

/// Exact randomized verification of the displayed matrix and covariance
/// identities. Failures are report entries, not exceptions.
IdentityReport verify_identities(unsigned long long seed, int trials = 100);

}  // namespace g2
}  // namespace g2zeta
