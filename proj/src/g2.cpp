#include "g2zeta/g2.hpp"

#include <random>
#include <sstream>

namespace g2zeta {
namespace g2 {

namespace {

Mat8 id8() { return Mat8::Identity(); }

std::string rstr(const Rational& r) { return r.str(); }

}  // namespace

Mat2 mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Mat2 g;
  g(0, 0) = a;
  g(0, 1) = b;
  g(1, 0) = c;
  g(1, 1) = d;
  return g;
}

Mat2 mat2_inverse(const Mat2& g) {
  Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if (det.is_zero()) throw InvalidInput("singular 2x2 matrix");
  Mat2 inv = mat2(g(1, 1), -g(0, 1), -g(1, 0), g(0, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) inv(i, j) /= det;
  return inv;
}

G2Element x_alpha(const Rational& a) {
  Mat8 m = id8();
  m(1, 2) = a;
  m(5, 6) = -a;
  return {m, "x_alpha(" + rstr(a) + ")"};
}

G2Element x_beta(const Rational& b) {
  Mat8 m = id8();
  m(0, 1) = b;
  m(2, 3) = b;
  m(2, 4) = b;
  m(2, 5) = -b * b;
  m(3, 5) = -b;
  m(4, 5) = -b;
  m(6, 7) = -b;
  return {m, "x_beta(" + rstr(b) + ")"};
}

G2Element x_alpha3beta(const Rational& a) {
  return {n_elem(a, 0, 0, 0, 0).matrix, "x_alpha3beta(" + rstr(a) + ")"};
}

G2Element n_elem(const Rational& x, const Rational& y, const Rational& z, const Rational& u,
                 const Rational& v) {
  Mat8 m = id8();
  m(0, 2) = -u;
  m(0, 3) = -y;
  m(0, 4) = -y;
  m(0, 5) = -x;
  m(0, 6) = v * x + Rational(2) * u * y - z;
  m(0, 7) = -u * x - y * y;
  m(1, 2) = v;
  m(1, 3) = u;
  m(1, 4) = u;
  m(1, 5) = -y;
  m(1, 6) = -u * u + v * y;
  m(1, 7) = -u * y + z;
  m(2, 6) = y;
  m(2, 7) = x;
  m(3, 6) = -u;
  m(3, 7) = y;
  m(4, 6) = -u;
  m(4, 7) = y;
  m(5, 6) = -v;
  m(5, 7) = u;
  std::ostringstream p;
  p << "n(" << x << "," << y << "," << z << "," << u << "," << v << ")";
  return {m, p.str()};
}

G2Element n_minus(const Rational& x, const Rational& y, const Rational& z, const Rational& u,
                  const Rational& v) {
  Mat8 m = id8();
  m(2, 0) = -y;
  m(2, 1) = x;
  m(3, 0) = -u;
  m(3, 1) = y;
  m(4, 0) = -u;
  m(4, 1) = y;
  m(5, 0) = -v;
  m(5, 1) = -u;
  m(6, 0) = v * x + Rational(2) * u * y - z;
  m(6, 1) = u * x - y * y;
  m(6, 2) = u;
  m(6, 3) = -y;
  m(6, 4) = -y;
  m(6, 5) = -x;
  m(7, 0) = -u * u - v * y;
  m(7, 1) = -u * y + z;
  m(7, 2) = v;
  m(7, 3) = u;
  m(7, 4) = u;
  m(7, 5) = y;
  std::ostringstream p;
  p << "n-(" << x << "," << y << "," << z << "," << u << "," << v << ")";
  return {m, p.str()};
}

G2Element m_levi(const Mat2& g) {
  const Rational a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const Rational det = a * d - b * c;
  if (det.is_zero()) throw InvalidInput("m(g) requires det g != 0");
  Mat8 m = Mat8::Zero();
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  // middle block: g acting on (x@x, x@y, y@x, -y@y), divided by det
  const Rational block[4][4] = {
      {a * a, a * b, a * b, -b * b},
      {a * c, a * d, b * c, -b * d},
      {a * c, b * c, a * d, -b * d},
      {-c * c, -c * d, -c * d, d * d},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(2 + i, 2 + j) = block[i][j] / det;
  m(6, 6) = a / det;
  m(6, 7) = -b / det;
  m(7, 6) = -c / det;
  m(7, 7) = d / det;
  std::ostringstream p;
  p << "m([" << a << "," << b << ";" << c << "," << d << "])";
  return {m, p.str()};
}

G2Element w0() {
  Mat8 m = Mat8::Zero();
  m(0, 6) = 1;
  m(1, 7) = 1;
  m(2, 2) = -1;
  m(3, 3) = 1;
  m(4, 4) = 1;
  m(5, 5) = -1;
  m(6, 0) = 1;
  m(7, 1) = 1;
  return {m, "w0"};
}

Mat4 w1() {
  Mat4 m = Mat4::Zero();
  m(0, 3) = -1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 0) = 1;
  return m;
}

std::array<Rational, 5> n_coordinates(const Mat8& m) {
  Rational x = m(2, 7);
  Rational y = m(2, 6);
  Rational u = -m(3, 6);
  Rational v = m(1, 2);
  Rational z = m(1, 7) + u * y;
  if (!mat_equal(m, n_elem(x, y, z, u, v).matrix))
    throw InvalidInput("matrix is not an element of N");
  return {x, y, z, u, v};
}

NuVector nu(const Mat8& n_matrix) {
  auto c = n_coordinates(n_matrix);
  NuVector v;
  v(0, 0) = c[0];
  v(0, 1) = c[1];
  v(0, 2) = c[3];
  v(0, 3) = c[4];
  return v;
}

namespace {

Mat4 varrho_diag(const Rational& t1, const Rational& t2) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = t1 * t1 / t2;
  m(1, 1) = t1;
  m(2, 2) = t2;
  m(3, 3) = t2 * t2 / t1;
  return m;
}

Mat4 varrho_upper(const Rational& a) {
  Mat4 m = Mat4::Identity();
  m(0, 1) = a;
  m(0, 2) = a * a;
  m(0, 3) = a * a * a;
  m(1, 2) = Rational(2) * a;
  m(1, 3) = Rational(3) * a * a;
  m(2, 3) = Rational(3) * a;
  return m;
}

Mat4 varrho_lower(const Rational& a) {
  Mat4 m = Mat4::Identity();
  m(1, 0) = Rational(3) * a;
  m(2, 0) = Rational(3) * a * a;
  m(2, 1) = Rational(2) * a;
  m(3, 0) = a * a * a;
  m(3, 1) = a * a;
  m(3, 2) = a;
  return m;
}

}  // namespace

Mat4 varrho(const Mat2& g) {
  const Rational a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const Rational det = a * d - b * c;
  if (det.is_zero()) throw InvalidInput("varrho requires det g != 0");
  if (a.is_zero()) {
    // shift a nonzero entry into the corner: g = (g * L(1)) * L(-1)
    Mat2 l1 = mat2(1, 0, 1, 1);
    return varrho(g * l1) * varrho_lower(-1);
  }
  // g = L(c/a) diag(a, det/a) U(b/a)
  return varrho_lower(c / a) * varrho_diag(a, det / a) * varrho_upper(b / a);
}

Mat4 rho(const Mat2& g) {
  const Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if (det.is_zero()) throw InvalidInput("rho requires det g != 0");
  Mat2 scaled;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) scaled(i, j) = g(i, j) / det;
  Mat4 w = w1();
  return w * varrho(scaled) * w.inverse();
}

Rational disc_P(const Quadruple& c) {
  const Rational c1 = c(0, 0), c2 = c(0, 1), c3 = c(0, 2), c4 = c(0, 3);
  return c2 * c2 * c3 * c3 + Rational(18) * c1 * c2 * c3 * c4 - Rational(4) * c2 * c2 * c2 * c4 -
         Rational(4) * c1 * c3 * c3 * c3 - Rational(27) * c1 * c1 * c4 * c4;
}

Rational binary_cubic(const Quadruple& c, const Rational& x, const Rational& y) {
  return c(0, 0) * x * x * x + c(0, 1) * x * x * y + c(0, 2) * x * y * y + c(0, 3) * y * y * y;
}

std::string OrbitLabel::str() const {
  std::string k;
  switch (kind) {
    case OrbitKind::ThreeDistinctLinear: k = "threeDistinctLinear"; break;
    case OrbitKind::LinearTimesIrreducibleQuadratic: k = "linearTimesIrreducibleQuadratic"; break;
    case OrbitKind::IrreducibleCubic: k = "irreducibleCubic"; break;
    case OrbitKind::RepeatedRoot: k = "repeatedRoot(degenerate)"; break;
  }
  if (kind == OrbitKind::RepeatedRoot)
    k += ", disc valuation " + (disc_valuation == kOrdInfinity ? std::string("inf") : std::to_string(disc_valuation));
  return k;
}

namespace {

Quadruple primitive_integer_form(const Quadruple& c) {
  Int lcm = 1;
  for (int i = 0; i < 4; ++i) lcm = boost::multiprecision::lcm(lcm, Rational(c(0, i)).denominator());
  Int gcd = 0;
  for (int i = 0; i < 4; ++i)
    gcd = boost::multiprecision::gcd(gcd, Int(Rational(c(0, i) * Rational(lcm)).numerator()));
  Quadruple out;
  Rational scale(lcm, gcd);
  for (int i = 0; i < 4; ++i) out(0, i) = c(0, i) * scale;
  return out;
}

}  // namespace

OrbitLabel classify_form(const Quadruple& c_in, long p) {
  require_prime(p);
  bool all_zero = true;
  for (int i = 0; i < 4; ++i)
    if (!c_in(0, i).is_zero()) all_zero = false;
  if (all_zero) throw InvalidInput("the zero quadruple is the singleton orbit, outside the integral's scope");

  Quadruple c = primitive_integer_form(c_in);
  Rational P = disc_P(c);
  OrbitLabel label{OrbitKind::RepeatedRoot, 0};
  if (P.is_zero()) {
    label.disc_valuation = kOrdInfinity;
    return label;
  }
  label.disc_valuation = ord_unchecked(P, p);
  if (label.disc_valuation > 0) return label;

  // P is a unit: count projective roots of F_c mod p.
  auto mod_p = [&](const Rational& r) {
    Int num = r.numerator() % p;
    if (num < 0) num += p;
    return static_cast<long>(num);
  };
  long c1 = mod_p(c(0, 0)), c2 = mod_p(c(0, 1)), c3 = mod_p(c(0, 2)), c4 = mod_p(c(0, 3));
  int roots = 0;
  for (long t = 0; t < p; ++t) {
    // f(t) = c1 + c2 t + c3 t^2 + c4 t^3 by Horner
    long long v = ((((long long)c4 * t + c3) % p * t + c2) % p * t + c1) % p;
    if (v == 0) ++roots;
  }
  if (c4 % p == 0) ++roots;  // the point at infinity (0:1)
  switch (roots) {
    case 3: label.kind = OrbitKind::ThreeDistinctLinear; break;
    case 1: label.kind = OrbitKind::LinearTimesIrreducibleQuadratic; break;
    case 0: label.kind = OrbitKind::IrreducibleCubic; break;
    default:
      throw ArithmeticError("unit discriminant with " + std::to_string(roots) + " projective roots");
  }
  return label;
}

OrbitLabel orbit_classify(const Quadruple& sigma, long p) {
  Quadruple c = sigma * w1();
  return classify_form(c, p);
}

ZetaExpr f_circ_witness(const Mat2& g, long p) {
  require_prime(p);
  const Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  if (det.is_zero()) throw InvalidInput("witness Levi part must be invertible");
  return ZetaExpr::monomial(p, Rational(1), ord_unchecked(det, p));
}

ZetaExpr f_circ(const G2Element& element, long p) {
  require_prime(p);
  // supported family: the slot-1 lower unipotent n^-(a,0,0,0,0), whose only
  // off-diagonal entries are (3,2) = a and (7,6) = -a
  const Mat8& m = element.matrix;
  Rational a = m(2, 1);
  if (!mat_equal(m, n_minus(a, 0, 0, 0, 0).matrix))
    throw UnsupportedElement(
        "f_circ supports n^-(-x,0,0,0,0) and explicit witnesses; generic Iwasawa "
        "decomposition is out of scope");
  // element = n^-(-x) with x = -a; f = 1 on Z_p, |x|^(-3s) = q^(-3 ord x)
  // outside
  long mx = ord_unchecked(a, p);
  if (mx == kOrdInfinity || mx >= 0) return ZetaExpr::one(p);
  return ZetaExpr::monomial(p, Rational(1), -3 * mx);
}

namespace {

class Rng {
 public:
  explicit Rng(unsigned long long seed) : gen_(seed) {}
  Rational rational(int span = 6) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(gen_), den(gen_));
  }
  Rational nonzero_rational(int span = 6) {
    Rational r;
    do {
      r = rational(span);
    } while (r.is_zero());
    return r;
  }
  Mat2 invertible_mat2() {
    while (true) {
      Mat2 g = mat2(rational(), rational(), rational(), rational());
      if (!(g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).is_zero()) return g;
    }
  }
  Quadruple quadruple() {
    Quadruple q;
    for (int i = 0; i < 4; ++i) q(0, i) = rational();
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace

IdentityReport verify_identities(unsigned long long seed, int trials) {
  IdentityReport rep;
  rep.seed = seed;
  Rng rng(seed);

  auto check = [&](const std::string& name, auto&& fn) {
    IdentityCheck c;
    c.name = name;
    c.pass = true;
    c.trials = trials;
    for (int t = 0; t < trials && c.pass; ++t) {
      std::string detail;
      if (!fn(detail)) {
        c.pass = false;
        c.detail = detail;
      }
    }
    rep.checks.push_back(c);
  };

  const G2Element W0 = w0();
  const Mat8 W0inv = W0.matrix.inverse();

  check("w0_conjugation", [&](std::string& detail) {
    Rational x = rng.rational(), y = rng.rational(), z = rng.rational(), u = rng.rational(),
             v = rng.rational();
    Mat8 lhs = W0.matrix * n_elem(x, y, z, u, v).matrix * W0inv;
    Mat8 rhs = n_minus(-x, y, z, u, -v).matrix;
    if (!mat_equal(lhs, rhs)) {
      detail = "failed at n(" + x.str() + "," + y.str() + "," + z.str() + "," + u.str() + "," + v.str() + ")";
      return false;
    }
    return true;
  });

  check("x_alpha3beta_commutation", [&](std::string& detail) {
    Rational x = rng.rational(), y = rng.rational(), z = rng.rational(), u = rng.rational(),
             v = rng.nonzero_rational();
    Mat8 lhs = n_minus(-x, y, z, u, 0).matrix * x_alpha3beta(-v).matrix;
    Rational xn = -x + v * z - Rational(3) * u * v * y + u * u * u * v * v;
    Mat8 rhs = x_alpha3beta(-v).matrix * x_beta(u * v).matrix *
               n_minus(xn, y - u * u * v, z - u * u * u * v, u, 0).matrix;
    if (!mat_equal(lhs, rhs)) {
      detail = "failed at (x,y,z,u,v)=(" + x.str() + "," + y.str() + "," + z.str() + "," + u.str() + "," + v.str() + ")";
      return false;
    }
    return true;
  });

  check("nu_rho_conjugation", [&](std::string& detail) {
    Mat2 g = rng.invertible_mat2();
    Rational x = rng.rational(), y = rng.rational(), z = rng.rational(), u = rng.rational(),
             v = rng.rational();
    Mat8 conj = m_levi(mat2_inverse(g)).matrix * n_elem(x, y, z, u, v).matrix * m_levi(g).matrix;
    NuVector lhs = nu(conj);
    NuVector base;
    base << x, y, u, v;
    NuVector rhs = base * rho(g);
    if (!mat_equal<NuVector>(lhs, rhs)) {
      detail = "nu mismatch";
      return false;
    }
    return true;
  });

  check("rho_equals_w1_varrho_w1inv_on_generators", [&](std::string& detail) {
    Rational a = rng.rational();
    // the two displayed rho matrices
    Mat4 upper = Mat4::Identity();
    upper(1, 0) = Rational(-3) * a;
    upper(2, 0) = Rational(-3) * a * a;
    upper(2, 1) = Rational(2) * a;
    upper(3, 0) = -a * a * a;
    upper(3, 1) = a * a;
    upper(3, 2) = a;
    Mat4 lower = Mat4::Identity();
    lower(0, 1) = -a;
    lower(0, 2) = -a * a;
    lower(0, 3) = -a * a * a;
    lower(1, 2) = Rational(2) * a;
    lower(1, 3) = Rational(3) * a * a;
    lower(2, 3) = Rational(3) * a;
    if (!mat_equal(rho(mat2(1, a, 0, 1)), upper)) {
      detail = "rho(upper unipotent) differs from display at a=" + a.str();
      return false;
    }
    if (!mat_equal(rho(mat2(1, 0, a, 1)), lower)) {
      detail = "rho(lower unipotent) differs from display at a=" + a.str();
      return false;
    }
    return true;
  });

  check("rho_homomorphism", [&](std::string& detail) {
    Mat2 g = rng.invertible_mat2(), h = rng.invertible_mat2();
    if (!mat_equal<Mat4>(rho(g) * rho(h), rho(g * h))) {
      detail = "rho(g)rho(h) != rho(gh)";
      return false;
    }
    return true;
  });

  check("varrho_homomorphism", [&](std::string& detail) {
    Mat2 g = rng.invertible_mat2(), h = rng.invertible_mat2();
    if (!mat_equal<Mat4>(varrho(g) * varrho(h), varrho(g * h))) {
      detail = "varrho(g)varrho(h) != varrho(gh)";
      return false;
    }
    return true;
  });

  check("P_covariance", [&](std::string& detail) {
    Mat2 g = rng.invertible_mat2();
    Quadruple c = rng.quadruple();
    Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    Quadruple moved = c * varrho(g).transpose();
    if (disc_P(moved) != det * det * disc_P(c)) {
      detail = "P(c varrho^t) != det^2 P(c)";
      return false;
    }
    return true;
  });

  check("cubic_action_matches_varrho", [&](std::string& detail) {
    Mat2 g = rng.invertible_mat2();
    Quadruple c = rng.quadruple();
    Rational x = rng.rational(), y = rng.rational();
    Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    // (g . F_c)([x,y]) = det^-1 F_c([x,y] g)
    Rational lhs = binary_cubic(c, x * g(0, 0) + y * g(1, 0), x * g(0, 1) + y * g(1, 1)) / det;
    Quadruple moved = c * varrho(g).transpose();
    if (lhs != binary_cubic(moved, x, y)) {
      detail = "g.F_c != F_{c varrho(g)^t}";
      return false;
    }
    return true;
  });

  check("m_homomorphism", [&](std::string& detail) {
    Mat2 g = rng.invertible_mat2(), h = rng.invertible_mat2();
    if (!mat_equal<Mat8>(m_levi(g).matrix * m_levi(h).matrix, m_levi(g * h).matrix)) {
      detail = "m(g)m(h) != m(gh)";
      return false;
    }
    if (!mat_equal<Mat8>(m_levi(mat2(1, 0, 0, 1)).matrix, Mat8::Identity())) {
      detail = "m(I) != I";
      return false;
    }
    return true;
  });

  check("z_kernel_commutator", [&](std::string& detail) {
    Rational z = rng.rational();
    Mat8 a = n_elem(0, 0, 0, 0, z).matrix;
    Mat8 b = n_elem(1, 0, 0, 0, 0).matrix;
    Mat8 comm = a * b * a.inverse() * b.inverse();
    if (!mat_equal(comm, n_elem(0, 0, z, 0, 0).matrix)) {
      detail = "commutator is not n(0,0,z,0,0) at z=" + z.str();
      return false;
    }
    return true;
  });

  check("x_alpha_one_parameter", [&](std::string& detail) {
    Rational a = rng.rational(), b = rng.rational();
    if (!mat_equal<Mat8>(x_alpha(a).matrix * x_alpha(b).matrix, x_alpha(a + b).matrix)) {
      detail = "x_alpha(a)x_alpha(b) != x_alpha(a+b)";
      return false;
    }
    return true;
  });

  return rep;
}

}  // namespace g2
}  // namespace g2zeta
