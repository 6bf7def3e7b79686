#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace gaugekit {

using Complex = std::complex<double>;

/// 3-component complex coefficient vector; carries isotopic-spin vectors
/// such as alpha and the b_mu components (real-valued in most uses).
struct Vec3 {
  std::array<Complex, 3> c{};

  Vec3() = default;
  Vec3(Complex c1, Complex c2, Complex c3) : c{c1, c2, c3} {}
  static Vec3 real(double c1, double c2, double c3) {
    return Vec3(Complex(c1, 0.0), Complex(c2, 0.0), Complex(c3, 0.0));
  }

  Complex& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
  const Complex& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return Vec3(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]);
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return Vec3(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]);
  }
  friend Vec3 operator-(const Vec3& a) { return Vec3(-a.c[0], -a.c[1], -a.c[2]); }
  friend Vec3 operator*(Complex s, const Vec3& a) {
    return Vec3(s * a.c[0], s * a.c[1], s * a.c[2]);
  }
  friend Vec3 operator*(double s, const Vec3& a) { return Complex(s, 0.0) * a; }

  double max_abs() const {
    return std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
  }
};

/// Bilinear dot product (no conjugation).
inline Complex dot(const Vec3& a, const Vec3& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3(a.c[1] * b.c[2] - a.c[2] * b.c[1],
              a.c[2] * b.c[0] - a.c[0] * b.c[2],
              a.c[0] * b.c[1] - a.c[1] * b.c[0]);
}

/// Dense 2x2 complex matrix, row major.
struct Mat2 {
  std::array<Complex, 4> m{};

  Mat2() = default;
  Mat2(Complex a00, Complex a01, Complex a10, Complex a11) : m{a00, a01, a10, a11} {}

  static Mat2 identity() { return Mat2(1.0, 0.0, 0.0, 1.0); }
  static Mat2 zero() { return Mat2(); }

  Complex& at(int r, int col) { return m[static_cast<std::size_t>(2 * r + col)]; }
  const Complex& at(int r, int col) const {
    return m[static_cast<std::size_t>(2 * r + col)];
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return Mat2(a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]);
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2(a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]);
  }
  friend Mat2 operator-(const Mat2& a) { return Mat2(-a.m[0], -a.m[1], -a.m[2], -a.m[3]); }
  friend Mat2 operator*(Complex s, const Mat2& a) {
    return Mat2(s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]);
  }
  friend Mat2 operator*(double s, const Mat2& a) { return Complex(s, 0.0) * a; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2(a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]);
  }

  Mat2 adjoint() const {
    return Mat2(std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3]));
  }
  Complex trace() const { return m[0] + m[3]; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }

  /// Entrywise max norm.
  double max_abs() const {
    return std::max({std::abs(m[0]), std::abs(m[1]), std::abs(m[2]), std::abs(m[3])});
  }
};

inline Mat2 sigma1() { return Mat2(0.0, 1.0, 1.0, 0.0); }
inline Mat2 sigma2() { return Mat2(0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0); }
inline Mat2 sigma3() { return Mat2(1.0, 0.0, 0.0, -1.0); }

/// sigma(0) = sigma1, sigma(1) = sigma2, sigma(2) = sigma3.
inline Mat2 sigma(int axis) {
  switch (axis) {
    case 0: return sigma1();
    case 1: return sigma2();
    default: return sigma3();
  }
}

/// b . sigma = b1*sigma1 + b2*sigma2 + b3*sigma3.
inline Mat2 to_matrix(const Vec3& b) {
  const Complex i(0.0, 1.0);
  return Mat2(b.c[2], b.c[0] - i * b.c[1], b.c[0] + i * b.c[1], -b.c[2]);
}

struct MatDecomposition {
  Complex c0;  // coefficient of the identity
  Vec3 c;      // coefficients of sigma1..sigma3
};

/// Unique decomposition M = c0*I + c.sigma; inverse of to_matrix up to the
/// identity part.
inline MatDecomposition from_matrix(const Mat2& mat) {
  const Complex i(0.0, 1.0);
  MatDecomposition d;
  d.c0 = 0.5 * (mat.m[0] + mat.m[3]);
  d.c.c[0] = 0.5 * (mat.m[1] + mat.m[2]);
  d.c.c[1] = 0.5 * i * (mat.m[1] - mat.m[2]);
  d.c.c[2] = 0.5 * (mat.m[0] - mat.m[3]);
  return d;
}

struct PauliProduct {
  Complex scalar;  // a . b
  Vec3 vector;     // i (a x b)
};

/// (a.sigma)(b.sigma) = (a.b) I + (i (a x b)).sigma.
inline PauliProduct pauli_compose(const Vec3& a, const Vec3& b) {
  return PauliProduct{dot(a, b), Complex(0.0, 1.0) * cross(a, b)};
}

inline Mat2 mat_commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

/// max(||M Mdag - I||, |det M - 1|): distance from the SU(2) invariants.
inline double special_unitary_defect(const Mat2& m) {
  const double unitarity = (m * m.adjoint() - Mat2::identity()).max_abs();
  const double det = std::abs(m.det() - Complex(1.0, 0.0));
  return std::max(unitarity, det);
}

/// A 2x2 special unitary matrix. Construction accepts matrices within 1e-6
/// of the invariants: anything past 1e-12 is snapped back by projection onto
/// the nearest SU(2) element (real-quaternion part, renormalized); anything
/// past 1e-6 is rejected as misuse.
class GroupElement {
 public:
  explicit GroupElement(const Mat2& m) : m_(m) {
    const double defect = special_unitary_defect(m_);
    if (defect > kRejectTol) {
      throw std::invalid_argument("GroupElement: matrix is not special unitary "
                                  "(defect " + std::to_string(defect) + ")");
    }
    if (defect > kAcceptTol) project();
  }

  static GroupElement identity() { return GroupElement(Mat2::identity()); }

  const Mat2& matrix() const { return m_; }

  /// For unitary m the inverse is the conjugate transpose.
  GroupElement inverse() const { return GroupElement(m_.adjoint()); }

  static constexpr double kAcceptTol = 1e-12;
  static constexpr double kRejectTol = 1e-6;

 private:
  void project() {
    // M = a0 I + i a.sigma with (a0, a) real characterizes SU(2) up to
    // normalization; keep the real quaternion components and renormalize.
    const MatDecomposition d = from_matrix(m_);
    const double a0 = d.c0.real();
    const double a1 = d.c.c[0].imag();
    const double a2 = d.c.c[1].imag();
    const double a3 = d.c.c[2].imag();
    const double norm = std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3);
    if (norm < 0.5) {
      throw std::invalid_argument("GroupElement: projection degenerate");
    }
    const Complex i(0.0, 1.0);
    m_ = (a0 / norm) * Mat2::identity() +
         (i / norm) * to_matrix(Vec3::real(a1, a2, a3));
  }

  Mat2 m_;
};

inline GroupElement group_inverse(const GroupElement& s) { return s.inverse(); }

/// exp(i alpha.sigma) = cos|alpha| I + i sin|alpha| (alpha_hat.sigma),
/// with the sinc series below |alpha| = 1e-4 so the map is smooth at zero.
/// Imaginary parts of alpha are ignored (callers supply real vectors).
inline GroupElement exp_i_alpha_sigma(const Vec3& alpha) {
  const double a1 = alpha.c[0].real();
  const double a2 = alpha.c[1].real();
  const double a3 = alpha.c[2].real();
  const double r2 = a1 * a1 + a2 * a2 + a3 * a3;
  const double r = std::sqrt(r2);
  double sinc;
  if (r < 1e-4) {
    sinc = 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  } else {
    sinc = std::sin(r) / r;
  }
  const Complex i(0.0, 1.0);
  const Mat2 m = std::cos(r) * Mat2::identity() +
                 (i * sinc) * to_matrix(Vec3::real(a1, a2, a3));
  return GroupElement(m);
}

}  // namespace gaugekit
