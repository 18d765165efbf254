#include "flagtwist/local_models.hpp"

#include <cmath>
#include <stdexcept>

namespace flagtwist {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

Eigen::Matrix2d rot(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return r;
}

// real form of z -> l e^{i t} conj(z)
Eigen::Matrix2d conj_rot(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
  return r;
}

Eigen::Matrix4d symplectic_j() {
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j(0, 1) = 1.0;
  j(1, 0) = -1.0;
  j(2, 3) = 1.0;
  j(3, 2) = -1.0;
  return j;
}

Eigen::Matrix4d circle_rep(double theta) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.topLeftCorner<2, 2>() = rot(-theta);
  m.bottomRightCorner<2, 2>() = rot(theta);
  return m;
}
}  // namespace

Eigen::Matrix4d sp4_matrix(const Sp4Equivariant& e) {
  Eigen::Matrix4d m;
  m.topLeftCorner<2, 2>() = e.lambda1 * rot(e.theta1);
  m.topRightCorner<2, 2>() = e.lambda2 * conj_rot(e.theta2);
  m.bottomLeftCorner<2, 2>() = e.lambda2 * conj_rot(e.theta3);
  m.bottomRightCorner<2, 2>() = e.lambda1 * rot(e.theta4);
  return m;
}

std::optional<Sp4Equivariant> sp4_membership(const Eigen::Matrix4d& m, double tol,
                                             double* residual) {
  const Eigen::Matrix4d j = symplectic_j();
  double res = (m.transpose() * j * m - j).norm();
  const Eigen::Matrix4d rep = circle_rep(1.0);
  res = std::max(res, (m * rep - rep * m).norm());

  Sp4Equivariant e;
  const Eigen::Matrix2d a = m.topLeftCorner<2, 2>();
  const Eigen::Matrix2d b = m.topRightCorner<2, 2>();
  const Eigen::Matrix2d c = m.bottomLeftCorner<2, 2>();
  const Eigen::Matrix2d d = m.bottomRightCorner<2, 2>();
  e.lambda1 = a.norm() / std::sqrt(2.0);
  e.lambda2 = b.norm() / std::sqrt(2.0);
  e.theta1 = (e.lambda1 > 0.0) ? std::atan2(a(1, 0), a(0, 0)) : 0.0;
  e.theta4 = (e.lambda1 > 0.0) ? std::atan2(d(1, 0), d(0, 0)) : 0.0;
  e.theta2 = (e.lambda2 > 0.0) ? std::atan2(b(0, 1), b(0, 0)) : 0.0;
  e.theta3 = (e.lambda2 > 0.0) ? std::atan2(c(0, 1), c(0, 0)) : 0.0;

  res = std::max(res, (a - e.lambda1 * rot(e.theta1)).norm());
  res = std::max(res, (d - e.lambda1 * rot(e.theta4)).norm());
  res = std::max(res, (b - e.lambda2 * conj_rot(e.theta2)).norm());
  res = std::max(res, (c - e.lambda2 * conj_rot(e.theta3)).norm());
  res = std::max(res, std::abs(e.lambda1 * e.lambda1 - e.lambda2 * e.lambda2 - 1.0));
  if (e.lambda2 > tol)
    res = std::max(res,
                   std::abs(wrap_angle(e.theta1 + e.theta3 - e.theta2 - e.theta4)));
  if (residual) *residual = res;
  if (res > tol) return std::nullopt;
  return e;
}

Sp4Equivariant sp4_compose(const Sp4Equivariant& a, const Sp4Equivariant& b) {
  double res = 0.0;
  auto e = sp4_membership(sp4_matrix(a) * sp4_matrix(b), 1e-8, &res);
  if (!e) throw std::runtime_error("sp4_compose: product left the group");
  return *e;
}

Sp4Equivariant sp4_inverse(const Sp4Equivariant& e) {
  double res = 0.0;
  auto inv = sp4_membership(sp4_matrix(e).inverse(), 1e-8, &res);
  if (!inv) throw std::runtime_error("sp4_inverse: inverse left the group");
  return *inv;
}

Sp4Equivariant sp4_center(double theta) {
  Sp4Equivariant e;
  e.theta1 = wrap_angle(-theta);
  e.theta4 = wrap_angle(theta);
  return e;
}

Sp4Equivariant random_sp4(Rng& rng) {
  Sp4Equivariant e;
  e.lambda2 = std::abs(rng.normal());
  e.lambda1 = std::sqrt(1.0 + e.lambda2 * e.lambda2);
  e.theta1 = wrap_angle(rng.angle());
  e.theta2 = wrap_angle(rng.angle());
  e.theta4 = wrap_angle(rng.angle());
  e.theta3 = wrap_angle(e.theta2 + e.theta4 - e.theta1);
  return e;
}

double sp4_centrality_residual(const Sp4Equivariant& e) {
  return std::max({std::abs(e.lambda2), std::abs(e.lambda1 - 1.0),
                   std::abs(wrap_angle(e.theta1 + e.theta4))});
}

Eigen::Vector4d sp4_center_invariants(const Sp4Equivariant& e) {
  return {e.lambda1, e.lambda2, wrap_angle(e.theta1 + e.theta4),
          wrap_angle(e.theta2 + e.theta3)};
}

Complex reduce_at_zero(Complex z0, Complex z1, double tol) {
  const double m0 = std::abs(z0);
  const double m1 = std::abs(z1);
  if (m0 + m1 == 0.0) return 0.0;
  if (std::abs(m0 - m1) > tol * (1.0 + m0 + m1))
    throw std::invalid_argument("reduce_at_zero: point is off the zero level");
  const Complex prod = z0 * z1;
  const double mag = std::abs(prod);
  return mag > 0.0 ? prod / std::sqrt(mag) : Complex(0.0);
}

std::pair<Complex, Complex> induced_rays(const Sp4Equivariant& e) {
  const Complex a = e.lambda1 * std::exp(kI * e.theta1) +
                    e.lambda2 * std::exp(kI * e.theta2);
  const Complex b = e.lambda1 * std::exp(kI * e.theta1) -
                    e.lambda2 * std::exp(kI * e.theta2);
  const Complex spin = std::exp(kI * (e.theta4 - e.theta1));
  return {spin * a * a / std::abs(a), -spin * b * b / std::abs(b)};
}

std::pair<Complex, Complex> induced_rays_numeric(const Sp4Equivariant& e, double t) {
  const Eigen::Matrix4d m = sp4_matrix(e);
  auto push = [&](double sign) {
    Eigen::Vector4d v;
    v << t, 0.0, sign * t, 0.0;
    const Eigen::Vector4d w = m * v;
    const Complex z0(w(0), w(1));
    const Complex z1(w(2), w(3));
    return reduce_at_zero(z0, z1, 1e-8) / t;
  };
  return {push(1.0), push(-1.0)};
}

Sp4Equivariant solve_for_rays(double arg_plus, double arg_minus) {
  if (std::abs(wrap_angle(arg_plus - arg_minus)) <= 1e-6)
    throw std::invalid_argument("solve_for_rays: equal ray arguments are excluded");
  // arg w+ - arg w- = 2(beta+ - beta-) - pi with beta+-beta- in (-pi/2, pi/2)
  const double d = 0.5 * wrap_angle(arg_plus - arg_minus + kPi);
  const double gap = std::tan(d);  // = 2 l1 l2 sin(theta2)
  Sp4Equivariant e;
  if (std::abs(gap) > 0.0) {
    const double x = 0.5 * (std::sqrt(1.0 + gap * gap) - 1.0);  // lambda2^2
    e.lambda2 = std::sqrt(x);
    e.lambda1 = std::sqrt(1.0 + x);
    e.theta2 = (gap > 0.0) ? 0.5 * kPi : -0.5 * kPi;
  }
  const Complex a = e.lambda1 + e.lambda2 * std::exp(kI * e.theta2);
  const double beta_plus = std::arg(a);
  e.theta1 = 0.0;
  e.theta4 = wrap_angle(arg_plus - 2.0 * beta_plus);
  e.theta3 = wrap_angle(e.theta2 + e.theta4 - e.theta1);
  return e;
}

CylinderPoint disk_to_cylinder(const DiskPoint& d) {
  return {std::arg(d.z0), std::norm(d.z0), d.z};
}

DiskPoint cylinder_to_disk(const CylinderPoint& c) {
  if (c.s < 0.0) throw std::invalid_argument("cylinder_to_disk: s >= 0 required");
  return {std::sqrt(c.s) * std::exp(kI * c.t), c.z};
}

double disk_moment(const DiskPoint& d) { return -std::norm(d.z0) + d.z.squaredNorm(); }

double cylinder_moment(const CylinderPoint& c) { return -c.s + c.z.squaredNorm(); }

BlowupReport blowup_checks(double eps, double delta, int k, int samples, Rng& rng) {
  if (eps <= 0.0 || delta <= 0.0 || k < 1 || samples < 1)
    throw std::invalid_argument("blowup_checks: bad parameters");
  BlowupReport r;
  r.min_gradient = 1e300;
  const double fd = 1e-6;

  for (int it = 0; it < samples; ++it) {
    // annulus point, kept away from the arg branch cut for the FD probes
    const double s0 = rng.uniform(0.55 * eps, 0.95 * eps);
    const double t0 = rng.uniform(-0.9 * kPi, 0.9 * kPi);
    const Complex z0 = std::sqrt(s0) * std::exp(kI * t0);
    CVec z(k);
    for (int j = 0; j < k; ++j) z(j) = 0.1 * rng.complex_normal();
    const DiskPoint d{z0, z};

    // transition symplecticity on the z0 factor: pullback of (1/2) ds ^ dt
    auto ts = [&](double x, double y) {
      const Complex w(x, y);
      return std::pair<double, double>(std::arg(w), std::norm(w));
    };
    const double x = z0.real(), y = z0.imag();
    const auto [t_xp, s_xp] = ts(x + fd, y);
    const auto [t_xm, s_xm] = ts(x - fd, y);
    const auto [t_yp, s_yp] = ts(x, y + fd);
    const auto [t_ym, s_ym] = ts(x, y - fd);
    const double tx = (t_xp - t_xm) / (2.0 * fd);
    const double ty = (t_yp - t_ym) / (2.0 * fd);
    const double sx = (s_xp - s_xm) / (2.0 * fd);
    const double sy = (s_yp - s_ym) / (2.0 * fd);
    r.transition_symplectic =
        std::max(r.transition_symplectic, std::abs(0.5 * (sx * ty - sy * tx) - 1.0));

    const CylinderPoint c = disk_to_cylinder(d);
    const DiskPoint back = cylinder_to_disk(c);
    r.transition_roundtrip =
        std::max(r.transition_roundtrip,
                 std::max(std::abs(back.z0 - d.z0), (back.z - d.z).norm()));
    r.moment_agreement =
        std::max(r.moment_agreement, std::abs(disk_moment(d) - cylinder_moment(c)));

    const double rot_by = rng.uniform(0.0, 0.5 * kPi);
    const CylinderPoint rotated = disk_to_cylinder({z0 * std::exp(-kI * rot_by), z});
    r.equivariance = std::max(
        r.equivariance, std::abs(wrap_angle(rotated.t - (c.t - rot_by))));

    // surgered moment map has no critical point below delta: the disk side
    // keeps |z0|^2 >= eps/2 and the cylinder side has dPhi/ds = -1
    const double s_disk = rng.uniform(0.5 * eps, 4.0);
    CVec zd(k);
    for (int j = 0; j < k; ++j) zd(j) = 0.5 * rng.complex_normal();
    const DiskPoint kept{std::sqrt(s_disk) * std::exp(kI * rng.uniform(-kPi, kPi)), zd};
    if (disk_moment(kept) < delta) {
      const double grad_disk =
          std::sqrt(4.0 * std::norm(kept.z0) + 4.0 * zd.squaredNorm());
      r.min_gradient = std::min(r.min_gradient, grad_disk);
    }
    const CylinderPoint cc{rng.uniform(-kPi, kPi), rng.uniform(-2.0, eps), zd};
    if (cylinder_moment(cc) < delta) {
      const double grad_cyl = std::sqrt(1.0 + 4.0 * zd.squaredNorm());
      r.min_gradient = std::min(r.min_gradient, grad_cyl);
    }
  }

  // circle weights at the removed fixed point by FD linearization
  const double theta = 0.5;
  const double step = 1e-4;
  auto act = [&](const Eigen::Vector4d& v) {
    const Complex z0(v(0), v(1));
    const Complex z1(v(2), v(3));
    const Complex w0 = std::exp(-kI * theta) * z0;
    const Complex w1 = std::exp(kI * theta) * z1;
    Eigen::Vector4d out;
    out << w0.real(), w0.imag(), w1.real(), w1.imag();
    return out;
  };
  Eigen::Matrix4d jac;
  for (int col = 0; col < 4; ++col) {
    Eigen::Vector4d hi = Eigen::Vector4d::Zero();
    hi(col) = step;
    jac.col(col) = (act(hi) - act(-hi)) / (2.0 * step);
  }
  r.weight0 = std::atan2(jac(1, 0), jac(0, 0)) / theta;
  r.weight1 = std::atan2(jac(3, 2), jac(2, 2)) / theta;
  return r;
}

}  // namespace flagtwist
