#include "abcyl/gamma.hpp"

#include <cmath>

namespace abcyl {

namespace {

GammaSet build_standard() {
  const complex i(0.0, 1.0);
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, -i, i, 0;
  s3 << 1, 0, 0, -1;

  GammaSet g;
  g.gamma[0] = Matrix4c::Zero();
  g.gamma[0].diagonal() << 1, 1, -1, -1;
  const std::array<Eigen::Matrix2cd, 3> sigma{s1, s2, s3};
  for (int a = 0; a < 3; ++a) {
    Matrix4c m = Matrix4c::Zero();
    m.topRightCorner<2, 2>() = sigma[a];
    m.bottomLeftCorner<2, 2>() = -sigma[a];
    g.gamma[a + 1] = m;
  }
  g.spin3 = Matrix4c::Zero();
  g.spin3.topLeftCorner<2, 2>() = 0.5 * s3;
  g.spin3.bottomRightCorner<2, 2>() = 0.5 * s3;
  return g;
}

}  // namespace

const GammaSet& GammaSet::standard() {
  static const GammaSet g = build_standard();
  return g;
}

Matrix4c GammaSet::gamma_phi(double phi) const { return -gamma[1] * std::sin(phi) + gamma[2] * std::cos(phi); }

Matrix4c GammaSet::dgamma_phi(double phi) const { return -gamma[1] * std::cos(phi) - gamma[2] * std::sin(phi); }

}  // namespace abcyl
