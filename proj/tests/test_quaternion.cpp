// Copyright 2026 The qgl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>

#include "qgl/errors.hpp"
#include "qgl/quaternion.hpp"
#include "qgl/random.hpp"
#include "support.hpp"

namespace qgl {
namespace {

using testing::dist;
using testing::oracle_mul;
using testing::oracle_norm;

TEST(Quaternion, UnitProducts) {
  const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, Quat{-1.0});
  EXPECT_EQ(i * j * k, Quat{-1.0});
}

TEST(Quaternion, HamiltonExample) {
  // (1 + 2i + 3j + 4k)(5 + 6i + 7j + 8k) = -60 + 12i + 30j + 24k
  const Quat p{1, 2, 3, 4}, q{5, 6, 7, 8};
  EXPECT_EQ(qmul(p, q), (Quat{-60, 12, 30, 24}));
  EXPECT_EQ(qmul(p, q), oracle_mul(p, q));
}

TEST(Quaternion, ConjugateNormInverse) {
  const Quat q{1, -2, 3, 0.5};
  EXPECT_EQ(qconj(q), (Quat{1, 2, -3, -0.5}));
  EXPECT_DOUBLE_EQ(qnorm2(q), 14.25);
  EXPECT_DOUBLE_EQ(imag_norm(q), std::sqrt(13.25));
  EXPECT_LT(dist(q * qinv(q), Quat{1.0}), 1e-15);
  EXPECT_LT(dist(qinv(q) * q, Quat{1.0}), 1e-15);
}

TEST(Quaternion, InverseOfZeroThrows) { EXPECT_THROW(qinv(Quat{}), DomainError); }

TEST(Quaternion, DotProduct) {
  EXPECT_DOUBLE_EQ(dot(Quat{1, 2, 3, 4}, Quat{4, 3, 2, 1}), 20.0);
}

TEST(Quaternion, FiniteCheck) {
  EXPECT_TRUE(is_finite(Quat{1, 2, 3, 4}));
  EXPECT_FALSE(is_finite(Quat{1, NAN, 3, 4}));
  EXPECT_FALSE(is_finite(Quat{1, 2, INFINITY, 4}));
}

TEST(UnitImaginary, FromValidatesSphere) {
  EXPECT_NO_THROW(UnitImaginary::from(Quat{0, 0.6, 0.8, 0}));
  EXPECT_THROW(UnitImaginary::from(Quat{0.1, 0.6, 0.8, 0}), InvalidArgument);
  EXPECT_THROW(UnitImaginary::from(Quat{0, 1.0, 1.0, 0}), InvalidArgument);
}

TEST(UnitImaginary, ImagUnitOfRealIsAmbiguous) {
  EXPECT_THROW(imag_unit(Quat{3.0}), AmbiguousSlice);
  EXPECT_THROW(imag_unit(Quat{3.0, 1e-12, 0, 0}), AmbiguousSlice);
  const UnitImaginary u = imag_unit(Quat{3.0, 0.0, 0.0, -2.0});
  EXPECT_EQ(u.value(), (Quat{0, 0, 0, -1}));
}

TEST(UnitImaginary, OrthogonalUnit) {
  for (const Quat& q : {Quat::i(), Quat::j(), Quat::k(), Quat{0, 1, 1, 1}, Quat{0, 1, 1e-9, 0}}) {
    const UnitImaginary u = UnitImaginary::normalized(q);
    const UnitImaginary v = orthogonal_unit(u);
    EXPECT_NEAR(dot(u.value(), v.value()), 0.0, 1e-15);
    EXPECT_NEAR(oracle_norm(v.value()), 1.0, 1e-15);
    EXPECT_EQ(v.value().w, 0.0);
  }
}

TEST(TwoSphere, MembershipAndPoints) {
  const TwoSphere s{1.0, 2.0};
  EXPECT_TRUE(s.contains(Quat{1.0, 0.0, 2.0, 0.0}));
  EXPECT_TRUE(s.contains(s.point(UnitImaginary::normalized(Quat{0, 1, -2, 3}))));
  EXPECT_FALSE(s.contains(Quat{1.0, 0.0, 2.1, 0.0}));
  EXPECT_DOUBLE_EQ(s.modulus(), std::sqrt(5.0));
  EXPECT_TRUE(same_sphere(Quat{1, 2, 0, 0}, Quat{1, 0, 0, -2}));
  EXPECT_FALSE(same_sphere(Quat{1, 2, 0, 0}, Quat{-1, 2, 0, 0}));
}

TEST(Embed, SliceIsACopyOfC) {
  const UnitImaginary u = UnitImaginary::normalized(Quat{0, 1, 2, 2});
  const std::complex<double> a{1.5, -2.0}, b{0.25, 3.0};
  EXPECT_LT(dist(embed(a, u) * embed(b, u), embed(a * b, u)), 1e-14);
}

// Properties, 10^4 random samples each.

TEST(QuaternionProperty, NormIsMultiplicative) {
  Rng rng(1);
  for (int t = 0; t < 10000; ++t) {
    const Quat p = rng.quaternion_in_ball(10.0), q = rng.quaternion_in_ball(10.0);
    EXPECT_NEAR(qnorm(p * q), qnorm(p) * qnorm(q), 1e-13 * (1.0 + qnorm(p) * qnorm(q)));
  }
}

TEST(QuaternionProperty, ProductMatchesMatrixModel) {
  Rng rng(2);
  for (int t = 0; t < 10000; ++t) {
    const Quat p = rng.quaternion_in_ball(10.0), q = rng.quaternion_in_ball(10.0);
    EXPECT_LT(dist(p * q, oracle_mul(p, q)), 1e-12);
  }
}

TEST(QuaternionProperty, Associativity) {
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) {
    const Quat a = rng.quaternion_in_ball(3.0), b = rng.quaternion_in_ball(3.0), c = rng.quaternion_in_ball(3.0);
    EXPECT_LT(dist((a * b) * c, a * (b * c)), 1e-12);
  }
}

TEST(QuaternionProperty, ConjugateReversesProducts) {
  Rng rng(4);
  for (int t = 0; t < 10000; ++t) {
    const Quat p = rng.quaternion_in_ball(3.0), q = rng.quaternion_in_ball(3.0);
    EXPECT_LT(dist(qconj(p * q), qconj(q) * qconj(p)), 1e-13);
  }
}

TEST(QuaternionProperty, UnitImaginariesSquareToMinusOne) {
  Rng rng(5);
  for (int t = 0; t < 10000; ++t) {
    const Quat u = rng.unit_imaginary().value();
    EXPECT_LT(dist(u * u, Quat{-1.0}), 1e-15);
  }
}

TEST(QuaternionProperty, ConjugationPreservesSphere) {
  Rng rng(6);
  for (int t = 0; t < 10000; ++t) {
    const Quat q = rng.quaternion_in_ball(5.0), h = rng.quaternion_in_ball(5.0);
    if (qnorm(h) < 1e-3) continue;
    const Quat r = qinv(h) * q * h;
    EXPECT_NEAR(r.w, q.w, 1e-13);
    EXPECT_NEAR(imag_norm(r), imag_norm(q), 1e-12);
  }
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int t = 0; t < 100; ++t) {
    const double x = a.unit();
    EXPECT_EQ(x, b.unit());
    differs = differs || x != c.unit();
  }
  EXPECT_TRUE(differs);
  Rng s = Rng::for_instance(42, 7), u = Rng::for_instance(42, 7);
  EXPECT_EQ(s.unit(), u.unit());
}

}  // namespace
}  // namespace qgl
