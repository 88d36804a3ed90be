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
#include <vector>

#include "qgl/cpoly.hpp"
#include "qgl/errors.hpp"
#include "qgl/qpoly.hpp"
#include "qgl/random.hpp"
#include "support.hpp"

namespace qgl {
namespace {

using testing::dist;
using testing::oracle_eval;
using testing::oracle_mul;
using testing::scale;

const Quat i = Quat::i(), j = Quat::j(), k = Quat::k();

// sum_{s,t} q^{s+t} a_s b_t, the defining convolution, by the oracle.
Quat oracle_star_eval(const QPoly& p, const QPoly& q, const Quat& at) {
  std::vector<Quat> conv(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t s = 0; s < p.coeffs().size(); ++s) {
    for (std::size_t t = 0; t < q.coeffs().size(); ++t) conv[s + t] += oracle_mul(p.coeffs()[s], q.coeffs()[t]);
  }
  return oracle_eval(conv, at);
}

double coeff_dist(const QPoly& a, const QPoly& b) {
  double d = 0.0;
  for (std::size_t n = 0; n < std::max(a.coeffs().size(), b.coeffs().size()); ++n) {
    d = std::max(d, dist(a.coeff(n), b.coeff(n)));
  }
  return d;
}

TEST(QPoly, TrimsAndReportsDegree) {
  EXPECT_EQ(QPoly{}.degree(), -1);
  EXPECT_TRUE(QPoly({Quat{}, Quat{}}).is_zero());
  const QPoly p({Quat{1.0}, i, Quat{1e-14}});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), i);
  EXPECT_EQ(p.coeff(7), Quat{});
}

TEST(QPoly, EvaluateRightCoefficients) {
  // P(q) = q i: at q = j this is j i = -k, not i j = k.
  const QPoly p({Quat{}, i});
  EXPECT_EQ(evaluate(p, j), -k);
  EXPECT_EQ(evaluate(QPoly({Quat{1.0}, Quat{}, Quat{1.0}}), j), Quat{});
}

TEST(StarProduct, CounterexampleFactorization) {
  // (q + i + k) * (q + i - k) = q^2 + 2 q i + 2 j
  const QPoly p = star_mul(linear_factor(-(i + k)), linear_factor(-(i - k))) * 0.5;
  EXPECT_EQ(p, QPoly({j, i, Quat{0.5}}));
}

TEST(StarProduct, LinearFactorsExpand) {
  const Quat a{1, 2, -1, 0.5}, b{-2, 0, 1, 3};
  const QPoly p = star_mul(linear_factor(a), linear_factor(b));
  EXPECT_EQ(p, QPoly({a * b, -(a + b), Quat{1.0}}));
}

TEST(StarProduct, NotPointwise) {
  // (q - i) * (q - j) vanishes at i but the pointwise product at j does not.
  const QPoly p = star_mul(linear_factor(i), linear_factor(j));
  EXPECT_LT(qnorm(evaluate(p, i)), 1e-15);
  EXPECT_GT(qnorm(evaluate(p, j)), 0.5);
}

TEST(Symmetrization, CounterexampleCoefficients) {
  const QPoly p({j, i, Quat{0.5}});
  const QPoly ps = symmetrize(p);
  const std::vector<double> expected{1, 0, 1, 0, 0.25};
  ASSERT_EQ(ps.degree(), 4);
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_NEAR(ps.coeff(n).w, expected[n], 1e-15);
    EXPECT_EQ(imag_norm(ps.coeff(n)), 0.0);
  }
}

TEST(Symmetrization, RealCoefficientsGiveSquare) {
  const QPoly p = QPoly::from_real(std::vector<double>{1, -3, 2});
  const QPoly ps = symmetrize(p);
  EXPECT_EQ(ps, star_mul(p, p));
}

TEST(Derivative, Formal) {
  const QPoly p({j, i, Quat{0.5}});
  EXPECT_EQ(derivative(p), QPoly({i, Quat{1.0}}));
  EXPECT_TRUE(derivative(QPoly({k})).is_zero());
}

TEST(LeftDivideLinear, RemainderIsValue) {
  const QPoly p({Quat{1, 2, 3, 4}, Quat{0, 1, 0, -1}, Quat{2, 0, 0, 1}, Quat{1.0}});
  const Quat alpha{0.5, -1, 2, 0};
  const LinearDivision d = left_divide_linear(p, alpha);
  EXPECT_LT(dist(d.remainder, oracle_eval(p.coeffs(), alpha)), 1e-13);
  const QPoly back = star_mul(linear_factor(alpha), d.quotient) + QPoly({d.remainder});
  EXPECT_LT(coeff_dist(back, p), 1e-13);
}

TEST(LeftDivideLinear, ConstantAndZero) {
  const LinearDivision d = left_divide_linear(QPoly({k}), i);
  EXPECT_TRUE(d.quotient.is_zero());
  EXPECT_EQ(d.remainder, k);
  EXPECT_THROW(left_divide_linear(QPoly{}, i), InvalidArgument);
}

TEST(CharacteristicPoly, VanishesOnSphere) {
  const TwoSphere s{1.5, 2.0};
  const QPoly c = characteristic_poly(s);
  EXPECT_EQ(c, QPoly({Quat{6.25}, Quat{-3.0}, Quat{1.0}}));
  Rng rng(11);
  for (int t = 0; t < 100; ++t) EXPECT_LT(qnorm(evaluate(c, s.point(rng.unit_imaginary()))), 1e-13);
}

TEST(DivideByReal, ExactDeflation) {
  const QPoly c = characteristic_poly({0.0, 1.0});
  const QPoly q({Quat{1, 2, 0, 0}, Quat{0, 0, 1, 1}, Quat{3.0}});
  double rem = -1.0;
  const QPoly back = divide_by_real(star_mul(c, q), real_parts(c), &rem);
  EXPECT_EQ(rem, 0.0);
  EXPECT_LT(coeff_dist(back, q), 1e-15);
  EXPECT_THROW(divide_by_real(q, std::vector<double>{}), InvalidArgument);
}

TEST(PointwiseStarEval, ZeroOfLeftFactor) {
  const QPoly p = linear_factor(i);
  const QPoly q({Quat{1, 1, 1, 1}, Quat{2.0}});
  EXPECT_EQ(pointwise_star_eval(p, q, i), Quat{});
}

TEST(RestrictToSlice, SplitsCoefficients) {
  const QPoly p({j, i, Quat{0.5}});
  const ComplexSlicePoly s = restrict_to_slice(p, UnitImaginary::i());
  EXPECT_EQ(s.ortho.value(), j);
  ASSERT_EQ(s.p1.size(), 3u);
  EXPECT_EQ(s.p1[1], Complex(0.0, 1.0));
  EXPECT_EQ(s.p2[0], Complex(1.0, 0.0));
}

TEST(HasRealCoefficients, Tolerance) {
  EXPECT_TRUE(has_real_coefficients(QPoly({Quat{1.0}, Quat{2.0, 1e-14, 0, 0}})));
  EXPECT_FALSE(has_real_coefficients(QPoly({Quat{1.0}, Quat{2.0, 1e-6, 0, 0}})));
}

// Properties over random dense polynomials.

TEST(PolyProperty, StarEvalMatchesConvolutionOracle) {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    const QPoly p = random_dense_poly(rng, rng.uniform_int(0, 5));
    const QPoly q = random_dense_poly(rng, rng.uniform_int(0, 5));
    const Quat at = rng.quaternion_in_ball(2.0);
    const Quat want = oracle_star_eval(p, q, at);
    const double s = scale(star_mul(p, q), at);
    EXPECT_LT(dist(evaluate(star_mul(p, q), at), want), 1e-12 * s);
    EXPECT_LT(dist(pointwise_star_eval(p, q, at), want), 1e-12 * s);
  }
}

TEST(PolyProperty, StarProductAssociative) {
  Rng rng(22);
  for (int t = 0; t < 500; ++t) {
    const QPoly a = random_dense_poly(rng, rng.uniform_int(0, 4));
    const QPoly b = random_dense_poly(rng, rng.uniform_int(0, 4));
    const QPoly c = random_dense_poly(rng, rng.uniform_int(0, 4));
    EXPECT_LT(coeff_dist(star_mul(star_mul(a, b), c), star_mul(a, star_mul(b, c))), 1e-13);
  }
}

TEST(PolyProperty, ConjugationReversesStarProduct) {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    const QPoly a = random_dense_poly(rng, rng.uniform_int(0, 5));
    const QPoly b = random_dense_poly(rng, rng.uniform_int(0, 5));
    EXPECT_LT(coeff_dist(conjugate_poly(star_mul(a, b)), star_mul(conjugate_poly(b), conjugate_poly(a))), 1e-13);
  }
}

TEST(PolyProperty, SymmetrizationIsReal) {
  Rng rng(24);
  for (int t = 0; t < 1000; ++t) {
    const QPoly p = random_dense_poly(rng, rng.uniform_int(1, 8));
    const double s = scale(p, Quat{}) * scale(p, Quat{});
    const QPoly ps = symmetrize(p);
    for (const Quat& b : ps.coeffs()) EXPECT_LE(imag_norm(b), 1e-14 * s);
    // P^s = P^c * P as well.
    EXPECT_LT(coeff_dist(symmetrize(p), star_mul(conjugate_poly(p), p)), 1e-13 * s);
  }
}

TEST(PolyProperty, SliceSplitReproducesP) {
  Rng rng(25);
  for (int t = 0; t < 500; ++t) {
    const QPoly p = random_dense_poly(rng, rng.uniform_int(0, 6));
    const ComplexSlicePoly s = restrict_to_slice(p, rng.unit_imaginary());
    const Complex z = rng.complex_in_box(2.0);
    const Quat at = embed(z, s.unit);
    EXPECT_LT(dist(s.evaluate(z), oracle_eval(p.coeffs(), at)), 1e-12 * scale(p, at));
  }
}

TEST(PolyProperty, SliceFormulaForSymmetrization) {
  // P^s on C(I) equals P1(z) conj(P1(conj z)) + P2(z) conj(P2(conj z)).
  Rng rng(26);
  for (int t = 0; t < 500; ++t) {
    const QPoly p = random_dense_poly(rng, rng.uniform_int(1, 6));
    const ComplexSlicePoly s = restrict_to_slice(p, rng.unit_imaginary());
    const CPoly q = hermitian_square_sum(s.p1, s.p2);
    const QPoly ps = symmetrize(p);
    const double sc = scale(p, Quat{}) * scale(p, Quat{});
    for (std::size_t n = 0; n < q.size(); ++n) {
      EXPECT_NEAR(q[n].real(), ps.coeff(n).w, 1e-13 * sc);
      EXPECT_NEAR(q[n].imag(), 0.0, 1e-13 * sc);
    }
  }
}

TEST(PolyProperty, DerivativeCommutesWithSlicing) {
  Rng rng(27);
  for (int t = 0; t < 300; ++t) {
    const QPoly p = random_dense_poly(rng, rng.uniform_int(1, 6));
    const UnitImaginary u = rng.unit_imaginary();
    const ComplexSlicePoly a = restrict_to_slice(derivative(p), u);
    const ComplexSlicePoly b = restrict_to_slice(p, u);
    const CPoly d1 = cpoly_derivative(b.p1), d2 = cpoly_derivative(b.p2);
    for (std::size_t n = 0; n < a.p1.size(); ++n) {
      EXPECT_LT(std::abs(a.p1[n] - (n < d1.size() ? d1[n] : Complex{})), 1e-13);
      EXPECT_LT(std::abs(a.p2[n] - (n < d2.size() ? d2[n] : Complex{})), 1e-13);
    }
  }
}

TEST(PolyProperty, LeftDivisionRoundTrip) {
  Rng rng(28);
  for (int t = 0; t < 1000; ++t) {
    const QPoly p = random_dense_poly(rng, rng.uniform_int(1, 7));
    const Quat alpha = rng.quaternion_in_ball(3.0);
    const LinearDivision d = left_divide_linear(p, alpha);
    const QPoly back = star_mul(linear_factor(alpha), d.quotient) + QPoly({d.remainder});
    EXPECT_LT(coeff_dist(back, p), 1e-12 * scale(p, alpha));
    EXPECT_LT(dist(d.remainder, oracle_eval(p.coeffs(), alpha)), 1e-12 * scale(p, alpha));
  }
}

TEST(CPoly, Basics) {
  const CPoly p = cpoly_from_roots({Complex{1.0}, Complex{0.0, 2.0}});
  EXPECT_EQ(cpoly_degree(p), 2);
  EXPECT_LT(std::abs(cpoly_eval(p, Complex{0.0, 2.0})), 1e-15);
  EXPECT_EQ(cpoly_degree(CPoly{}), -1);
  EXPECT_EQ(cpoly_reflect(CPoly{Complex{1, 2}}), (CPoly{Complex{1, -2}}));
  EXPECT_EQ(cpoly_derivative(p).size(), 2u);
}

}  // namespace
}  // namespace qgl
