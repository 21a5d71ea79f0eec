#include <gtest/gtest.h>

#include <random>

#include "relgl/mat.hpp"

using namespace relgl;

namespace {

// Right inverse by trying every matrix.
std::optional<Mat> brute_inverse(const Mat& x) {
  const FiniteRing& r = *x.ring;
  const std::uint64_t total = sat_pow(r.size(), x.n * x.n);
  const Mat e = identity(r, x.n);
  for (std::uint64_t k = 0; k < total; ++k) {
    Mat y = mat_from_key(r, x.n, k);
    if (x * y == e) return y;
  }
  return std::nullopt;
}

Mat random_mat(const FiniteRing& r, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
  Mat m = zero_matrix(r, n);
  for (unsigned k = 0; k < n * n; ++k) m.e[k] = Elem(pick(rng));
  return m;
}

}  // namespace

TEST(Mat, InverseAgreesWithBruteForceOverEveryMatrix) {
  for (const auto& r : {make_zmod(4), make_zmod(6), make_triangular(2), make_local_f2()}) {
    const unsigned n = 2;
    const std::uint64_t total = sat_pow(r->size(), n * n);
    std::uint64_t invertible = 0;
    for (std::uint64_t k = 0; k < total; ++k) {
      Mat x = mat_from_key(*r, n, k);
      auto fast = mat_inverse(x);
      auto slow = brute_inverse(x);
      ASSERT_EQ(fast.has_value(), slow.has_value()) << to_text(x);
      if (fast) {
        ++invertible;
        ASSERT_EQ(*fast, *slow);
        ASSERT_EQ(*fast * x, identity(*r, n));
      }
    }
    EXPECT_EQ(invertible, *r->gl_order(n)) << r->descriptor().dump();
  }
}

TEST(Mat, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(7);
  for (const auto& r : {make_zmod(12), make_local_f2()}) {
    for (unsigned n = 1; n <= 4; ++n)
      for (int k = 0; k < 200; ++k) {
        Mat x = random_mat(*r, n, rng), y = random_mat(*r, n, rng);
        ASSERT_EQ(determinant(x * y), r->mul(determinant(x), determinant(y)));
      }
  }
  auto z5 = make_zmod(5);
  EXPECT_EQ(determinant(diagonal(*z5, {2, 3, 4})), 4);
  EXPECT_EQ(determinant(permutation_matrix(*z5, {1, 0, 2})), 4);
}

TEST(Mat, InverseOfRandomInvertibleMatricesDegreeThreeAndFour) {
  std::mt19937_64 rng(11);
  for (const auto& r : {make_zmod(8), make_triangular(2)}) {
    for (unsigned n : {3u, 4u})
      for (int k = 0; k < 100; ++k) {
        Mat x = random_mat(*r, n, rng);
        if (auto inv = mat_inverse(x)) {
          ASSERT_EQ(x * *inv, identity(*r, n));
          ASSERT_EQ(*inv * x, identity(*r, n));
        }
      }
  }
}

TEST(Mat, NonInvertibleMatrixIsRejected) {
  auto r = make_zmod(4);
  Mat x = scalar(*r, 2, 2);
  EXPECT_FALSE(is_invertible(x));
  EXPECT_THROW(inverse_of(x), Error);
}

TEST(Mat, TransvectionRejectsBadPositions) {
  auto r = make_zmod(4);
  auto kind = [&](unsigned n, unsigned i, unsigned j) {
    try {
      transvection(*r, n, i, j, 1);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_input;
  };
  EXPECT_EQ(kind(3, 1, 1), ErrorKind::invalid_position);
  EXPECT_EQ(kind(3, 0, 3), ErrorKind::invalid_position);
  EXPECT_EQ(kind(5, 0, 1), ErrorKind::invalid_parameter);
}

TEST(Mat, TransvectionRelations) {
  auto r = make_zmod(9);
  const unsigned n = 3;
  EXPECT_EQ(transvection(*r, n, 0, 1, 2) * transvection(*r, n, 0, 1, 4), transvection(*r, n, 0, 1, 6));
  EXPECT_EQ(inverse_of(transvection(*r, n, 0, 1, 2)), transvection(*r, n, 0, 1, 7));
  // [t_12(a), t_23(b)] = t_13(ab).
  EXPECT_EQ(commutator(transvection(*r, n, 0, 1, 2), transvection(*r, n, 1, 2, 4)), transvection(*r, n, 0, 2, 8));
}

TEST(Mat, YGeneratorKnownValues) {
  auto z8 = make_zmod(8);
  EXPECT_EQ(y_gen(*z8, 3, 0, 1, 2, 2), diagonal(*z8, {5, 5, 1}));
  auto z4 = make_zmod(4);
  EXPECT_TRUE(is_identity(y_gen(*z4, 3, 0, 1, 2, 2)));
  // y_ij(a, b) is the commutator of the two transvections.
  EXPECT_EQ(y_gen(*z8, 3, 1, 2, 3, 6),
            commutator(transvection(*z8, 3, 1, 2, 3), transvection(*z8, 3, 2, 1, 6)));
}

TEST(Mat, ZGeneratorIsConjugateOfTransvection) {
  auto r = make_local_f2();
  for (Elem a : r->elements())
    for (Elem c : r->elements()) {
      Mat t = transvection(*r, 2, 0, 1, c);
      EXPECT_EQ(z_gen(*r, 2, 0, 1, a, c), t * transvection(*r, 2, 1, 0, a) * inverse_of(t));
    }
}

TEST(Mat, KeyRoundTrip) {
  std::mt19937_64 rng(3);
  for (const auto& r : {make_zmod(12), make_triangular(3)}) {
    for (unsigned n = 2; n <= 4; ++n) {
      if (!key_fits(*r, n)) continue;
      for (int k = 0; k < 100; ++k) {
        Mat x = random_mat(*r, n, rng);
        ASSERT_EQ(mat_from_key(*r, n, mat_key(x)), x);
      }
    }
  }
  EXPECT_TRUE(key_fits(*make_zmod(12), 4));
  // 27^16 > 2^64.
  EXPECT_FALSE(key_fits(*make_triangular(3), 4));
  EXPECT_FALSE(key_fits(*make_zmod(8000), 4));
}

TEST(Mat, TextRoundTripAndErrors) {
  auto r = make_zmod(4);
  Mat x = from_text(*r, "[[1,2,0],[0,1,0],[3,0,1]]");
  EXPECT_EQ(to_text(x), "[[1,2,0],[0,1,0],[3,0,1]]");
  EXPECT_EQ(x(2, 0), 3);
  EXPECT_THROW(from_text(*r, "[[1,2],[0]]"), Error);
  EXPECT_THROW(from_text(*r, "[[1,4],[0,1]]"), Error);
  EXPECT_THROW(from_text(*r, "not json"), Error);
}

TEST(Mat, MismatchedRingsRejected) {
  auto a = make_zmod(4), b = make_zmod(4);
  EXPECT_THROW(identity(*a, 2) * identity(*b, 2), Error);
}
