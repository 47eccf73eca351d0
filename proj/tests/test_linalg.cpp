#include "oracles.hpp"
#include "pd/mat.hpp"
#include "pd/rat.hpp"

#include <doctest.h>

#include <random>

using pd::Mat;
using pd::Rat;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::vector<long>> rows(r, std::vector<long>(c));
  for (auto& row : rows)
    for (auto& x : row) x = d(rng);
  return Mat::from_ints(rows);
}

}  // namespace

TEST_CASE("generalized binomials match direct expansion") {
  CHECK(pd::binom_at(3, 2) == 3);
  CHECK(pd::binom_at(-1, 2) == 1);
  CHECK(pd::binom_at(-2, 1) == -2);
  for (int t = -6; t <= 6; ++t)
    for (unsigned k = 0; k <= 6; ++k) CHECK(pd::binom_at(t, k) == oracle::binom(t, k));
  CHECK(pd::binom_at(pd::make_rat(1, 2), 3) == oracle::binom(pd::make_rat(1, 2), 3));
}

TEST_CASE("rationals print in lowest terms as p/q") {
  CHECK(pd::to_string(pd::make_rat(2, -4)) == "-1/2");
  CHECK(pd::to_string(Rat(3)) == "3/1");
  CHECK(pd::parse_rat("6/8") == pd::make_rat(3, 4));
}

TEST_CASE("Kronecker product and composition") {
  CHECK(pd::kron(Mat::identity(2), Mat::identity(2)) == Mat::identity(4));
  Mat swap = Mat::from_ints({{0, 1}, {1, 0}});
  CHECK(pd::kron(swap, Mat::scalar(2)) == Mat::from_ints({{0, 2}, {2, 0}}));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    Mat a = random_mat(rng, 2, 3, -3, 3), b = random_mat(rng, 3, 2, -3, 3);
    Mat c = random_mat(rng, 2, 2, -3, 3), d = random_mat(rng, 3, 3, -3, 3);
    CHECK(pd::compose(Mat::identity(2), a) == a);
    // Dense reference product.
    CHECK(pd::compose(a, b).to_dense() == oracle::dense_mul(a.to_dense(), b.to_dense()));
    // Index convention: e_x (x) f_y sits at x * dim(f) + y.
    Mat k = pd::kron(a, c);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t p = 0; p < 2; ++p)
          for (std::size_t q = 0; q < 2; ++q) CHECK(k.at(i * 2 + p, j * 2 + q) == a.at(i, j) * c.at(p, q));
    // Mixed-product property.
    CHECK(pd::compose(pd::kron(a, c), pd::kron(b, c)) == pd::kron(pd::compose(a, b), pd::compose(c, c)));
    CHECK(pd::kron_apply(a, c, pd::kron(b, c)) == pd::compose(pd::kron(a, c), pd::kron(b, c)));
    CHECK(pd::compose(d, pd::transpose(pd::transpose(b))) == pd::compose(d, b));
  }
}

TEST_CASE("inverse and rank") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Mat m = random_mat(rng, 4, 4, -4, 4);
    auto inv = pd::inverse(m);
    if (inv) {
      CHECK(pd::compose(m, *inv) == Mat::identity(4));
      CHECK(pd::compose(*inv, m) == Mat::identity(4));
      CHECK(pd::rank(m) == 4);
    } else {
      CHECK(pd::rank(m) < 4);
    }
    // A product through a 2-dimensional space has rank at most 2.
    Mat low = pd::compose(random_mat(rng, 4, 2, -3, 3), random_mat(rng, 2, 4, -3, 3));
    CHECK(pd::rank(low) <= 2);
    CHECK_FALSE(pd::inverse(low).has_value());
  }
  CHECK(pd::rank(Mat::zero(3, 2)) == 0);
}

TEST_CASE("splitting idempotents") {
  auto s = pd::split_idempotent(Mat::identity(3));
  CHECK(s.i == Mat::identity(3));
  CHECK(s.p == Mat::identity(3));
  auto z = pd::split_idempotent(Mat::zero(3, 3));
  CHECK(z.i.rows() == 3);
  CHECK(z.i.cols() == 0);
  CHECK(z.p.rows() == 0);
  // Antisymmetrizer on Q^2 (x) Q^2.
  Mat swap(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) swap.set(b * 2 + a, a * 2 + b, 1);
  Mat e = pd::scale(pd::sub(Mat::identity(4), swap), pd::make_rat(1, 2));
  auto a = pd::split_idempotent(e);
  CHECK(a.i.rows() == 4);
  CHECK(a.i.cols() == 1);
  CHECK(a.p.rows() == 1);
  CHECK(pd::compose(a.p, a.i) == Mat::identity(1));
  CHECK(pd::compose(a.i, a.p) == e);
  Mat not_idem = Mat::from_ints({{1, 1}, {0, 0}});
  CHECK_NOTHROW(pd::split_idempotent(not_idem));  // idempotent: [[1,1],[0,0]]^2 = itself
  CHECK_THROWS_AS(pd::split_idempotent(Mat::from_ints({{2}})), pd::NotIdempotentError);
}

TEST_CASE("residual is zero exactly on equality") {
  Mat a = Mat::from_ints({{1, 2}, {3, 4}});
  CHECK(pd::residual(a, a) == "0");
  CHECK(pd::residual(a, Mat::from_ints({{1, 2}, {3, -1}})) == "5");
  CHECK_THROWS_AS(pd::residual(a, Mat::identity(3)), pd::DimensionError);
}
