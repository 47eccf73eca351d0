#include "oracles.hpp"
#include "pd/category.hpp"

#include <doctest.h>

#include <random>

using namespace pd;

namespace {

// A random morphism respecting parities (odd-to-even entries vanish).
Mor random_mor(std::mt19937_64& rng, const Obj& x, const Obj& y) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat m(y.dim(), x.dim());
  for (std::size_t r = 0; r < y.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c)
      if (y.par[r] == x.par[c]) m.set(r, c, d(rng));
  return make_mor(x, y, m);
}

// 1|2 super space with a non-identity (but even) pairing.
Obj twisted() {
  return with_gram(super_space(1, 2), Mat::from_ints({{2, 0, 0}, {0, 1, 1}, {0, 0, 1}}), "W");
}

}  // namespace

TEST_CASE("ranks are signed dimensions") {
  CHECK(rank(plain_space(4)) == 4);
  CHECK(rank(super_space(1, 2)) == -1);
  CHECK(rank(unit()) == 1);
  CHECK(rank(twisted()) == -1);
  CHECK(compose(ev_tau(super_space(1, 2)), casimir(super_space(1, 2))).mat == Mat::from_ints({{-1}}));
}

TEST_CASE("symmetry constraint") {
  Obj odd = super_space(0, 1);
  CHECK(tau(odd, odd).mat == Mat::from_ints({{-1}}));
  Obj a = plain_space(2), b = plain_space(3);
  Mat t = tau(a, b).mat;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(t.at(y * 2 + x, x * 3 + y) == 1);
  for (const Obj& x : {super_space(1, 1), twisted()})
    for (const Obj& y : {super_space(2, 1), super_space(0, 2)})
      CHECK(compose(tau(y, x), tau(x, y)).mat == Mat::identity(x.dim() * y.dim()));
}

TEST_CASE("evaluation on a tensor product follows the Koszul rule") {
  for (const auto& [x, y] : {std::pair{twisted(), super_space(1, 1)}, std::pair{super_space(0, 2), twisted()}}) {
    Mat ex = ev(x).mat, ey = ev(y).mat, exy = ev(tensor(x, y)).mat;
    std::size_t n = x.dim(), m = y.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < m; ++d) {
            Rat sign = (y.odd(b) && x.odd(c)) ? -1 : 1;
            Rat expect = sign * ex.at(0, a * n + c) * ey.at(0, b * m + d);
            CHECK(exy.at(0, (a * m + b) * (n * m) + (c * m + d)) == expect);
          }
  }
}

TEST_CASE("factored pairings compare by value") {
  Obj x = twisted(), y = super_space(1, 1), z = with_gram(plain_space(2), Mat::from_ints({{1, 1}, {0, 1}}));
  CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
  Obj xy = tensor(x, y);
  Obj flat = make_obj(xy.par, std::make_shared<const Mat>(xy.gram_mat()), "flat");
  CHECK(flat == xy);
  CHECK_FALSE(tensor(x, y) == tensor(super_space(1, 2), y));
  // Two odd identity-paired lines: the product pairing picks up a sign.
  Obj odd = super_space(0, 1);
  CHECK(tensor(odd, odd).gram_mat() == Mat::from_ints({{-1}}));
  CHECK(tensor(plain_space(2), plain_space(3)).identity_pairing());
}

TEST_CASE("zigzag identities") {
  for (const Obj& x : {plain_space(3), super_space(1, 2), twisted()}) {
    Mor lhs = compose(tensor(id(x), ev(x)), tensor(casimir(x), id(x)));
    CHECK(lhs.mat == Mat::identity(x.dim()));
    Mor rhs = compose(tensor(ev(x), id(dual(x))), tensor(id(dual(x)), casimir(x)));
    CHECK(rhs.mat == Mat::identity(x.dim()));
  }
}

TEST_CASE("internal hom and duality") {
  std::mt19937_64 rng(5);
  Obj x = twisted(), y = super_space(1, 1), z = super_space(2, 0);
  CHECK(hom(x, y).dim() == x.dim() * y.dim());
  CHECK(hom_functor(id(x), id(y)).mat == Mat::identity(x.dim() * y.dim()));
  Mat d = internal_duality(plain_space(2), plain_space(3)).mat;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    REQUIRE(d.row(r).size() == 1);
    CHECK(d.row(r)[0].second == 1);
  }
  for (int t = 0; t < 5; ++t) {
    Mor f = random_mor(rng, x, y), g = random_mor(rng, y, z);
    CHECK(equal(dual(compose(g, f)), compose(dual(f), dual(g))));
    // f^vv o i_X = i_Y o f
    CHECK(equal(compose(dual(dual(f)), bidual(x)), compose(bidual(y), f)));
  }
}
