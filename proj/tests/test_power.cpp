#include "oracles.hpp"
#include "pd/power.hpp"

#include <doctest.h>

using namespace pd;

namespace {

// Projection from the k-fold tensor power of v onto the k-th power carrier.
Mor proj(const Obj& v, Flavor f, std::size_t k) { return power(v, f, k)->split.p; }

}  // namespace

TEST_CASE("power carriers have the expected graded dimensions") {
  for (long p = 0; p <= 3; ++p)
    for (long q = 0; p + q <= 3; ++q) {
      if (p + q == 0) continue;
      Obj v = super_space(p, q);
      for (long k = 0; k <= 3; ++k) {
        auto [ad, asd] = oracle::alt_dims(p, q, k);
        auto [sd, ssd] = oracle::sym_dims(p, q, k);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(k);
        CHECK(static_cast<long>(A(v, Flavor::alt, k).dim()) == ad);
        CHECK(static_cast<long>(A(v, Flavor::sym, k).dim()) == sd);
        CHECK(rank(A(v, Flavor::alt, k)) == asd);
        CHECK(rank(A(v, Flavor::sym, k)) == ssd);
        // The counts agree with the closed binomial forms in r = p - q.
        CHECK(Rat(asd) == oracle::binom(Rat(p - q), k));
        CHECK(Rat(ssd) == oracle::binom(Rat(p - q + k - 1), k));
      }
    }
  CHECK(A(plain_space(3), Flavor::alt, 2).dim() == 3);
  CHECK(A(plain_space(3), Flavor::alt, 4).dim() == 0);
  CHECK(A(super_space(0, 2), Flavor::sym, 2).dim() == 1);
}

TEST_CASE("degree cap is enforced") {
  ScopedDegreeCap cap(2);
  CHECK_THROWS_AS(power(plain_space(2), Flavor::alt, 3), CapExceeded);
}

TEST_CASE("alternating multiplication is graded commutative") {
  for (const Obj& v : {plain_space(3), super_space(1, 1)})
    for (std::size_t i = 0; i <= 4; ++i)
      for (std::size_t j = 0; i + j <= 4; ++j) {
        Mor lhs = compose(phi(v, Flavor::alt, i, j), tau(A(v, Flavor::alt, j), A(v, Flavor::alt, i)));
        Mor rhs = phi(v, Flavor::alt, j, i);
        CHECK(lhs.mat == ((i * j) % 2 ? scale(rhs, -1) : rhs).mat);
        Mor sym = compose(phi(v, Flavor::sym, i, j), tau(A(v, Flavor::sym, j), A(v, Flavor::sym, i)));
        CHECK(sym.mat == phi(v, Flavor::sym, j, i).mat);
      }
}

TEST_CASE("pairing of decomposable alternating tensors") {
  // ev(e^1 ^ e^2, e_1 ^ e_2) = 1/2 with wedges taken as normalized projections.
  Obj v = plain_space(2);
  Mor e = ev_power(Flavor::alt, 2, v);
  Mor in = tensor(proj(dual(v), Flavor::alt, 2), proj(v, Flavor::alt, 2));
  Mat m = compose(e.mat, in.mat);
  // (e^1 (x) e^2) (x) (e_1 (x) e_2) sits at index 1 * 4 + 1.
  CHECK(m.at(0, 5) == make_rat(1, 2));
  CHECK(m.at(0, 4 * 2 + 1) == make_rat(-1, 2));  // e^2 ^ e^1 against e_1 ^ e_2
  CHECK(ev_power(Flavor::alt, 1, v).mat == ev(v).mat);
}

TEST_CASE("internal multiplication contracts a vector into a wedge") {
  // iota_{1,2}(e_1)(e^1 ^ e^2) = (1/2) e^2.
  Obj v = plain_space(2);
  for (auto method : {IotaMethod::via_d, IotaMethod::explicit_formula}) {
    Mor ip = iota_phi(1, 2, Flavor::alt, v, method);
    Mat m = compose(ip.mat, tensor(proj(v, Flavor::alt, 1), proj(dual(v), Flavor::alt, 2)).mat);
    Mat out = compose(power(dual(v), Flavor::alt, 1)->split.i.mat, m);
    // Input e_1 (x) (e^1 (x) e^2) has index 0 * 4 + 1.
    CHECK(out.at(0, 1) == 0);
    CHECK(out.at(1, 1) == make_rat(1, 2));
  }
  for (std::size_t j = 0; j <= 3; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      CHECK(iota_phi(i, j, Flavor::alt, super_space(1, 1), IotaMethod::via_d).mat ==
            iota_phi(i, j, Flavor::alt, super_space(1, 1), IotaMethod::explicit_formula).mat);
}
