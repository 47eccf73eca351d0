#include "oracles.hpp"
#include "pd/symmetric_group.hpp"

#include <doctest.h>

using namespace pd;

TEST_CASE("permutation signs agree with inversion counts") {
  for (std::size_t n = 0; n <= 5; ++n) {
    auto perms = all_perms(n);
    CHECK(static_cast<long>(perms.size()) == oracle::factorial(n));
    for (const auto& s : perms) {
      CHECK(perm_sign(s) == (oracle::inversions(s) % 2 ? -1 : 1));
      CHECK(compose_perm(s, inverse_perm(s)) == identity_perm(n));
    }
  }
}

TEST_CASE("symmetrizers are idempotent and absorb smaller ones") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto chi : {Character::sign, Character::trivial}) {
      auto e = idempotent(n, chi);
      CHECK(e * e == e);
    }
  CHECK(idempotent(1, Character::sign) == GroupAlgebraElement::unit(1));
  auto e2 = idempotent(2, Character::sign);
  auto expect = make_rat(1, 2) * (GroupAlgebraElement::unit(2) + Rat(-1) * GroupAlgebraElement::basis({1, 0}));
  CHECK(e2 == expect);
  auto e3 = idempotent(3, Character::sign);
  CHECK(e3 * embed(e2, 3, 0) == e3);
}

TEST_CASE("coset representatives") {
  for (std::size_t j = 0; j <= 4; ++j)
    for (std::size_t i = 0; i <= j; ++i) {
      auto cs = coset_system(i, j);
      CHECK(static_cast<long>(cs.reps.size()) == oracle::factorial(j) / oracle::factorial(j - i));
    }
  auto c0 = coset_system(0, 3);
  CHECK(c0.reps.size() == 1);
  CHECK(c0.e_leq == GroupAlgebraElement::unit(3));
  auto c12 = coset_system(1, 2);
  CHECK(c12.e_leq == idempotent(2, Character::sign));
}

TEST_CASE("the permutation action is a homomorphism with Koszul signs") {
  Obj odd_line = super_space(0, 1);
  CHECK(act(Perm{1, 0}, odd_line, 2).mat == Mat::from_ints({{-1}}));
  CHECK(act(identity_perm(3), super_space(1, 1), 3).mat == Mat::identity(8));
  for (const Obj& v : {plain_space(2), super_space(1, 1)}) {
    auto perms = all_perms(3);
    for (const auto& s : perms)
      for (const auto& r : perms)
        CHECK(act(compose_perm(s, r), v, 3).mat == compose(act(s, v, 3), act(r, v, 3)).mat);
  }
}
