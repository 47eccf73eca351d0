#pragma once
// Permutations, the rational group algebra Q[S_n], and its action on tensor
// powers with Koszul signs.

#include "pd/category.hpp"

#include <map>
#include <vector>

namespace pd {

// sigma[k] is the slot that slot k is sent to (0-based).
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
Perm compose_perm(const Perm& s, const Perm& r);  // s after r
Perm inverse_perm(const Perm& s);
int perm_sign(const Perm& s);
std::vector<Perm> all_perms(std::size_t n);  // lexicographic order

enum class Character { sign, trivial };

// A finite formal Q-linear combination of permutations of {0..n-1}.
struct GroupAlgebraElement {
  std::size_t n = 0;
  std::map<Perm, Rat> terms;  // zero coefficients are never stored

  static GroupAlgebraElement unit(std::size_t n);
  static GroupAlgebraElement basis(const Perm& p);
  void add_term(const Perm& p, const Rat& c);
};

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement operator*(const Rat& s, const GroupAlgebraElement& a);
bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// Embed an element of Q[S_m] acting on slots {offset..offset+m-1} of n slots.
GroupAlgebraElement embed(const GroupAlgebraElement& a, std::size_t n, std::size_t offset);

// The morphism on the n-fold tensor power of v moving slot k to slot sigma(k),
// with the Koszul sign of the odd factors that cross.
Mor act(const Perm& sigma, const Obj& v, std::size_t n);
Mor act(const GroupAlgebraElement& a, const Obj& v);
// act(a, v) applied to the columns of m (m's codomain must be the tensor power).
Mat act_on(const GroupAlgebraElement& a, const Obj& v, const Mat& m);

// (1/n!) sum chi(sigma) sigma.
GroupAlgebraElement idempotent(std::size_t n, Character chi);

enum class CosetScheme { canonical, alternative };

struct CosetRep {
  std::vector<std::uint32_t> p;  // injective tuple (0-based)
  Perm delta;                    // delta(p_k) = k
};
struct CosetSystem {
  std::vector<CosetRep> reps;
  GroupAlgebraElement e_leq;  // ((j-i)!/j!) sum chi(delta_p)^{-1} delta_p
};
// canonical: the complement of p goes to {i..j-1} in increasing order;
// alternative: in decreasing order.
CosetSystem coset_system(std::size_t i, std::size_t j, Character chi = Character::sign,
                         CosetScheme scheme = CosetScheme::canonical);

}  // namespace pd
