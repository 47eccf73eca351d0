#pragma once
// Alternating and symmetric powers realized as split idempotents of tensor
// powers, their multiplications, dual-pair evaluations, internal
// multiplications, mixed algebras and the Poincare morphisms.

#include "pd/symmetric_group.hpp"

#include <memory>
#include <stdexcept>

namespace pd {

enum class Flavor { alt, sym };
const char* flavor_name(Flavor f);
inline Character character_of(Flavor f) { return f == Flavor::alt ? Character::sign : Character::trivial; }

struct SplitIdempotent {
  Obj ambient;
  Mor i;  // carrier -> ambient
  Mor p;  // ambient -> carrier
};

struct PowerObject {
  Obj base;
  Flavor flavor;
  std::size_t degree;
  SplitIdempotent split;
  Obj carrier;
};

// Raised when a construction would exceed the configured tensor-degree cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest k for which the k-fold tensor power of the base is materialized
// (thread-local setting; default 5).
std::size_t degree_cap();
void set_degree_cap(std::size_t k);
struct ScopedDegreeCap {
  explicit ScopedDegreeCap(std::size_t k) : saved(degree_cap()) { set_degree_cap(k); }
  ~ScopedDegreeCap() { set_degree_cap(saved); }
  std::size_t saved;
};

// Split a general idempotent endomorphism e of x.  The summand carries the
// pairing induced from x, so that its dual is the summand of x^v cut out by
// the transposed idempotent.
SplitIdempotent split_object(const Mor& e, const std::string& label);

// Memoized; safe for concurrent use.
std::shared_ptr<const PowerObject> power(const Obj& v, Flavor f, std::size_t k);
void clear_power_cache();

// Carriers: A_k and A_k^v = dual(A_k) (which is also the k-th power of v^v).
Obj A(const Obj& v, Flavor f, std::size_t k);
Obj Ad(const Obj& v, Flavor f, std::size_t k);

// phi_{i,j} : A_i (x) A_j -> A_{i+j}.
Mor phi(const Obj& v, Flavor f, std::size_t i, std::size_t j);
// Multiplication of the dual algebra: A_i^v (x) A_j^v -> A_{i+j}^v.
Mor phi_dual(const Obj& v, Flavor f, std::size_t i, std::size_t j);

// ev_{V,a}^k (or ev_{V,s}^k): A_k^v (x) A_k -> I.
Mor ev_power(Flavor f, std::size_t k, const Obj& v);

enum class IotaMethod { via_d, explicit_formula };

// phi of the internal multiplication: A_i (x) A_j^v -> A_{j-i}^v.
Mor iota_phi(std::size_t i, std::size_t j, Flavor f, const Obj& v,
             IotaMethod m = IotaMethod::via_d, CosetScheme scheme = CosetScheme::canonical);
// iota_{i,j} : A_i -> hom(A_j^v, A_{j-i}^v).
Mor iota(std::size_t i, std::size_t j, Flavor f, const Obj& v, IotaMethod m = IotaMethod::via_d);
// phi of iota*: A_i^v (x) A_j -> A_{j-i}.
Mor iota_star_phi(std::size_t i, std::size_t j, Flavor f, const Obj& v,
                  IotaMethod m = IotaMethod::via_d);
// iota*_{i,j} : A_i^v -> hom(A_j, A_{j-i}).
Mor iota_star(std::size_t i, std::size_t j, Flavor f, const Obj& v, IotaMethod m = IotaMethod::via_d);

struct Poincare {
  Mor upper;  // D^{i,g} : A_i   -> A_{g-i}^v (x) A_g^vv
  Mor lower;  // D_{i,g} : A_i^v -> A_{g-i} (x) A_g^v
};
Poincare poincare(std::size_t i, std::size_t g, Flavor f, const Obj& v);

// Mixed powers A^p_q = A_p (x) A_q^v.
Obj mixed_obj(const Obj& v, Flavor f, std::size_t p, std::size_t q);
struct Mixed {
  Mor phi_mixed;    // A^i_j (x) A^k_l -> A^{i+k}_{j+l}
  Mor delta_mixed;  // A^i_j (x) A^k_l -> A^{k-j}_{l-i}  (needs l >= i, k >= j)
};
Mor phi_mixed(const Obj& v, Flavor f, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
Mor delta_mixed(const Obj& v, Flavor f, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
// delta_mixed o m, computed without materializing the full Kronecker factor.
Mor delta_mixed_then(const Obj& v, Flavor f, std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l, const Mor& m);
Mixed mixed(std::size_t i, std::size_t j, std::size_t k, std::size_t l, Flavor f, const Obj& v);

}  // namespace pd
