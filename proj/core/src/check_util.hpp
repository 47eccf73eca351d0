#pragma once
// Helpers shared by the check translation units (not installed).

#include "pd/checks.hpp"

#include <random>
#include <string>

namespace pd::detail {

inline std::string str(std::size_t n) { return std::to_string(n); }

// ev^tau_{13,W} : X (x) W (x) X^v -> W, (1_W (x) ev^tau_X) o (tau_{X,W} (x) 1).
inline Mor ev13_tau(const Obj& x, const Obj& w) {
  return compose(tensor(id(w), ev_tau(x)), tensor(tau(x, w), id(dual(x))));
}
// ev^phi_{13,W} : X^v (x) W (x) X -> W, (1_W (x) ev_X) o (tau_{X^v,W} (x) 1).
inline Mor ev13_phi(const Obj& x, const Obj& w) {
  return compose(tensor(id(w), ev(x)), tensor(tau(dual(x), w), id(x)));
}
// phi^{13} : A (x) W (x) B (x) W -> C (x) W (x) W for phi : A (x) B -> C.
inline Mor phi13(const Mor& phi, const Obj& a, const Obj& b, const Obj& w) {
  return compose(tensor_all({phi, id(w), id(w)}),
                 tensor_all({id(a), tau(w, b), id(w)}));
}
// phi^{13 -> W}: phi^{13} followed by ev^tau_C (x) 1_W, where W = C^v.
inline Mor phi13_to(const Mor& phi, const Obj& a, const Obj& b, const Obj& w) {
  return compose(tensor(ev_tau(phi.cod), id(w)), phi13(phi, a, b, w));
}

// Seeded random helpers (deterministic for a given generator state).
Mat random_even_gram(const std::vector<std::uint8_t>& par, std::mt19937_64& rng);
long small_int(std::mt19937_64& rng, long lo, long hi);

}  // namespace pd::detail
