#pragma once
// The two concrete rigid tensor categories: finite-dimensional rational vector
// spaces (all parities even) and rational super vector spaces.
//
// Every object carries its evaluation pairing as a Gram matrix G: for the dual
// basis w_a of X^v and the basis x_b of X, ev_X(w_a (x) x_b) = G[a,b].  Basic
// objects use G = identity; tensor products and split summands carry the
// induced pairing.  With this bookkeeping (X1 (x) X2)^v is literally
// X1^v (x) X2^v and X^vv is literally X, so every canonical identification is
// an identity matrix.  All morphisms are even.

#include "pd/mat.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace pd {

enum class Model { plain, super };

// One tensor factor of a pairing: its parities and Gram matrix (null means
// identity).
struct PairingFactor {
  std::vector<std::uint8_t> par;
  std::shared_ptr<const Mat> gram, gram_inv;
};

// The pairing of a tensor product is the Koszul-signed Kronecker product of
// its factors' pairings.  It is kept factored and materialized only on demand,
// so large tensor products whose pairing is never needed stay cheap.
class Pairing {
 public:
  explicit Pairing(std::vector<PairingFactor> factors) : factors_(std::move(factors)) {}
  const std::vector<PairingFactor>& factors() const { return factors_; }
  const std::shared_ptr<const Mat>& gram() const;      // thread-safe, cached
  const std::shared_ptr<const Mat>& gram_inv() const;  // thread-safe, cached

 private:
  std::vector<PairingFactor> factors_;
  mutable std::once_flag g_once_, i_once_;
  mutable std::shared_ptr<const Mat> g_, i_;
};

struct Obj {
  std::vector<std::uint8_t> par;           // 0 = even, 1 = odd, one per basis vector
  std::shared_ptr<const Pairing> pairing;  // null means the identity pairing
  std::string label;

  std::size_t dim() const { return par.size(); }
  bool odd(std::size_t a) const { return par[a] != 0; }
  bool identity_pairing() const { return !pairing; }
  // Materialized pairing and inverse (null when the pairing is the identity).
  std::shared_ptr<const Mat> gram() const;
  std::shared_ptr<const Mat> gram_inv() const;
  Mat gram_mat() const;
  Mat gram_inv_mat() const;
  // Signed dimension sum (-1)^{|a|}.
  long signed_dim() const;
};

// Equality of objects: same parities and same pairing (labels are ignored).
bool operator==(const Obj& a, const Obj& b);
inline bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }

Obj unit();
Obj plain_space(std::size_t n, const std::string& label = "V");
Obj super_space(std::size_t even, std::size_t odd, const std::string& label = "V");
// Same parities, pairing replaced by G (must be even and invertible).
Obj with_gram(const Obj& x, const Mat& g, const std::string& label = "");
// Build an object from parities and a pairing (null -> identity).
Obj make_obj(std::vector<std::uint8_t> par, std::shared_ptr<const Mat> gram, std::string label);

Obj dual(const Obj& x);
Obj tensor(const Obj& x, const Obj& y);
Obj tensor_all(const std::vector<Obj>& xs);
Obj tensor_power(const Obj& x, std::size_t k);

struct Mor {
  Obj dom;
  Obj cod;
  Mat mat;  // dim(cod) x dim(dom)
};

// Thrown when composing morphisms whose objects disagree.
struct ObjectMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Mor make_mor(const Obj& dom, const Obj& cod, Mat m);
Mor id(const Obj& x);
Mor zero_mor(const Obj& dom, const Obj& cod);
Mor compose(const Mor& g, const Mor& f);  // g after f
Mor compose(std::initializer_list<Mor> chain);  // leftmost applied last
Mor tensor(const Mor& f, const Mor& g);
Mor tensor_all(const std::vector<Mor>& fs);
Mor add(const Mor& f, const Mor& g);
Mor sub(const Mor& f, const Mor& g);
Mor scale(const Mor& f, const Rat& s);
// Same matrix, new endpoints (endpoints must have matching parities and dims).
Mor retype(const Mor& f, const Obj& dom, const Obj& cod);
bool equal(const Mor& f, const Mor& g);
std::string residual(const Mor& f, const Mor& g);
// (f (x) g) o m computed without materializing f (x) g.
Mor tensor_then(const Mor& f, const Mor& g, const Mor& m);

// Symmetry constraint x_a (x) y_b -> (-1)^{|a||b|} y_b (x) x_a.
Mor tau(const Obj& x, const Obj& y);
// Koszul reordering of a tensor product of factors: output factor t is input
// factor order[t].
Mor permute(const std::vector<Obj>& factors, const std::vector<std::size_t>& order);

Mor ev(const Obj& x);       // X^v (x) X -> I
Mor ev_tau(const Obj& x);   // X (x) X^v -> I, ev o tau
Mor casimir(const Obj& x);  // I -> X (x) X^v
Mor bidual(const Obj& x);   // i_X : X -> X^vv
Rat rank(const Obj& x);
Mor dual(const Mor& f);     // f^v : Y^v -> X^v

struct DualData {
  Obj x_dual;
  Mor ev, ev_tau, C, i_x;
};
DualData dual_ev_casimir(const Obj& x);

// Internal hom realized as Y (x) X^v; alpha is the identity.
struct HomPair {
  Obj h;
  Mor ev_xy;  // hom(X,Y) (x) X -> Y
  Mor alpha;  // Y (x) X^v -> hom(X,Y)
};
Obj hom(const Obj& x, const Obj& y);
HomPair hom_pair(const Obj& x, const Obj& y);
Mor ev_hom(const Obj& x, const Obj& y);
Mor internal_duality(const Obj& x, const Obj& y);  // d_{X,Y}
Mor hom_functor(const Mor& f, const Mor& g);       // f: X2->X1, g: Y1->Y2
struct CompositionLaw {
  Mor c, c_tau;
};
CompositionLaw composition_law(const Obj& x, const Obj& y, const Obj& z);

// phi_f = ev_{X,Y} o (f (x) 1_X) for f: S -> hom(X,Y).
Mor phi_of(const Mor& f, const Obj& x, const Obj& y);
// The hom-valued morphism attached to phi: S (x) X -> Y (the morphism D of the
// Casimir construction, (phi (x) 1_{X^v}) o (1_S (x) C_X)).
Mor hom_of(const Mor& phi, const Obj& s, const Obj& x);
// iota_f = d_{X,Y} o f : S -> hom(Y^v, X^v).
Mor iota_of(const Mor& f, const Obj& x, const Obj& y);
// iota*_g for g: S -> hom(X^v, Y^v): S -> hom(Y, X).
Mor iota_star_of(const Mor& g, const Obj& x, const Obj& y);

// ev_{ij,kl}^{alpha,beta} on W1 (x) W2 (x) W3 (x) W4 (slots are 1-based).
enum class PairVariant { phi, tau };
struct PairingSpec {
  int i, j, k, l;
  PairVariant a, b;
};
Mor ev_pairs(const PairingSpec& spec, const std::vector<Obj>& w);

// Combinators.  phi_k : S_k (x) X_k -> Y_k.
//   eps_phi     : S1 (x) S2 (x) X1 (x) X2 -> Y1 (x) Y2
//   eps_tau_phi : S2 (x) S1 (x) X1 (x) X2 -> Y1 (x) Y2
Mor eps_phi(const Mor& phi1, const Obj& s1, const Obj& x1, const Mor& phi2, const Obj& s2,
            const Obj& x2);
Mor eps_tau_phi(const Mor& phi1, const Obj& s1, const Obj& x1, const Mor& phi2, const Obj& s2,
                const Obj& x2);
// f_k : S_k -> hom(X_k, Y_k).
//   eps_f     : S1 (x) S2 -> hom(X1 (x) X2, Y1 (x) Y2)
//   eps_tau_f : S2 (x) S1 -> hom(X1 (x) X2, Y1 (x) Y2)
Mor eps_f(const Mor& f1, const Obj& x1, const Obj& y1, const Mor& f2, const Obj& x2,
          const Obj& y2);
Mor eps_tau_f(const Mor& f1, const Obj& s1, const Obj& x1, const Obj& y1, const Mor& f2,
              const Obj& s2, const Obj& x2, const Obj& y2);

}  // namespace pd
