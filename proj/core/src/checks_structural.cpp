// Structural identities of the rigid symmetric monoidal setting, checked on
// seeded random objects (random parities and pairings) and random even
// morphisms.

#include "pd/checks.hpp"

#include "check_util.hpp"

#include <stdexcept>

namespace pd {

using detail::ev13_phi;
using detail::ev13_tau;
using detail::random_even_gram;
using detail::small_int;
using detail::str;

namespace {

struct Gen {
  Model model;
  std::mt19937_64 rng;

  Obj obj(std::size_t lo, std::size_t hi, const std::string& label) {
    auto n = static_cast<std::size_t>(small_int(rng, long(lo), long(hi)));
    std::vector<std::uint8_t> par(n, 0);
    if (model == Model::super)
      for (auto& b : par) b = static_cast<std::uint8_t>(small_int(rng, 0, 1));
    Obj base = make_obj(par, nullptr, label);
    if (small_int(rng, 0, 3) == 0) return base;
    return with_gram(base, random_even_gram(par, rng), label);
  }
  Mor mor(const Obj& x, const Obj& y) {
    Mat m(y.dim(), x.dim());
    for (std::size_t r = 0; r < y.dim(); ++r)
      for (std::size_t c = 0; c < x.dim(); ++c)
        if (y.par[r] == x.par[c]) m.set(r, c, Rat(small_int(rng, -2, 2)));
    return make_mor(x, y, m);
  }
};

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

using Body = void (*)(Probe&, Gen&);

void casimir_properties(Probe& p, Gen& G) {
  Obj X = G.obj(1, 3, "X"), X1 = G.obj(1, 2, "X1"), X2 = G.obj(1, 2, "X2");
  Obj Xd = dual(X);
  Mor C = casimir(X);
  Mor e12 = compose(ev_pairs({1, 2, 3, 4, PairVariant::phi, PairVariant::phi}, {Xd, X, Xd, X}),
                    tensor_all({id(Xd), C, id(X)}));
  PairingSpec tp{1, 4, 2, 3, PairVariant::tau, PairVariant::phi};
  Mor e14a = compose(ev_pairs(tp, {X, Xd, X, Xd}), tensor(C, tau(Xd, X)));
  Mor e14b = compose(ev_pairs(tp, {X, Xd, X, Xd}), tensor(tau(Xd, X), C));
  p.eq("evaluation through an inner Casimir", retype(e12, ev(X).dom, e12.cod), ev(X));
  p.eq("evaluation through a leading Casimir", retype(e14a, ev(X).dom, e14a.cod), ev(X));
  p.eq("evaluation through a trailing Casimir", retype(e14b, ev(X).dom, e14b.cod), ev(X));
  Mor snake1 = compose(tensor(id(X), ev(X)), tensor(C, id(X)));
  p.eq("snake on X", retype(snake1, X, X), id(X));
  Mor snake2 = compose(tensor(ev(X), id(Xd)), tensor(id(Xd), C));
  p.eq("snake on X^v", retype(snake2, Xd, Xd), id(Xd));
  Mor c12 = compose(tensor_all({id(X1), tau(dual(X1), X2), id(dual(X2))}),
                    tensor(casimir(X1), casimir(X2)));
  Mor ct = casimir(tensor(X1, X2));
  p.eq("Casimir of a tensor product", retype(c12, ct.dom, ct.cod), ct);
  p.eq("Casimir of the dual", casimir(Xd),
       compose({tensor(id(Xd), bidual(X)), tau(X, Xd), C}));
  p.eq("rank is the signed dimension", rank(X), Rat(X.signed_dim()));
  p.eq("rank is multiplicative", rank(tensor(X1, X2)), rank(X1) * rank(X2));
  // Split summand of X cut out by a random even idempotent.
  std::vector<std::uint32_t> keep;
  for (std::size_t a = 0; a < X.dim(); ++a)
    if (small_int(G.rng, 0, 1) == 1) keep.push_back(static_cast<std::uint32_t>(a));
  if (keep.empty()) keep.push_back(0);
  Mat d(X.dim(), X.dim());
  for (auto a : keep) d.set(a, a, Rat(1));
  Mat P = random_even_gram(X.par, G.rng);
  Mat e = compose(compose(P, d), *inverse(P));
  SplitIdempotent sp = split_object(make_mor(X, X, e), "X+");
  Obj Xp = sp.i.dom;
  p.eq("Casimir of a summand", casimir(Xp), compose(tensor(sp.p, dual(sp.i)), C));
  p.eq("bidual of the dual inverts", compose(dual(bidual(X)), bidual(Xd)), id(Xd));
  p.eq("bidual defining square", compose(ev(Xd), tensor(bidual(X), id(Xd))), ev_tau(X));
}

void internal_hom(Probe& p, Gen& G) {
  Obj X = G.obj(1, 2, "X"), Y = G.obj(1, 2, "Y");
  Obj X1 = G.obj(1, 2, "X1"), X2 = G.obj(1, 2, "X2"), X3 = G.obj(1, 2, "X3");
  Obj Y1 = G.obj(1, 2, "Y1"), Y2 = G.obj(1, 2, "Y2"), Y3 = G.obj(1, 2, "Y3");
  HomPair hp = hom_pair(X, Y);
  p.eq("alpha defining square", compose(hp.ev_xy, tensor(hp.alpha, id(X))),
       tensor(id(Y), ev(X)));
  Mor f1 = G.mor(X2, X1), f2 = G.mor(X3, X2), g1 = G.mor(Y1, Y2), g2 = G.mor(Y2, Y3);
  p.eq("hom functor defining square",
       compose(ev_hom(X2, Y2), tensor(hom_functor(f1, g1), id(X2))),
       compose({g1, ev_hom(X1, Y1), tensor(id(hom(X1, Y1)), f1)}));
  p.eq("hom functor respects composition", hom_functor(compose(f1, f2), compose(g2, g1)),
       compose(hom_functor(f2, g2), hom_functor(f1, g1)));
  p.eq("hom functor preserves identities", hom_functor(id(X1), id(Y1)), id(hom(X1, Y1)));
  Mor hf = hom_functor(f1, id(unit()));
  p.eq("hom into the unit is the transpose", hf, retype(dual(f1), hf.dom, hf.cod));
}

void internal_duality_family(Probe& p, Gen& G) {
  Obj X = G.obj(1, 2, "X"), Y = G.obj(1, 2, "Y"), Z = G.obj(1, 2, "Z");
  Obj Xd = dual(X), Yd = dual(Y);
  Obj H = hom(X, Y);
  Mor d = internal_duality(X, Y);
  Mor c0 = composition_law(X, Y, unit()).c;
  p.eq("internal duality defining square", compose(ev_hom(Yd, Xd), tensor(d, id(Yd))),
       compose(c0, tau(H, Yd)));
  Mor lhs1 = compose(ev_tau(Y), tensor(ev_hom(X, Y), id(Yd)));
  Mor rhs1 = compose({ev_tau(X), tensor(id(X), ev_hom(Yd, Xd)), tensor_all({id(X), d, id(Yd)}),
                      tensor(tau(H, X), id(Yd))});
  p.eq("internal duality against evaluations", lhs1, rhs1);
  Mor c = composition_law(X, Y, Z).c;
  Mor ct = composition_law(dual(Z), Yd, Xd).c_tau;
  p.eq("internal duality reverses composition", compose(internal_duality(X, Z), c),
       compose(ct, tensor(internal_duality(Y, Z), d)));
  Obj X1 = G.obj(1, 2, "X1"), X2 = G.obj(1, 2, "X2"), Y1 = G.obj(1, 2, "Y1"),
      Y2 = G.obj(1, 2, "Y2");
  Mor f = G.mor(X2, X1), g = G.mor(Y1, Y2);
  p.eq("internal duality is natural",
       compose(hom_functor(dual(g), dual(f)), internal_duality(X1, Y1)),
       compose(internal_duality(X2, Y2), hom_functor(f, g)));
  HomPair hp = hom_pair(X, Y), hpd = hom_pair(Yd, Xd);
  p.eq("internal duality on alpha", compose(d, hp.alpha),
       compose({hpd.alpha, tensor(id(Xd), bidual(Y)), tau(Y, Xd)}));
  p.eq("double internal duality",
       compose({hom_functor(bidual(X), id(dual(Yd))), internal_duality(Yd, Xd), d}),
       hom_functor(id(X), bidual(Y)));
}

void composition_family(Probe& p, Gen& G) {
  Obj X = G.obj(1, 2, "X"), Y = G.obj(1, 2, "Y"), Z = G.obj(1, 2, "Z"), W = G.obj(1, 2, "W");
  Obj S = G.obj(1, 2, "S"), T = G.obj(1, 2, "T");
  Mor c = composition_law(X, Y, Z).c;
  p.eq("composition defining square", compose(ev_hom(X, Z), tensor(c, id(X))),
       compose(ev_hom(Y, Z), tensor(id(hom(Y, Z)), ev_hom(X, Y))));
  p.eq("composition is associative",
       compose(composition_law(X, Z, W).c, tensor(id(hom(Z, W)), c)),
       compose(composition_law(X, Y, W).c, tensor(composition_law(Y, Z, W).c, id(hom(X, Y)))));
  Mor f = G.mor(S, hom(X, Y)), g = G.mor(T, hom(Y, Z));
  p.eq("multiplication of a composite", phi_of(compose(c, tensor(g, f)), X, Z),
       compose(phi_of(g, Y, Z), tensor(id(T), phi_of(f, X, Y))));
}

void internal_multiplication(Probe& p, Gen& G) {
  Obj S = G.obj(1, 2, "S"), X = G.obj(1, 2, "X"), Y = G.obj(1, 2, "Y");
  Obj Xd = dual(X), Yd = dual(Y), Xdd = dual(Xd), Ydd = dual(Yd);
  Mor f = G.mor(S, hom(X, Y)), g = G.mor(S, hom(Xd, Yd));
  Mor phi_f = phi_of(f, X, Y), phi_g = phi_of(g, Xd, Yd);
  p.eq("hom-valued morphism recovered from its multiplication", hom_of(phi_f, S, X), f);
  Mor phi_if = phi_of(iota_of(f, X, Y), Yd, Xd);  // S (x) Y^v -> X^v
  p.eq("internal multiplication adjunction",
       compose({ev_tau(X), tensor(id(X), phi_if), tensor(tau(S, X), id(Yd))}),
       compose(ev_tau(Y), tensor(phi_f, id(Yd))));
  Mor phi_isg = phi_of(iota_star_of(g, X, Y), Y, X);  // S (x) Y -> X
  p.eq("reflexive adjunction", compose(ev_tau(X), tensor(phi_isg, id(Xd))),
       compose({ev_tau(Y), tensor(id(Y), phi_g), tensor(tau(S, Y), id(Xd))}));
  Mor phi_ig = phi_of(iota_of(g, Xd, Yd), Ydd, Xdd);  // S (x) Y^vv -> X^vv
  p.eq("reflexive comparison", compose(bidual(X), phi_isg),
       compose(phi_ig, tensor(id(S), bidual(Y))));
  Mor D_ig = hom_of(phi_ig, S, Ydd);
  Mor D_isg = hom_of(phi_isg, S, Y);
  Mor rhs = compose(tensor(bidual(X), bidual(Yd)), retype(D_isg, S, tensor(X, Yd)));
  p.eq("Poincare morphisms of iota and iota*", retype(D_ig, S, rhs.cod), rhs);
  Mor D_if = hom_of(phi_if, S, Yd);
  p.eq("multiplication from its Poincare morphism", compose(bidual(Y), phi_f),
       compose(ev13_phi(X, Ydd), tensor(retype(D_if, S, tensor(Xd, Ydd)), id(X))));
  p.eq("dual multiplication from its Poincare morphism", phi_g,
       compose(ev13_tau(X, Yd), tensor(retype(D_isg, S, tensor(X, Yd)), id(Xd))));
}

void tensor_combinators(Probe& p, Gen& G) {
  Obj S1 = G.obj(1, 2, "S1"), S2 = G.obj(1, 2, "S2");
  Obj X1 = G.obj(1, 2, "X1"), X2 = G.obj(1, 2, "X2"), Y1 = G.obj(1, 2, "Y1"),
      Y2 = G.obj(1, 2, "Y2");
  Mor f1 = G.mor(S1, hom(X1, Y1)), f2 = G.mor(S2, hom(X2, Y2));
  Mor p1 = phi_of(f1, X1, Y1), p2 = phi_of(f2, X2, Y2);
  Obj X12 = tensor(X1, X2), Y12 = tensor(Y1, Y2);
  Mor ep = eps_phi(p1, S1, X1, p2, S2, X2);
  Mor etp = eps_tau_phi(p1, S1, X1, p2, S2, X2);
  Mor ef = eps_f(f1, X1, Y1, f2, X2, Y2);
  Mor etf = eps_tau_f(f1, S1, X1, Y1, f2, S2, X2, Y2);
  p.eq("multiplication of a tensor product", phi_of(ef, X12, Y12), ep);
  p.eq("multiplication of a swapped tensor product", phi_of(etf, X12, Y12), etp);
  p.eq("swapped combinator", etp, compose(ep, tensor(tau(S2, S1), id(X12))));
  Obj Y1d = dual(Y1), Y2d = dual(Y2);
  Mor pi1 = phi_of(iota_of(f1, X1, Y1), Y1d, dual(X1));
  Mor pi2 = phi_of(iota_of(f2, X2, Y2), Y2d, dual(X2));
  Mor epi = eps_phi(pi1, S1, Y1d, pi2, S2, Y2d);
  Mor etpi = eps_tau_phi(pi1, S1, Y1d, pi2, S2, Y2d);
  PairingSpec tt{1, 3, 2, 4, PairVariant::tau, PairVariant::tau};
  Mor evY = ev_pairs(tt, {Y1, Y2, Y1d, Y2d}), evX = ev_pairs(tt, {X1, X2, dual(X1), dual(X2)});
  Obj Yd12 = tensor(Y1d, Y2d);
  p.eq("tensor product against evaluations",
       compose(evY, tensor(ep, id(Yd12))),
       compose({evX, tensor(id(X12), epi), tensor(tau(tensor(S1, S2), X12), id(Yd12))}));
  p.eq("swapped tensor product against evaluations",
       compose(evY, tensor(etp, id(Yd12))),
       compose({evX, tensor(id(X12), etpi), tensor(tau(tensor(S2, S1), X12), id(Yd12))}));
  Mor ipt = phi_of(iota_of(ef, X12, Y12), dual(Y12), dual(X12));
  p.eq("internal multiplication of a tensor product", retype(epi, ipt.dom, ipt.cod), ipt);
}

// Casimir compatibility for f1 : S1 -> hom(X,Y), f2 : S2 -> hom(X^v,Y^v).
void casimir_pair(Probe& p, const Mor& f1, const Mor& f2, const Obj& X, const Obj& Y,
                  const std::string& what) {
  const Obj &S1 = f1.dom, &S2 = f2.dom;
  Obj Xd = dual(X), Yd = dual(Y), Xdd = dual(Xd), Ydd = dual(Yd);
  Mor p1 = phi_of(f1, X, Y), p2 = phi_of(f2, Xd, Yd);
  Mor D1 = retype(hom_of(p1, S1, X), S1, tensor(Y, Xd));
  Mor D2 = retype(hom_of(p2, S2, Xd), S2, tensor(Yd, Xdd));
  Mor ep = eps_phi(p1, S1, X, p2, S2, Xd);  // S1 S2 X X^v -> Y Y^v
  Mor caps = tensor_all({casimir(Y), id(tensor(S1, S2)), casimir(X)});
  Mor lhs = compose(ev_pairs({1, 3, 2, 4, PairVariant::tau, PairVariant::tau}, {Y, Xd, Yd, Xdd}),
                    tensor(D1, D2));
  Mor rhs = compose({ev_pairs({1, 4, 2, 3, PairVariant::tau, PairVariant::phi}, {Y, Yd, Y, Yd}),
                     tensor(id(tensor(Y, Yd)), ep), caps});
  p.eq("Casimir pairing " + what, lhs, retype(rhs, lhs.dom, lhs.cod));
  Mor ev24 = compose(tensor_all({id(Y), id(Yd), ev_tau(Xd)}),
                     tensor_all({id(Y), tau(Xd, Yd), id(Xdd)}));
  Mor l3 = compose({tensor(casimir(Y), id(tensor(Y, Yd))), ev24, tensor(D1, D2)});
  Mor r3 = compose(tensor(id(tensor(Y, Yd)), ep), caps);
  p.eq("Casimir transport " + what, l3, retype(r3, l3.dom, l3.cod));
}

void casimir_p1(Probe& p, Gen& G) {
  Obj S1 = G.obj(1, 2, "S1"), S2 = G.obj(1, 2, "S2"), X = G.obj(1, 2, "X"), Y = G.obj(1, 2, "Y");
  Obj Xd = dual(X), Yd = dual(Y);
  Mor f1 = G.mor(S1, hom(X, Y)), f2 = G.mor(S2, hom(Xd, Yd));
  casimir_pair(p, f1, f2, X, Y, "of f");
  Mor i1 = iota_of(f1, X, Y), i2 = iota_of(f2, Xd, Yd);
  casimir_pair(p, i1, i2, Yd, Xd, "of iota f");
  Obj Xdd = dual(Xd), Ydd = dual(Yd);
  Mor pi1 = phi_of(i1, Yd, Xd), pi2 = phi_of(i2, Ydd, Xdd);
  Mor Di1 = retype(hom_of(pi1, S1, Yd), S1, tensor(Xd, Ydd));
  Mor Di2 = retype(hom_of(pi2, S2, Ydd), S2, tensor(Xdd, dual(Ydd)));
  PairingSpec tt{1, 3, 2, 4, PairVariant::tau, PairVariant::tau};
  Mor lhs = compose(ev_pairs(tt, {Xd, Ydd, Xdd, dual(Ydd)}), tensor(Di1, Di2));
  Mor ep = eps_phi(phi_of(f1, X, Y), S1, X, phi_of(f2, Xd, Yd), S2, Xd);
  Mor rhs = compose({ev_pairs(tt, {Y, Yd, Yd, Ydd}), tensor(ep, id(tensor(Yd, Ydd))),
                     tensor_all({id(tensor(S1, S2)), casimir(X), casimir(Yd)})});
  p.eq("Casimir pairing of iota against f", lhs, retype(rhs, lhs.dom, lhs.cod));
}

void symmetry(Probe& p, Gen& G) {
  Obj X = G.obj(1, 3, "X"), Y = G.obj(1, 3, "Y"), Z = G.obj(1, 2, "Z");
  Obj X2 = G.obj(1, 2, "X'"), Y2 = G.obj(1, 2, "Y'");
  p.eq("hexagon", tau(X, tensor(Y, Z)),
       compose(tensor(id(Y), tau(X, Z)), tensor(tau(X, Y), id(Z))));
  p.eq("symmetry squares to one", compose(tau(Y, X), tau(X, Y)), id(tensor(X, Y)));
  Mor f = G.mor(X, X2), g = G.mor(Y, Y2);
  p.eq("naturality", compose(tau(X2, Y2), tensor(f, g)), compose(tensor(g, f), tau(X, Y)));
  Obj V = G.obj(1, 2, "V");
  auto perms = all_perms(3);
  Perm s = perms[small_int(G.rng, 0, 5)], r = perms[small_int(G.rng, 0, 5)];
  p.eq("permutation action is multiplicative", act(compose_perm(s, r), V, 3),
       compose(act(s, V, 3), act(r, V, 3)));
  for (Character chi : {Character::sign, Character::trivial}) {
    GroupAlgebraElement e = idempotent(3, chi);
    p.eq("symmetrizer is idempotent", compose(act(e, V), act(e, V)), act(e, V));
  }
}

const std::vector<std::pair<std::string, Body>>& table() {
  static const std::vector<std::pair<std::string, Body>> t{
      {"casimir_properties", casimir_properties},
      {"internal_hom", internal_hom},
      {"internal_duality", internal_duality_family},
      {"composition", composition_family},
      {"internal_multiplication", internal_multiplication},
      {"tensor_combinators", tensor_combinators},
      {"casimir_pairing", casimir_p1},
      {"symmetry", symmetry},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& structural_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

CheckResult check_structural(const std::string& family, Model m, std::uint64_t seed,
                             std::size_t sample) {
  Params ps{{"model", m == Model::plain ? "plain" : "super"}, {"sample", str(sample)}};
  return run_check(family, ps, [&](Probe& p) {
    Body body = nullptr;
    for (const auto& [k, b] : table())
      if (k == family) body = b;
    if (!body) throw std::invalid_argument("unknown structural family: " + family);
    std::uint64_t s = seed * 0x9E3779B97F4A7C15ull ^ fnv(family) ^ (sample * 0xBF58476D1CE4E5B9ull) ^
                      (m == Model::super ? 0x94D049BB133111EBull : 0);
    Gen gen{m, std::mt19937_64(s)};
    body(p, gen);
  });
}

}  // namespace pd
