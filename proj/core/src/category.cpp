#include "pd/category.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pd {

namespace {

std::shared_ptr<const Mat> normalize_gram(Mat g) {
  if (g == Mat::identity(g.rows())) return nullptr;
  return std::make_shared<const Mat>(std::move(g));
}

bool gram_equal(const std::shared_ptr<const Mat>& a, const std::shared_ptr<const Mat>& b) {
  if (a == b) return true;
  if (!a || !b) return false;  // normalized: null is the only identity form
  return *a == *b;
}

std::string shape(const Obj& x) { return x.label + "[" + std::to_string(x.dim()) + "]"; }

void require_same(const Obj& a, const Obj& b, const char* what) {
  if (a != b) throw ObjectMismatch(std::string(what) + ": object mismatch " + shape(a) + " vs " + shape(b));
}

// Koszul-signed Kronecker product used for tensor products:
// G[(a,b),(c,d)] = (-1)^{|b||c|} G1[a,c] G2[b,d].
Mat signed_kron(const Mat& g1, const Mat& g2, const std::vector<std::uint8_t>& p1,
                const std::vector<std::uint8_t>& p2) {
  Mat k = kron(g1, g2);
  const std::size_t n2 = p2.size();
  for (std::size_t r = 0; r < k.rows(); ++r) {
    const std::size_t b = r % n2;
    if (!p2[b]) continue;
    for (auto& e : k.row_mut(r)) {
      const std::size_t c = e.first / n2;
      if (p1[c]) e.second = -e.second;
    }
  }
  return k;
}

std::vector<std::uint8_t> tensor_par(const std::vector<std::uint8_t>& x,
                                     const std::vector<std::uint8_t>& y) {
  std::vector<std::uint8_t> par;
  par.reserve(x.size() * y.size());
  for (auto a : x)
    for (auto b : y) par.push_back(a ^ b);
  return par;
}

bool any_odd(const std::vector<std::uint8_t>& p) {
  return std::any_of(p.begin(), p.end(), [](auto b) { return b != 0; });
}

std::shared_ptr<const Mat> fold(const std::vector<PairingFactor>& fs, bool inverse) {
  Mat acc = Mat::identity(1);
  std::vector<std::uint8_t> par{0};
  for (const auto& f : fs) {
    const auto& g = inverse ? f.gram_inv : f.gram;
    acc = signed_kron(acc, g ? *g : Mat::identity(f.par.size()), par, f.par);
    par = tensor_par(par, f.par);
  }
  return normalize_gram(std::move(acc));
}

std::vector<PairingFactor> factors_of(const Obj& x) {
  if (x.pairing) return x.pairing->factors();
  return {PairingFactor{x.par, nullptr, nullptr}};
}

bool pairing_equal(const Obj& a, const Obj& b) {
  if (a.pairing == b.pairing) return true;
  if (!a.pairing || !b.pairing) return gram_equal(a.gram(), b.gram());
  const auto& fa = a.pairing->factors();
  const auto& fb = b.pairing->factors();
  if (fa.size() == fb.size()) {
    bool same = true;
    for (std::size_t k = 0; k < fa.size() && same; ++k)
      same = fa[k].par == fb[k].par && gram_equal(fa[k].gram, fb[k].gram);
    if (same) return true;
  }
  return gram_equal(a.gram(), b.gram());
}

}  // namespace

const std::shared_ptr<const Mat>& Pairing::gram() const {
  std::call_once(g_once_, [&] { g_ = fold(factors_, false); });
  return g_;
}
const std::shared_ptr<const Mat>& Pairing::gram_inv() const {
  std::call_once(i_once_, [&] { i_ = fold(factors_, true); });
  return i_;
}

std::shared_ptr<const Mat> Obj::gram() const { return pairing ? pairing->gram() : nullptr; }
std::shared_ptr<const Mat> Obj::gram_inv() const { return pairing ? pairing->gram_inv() : nullptr; }
Mat Obj::gram_mat() const {
  auto g = gram();
  return g ? *g : Mat::identity(dim());
}
Mat Obj::gram_inv_mat() const {
  auto g = gram_inv();
  return g ? *g : Mat::identity(dim());
}

long Obj::signed_dim() const {
  long s = 0;
  for (auto p : par) s += p ? -1 : 1;
  return s;
}

bool operator==(const Obj& a, const Obj& b) { return a.par == b.par && pairing_equal(a, b); }

Obj make_obj(std::vector<std::uint8_t> par, std::shared_ptr<const Mat> gram, std::string label) {
  Obj x;
  x.par = std::move(par);
  x.label = std::move(label);
  if (gram) {
    if (gram->rows() != x.dim() || gram->cols() != x.dim())
      throw DimensionError("make_obj", gram->rows(), gram->cols(), x.dim(), x.dim());
    for (std::size_t r = 0; r < gram->rows(); ++r)
      for (const auto& [c, v] : gram->row(r))
        if (x.par[r] != x.par[c]) throw std::invalid_argument("make_obj: pairing is not even");
    gram = normalize_gram(*gram);
  }
  if (gram) {
    auto inv = inverse(*gram);
    if (!inv) throw std::invalid_argument("make_obj: pairing is degenerate");
    x.pairing = std::make_shared<const Pairing>(std::vector<PairingFactor>{
        PairingFactor{x.par, gram, std::make_shared<const Mat>(std::move(*inv))}});
  }
  return x;
}

Obj unit() { return make_obj({0}, nullptr, "I"); }

Obj plain_space(std::size_t n, const std::string& label) {
  return make_obj(std::vector<std::uint8_t>(n, 0), nullptr, label);
}

Obj super_space(std::size_t even, std::size_t odd, const std::string& label) {
  std::vector<std::uint8_t> par(even, 0);
  par.insert(par.end(), odd, 1);
  return make_obj(std::move(par), nullptr, label);
}

Obj with_gram(const Obj& x, const Mat& g, const std::string& label) {
  return make_obj(x.par, std::make_shared<const Mat>(g), label.empty() ? x.label : label);
}

Obj dual(const Obj& x) {
  Obj d = x;
  if (x.label.size() >= 2 && x.label.compare(x.label.size() - 2, 2, "^v") == 0)
    d.label = x.label.substr(0, x.label.size() - 2);
  else
    d.label = x.label + "^v";
  return d;
}

Obj tensor(const Obj& x, const Obj& y) {
  Obj t;
  t.par = tensor_par(x.par, y.par);
  t.label = x.label + "*" + y.label;
  std::vector<PairingFactor> fs;
  for (const Obj* o : {&x, &y})
    for (auto& f : factors_of(*o))
      if (!(f.par.size() == 1 && !f.par[0] && !f.gram)) fs.push_back(std::move(f));
  // The product pairing is the identity iff every factor is and no two
  // factors both carry odd vectors (which would introduce Koszul signs).
  bool trivial = true;
  std::size_t odd_factors = 0;
  for (const auto& f : fs) {
    if (f.gram) trivial = false;
    if (any_odd(f.par)) ++odd_factors;
  }
  if (odd_factors > 1) trivial = false;
  if (!trivial) t.pairing = std::make_shared<const Pairing>(std::move(fs));
  return t;
}

Obj tensor_all(const std::vector<Obj>& xs) {
  if (xs.empty()) return unit();
  Obj t = xs.front();
  for (std::size_t k = 1; k < xs.size(); ++k) t = tensor(t, xs[k]);
  return t;
}

Obj tensor_power(const Obj& x, std::size_t k) {
  if (k == 0) return unit();
  return tensor_all(std::vector<Obj>(k, x));
}

Mor make_mor(const Obj& dom, const Obj& cod, Mat m) {
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw DimensionError("make_mor", m.rows(), m.cols(), cod.dim(), dom.dim());
  return Mor{dom, cod, std::move(m)};
}

Mor id(const Obj& x) { return Mor{x, x, Mat::identity(x.dim())}; }
Mor zero_mor(const Obj& dom, const Obj& cod) { return Mor{dom, cod, Mat(cod.dim(), dom.dim())}; }

Mor compose(const Mor& g, const Mor& f) {
  require_same(g.dom, f.cod, "compose");
  return Mor{f.dom, g.cod, pd::compose(g.mat, f.mat)};
}

Mor compose(std::initializer_list<Mor> chain) {
  if (chain.size() == 0) throw std::invalid_argument("compose: empty chain");
  auto it = std::rbegin(chain);
  Mor acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

Mor tensor(const Mor& f, const Mor& g) {
  return Mor{tensor(f.dom, g.dom), tensor(f.cod, g.cod), kron(f.mat, g.mat)};
}

Mor tensor_all(const std::vector<Mor>& fs) {
  if (fs.empty()) return id(unit());
  Mor t = fs.front();
  for (std::size_t k = 1; k < fs.size(); ++k) t = tensor(t, fs[k]);
  return t;
}

Mor add(const Mor& f, const Mor& g) {
  require_same(f.dom, g.dom, "add");
  require_same(f.cod, g.cod, "add");
  return Mor{f.dom, f.cod, pd::add(f.mat, g.mat)};
}

Mor sub(const Mor& f, const Mor& g) {
  require_same(f.dom, g.dom, "sub");
  require_same(f.cod, g.cod, "sub");
  return Mor{f.dom, f.cod, pd::sub(f.mat, g.mat)};
}

Mor scale(const Mor& f, const Rat& s) { return Mor{f.dom, f.cod, pd::scale(f.mat, s)}; }

Mor retype(const Mor& f, const Obj& dom, const Obj& cod) {
  if (dom.par != f.dom.par || cod.par != f.cod.par)
    throw ObjectMismatch("retype: parity mismatch " + shape(f.dom) + " -> " + shape(dom));
  return Mor{dom, cod, f.mat};
}

bool equal(const Mor& f, const Mor& g) {
  return f.dom == g.dom && f.cod == g.cod && f.mat == g.mat;
}

std::string residual(const Mor& f, const Mor& g) {
  require_same(f.dom, g.dom, "residual");
  require_same(f.cod, g.cod, "residual");
  return pd::residual(f.mat, g.mat);
}

Mor tensor_then(const Mor& f, const Mor& g, const Mor& m) {
  Obj dom = tensor(f.dom, g.dom);
  require_same(dom, m.cod, "tensor_then");
  return Mor{m.dom, tensor(f.cod, g.cod), kron_apply(f.mat, g.mat, m.mat)};
}

Mor permute(const std::vector<Obj>& factors, const std::vector<std::size_t>& order) {
  const std::size_t m = factors.size();
  if (order.size() != m) throw std::invalid_argument("permute: order has wrong length");
  {
    std::vector<std::size_t> chk = order;
    std::sort(chk.begin(), chk.end());
    for (std::size_t t = 0; t < m; ++t)
      if (chk[t] != t) throw std::invalid_argument("permute: order is not a permutation");
  }
  std::vector<Obj> out_factors;
  for (auto o : order) out_factors.push_back(factors[o]);
  const Obj dom = tensor_all(factors), cod = tensor_all(out_factors);
  std::vector<std::size_t> in_dims(m), out_stride(m);
  for (std::size_t t = 0; t < m; ++t) in_dims[t] = factors[t].dim();
  // Stride of input factor `s` inside the output index.
  std::vector<std::size_t> stride_of_input(m);
  {
    std::size_t st = 1;
    for (std::size_t t = m; t-- > 0;) {
      stride_of_input[order[t]] = st;
      st *= factors[order[t]].dim();
    }
  }
  // Inverted output pairs: (s<t) with order[s] > order[t].
  std::vector<std::pair<std::size_t, std::size_t>> inv_pairs;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t)
      if (order[s] > order[t]) inv_pairs.emplace_back(order[s], order[t]);
  const std::size_t n = dom.dim();
  std::vector<Mat::Row> cols(n);
  std::vector<std::size_t> digit(m, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t out = 0;
    for (std::size_t s = 0; s < m; ++s) out += digit[s] * stride_of_input[s];
    int sign = 1;
    for (const auto& [a, b] : inv_pairs)
      if (factors[a].odd(digit[a]) && factors[b].odd(digit[b])) sign = -sign;
    cols[idx].emplace_back(static_cast<std::uint32_t>(out), sign);
    for (std::size_t s = m; s-- > 0;) {
      if (++digit[s] < in_dims[s]) break;
      digit[s] = 0;
    }
  }
  return Mor{dom, cod, transpose(Mat::from_rows(n, std::move(cols)))};
}

Mor tau(const Obj& x, const Obj& y) { return permute({x, y}, {1, 0}); }

Mor ev(const Obj& x) {
  const std::size_t n = x.dim();
  Mat m(1, n * n);
  Mat g = x.gram_mat();
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [b, v] : g.row(a)) m.row_mut(0).emplace_back(static_cast<std::uint32_t>(a * n + b), v);
  return Mor{tensor(dual(x), x), unit(), std::move(m)};
}

Mor ev_tau(const Obj& x) { return compose(ev(x), tau(x, dual(x))); }

Mor casimir(const Obj& x) {
  const std::size_t n = x.dim();
  Mat h = x.gram_inv_mat();
  std::vector<Mat::Row> rows(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& [b, v] : h.row(a)) rows[a * n + b].emplace_back(0, v);
  return Mor{unit(), tensor(x, dual(x)), Mat::from_rows(1, std::move(rows))};
}

Mor bidual(const Obj& x) {
  // i_X = G^{-T} G P with P = diag((-1)^{|a|}).
  Mat p(x.dim(), x.dim());
  for (std::size_t a = 0; a < x.dim(); ++a) p.row_mut(a).emplace_back(static_cast<std::uint32_t>(a), x.odd(a) ? -1 : 1);
  Mat m = x.pairing ? pd::compose(transpose(*x.gram_inv()), pd::compose(*x.gram(), p)) : p;
  return Mor{x, dual(dual(x)), std::move(m)};
}

Rat rank(const Obj& x) { return compose(ev_tau(x), casimir(x)).mat.at(0, 0); }

Mor dual(const Mor& f) {
  // f^v = G_X^{-T} F^T G_Y^T.
  Mat m = transpose(f.mat);
  if (auto g = f.cod.gram()) m = pd::compose(m, transpose(*g));
  if (auto g = f.dom.gram_inv()) m = pd::compose(transpose(*g), m);
  return Mor{dual(f.cod), dual(f.dom), std::move(m)};
}

DualData dual_ev_casimir(const Obj& x) {
  return DualData{dual(x), ev(x), ev_tau(x), casimir(x), bidual(x)};
}

Obj hom(const Obj& x, const Obj& y) {
  Obj h = tensor(y, dual(x));
  h.label = "hom(" + x.label + "," + y.label + ")";
  return h;
}

Mor ev_hom(const Obj& x, const Obj& y) {
  Mor e = tensor(id(y), ev(x));
  return retype(e, tensor(hom(x, y), x), y);
}

HomPair hom_pair(const Obj& x, const Obj& y) {
  Obj h = hom(x, y);
  return HomPair{h, ev_hom(x, y), Mor{tensor(y, dual(x)), h, Mat::identity(h.dim())}};
}

Mor internal_duality(const Obj& x, const Obj& y) {
  Mor d = compose(tensor(id(dual(x)), bidual(y)), tau(y, dual(x)));
  return retype(d, hom(x, y), hom(dual(y), dual(x)));
}

Mor hom_functor(const Mor& f, const Mor& g) {
  Mor h = tensor(g, dual(f));
  return retype(h, hom(f.cod, g.dom), hom(f.dom, g.cod));
}

CompositionLaw composition_law(const Obj& x, const Obj& y, const Obj& z) {
  Mor c = tensor_all({id(z), ev(y), id(dual(x))});
  Obj dom = tensor(hom(y, z), hom(x, y));
  c = retype(c, dom, hom(x, z));
  Mor ct = compose(c, retype(tau(hom(x, y), hom(y, z)), tensor(hom(x, y), hom(y, z)), dom));
  return CompositionLaw{c, ct};
}

Mor phi_of(const Mor& f, const Obj& x, const Obj& y) {
  require_same(f.cod, hom(x, y), "phi_of");
  return compose(ev_hom(x, y), tensor(f, id(x)));
}

Mor hom_of(const Mor& phi, const Obj& s, const Obj& x) {
  require_same(phi.dom, tensor(s, x), "hom_of");
  Mor d = compose(tensor(phi, id(dual(x))), tensor(id(s), casimir(x)));
  return retype(d, s, hom(x, phi.cod));
}

Mor iota_of(const Mor& f, const Obj& x, const Obj& y) {
  return compose(internal_duality(x, y), retype(f, f.dom, hom(x, y)));
}

Mor iota_star_of(const Mor& g, const Obj& x, const Obj& y) {
  Mor ig = iota_of(g, dual(x), dual(y));  // S -> hom(Y^vv, X^vv)
  auto inv = inverse(bidual(x).mat);
  Mor ix_inv{dual(dual(x)), x, std::move(*inv)};
  Mor h = hom_functor(bidual(y), ix_inv);  // hom(Y^vv, X^vv) -> hom(Y, X)
  return compose(h, ig);
}

Mor ev_pairs(const PairingSpec& s, const std::vector<Obj>& w) {
  if (w.size() != 4) throw std::invalid_argument("ev_pairs: need four objects");
  std::vector<int> slots{s.i, s.j, s.k, s.l};
  std::vector<int> chk = slots;
  std::sort(chk.begin(), chk.end());
  if (chk != std::vector<int>{1, 2, 3, 4} || !(s.i < s.j && s.k < s.l && s.i < s.k))
    throw std::invalid_argument("ev_pairs: malformed pairing spec");
  auto pair_ev = [&](int a, int b, PairVariant v) {
    const Obj& wa = w[a - 1];
    const Obj& wb = w[b - 1];
    if (wa != dual(wb)) throw std::invalid_argument("ev_pairs: slots do not form a dual pair");
    return v == PairVariant::phi ? retype(ev(wb), tensor(wa, wb), unit())
                                 : retype(ev_tau(wa), tensor(wa, wb), unit());
  };
  Mor e1 = pair_ev(s.i, s.j, s.a);
  Mor e2 = pair_ev(s.k, s.l, s.b);
  Mor perm = permute(w, {std::size_t(s.i - 1), std::size_t(s.j - 1), std::size_t(s.k - 1),
                         std::size_t(s.l - 1)});
  Mor e = tensor(e1, e2);
  e = retype(e, perm.cod, unit());
  return compose(e, perm);
}

Mor eps_phi(const Mor& phi1, const Obj& s1, const Obj& x1, const Mor& phi2, const Obj& s2,
            const Obj& x2) {
  Mor mid = tensor_all({id(s1), tau(s2, x1), id(x2)});
  return compose(tensor(phi1, phi2), mid);
}

Mor eps_tau_phi(const Mor& phi1, const Obj& s1, const Obj& x1, const Mor& phi2, const Obj& s2,
                const Obj& x2) {
  Mor tw = tensor(tau(s2, tensor(s1, x1)), id(x2));
  return compose(tensor(phi1, phi2), tw);
}

Mor eps_f(const Mor& f1, const Obj& x1, const Obj& y1, const Mor& f2, const Obj& x2,
          const Obj& y2) {
  Mor mid = tensor_all({id(y1), tau(dual(x1), y2), id(dual(x2))});
  Mor t = tensor(retype(f1, f1.dom, tensor(y1, dual(x1))), retype(f2, f2.dom, tensor(y2, dual(x2))));
  Mor r = compose(mid, t);
  return retype(r, r.dom, hom(tensor(x1, x2), tensor(y1, y2)));
}

Mor eps_tau_f(const Mor& f1, const Obj& s1, const Obj& x1, const Obj& y1, const Mor& f2,
              const Obj& s2, const Obj& x2, const Obj& y2) {
  return compose(eps_f(f1, x1, y1, f2, x2, y2), tau(s2, s1));
}

}  // namespace pd
