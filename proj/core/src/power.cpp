#include "pd/power.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace pd {

const char* flavor_name(Flavor f) { return f == Flavor::alt ? "alt" : "sym"; }

namespace {

thread_local std::size_t g_degree_cap = 5;

std::mutex g_cache_mutex;
std::map<std::string, std::shared_ptr<const PowerObject>> g_cache;

std::string cache_key(const Obj& v, Flavor f, std::size_t k) {
  std::ostringstream os;
  os << flavor_name(f) << ':' << k << ':';
  for (auto p : v.par) os << int(p);
  os << ':';
  if (auto g = v.gram()) {
    for (std::size_t r = 0; r < g->rows(); ++r) {
      for (const auto& [c, x] : g->row(r)) os << c << '=' << x.get_str() << ',';
      os << ';';
    }
  }
  return os.str();
}

std::string power_label(const Obj& v, Flavor f, std::size_t k) {
  return std::string(f == Flavor::alt ? "Alt" : "Sym") + std::to_string(k) + "(" + v.label + ")";
}

// m o (a (x) b), without materializing the Kronecker product.
Mat compose_kron(const Mat& m, const Mat& a, const Mat& b) {
  return transpose(kron_apply(transpose(a), transpose(b), transpose(m)));
}

}  // namespace

std::size_t degree_cap() { return g_degree_cap; }
void set_degree_cap(std::size_t k) { g_degree_cap = k; }

SplitIdempotent split_object(const Mor& e, const std::string& label) {
  if (e.dom != e.cod) throw ObjectMismatch("split_object: not an endomorphism");
  const Obj& x = e.dom;
  Split s = split_idempotent(e.mat);
  std::vector<std::uint8_t> par;
  for (auto r : s.pivots) par.push_back(x.par[r]);
  // Basis of the summand of x^v cut out by e^v.
  Mor ed = dual(e);
  Mat j = (ed.mat == e.mat) ? s.i : split_idempotent(ed.mat).i;
  Mat g = pd::compose(transpose(j), pd::compose(x.gram_mat(), s.i));
  Obj carrier = make_obj(std::move(par), std::make_shared<const Mat>(std::move(g)), label);
  return SplitIdempotent{x, Mor{carrier, x, std::move(s.i)}, Mor{x, carrier, std::move(s.p)}};
}

std::shared_ptr<const PowerObject> power(const Obj& v, Flavor f, std::size_t k) {
  if (k > degree_cap())
    throw CapExceeded("tensor degree " + std::to_string(k) + " exceeds cap " +
                      std::to_string(degree_cap()));
  const std::string key = cache_key(v, f, k);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  Obj amb = tensor_power(v, k);
  Mor e{amb, amb, act_on(idempotent(k, character_of(f)), v, Mat::identity(amb.dim()))};
  auto po = std::make_shared<PowerObject>();
  po->base = v;
  po->flavor = f;
  po->degree = k;
  po->split = split_object(e, power_label(v, f, k));
  po->carrier = po->split.i.dom;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_cache.emplace(key, std::move(po));
  return it->second;
}

void clear_power_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.clear();
}

Obj A(const Obj& v, Flavor f, std::size_t k) { return power(v, f, k)->carrier; }
Obj Ad(const Obj& v, Flavor f, std::size_t k) { return dual(A(v, f, k)); }

Mor phi(const Obj& v, Flavor f, std::size_t i, std::size_t j) {
  auto pi = power(v, f, i), pj = power(v, f, j), pk = power(v, f, i + j);
  return Mor{tensor(pi->carrier, pj->carrier), pk->carrier,
             compose_kron(pk->split.p.mat, pi->split.i.mat, pj->split.i.mat)};
}

Mor phi_dual(const Obj& v, Flavor f, std::size_t i, std::size_t j) {
  Mor m = phi(dual(v), f, i, j);
  return retype(m, tensor(Ad(v, f, i), Ad(v, f, j)), Ad(v, f, i + j));
}

Mor ev_power(Flavor f, std::size_t k, const Obj& v) {
  Obj a = A(v, f, k);
  return retype(ev(a), tensor(Ad(v, f, k), a), unit());
}

namespace {

// Contract the first i slots of the columns of `w` (vectors in the j-fold
// power) against the columns of `t` (vectors in the i-fold power, already
// multiplied by the pairing):  r[b] = sum_a t[a] w[a*N + b].
// Output column index is cs * w.cols() + cw.
Mat contract_front(const Mat& t, const Mat& w, std::size_t n_rest) {
  const Mat tt = transpose(t), wt = transpose(w);
  std::vector<Mat::Row> cols(tt.rows() * wt.rows());
  std::map<std::uint32_t, Rat> acc;
  for (std::size_t cs = 0; cs < tt.rows(); ++cs) {
    std::vector<Rat> tv(t.rows());
    std::vector<char> nz(t.rows(), 0);
    for (const auto& [a, x] : tt.row(cs)) {
      tv[a] = x;
      nz[a] = 1;
    }
    for (std::size_t cw = 0; cw < wt.rows(); ++cw) {
      acc.clear();
      for (const auto& [idx, y] : wt.row(cw)) {
        const std::size_t a = idx / n_rest, b = idx % n_rest;
        if (!nz[a]) continue;
        acc[static_cast<std::uint32_t>(b)] += tv[a] * y;
      }
      auto& col = cols[cs * wt.rows() + cw];
      for (auto& [b, v] : acc)
        if (sgn(v) != 0) col.emplace_back(b, v);
    }
  }
  return transpose(Mat::from_rows(n_rest, std::move(cols)));
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Mor iota_phi(std::size_t i, std::size_t j, Flavor f, const Obj& v, IotaMethod m, CosetScheme scheme) {
  if (j < i) throw std::invalid_argument("iota: j < i");
  const Obj S = A(v, f, i), X = A(v, f, j - i), Y = A(v, f, j);
  const Obj dom = tensor(S, dual(Y)), cod = dual(X);
  if (m == IotaMethod::via_d) {
    Mor fm = hom_of(phi(v, f, i, j - i), S, X);
    Mor io = iota_of(fm, X, Y);
    return retype(phi_of(io, dual(Y), dual(X)), dom, cod);
  }
  const Obj vd = dual(v);
  auto pi = power(v, f, i), pj = power(vd, f, j), pr = power(vd, f, j - i);
  CosetSystem cs = coset_system(i, j, character_of(f), scheme);
  Mat w = act_on(cs.e_leq, vd, pj->split.i.mat);
  // ev^{i,tau}(x_u (x) w_a) = (-1)^{|u||a|} G[a,u]; the pairing is even so the
  // sign is (-1)^{|a|}.
  const Obj ti = tensor_power(v, i);
  Mat t = pd::compose(ti.gram_mat(), pi->split.i.mat);
  for (std::size_t a = 0; a < t.rows(); ++a)
    if (ti.odd(a))
      for (auto& e : t.row_mut(a)) e.second = -e.second;
  Mat r = contract_front(t, w, ipow(v.dim(), j - i));
  return Mor{dom, cod, pd::compose(pr->split.p.mat, r)};
}

Mor iota(std::size_t i, std::size_t j, Flavor f, const Obj& v, IotaMethod m) {
  return hom_of(iota_phi(i, j, f, v, m), A(v, f, i), Ad(v, f, j));
}

Mor iota_star_phi(std::size_t i, std::size_t j, Flavor f, const Obj& v, IotaMethod m) {
  if (j < i) throw std::invalid_argument("iota_star: j < i");
  const Obj S = Ad(v, f, i), X = A(v, f, j - i), Y = A(v, f, j);
  const Obj dom = tensor(S, Y), cod = X;
  if (m == IotaMethod::via_d) {
    Mor fd = hom_of(phi_dual(v, f, i, j - i), S, dual(X));
    Mor ist = iota_star_of(fd, X, Y);
    return retype(phi_of(ist, Y, X), dom, cod);
  }
  const Obj vd = dual(v);
  auto pi = power(vd, f, i), pj = power(v, f, j), pr = power(v, f, j - i);
  CosetSystem cs = coset_system(i, j, character_of(f));
  Mat w = act_on(cs.e_leq, v, pj->split.i.mat);
  const Obj ti = tensor_power(vd, i);
  Mat t = pd::compose(transpose(ti.gram_mat()), pi->split.i.mat);
  Mat r = contract_front(t, w, ipow(v.dim(), j - i));
  return Mor{dom, cod, pd::compose(pr->split.p.mat, r)};
}

Mor iota_star(std::size_t i, std::size_t j, Flavor f, const Obj& v, IotaMethod m) {
  return hom_of(iota_star_phi(i, j, f, v, m), Ad(v, f, i), A(v, f, j));
}

Poincare poincare(std::size_t i, std::size_t g, Flavor f, const Obj& v) {
  if (g < i) throw std::invalid_argument("poincare: g < i");
  Mor up = hom_of(iota_phi(i, g, f, v), A(v, f, i), Ad(v, f, g));
  Mor lo = hom_of(iota_star_phi(i, g, f, v), Ad(v, f, i), A(v, f, g));
  return Poincare{retype(up, up.dom, tensor(Ad(v, f, g - i), dual(Ad(v, f, g)))),
                  retype(lo, lo.dom, tensor(A(v, f, g - i), Ad(v, f, g)))};
}

Obj mixed_obj(const Obj& v, Flavor f, std::size_t p, std::size_t q) {
  Obj m = tensor(A(v, f, p), Ad(v, f, q));
  m.label = std::string(f == Flavor::alt ? "Alt" : "Sym") + "^" + std::to_string(p) + "_" +
            std::to_string(q) + "(" + v.label + ")";
  return m;
}

Mor phi_mixed(const Obj& v, Flavor f, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  Mor m = eps_phi(phi(v, f, i, k), A(v, f, i), A(v, f, k), phi_dual(v, f, j, l), Ad(v, f, j),
                  Ad(v, f, l));
  return retype(m, tensor(mixed_obj(v, f, i, j), mixed_obj(v, f, k, l)), mixed_obj(v, f, i + k, j + l));
}

namespace {
void check_delta_degrees(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (l < i || k < j) throw std::invalid_argument("delta_mixed: requires l >= i and k >= j");
}
}  // namespace

Mor delta_mixed(const Obj& v, Flavor f, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  check_delta_degrees(i, j, k, l);
  Mor m = eps_tau_phi(iota_star_phi(j, k, f, v), Ad(v, f, j), A(v, f, k), iota_phi(i, l, f, v),
                      A(v, f, i), Ad(v, f, l));
  return retype(m, tensor(mixed_obj(v, f, i, j), mixed_obj(v, f, k, l)),
                mixed_obj(v, f, k - j, l - i));
}

Mor delta_mixed_then(const Obj& v, Flavor f, std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l, const Mor& m) {
  check_delta_degrees(i, j, k, l);
  const Obj dom = tensor(mixed_obj(v, f, i, j), mixed_obj(v, f, k, l));
  if (m.cod != dom) throw ObjectMismatch("delta_mixed_then: object mismatch");
  Mor twist = tensor(tau(A(v, f, i), tensor(Ad(v, f, j), A(v, f, k))), id(Ad(v, f, l)));
  Mor m2 = compose(twist, retype(m, m.dom, twist.dom));
  Mor r = tensor_then(iota_star_phi(j, k, f, v), iota_phi(i, l, f, v), m2);
  return retype(r, m.dom, mixed_obj(v, f, k - j, l - i));
}

Mixed mixed(std::size_t i, std::size_t j, std::size_t k, std::size_t l, Flavor f, const Obj& v) {
  return Mixed{phi_mixed(v, f, i, j, k, l), delta_mixed(v, f, i, j, k, l)};
}

}  // namespace pd
