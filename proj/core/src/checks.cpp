#include "pd/checks.hpp"

#include "check_util.hpp"

#include <chrono>

namespace pd {

using detail::str;

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

// ---- Probe ------------------------------------------------------------------

void Probe::record(const std::string& what, const mpz_class& r) {
  if (r > worst_) worst_ = r;
  if (r != 0 && reason_.empty()) reason_ = what + ": sides differ";
}

void Probe::eq(const std::string& what, const Mor& lhs, const Mor& rhs) {
  if (lhs.dom != rhs.dom || lhs.cod != rhs.cod) {
    mismatch_ = true;
    if (reason_.empty()) reason_ = what + ": source or target objects differ";
    return;
  }
  record(what, mpz_class(residual(lhs.mat, rhs.mat)));
}

void Probe::eq(const std::string& what, const Rat& lhs, const Rat& rhs) {
  Rat d = lhs - rhs;
  record(what, abs(d.get_num()));
}

void Probe::invertible(const std::string& what, const Mor& m) {
  std::size_t n = std::max(m.mat.rows(), m.mat.cols());
  std::size_t r = rank(m.mat);
  record(what + " (rank deficiency)", mpz_class(static_cast<unsigned long>(n - r)));
}

void Probe::witness(const std::string& name, const Rat& value) {
  witnesses_.emplace_back(name, value);
}

void Probe::skip(const std::string& reason) {
  if (!skip_) reason_ = reason;
  skip_ = true;
}

void Probe::note(const std::string& text) { note_ = text; }

CheckResult Probe::finish(std::string id, Params params) const {
  CheckResult res;
  res.id = std::move(id);
  res.params = std::move(params);
  res.witnesses = witnesses_;
  if (skip_) {
    res.status = Status::skip;
    res.reason = reason_;
    return res;
  }
  res.residual = mismatch_ ? "object-mismatch" : worst_.get_str();
  res.status = (mismatch_ || worst_ != 0) ? Status::fail : Status::pass;
  if (res.status == Status::fail) res.reason = reason_;
  else res.reason = note_;
  return res;
}

std::optional<Rat> scalar_multiple(const Mor& m, const Mor& base) {
  if (m.mat.rows() != base.mat.rows() || m.mat.cols() != base.mat.cols()) return std::nullopt;
  for (std::size_t r = 0; r < base.mat.rows(); ++r) {
    const auto& row = base.mat.row(r);
    if (row.empty()) continue;
    Rat c = m.mat.at(r, row.front().first) / row.front().second;
    if (m.mat == scale(base.mat, c)) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

// ---- subjects ---------------------------------------------------------------

namespace detail {

long small_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// L * U with unit diagonals and small entries inside the parity blocks.
Mat random_even_gram(const std::vector<std::uint8_t>& par, std::mt19937_64& rng) {
  std::size_t n = par.size();
  Mat l = Mat::identity(n), u = Mat::identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (par[a] == par[b]) {
        l.set(a, b, Rat(small_int(rng, -2, 2)));
        u.set(b, a, Rat(small_int(rng, -2, 2)));
      }
  return compose(l, u);
}

}  // namespace detail

Params Subject::params() const {
  Params p{{"model", model == Model::plain ? "plain" : "super"},
           {"even", str(even)},
           {"odd", str(odd)},
           {"flavor", flavor_name(flavor)}};
  if (conjugated) p.emplace_back("pairing", "conjugated");
  return p;
}

Subject make_subject(Model m, std::size_t even, std::size_t odd, Flavor f,
                     std::optional<std::uint64_t> conj_seed) {
  Subject s;
  s.model = m;
  s.even = even;
  s.odd = m == Model::plain ? 0 : odd;
  s.flavor = f;
  s.v = m == Model::plain ? plain_space(even) : super_space(even, odd);
  if (conj_seed) {
    std::mt19937_64 rng(*conj_seed);
    s.v = with_gram(s.v, detail::random_even_gram(s.v.par, rng), "V");
    s.conjugated = true;
  }
  return s;
}

CheckResult run_check(const std::string& id, const Params& params,
                      const std::function<void(Probe&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    Probe probe;
    body(probe);
    res = probe.finish(id, params);
  } catch (const CapExceeded& e) {
    res.id = id;
    res.params = params;
    res.status = Status::skip;
    res.reason = std::string("degree cap: ") + e.what();
  } catch (const std::exception& e) {
    res.id = id;
    res.params = params;
    res.status = Status::fail;
    res.residual = "error";
    res.reason = e.what();
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// ---- power-algebra checks ---------------------------------------------------

namespace {

struct Ctx {
  const Subject& s;
  Obj A(std::size_t k) const { return pd::A(s.v, s.flavor, k); }
  Obj Ad(std::size_t k) const { return pd::Ad(s.v, s.flavor, k); }
  Obj M(std::size_t p, std::size_t q) const { return mixed_obj(s.v, s.flavor, p, q); }
  Mor C(std::size_t k) const { return casimir(A(k)); }
  Mor phi(std::size_t i, std::size_t j) const { return pd::phi(s.v, s.flavor, i, j); }
  Mor phid(std::size_t i, std::size_t j) const { return phi_dual(s.v, s.flavor, i, j); }
  Mor iphi(std::size_t i, std::size_t j) const { return iota_phi(i, j, s.flavor, s.v); }
  Mor istar(std::size_t i, std::size_t j) const { return iota_star_phi(i, j, s.flavor, s.v); }
  Mor pm(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return phi_mixed(s.v, s.flavor, i, j, k, l);
  }
  Mor dm(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return delta_mixed(s.v, s.flavor, i, j, k, l);
  }
  Mor dm_then(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Mor& m) const {
    return delta_mixed_then(s.v, s.flavor, i, j, k, l, m);
  }
  bool alt() const { return s.flavor == Flavor::alt; }
  Rat sgn(long n) const { return alt() ? sign_pow(n) : Rat(1); }
};

Params with(Params p, std::initializer_list<std::pair<std::string, std::size_t>> extra) {
  for (const auto& [k, v] : extra) p.emplace_back(k, str(v));
  return p;
}

Rat binom(std::size_t n, std::size_t k) { return binom_at(Rat(static_cast<long>(n)), k); }
Rat R(std::size_t n) { return Rat(static_cast<long>(n)); }

}  // namespace

CheckResult check_rank_formula(const Subject& s, std::size_t k) {
  return run_check("rank_formula", with(s.params(), {{"k", k}}), [&](Probe& p) {
    Ctx c{s};
    Rat r = rank(s.v);
    Rat rk = rank(c.A(k));
    Rat want = c.alt() ? binom_at(r, k) : binom_at(r + R(k) - 1, k);
    p.witness("rank_V", r);
    p.witness("rank_power", rk);
    p.witness("expected", want);
    p.eq("rank of the power", rk, want);
  });
}

CheckResult check_key_lemma(const Subject& s, std::size_t i, std::size_t g) {
  return run_check("key_lemma", with(s.params(), {{"g", g}, {"i", i}}), [&](Probe& p) {
    Ctx c{s};
    Rat r = rank(s.v);
    Rat coeff = (c.alt() ? binom_at(r + R(i) - R(g), i) : binom_at(r + R(g) - 1, i)) / binom(g, i);
    p.witness("coefficient", coeff);
    Mor lhs = scale(c.C(g - i), coeff);
    Mor rhs = c.dm_then(i, i, g, g, tensor(c.C(i), c.C(g)));
    p.eq("contracted Casimirs", lhs, rhs);
  });
}

CheckResult check_key_steps(const Subject& s, std::size_t m) {
  return run_check("key_steps", with(s.params(), {{"m", m}}), [&](Probe& p) {
    if (m == 0) {
      p.skip("requires m >= 1");
      return;
    }
    Ctx c{s};
    Rat r = rank(s.v);
    Obj m10 = c.M(1, 0), m01 = c.M(0, 1), m11 = c.M(1, 1);
    Obj mm1 = c.M(m - 1, m - 1);
    // Contracting a vector into C_m.
    Mor d1_lhs = c.dm_then(1, 0, m, m, tensor(id(m10), c.C(m)));
    Mor d1_rhs = compose({c.pm(1, 0, m - 1, m - 1), tensor(c.dm(1, 0, 1, 1), id(mm1)),
                          tensor_all({id(m10), c.C(1), c.C(m - 1)})});
    p.eq("vector into C_m, split", d1_lhs, d1_rhs);
    p.eq("vector into C_m, recursive", d1_lhs,
         compose(c.pm(1, 0, m - 1, m - 1), tensor(id(m10), c.C(m - 1))));
    Mor d1d_lhs = c.dm_then(0, 1, m, m, tensor(id(m01), c.C(m)));
    Mor d1d_rhs = compose({c.pm(0, 1, m - 1, m - 1), tensor(c.dm(0, 1, 1, 1), id(mm1)),
                           tensor_all({id(m01), c.C(1), c.C(m - 1)})});
    p.eq("covector into C_m, split", d1d_lhs, d1d_rhs);
    p.eq("covector into C_m, recursive", d1d_lhs,
         compose(c.pm(0, 1, m - 1, m - 1), tensor(id(m01), c.C(m - 1))));
    if (m >= 2) {
      Mor lhs = scale(c.dm_then(1, 1, m, m, tensor(id(m11), c.C(m))), R(m));
      Rat k = c.alt() ? Rat(Rat(1) - R(m)) : Rat(R(m) - 1);
      Mor rhs = add(compose(tensor(ev_tau(s.v), id(mm1)), tensor(id(m11), c.C(m - 1))),
                    scale(compose(c.pm(1, 1, m - 2, m - 2), tensor(id(m11), c.C(m - 2))), k));
      p.eq("endomorphism into C_m", retype(lhs, m11, lhs.cod), rhs);
    }
    Rat k = c.alt() ? Rat(r - R(m) + 1) : Rat(r + R(m) - 1);
    p.witness("contraction_constant", k);
    p.eq("C_1 into C_m", scale(c.dm_then(1, 1, m, m, tensor(c.C(1), c.C(m))), R(m)),
         scale(c.C(m - 1), k));
    for (std::size_t j = 0; j <= m; ++j) {
      Rat kj = c.alt() ? binom_at(r + R(j) - R(m), j) : binom_at(r + R(m) - 1, j);
      p.eq("C_" + str(j) + " into C_m",
           scale(c.dm_then(j, j, m, m, tensor(c.C(j), c.C(m))), binom(m, j)),
           scale(c.C(m - j), kj));
    }
  });
}

CheckResult check_antiderivation(const Subject& s, std::size_t j, std::size_t l) {
  return run_check("antiderivation", with(s.params(), {{"j", j}, {"l", l}}), [&](Probe& p) {
    if (j == 0 || l == 0) {
      p.skip("requires j, l >= 1");
      return;
    }
    Ctx c{s};
    Obj v = c.A(1), vd = c.Ad(1);
    Rat sg = c.sgn(static_cast<long>(j));
    Mor lhs = scale(compose(c.iphi(1, j + l), tensor(id(v), c.phid(j, l))), R(j + l));
    Mor rhs = add(compose(c.phid(j - 1, l), tensor(scale(c.iphi(1, j), R(j)), id(c.Ad(l)))),
                  scale(compose({c.phid(j, l - 1), tensor(id(c.Ad(j)), c.iphi(1, l)),
                                 tensor(tau(v, c.Ad(j)), id(c.Ad(l)))}),
                        sg * R(l)));
    p.eq("internal multiplication on the dual algebra", lhs, rhs);
    Mor lhs2 = scale(compose(c.istar(1, j + l), tensor(id(vd), c.phi(j, l))), R(j + l));
    Mor rhs2 = add(compose(c.phi(j - 1, l), tensor(scale(c.istar(1, j), R(j)), id(c.A(l)))),
                   scale(compose({c.phi(j, l - 1), tensor(id(c.A(j)), c.istar(1, l)),
                                  tensor(tau(vd, c.A(j)), id(c.A(l)))}),
                         sg * R(l)));
    p.eq("dual internal multiplication on the algebra", lhs2, rhs2);
  });
}

CheckResult check_mixed_antiderivation(const Subject& s, std::size_t i, std::size_t j,
                                       std::size_t k, std::size_t l) {
  return run_check(
      "mixed_antiderivation", with(s.params(), {{"i", i}, {"j", j}, {"k", k}, {"l", l}}),
      [&](Probe& p) {
        Ctx c{s};
        bool first = j >= 1 && l >= 1, second = i >= 1 && k >= 1;
        if (!first && !second) {
          p.skip("requires j, l >= 1 or i, k >= 1");
          return;
        }
        Obj mij = c.M(i, j), mkl = c.M(k, l);
        Mor prod = c.pm(i, j, k, l);
        if (first) {
          Obj m10 = c.M(1, 0);
          Mor lhs = scale(c.dm_then(1, 0, i + k, j + l, tensor(id(m10), prod)), R(j + l));
          Mor rhs = add(
              compose(c.pm(i, j - 1, k, l), tensor(scale(c.dm(1, 0, i, j), R(j)), id(mkl))),
              scale(compose({c.pm(i, j, k, l - 1), tensor(id(mij), c.dm(1, 0, k, l)),
                             tensor(tau(m10, mij), id(mkl))}),
                    c.sgn(static_cast<long>(j)) * R(l)));
          p.eq("vector contraction", lhs, rhs);
        }
        if (second) {
          Obj m01 = c.M(0, 1);
          Mor lhs = scale(c.dm_then(0, 1, i + k, j + l, tensor(id(m01), prod)), R(i + k));
          Mor rhs = add(
              compose(c.pm(i - 1, j, k, l), tensor(scale(c.dm(0, 1, i, j), R(i)), id(mkl))),
              scale(compose({c.pm(i, j, k - 1, l), tensor(id(mij), c.dm(0, 1, k, l)),
                             tensor(tau(m01, mij), id(mkl))}),
                    c.sgn(static_cast<long>(i)) * R(k)));
          p.eq("covector contraction", lhs, rhs);
        }
      });
}

CheckResult check_algebra_adjunction(const Subject& s, std::size_t i, std::size_t j) {
  return run_check("algebra_adjunction", with(s.params(), {{"i", i}, {"j", j}}), [&](Probe& p) {
    if (i > j) {
      p.skip("requires i <= j");
      return;
    }
    Ctx c{s};
    Mor lhs = compose({ev_tau(c.A(j - i)), tensor(id(c.A(j - i)), c.iphi(i, j)),
                       tensor(tau(c.A(i), c.A(j - i)), id(c.Ad(j)))});
    Mor rhs = compose(ev_tau(c.A(j)), tensor(c.phi(i, j - i), id(c.Ad(j))));
    p.eq("internal multiplication adjoint to multiplication", lhs, rhs);
  });
}

CheckResult check_algebra_composition(const Subject& s, std::size_t i, std::size_t j,
                                      std::size_t k) {
  return run_check(
      "algebra_composition", with(s.params(), {{"i", i}, {"j", j}, {"k", k}}), [&](Probe& p) {
        if (i + j > k) {
          p.skip("requires i + j <= k");
          return;
        }
        Ctx c{s};
        Mor lhs = compose(c.iphi(j, k - i), tensor(id(c.A(j)), c.iphi(i, k)));
        Mor rhs = compose(c.iphi(i + j, k),
                          tensor(compose(c.phi(i, j), tau(c.A(j), c.A(i))), id(c.Ad(k))));
        p.eq("iterated internal multiplication", lhs, rhs);
        Mor ik = iota(i, k, s.flavor, s.v), jk = iota(j, k - i, s.flavor, s.v);
        Mor ct = composition_law(c.Ad(k), c.Ad(k - i), c.Ad(k - i - j)).c_tau;
        Mor hom_lhs = compose(ct, tensor(ik, jk));
        Mor hom_rhs = compose(iota(i + j, k, s.flavor, s.v), c.phi(i, j));
        p.eq("hom-valued form", hom_lhs, retype(hom_rhs, hom_rhs.dom, hom_lhs.cod));
      });
}

CheckResult check_mixed_adjunction(const Subject& s, std::size_t i, std::size_t j,
                                   std::size_t k, std::size_t l) {
  return run_check(
      "mixed_adjunction", with(s.params(), {{"i", i}, {"j", j}, {"k", k}, {"l", l}}),
      [&](Probe& p) {
        if (l < i || k < j) {
          p.skip("requires l >= i and k >= j");
          return;
        }
        Ctx c{s};
        Obj mij = c.M(i, j), mb = c.M(l - i, k - j), mkl = c.M(k, l);
        PairingSpec spec{1, 4, 2, 3, PairVariant::tau, PairVariant::phi};
        Mor lhs = compose(ev_pairs(spec, {c.A(l), c.Ad(k), c.A(k), c.Ad(l)}),
                          tensor(c.pm(i, j, l - i, k - j), id(mkl)));
        Mor rhs = compose({ev_pairs(spec, {c.A(l - i), c.Ad(k - j), c.A(k - j), c.Ad(l - i)}),
                           tensor(id(mb), c.dm(i, j, k, l)), tensor(tau(mij, mb), id(mkl))});
        p.eq("contraction adjoint to multiplication", retype(lhs, rhs.dom, lhs.cod), rhs);
      });
}

CheckResult check_mixed_composition(const Subject& s, std::size_t i, std::size_t j,
                                    std::size_t k, std::size_t l, std::size_t m,
                                    std::size_t n) {
  return run_check(
      "mixed_composition",
      with(s.params(), {{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"m", m}, {"n", n}}),
      [&](Probe& p) {
        if (n < i + k || m < j + l) {
          p.skip("requires n >= i + k and m >= j + l");
          return;
        }
        Ctx c{s};
        Obj mij = c.M(i, j), mkl = c.M(k, l), mmn = c.M(m, n);
        Mor lhs = c.dm_then(k, l, m - j, n - i, tensor(id(mkl), c.dm(i, j, m, n)));
        Mor rhs = c.dm_then(i + k, j + l, m, n,
                            tensor(compose(c.pm(i, j, k, l), tau(mkl, mij)), id(mmn)));
        p.eq("iterated contraction", lhs, rhs);
      });
}

CheckResult check_graded_algebra(const Subject& s, std::size_t i, std::size_t j, std::size_t k) {
  return run_check("graded_algebra", with(s.params(), {{"i", i}, {"j", j}, {"k", k}}),
                   [&](Probe& p) {
                     Ctx c{s};
                     p.eq("associativity",
                          compose(c.phi(i + j, k), tensor(c.phi(i, j), id(c.A(k)))),
                          compose(c.phi(i, j + k), tensor(id(c.A(i)), c.phi(j, k))));
                     p.eq("associativity of the dual algebra",
                          compose(c.phid(i + j, k), tensor(c.phid(i, j), id(c.Ad(k)))),
                          compose(c.phid(i, j + k), tensor(id(c.Ad(i)), c.phid(j, k))));
                     Rat sg = c.sgn(static_cast<long>(i * j));
                     p.eq("graded commutativity", compose(c.phi(j, i), tau(c.A(i), c.A(j))),
                          scale(c.phi(i, j), sg));
                     Mor unit_left = c.phi(0, i);
                     p.eq("unit", unit_left, retype(id(c.A(i)), unit_left.dom, unit_left.cod));
                   });
}

CheckResult check_iota_methods(const Subject& s, std::size_t i, std::size_t j) {
  return run_check("iota_methods", with(s.params(), {{"i", i}, {"j", j}}), [&](Probe& p) {
    if (i > j) {
      p.skip("requires i <= j");
      return;
    }
    Ctx c{s};
    Mor via_d = iota_phi(i, j, s.flavor, s.v, IotaMethod::via_d);
    p.eq("via internal duality vs explicit", via_d,
         iota_phi(i, j, s.flavor, s.v, IotaMethod::explicit_formula, CosetScheme::canonical));
    p.eq("coset representative choice", via_d,
         iota_phi(i, j, s.flavor, s.v, IotaMethod::explicit_formula, CosetScheme::alternative));
    p.eq("dual: via internal duality vs explicit",
         iota_star_phi(i, j, s.flavor, s.v, IotaMethod::via_d),
         iota_star_phi(i, j, s.flavor, s.v, IotaMethod::explicit_formula));
    if (i == 0) p.eq("degree zero is the identity", via_d, retype(id(c.Ad(j)), via_d.dom, via_d.cod));
    if (i == j) p.eq("full degree is the evaluation", via_d, retype(ev_tau(c.A(j)), via_d.dom, via_d.cod));
  });
}

CheckResult check_dual_pair(const Subject& s, std::size_t k) {
  return run_check("dual_pair", with(s.params(), {{"k", k}}), [&](Probe& p) {
    Ctx c{s};
    Mor e = ev_power(s.flavor, k, s.v);
    auto pa = power(s.v, s.flavor, k);
    auto pad = power(dual(s.v), s.flavor, k);
    Mor oracle = compose(ev(tensor_power(s.v, k)), tensor(pad->split.i, pa->split.i));
    p.eq("restricted tensor-power evaluation", e, retype(oracle, e.dom, e.cod));
    p.eq("categorical evaluation of the carrier", e, ev(c.A(k)));
    p.invertible("hom-valued evaluation", hom_of(e, c.Ad(k), c.A(k)));
  });
}

CheckResult check_mixed_pinned(const Subject& s, std::size_t m) {
  return run_check("mixed_pinned", with(s.params(), {{"m", m}}), [&](Probe& p) {
    Ctx c{s};
    Mor d = c.dm(0, 0, m, m);
    p.eq("degree-zero contraction is the identity", d, retype(id(c.M(m, m)), d.dom, d.cod));
    if (m == 1) {
      Obj v = c.A(1), vd = c.Ad(1);
      Mor d1 = c.dm(1, 0, 1, 1);
      p.eq("vector contraction in degree one", d1,
           retype(compose(tensor(id(v), ev_tau(v)), tensor(tau(v, v), id(vd))), d1.dom, d1.cod));
      Mor d2 = c.dm(0, 1, 1, 1);
      p.eq("covector contraction in degree one", d2,
           retype(tensor(ev(v), id(vd)), d2.dom, d2.cod));
    }
  });
}

CheckResult check_self_test() {
  return run_check("self_test", {{"identity", "corrupted"}}, [](Probe& p) {
    Obj v = super_space(1, 1);
    p.eq("symmetry squared, deliberately doubled", scale(compose(tau(v, v), tau(v, v)), Rat(2)),
         id(tensor(v, v)));
  });
}

}  // namespace pd
