#include "pd/symmetric_group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pd {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose_perm(const Perm& s, const Perm& r) {
  if (s.size() != r.size()) throw std::invalid_argument("compose_perm: arity mismatch");
  Perm out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[r[k]];
  return out;
}

Perm inverse_perm(const Perm& s) {
  Perm out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[s[k]] = static_cast<std::uint32_t>(k);
  return out;
}

int perm_sign(const Perm& s) {
  int sign = 1;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) sign = -sign;
  return sign;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupAlgebraElement GroupAlgebraElement::unit(std::size_t n) { return basis(identity_perm(n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const Perm& p) {
  GroupAlgebraElement e;
  e.n = p.size();
  e.terms[p] = 1;
  return e;
}

void GroupAlgebraElement::add_term(const Perm& p, const Rat& c) {
  if (p.size() != n) throw std::invalid_argument("GroupAlgebraElement: arity mismatch");
  Rat& slot = terms[p];
  slot += c;
  if (sgn(slot) == 0) terms.erase(p);
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n != b.n) throw std::invalid_argument("group algebra product: arity mismatch");
  GroupAlgebraElement out;
  out.n = a.n;
  for (const auto& [s, x] : a.terms)
    for (const auto& [r, y] : b.terms) out.add_term(compose_perm(s, r), x * y);
  return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n != b.n) throw std::invalid_argument("group algebra sum: arity mismatch");
  GroupAlgebraElement out = a;
  for (const auto& [r, y] : b.terms) out.add_term(r, y);
  return out;
}

GroupAlgebraElement operator*(const Rat& s, const GroupAlgebraElement& a) {
  GroupAlgebraElement out;
  out.n = a.n;
  if (sgn(s) == 0) return out;
  for (const auto& [r, y] : a.terms) out.terms[r] = s * y;
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.n == b.n && a.terms == b.terms;
}

GroupAlgebraElement embed(const GroupAlgebraElement& a, std::size_t n, std::size_t offset) {
  if (offset + a.n > n) throw std::invalid_argument("embed: slots out of range");
  GroupAlgebraElement out;
  out.n = n;
  for (const auto& [s, x] : a.terms) {
    Perm p = identity_perm(n);
    for (std::size_t k = 0; k < a.n; ++k) p[offset + k] = static_cast<std::uint32_t>(offset + s[k]);
    out.add_term(p, x);
  }
  return out;
}

namespace {

// Image of the basis tensor `digits` under sigma: returns (index, sign).
std::pair<std::size_t, int> move_basis(const Perm& sigma, const Obj& v,
                                       const std::vector<std::size_t>& digits,
                                       std::vector<std::size_t>& scratch) {
  const std::size_t n = sigma.size(), d = v.dim();
  for (std::size_t k = 0; k < n; ++k) scratch[sigma[k]] = digits[k];
  std::size_t idx = 0;
  for (std::size_t t = 0; t < n; ++t) idx = idx * d + scratch[t];
  int sign = 1;
  for (std::size_t a = 0; a < n; ++a) {
    if (!v.odd(digits[a])) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      if (sigma[a] > sigma[b] && v.odd(digits[b])) sign = -sign;
  }
  return {idx, sign};
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

void decode(std::size_t idx, std::size_t d, std::vector<std::size_t>& digits) {
  for (std::size_t t = digits.size(); t-- > 0;) {
    digits[t] = idx % d;
    idx /= d;
  }
}

}  // namespace

Mor act(const Perm& sigma, const Obj& v, std::size_t n) {
  if (sigma.size() != n) throw std::invalid_argument("act: arity mismatch");
  return act(GroupAlgebraElement::basis(sigma), v);
}

Mat act_on(const GroupAlgebraElement& a, const Obj& v, const Mat& m) {
  const std::size_t n = a.n, d = v.dim(), N = ipow(d, n);
  if (m.rows() != N) throw DimensionError("act_on", N, N, m.rows(), m.cols());
  Mat mt = transpose(m);
  std::vector<Mat::Row> cols(mt.rows());
  std::vector<std::size_t> digits(n), scratch(n);
  std::vector<Rat> acc(N);
  std::vector<char> used(N, 0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < mt.rows(); ++c) {
    for (const auto& [u, x] : mt.row(c)) {
      decode(u, d, digits);
      for (const auto& [sigma, coef] : a.terms) {
        auto [idx, sign] = move_basis(sigma, v, digits, scratch);
        Rat t = coef * x;
        if (sign < 0) t = -t;
        if (!used[idx]) {
          used[idx] = 1;
          touched.push_back(idx);
          acc[idx] = t;
        } else {
          acc[idx] += t;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto idx : touched) {
      if (sgn(acc[idx]) != 0) cols[c].emplace_back(static_cast<std::uint32_t>(idx), acc[idx]);
      used[idx] = 0;
    }
    touched.clear();
  }
  return transpose(Mat::from_rows(N, std::move(cols)));
}

Mor act(const GroupAlgebraElement& a, const Obj& v) {
  Obj t = tensor_power(v, a.n);
  return Mor{t, t, act_on(a, v, Mat::identity(t.dim()))};
}

GroupAlgebraElement idempotent(std::size_t n, Character chi) {
  GroupAlgebraElement e;
  e.n = n;
  Rat w = 1 / factorial(static_cast<unsigned>(n));
  for (const auto& p : all_perms(n)) e.add_term(p, chi == Character::sign && perm_sign(p) < 0 ? -w : w);
  return e;
}

CosetSystem coset_system(std::size_t i, std::size_t j, Character chi, CosetScheme scheme) {
  if (i > j) throw std::invalid_argument("coset_system: i > j");
  CosetSystem cs;
  cs.e_leq.n = j;
  const Rat w = factorial(static_cast<unsigned>(j - i)) / factorial(static_cast<unsigned>(j));
  // Enumerate injective i-tuples of {0..j-1} in lexicographic order.
  std::vector<std::uint32_t> tuple(i, 0);
  std::vector<char> used(j, 0);
  auto emit = [&]() {
    CosetRep rep;
    rep.p = tuple;
    rep.delta.assign(j, 0);
    std::vector<char> in(j, 0);
    for (std::size_t k = 0; k < i; ++k) {
      rep.delta[tuple[k]] = static_cast<std::uint32_t>(k);
      in[tuple[k]] = 1;
    }
    std::vector<std::uint32_t> rest;
    for (std::uint32_t s = 0; s < j; ++s)
      if (!in[s]) rest.push_back(s);
    if (scheme == CosetScheme::alternative) std::reverse(rest.begin(), rest.end());
    for (std::size_t t = 0; t < rest.size(); ++t) rep.delta[rest[t]] = static_cast<std::uint32_t>(i + t);
    const int s = chi == Character::sign ? perm_sign(rep.delta) : 1;
    cs.e_leq.add_term(rep.delta, s > 0 ? w : Rat(-w));
    cs.reps.push_back(std::move(rep));
  };
  // Depth-first enumeration.
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == i) {
      emit();
      return;
    }
    for (std::uint32_t s = 0; s < j; ++s) {
      if (used[s]) continue;
      used[s] = 1;
      tuple[depth] = s;
      rec(depth + 1);
      used[s] = 0;
    }
  };
  rec(0);
  return cs;
}

}  // namespace pd
