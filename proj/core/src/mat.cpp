#include "pd/mat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pd {

namespace {

std::string shape_msg(const std::string& op, std::size_t ar, std::size_t ac, std::size_t br,
                      std::size_t bc) {
  std::ostringstream os;
  os << op << ": incompatible shapes " << ar << "x" << ac << " and " << br << "x" << bc;
  return os.str();
}

// Dense scratch row with a list of touched columns; reused across rows to
// avoid re-allocating GMP values.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : val_(n), used_(n, 0) {}

  void add(std::uint32_t c, const Rat& v) {
    if (!used_[c]) {
      used_[c] = 1;
      touched_.push_back(c);
      val_[c] = v;
    } else {
      val_[c] += v;
    }
  }
  void add_product(std::uint32_t c, const Rat& a, const Rat& b) {
    if (!used_[c]) {
      used_[c] = 1;
      touched_.push_back(c);
      mpq_mul(val_[c].get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    } else {
      mpq_mul(tmp_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      val_[c] += tmp_;
    }
  }
  const Rat& get(std::uint32_t c) const { return val_[c]; }
  bool used(std::uint32_t c) const { return used_[c] != 0; }

  // Emit the nonzero entries sorted by column and reset.
  Mat::Row drain() {
    std::sort(touched_.begin(), touched_.end());
    Mat::Row out;
    out.reserve(touched_.size());
    for (auto c : touched_) {
      if (sgn(val_[c]) != 0) out.emplace_back(c, std::move(val_[c]));
      used_[c] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Rat> val_;
  std::vector<char> used_;
  std::vector<std::uint32_t> touched_;
  Rat tmp_;
};

// out = a - c*b on sorted sparse rows.
Mat::Row axpy_row(const Mat::Row& a, const Rat& c, const Mat::Row& b) {
  Mat::Row out;
  out.reserve(a.size() + b.size());
  std::size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
      out.push_back(a[x++]);
    } else if (x == a.size() || b[y].first < a[x].first) {
      out.emplace_back(b[y].first, -c * b[y].second);
      ++y;
    } else {
      Rat v = a[x].second - c * b[y].second;
      if (sgn(v) != 0) out.emplace_back(a[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  return out;
}

const Rat* find_in_row(const Mat::Row& r, std::uint32_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const Mat::Entry& e, std::uint32_t k) { return e.first < k; });
  if (it != r.end() && it->first == c) return &it->second;
  return nullptr;
}

}  // namespace

DimensionError::DimensionError(const std::string& op_, std::size_t ar, std::size_t ac,
                               std::size_t br, std::size_t bc)
    : std::invalid_argument(shape_msg(op_, ar, ac, br, bc)), op(op_) {}

NotIdempotentError::NotIdempotentError(std::string res)
    : std::runtime_error("split_idempotent: input is not idempotent (residual " + res + ")"),
      residual(std::move(res)) {}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.rows_[k].emplace_back(static_cast<std::uint32_t>(k), 1);
  return m;
}

Mat Mat::from_dense(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_dense", rows.size(), cols, r, rows[r].size());
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(rows[r][c]) != 0) m.rows_[r].emplace_back(static_cast<std::uint32_t>(c), rows[r][c]);
  }
  return m;
}

Mat Mat::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rat>> d;
  for (const auto& r : rows) {
    std::vector<Rat> rr;
    for (long v : r) rr.emplace_back(v);
    d.push_back(std::move(rr));
  }
  return from_dense(d);
}

Mat Mat::scalar(const Rat& s) {
  Mat m(1, 1);
  if (sgn(s) != 0) m.rows_[0].emplace_back(0, s);
  return m;
}

Mat Mat::from_rows(std::size_t cols, std::vector<Row> rows) {
  Mat m;
  m.cols_ = cols;
  for (auto& r : rows) {
    r.erase(std::remove_if(r.begin(), r.end(), [](const Entry& e) { return sgn(e.second) == 0; }),
            r.end());
  }
  m.rows_ = std::move(rows);
  return m;
}

Rat Mat::at(std::size_t r, std::size_t c) const {
  const Rat* p = find_in_row(rows_.at(r), static_cast<std::uint32_t>(c));
  return p ? *p : Rat(0);
}

void Mat::set(std::size_t r, std::size_t c, const Rat& v) {
  if (r >= rows() || c >= cols_) throw DimensionError("set", rows(), cols_, r, c);
  auto& row = rows_[r];
  auto key = static_cast<std::uint32_t>(c);
  auto it = std::lower_bound(row.begin(), row.end(), key,
                             [](const Entry& e, std::uint32_t k) { return e.first < k; });
  if (it != row.end() && it->first == key) {
    if (sgn(v) == 0)
      row.erase(it);
    else
      it->second = v;
  } else if (sgn(v) != 0) {
    row.insert(it, Entry(key, v));
  }
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool Mat::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

std::vector<std::vector<Rat>> Mat::to_dense() const {
  std::vector<std::vector<Rat>> d(rows(), std::vector<Rat>(cols_));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : rows_[r]) d[r][c] = v;
  return d;
}

bool Mat::operator==(const Mat& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto& a = rows_[r];
    const auto& b = o.rows_[r];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
  }
  return true;
}

Mat add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("add", a.rows(), a.cols(), b.rows(), b.cols());
  std::vector<Mat::Row> rows(a.rows());
  Rat minus_one(-1);
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = axpy_row(a.row(r), minus_one, b.row(r));
  return Mat::from_rows(a.cols(), std::move(rows));
}

Mat sub(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("sub", a.rows(), a.cols(), b.rows(), b.cols());
  std::vector<Mat::Row> rows(a.rows());
  Rat one(1);
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = axpy_row(a.row(r), one, b.row(r));
  return Mat::from_rows(a.cols(), std::move(rows));
}

Mat scale(const Mat& a, const Rat& s) {
  if (sgn(s) == 0) return Mat(a.rows(), a.cols());
  std::vector<Mat::Row> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows[r].reserve(a.row(r).size());
    for (const auto& [c, v] : a.row(r)) rows[r].emplace_back(c, v * s);
  }
  return Mat::from_rows(a.cols(), std::move(rows));
}

Mat compose(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionError("compose", a.rows(), a.cols(), b.rows(), b.cols());
  std::vector<Mat::Row> rows(a.rows());
  Accumulator acc(b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& [k, v] : a.row(r))
      for (const auto& [c, w] : b.row(k)) acc.add_product(c, v, w);
    rows[r] = acc.drain();
  }
  return Mat::from_rows(b.cols(), std::move(rows));
}

Mat kron(const Mat& a, const Mat& b) {
  std::vector<Mat::Row> rows(a.rows() * b.rows());
  const auto bc = static_cast<std::uint32_t>(b.cols());
  for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
    for (std::size_t r2 = 0; r2 < b.rows(); ++r2) {
      auto& out = rows[r1 * b.rows() + r2];
      out.reserve(a.row(r1).size() * b.row(r2).size());
      for (const auto& [c1, v1] : a.row(r1))
        for (const auto& [c2, v2] : b.row(r2)) out.emplace_back(c1 * bc + c2, v1 * v2);
    }
  return Mat::from_rows(a.cols() * b.cols(), std::move(rows));
}

Mat direct_sum(const Mat& a, const Mat& b) {
  std::vector<Mat::Row> rows(a.rows() + b.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = a.row(r);
  const auto off = static_cast<std::uint32_t>(a.cols());
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.row(r)) rows[a.rows() + r].emplace_back(c + off, v);
  return Mat::from_rows(a.cols() + b.cols(), std::move(rows));
}

Mat transpose(const Mat& a) {
  std::vector<Mat::Row> rows(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) rows[c].emplace_back(static_cast<std::uint32_t>(r), v);
  return Mat::from_rows(a.rows(), std::move(rows));
}

Mat kron_apply(const Mat& f, const Mat& g, const Mat& m) {
  if (m.rows() != f.cols() * g.cols())
    throw DimensionError("kron_apply", f.cols() * g.cols(), 0, m.rows(), m.cols());
  const Mat ft = transpose(f), gt = transpose(g), mt = transpose(m);
  const std::size_t gc = g.cols(), gr = g.rows();
  std::vector<Mat::Row> cols(mt.rows());
  Accumulator acc(f.rows() * g.rows());
  Rat t;
  for (std::size_t col = 0; col < mt.rows(); ++col) {
    for (const auto& [idx, val] : mt.row(col)) {
      const std::size_t x = idx / gc, y = idx % gc;
      for (const auto& [r1, a] : ft.row(x)) {
        t = val * a;
        for (const auto& [r2, b] : gt.row(y))
          acc.add_product(static_cast<std::uint32_t>(r1 * gr + r2), t, b);
      }
    }
    cols[col] = acc.drain();
  }
  return transpose(Mat::from_rows(f.rows() * g.rows(), std::move(cols)));
}

Mat select_rows(const Mat& m, const std::vector<std::uint32_t>& idx) {
  std::vector<Mat::Row> rows;
  rows.reserve(idx.size());
  for (auto r : idx) rows.push_back(m.row(r));
  return Mat::from_rows(m.cols(), std::move(rows));
}

Mat mat_ops(const Mat& a, const Mat& b, MatOp op) {
  switch (op) {
    case MatOp::add: return add(a, b);
    case MatOp::compose: return compose(a, b);
    case MatOp::kron: return kron(a, b);
    case MatOp::direct_sum: return direct_sum(a, b);
    case MatOp::scalar_mul:
      if (a.rows() != 1 || a.cols() != 1)
        throw DimensionError("scalar_mul", a.rows(), a.cols(), b.rows(), b.cols());
      return scale(b, a.at(0, 0));
  }
  throw std::invalid_argument("mat_ops: unknown op");
}

std::string residual(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("residual", a.rows(), a.cols(), b.rows(), b.cols());
  mpz_class best = 0;
  Mat d = sub(a, b);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (const auto& e : d.row(r)) {
      mpz_class n = abs(e.second.get_num());
      if (n > best) best = n;
    }
  return best.get_str();
}

Echelon rref(const Mat& m) {
  Echelon ech;
  std::map<std::uint32_t, std::size_t> pivot_row;  // pivot column -> index in ech.rows
  Accumulator acc(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& v = m.row(r);
    if (v.empty()) continue;
    for (const auto& [c, x] : v) acc.add(c, x);
    // Existing rows are fully reduced, so each pivot column of v is cleared by
    // exactly one subtraction and never reappears.
    for (const auto& [c, x] : v) {
      auto it = pivot_row.find(c);
      if (it == pivot_row.end()) continue;
      Rat coef = acc.get(c);
      if (sgn(coef) == 0) continue;
      for (const auto& [cc, y] : ech.rows[it->second]) acc.add_product(cc, -coef, y);
    }
    Mat::Row red = acc.drain();
    if (red.empty()) continue;
    Rat lead = red.front().second;
    for (auto& e : red) e.second /= lead;
    const std::uint32_t L = red.front().first;
    for (auto& row : ech.rows) {
      const Rat* p = find_in_row(row, L);
      if (p) {
        Rat coef = *p;
        row = axpy_row(row, coef, red);
      }
    }
    pivot_row[L] = ech.rows.size();
    ech.rows.push_back(std::move(red));
  }
  // Order rows by pivot column.
  std::vector<Mat::Row> sorted;
  sorted.reserve(ech.rows.size());
  for (const auto& [c, idx] : pivot_row) {
    ech.pivots.push_back(c);
    sorted.push_back(std::move(ech.rows[idx]));
  }
  ech.rows = std::move(sorted);
  return ech;
}

std::size_t rank(const Mat& m) { return rref(m).rows.size(); }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse", m.rows(), m.cols(), m.rows(), m.cols());
  const std::size_t n = m.rows();
  Mat aug = direct_sum(m, Mat(0, n));
  for (std::size_t r = 0; r < n; ++r) aug.row_mut(r).emplace_back(static_cast<std::uint32_t>(n + r), 1);
  Echelon e = rref(aug);
  if (e.rows.size() != n) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    if (e.pivots[r] != r) return std::nullopt;
  std::vector<Mat::Row> rows(n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : e.rows[r])
      if (c >= n) rows[r].emplace_back(static_cast<std::uint32_t>(c - n), v);
  return Mat::from_rows(n, std::move(rows));
}

Split split_idempotent(const Mat& e) {
  if (e.rows() != e.cols()) throw DimensionError("split_idempotent", e.rows(), e.cols(), e.rows(), e.cols());
  Mat ee = compose(e, e);
  if (ee != e) throw NotIdempotentError(residual(ee, e));
  Echelon ech = rref(transpose(e));
  Split s;
  s.pivots = ech.pivots;
  s.i = transpose(Mat::from_rows(e.rows(), std::move(ech.rows)));
  if (s.i.cols() == 0) s.i = Mat(e.rows(), 0);
  s.p = select_rows(e, s.pivots);
  if (s.pivots.empty()) s.p = Mat(0, e.cols());
  return s;
}

}  // namespace pd
