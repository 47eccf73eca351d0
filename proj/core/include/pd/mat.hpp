#pragma once
// Exact rational matrices.
//
// Storage is row-sparse (each row a column-sorted list of nonzero entries);
// the public surface is that of a dense rows x cols matrix.  Tensor-power
// matrices are overwhelmingly zero, so this keeps the exact arithmetic cheap
// without changing any observable result.

#include "pd/rat.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pd {

struct DimensionError : std::invalid_argument {
  DimensionError(const std::string& op, std::size_t ar, std::size_t ac, std::size_t br,
                 std::size_t bc);
  std::string op;
};

struct NotIdempotentError : std::runtime_error {
  explicit NotIdempotentError(std::string residual);
  std::string residual;  // max |numerator| of e*e - e
};

class Mat {
 public:
  using Entry = std::pair<std::uint32_t, Rat>;
  using Row = std::vector<Entry>;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_dense(const std::vector<std::vector<Rat>>& rows, std::size_t cols = 0);
  static Mat from_ints(const std::vector<std::vector<long>>& rows);
  static Mat scalar(const Rat& s);  // 1x1
  // Rows must be sorted by column with no duplicates; zeros are dropped.
  static Mat from_rows(std::size_t cols, std::vector<Row> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_[r]; }
  Row& row_mut(std::size_t r) { return rows_[r]; }

  Rat at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& v);
  std::size_t nnz() const;
  bool is_zero() const;
  std::vector<std::vector<Rat>> to_dense() const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

enum class MatOp { add, compose, kron, direct_sum, scalar_mul };

// Dispatcher over the binary combinators.  For scalar_mul, `a` must be 1x1.
Mat mat_ops(const Mat& a, const Mat& b, MatOp op);

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Mat& a, const Rat& s);
Mat compose(const Mat& a, const Mat& b);  // a after b, i.e. the product a*b
Mat kron(const Mat& a, const Mat& b);     // e_x (x) f_y has index x*dim(f)+y
Mat direct_sum(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
// (f (x) g) * m without materializing the Kronecker product.
Mat kron_apply(const Mat& f, const Mat& g, const Mat& m);
// Rows of m selected by `idx`, in that order.
Mat select_rows(const Mat& m, const std::vector<std::uint32_t>& idx);

// Max absolute numerator over the entries of a - b, as decimal text.
// "0" iff a == b.  Shape mismatch throws DimensionError.
std::string residual(const Mat& a, const Mat& b);

// Reduced row echelon form of the row space (nonzero rows only).
struct Echelon {
  std::vector<Mat::Row> rows;
  std::vector<std::uint32_t> pivots;  // strictly increasing
};
Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

// Split an idempotent e = i*p with p*i = 1.  The columns of i form the reduced
// column-echelon basis of the image of e (leading 1 in the topmost nonzero
// row); `pivots` lists those leading rows, and p is the corresponding rows of e.
struct Split {
  Mat i;
  Mat p;
  std::vector<std::uint32_t> pivots;
};
Split split_idempotent(const Mat& e);

}  // namespace pd
