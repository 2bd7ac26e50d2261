#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Dense bit-packed linear algebra over the two-element field. These are the
// hot kernels of the homology computation; the row updates in elimination are
// OpenMP-parallel when the library is built with it. gridhom::reference holds
// the serial sparse implementation the tests compare against.
namespace gridhom::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  BitVector& operator^=(const BitVector& other) noexcept;

  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  std::size_t count() const noexcept;
  // Index of the highest set bit, or npos.
  std::size_t highest() const noexcept;
  std::vector<std::size_t> ones() const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

// Row-major dense matrix. Row r is a bit-packed vector over the columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  // columns[j] lists the row indices of the nonzero entries of column j;
  // repeated indices cancel.
  static Matrix from_columns(std::size_t rows, std::size_t cols, std::span<const std::vector<std::uint32_t>> columns);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  bool get(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / kWordBits] |= Word{1} << (c % kWordBits); }
  void flip(std::size_t r, std::size_t c) noexcept { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

  BitVector column(std::size_t c) const;
  Matrix transposed() const;
  bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

// Forward elimination with column pivoting; m is consumed.
std::size_t rank(Matrix m);

struct RowEchelon {
  Matrix reduced;                         // reduced row echelon form
  std::vector<std::size_t> pivot_columns;  // pivot column of rows 0..rank-1
};
RowEchelon rref(Matrix m);

// Basis of the null space {v : m v = 0}, as vectors of length m.cols().
std::vector<BitVector> kernel_basis(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
BitVector apply(const Matrix& m, const BitVector& v);

// Incrementally built basis of a subspace with distinct leading (highest) bits.
// Each stored vector may carry a tag; reduction reports which tags were used,
// which is how homology coordinates of a cycle are read off.
class XorBasis {
 public:
  explicit XorBasis(std::size_t bits) : bits_(bits), slot_of_lead_(bits, -1) {}

  // Reduces v; inserts the remainder if nonzero and returns true.
  bool insert(BitVector v, int tag = -1);

  // Reduces v in place against the basis. When tags is non-null, tag t of
  // every basis vector used is toggled in (*tags)[t].
  void reduce(BitVector& v, BitVector* tags = nullptr) const;

  bool contains(BitVector v) const;
  std::size_t size() const noexcept { return vectors_.size(); }
  const BitVector& vector(std::size_t i) const { return vectors_[i]; }

 private:
  std::size_t bits_;
  std::vector<BitVector> vectors_;
  std::vector<int> tags_;
  std::vector<int> slot_of_lead_;
};

}  // namespace gridhom::gf2
