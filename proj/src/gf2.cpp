#include "gridhom/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gridhom::gf2 {

namespace {

// Below this many words of work per pivot the thread fan-out costs more than
// the row updates.
constexpr std::size_t kParallelWords = 1 << 12;

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from) noexcept {
  for (std::size_t w = from; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Shared elimination loop. With full_reduce the pivot column is also cleared
// above the pivot row, producing the reduced form.
std::size_t eliminate(Matrix& m, bool full_reduce, std::vector<std::size_t>* pivots) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    const std::size_t w = c / kWordBits;
    const Word bit = Word{1} << (c % kWordBits);
    std::size_t p = rank;
    while (p < nrows && !(m.row(p)[w] & bit)) ++p;
    if (p == nrows) continue;
    if (p != rank) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(rank).begin());
    const auto pivot = m.row(rank);
    const std::size_t begin = full_reduce ? 0 : rank + 1;
    const auto count = static_cast<long long>(nrows - begin);
    [[maybe_unused]] const bool wide = static_cast<std::size_t>(count) * (m.stride() - w) > kParallelWords;
#pragma omp parallel for schedule(static) if (wide)
    for (long long i = 0; i < count; ++i) {
      const auto r = begin + static_cast<std::size_t>(i);
      if (r == rank) continue;
      auto row = m.row(r);
      if (row[w] & bit) xor_words(row, pivot, w);
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

}  // namespace

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::count() const noexcept {
  std::size_t c = 0;
  for (const Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::highest() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w]) return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
  }
  return npos;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (Word x = words_[w]; x; x &= x - 1) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
    }
  }
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

Matrix Matrix::from_columns(std::size_t rows, std::size_t cols, std::span<const std::vector<std::uint32_t>> columns) {
  if (columns.size() != cols) throw std::invalid_argument("Matrix::from_columns: column count mismatch");
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto r : columns[c]) {
      if (r >= rows) throw std::out_of_range("Matrix::from_columns: row index out of range");
      m.flip(r, c);
    }
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector Matrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      for (Word x = rw[w]; x; x &= x - 1) t.set(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)), r);
    }
  }
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t rank(Matrix m) { return eliminate(m, false, nullptr); }

RowEchelon rref(Matrix m) {
  RowEchelon out;
  eliminate(m, true, &out.pivot_columns);
  out.reduced = std::move(m);
  return out;
}

std::vector<BitVector> kernel_basis(const Matrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<BitVector> basis;
  basis.reserve(m.cols() - e.pivot_columns.size());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      if (e.reduced.get(i, f)) v.set(e.pivot_columns[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("gf2::multiply: dimension mismatch");
  Matrix out(a.rows(), b.cols());
  const auto nrows = static_cast<long long>(a.rows());
  [[maybe_unused]] const bool wide = a.rows() * b.stride() * a.cols() > kParallelWords * 16;
#pragma omp parallel for schedule(static) if (wide)
  for (long long i = 0; i < nrows; ++i) {
    const auto r = static_cast<std::size_t>(i);
    auto dst = out.row(r);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(r, k)) xor_words(dst, b.row(k), 0);
    }
  }
  return out;
}

BitVector apply(const Matrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("gf2::apply: dimension mismatch");
  BitVector out(m.rows());
  const auto vw = v.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto rw = m.row(r);
    Word acc = 0;
    for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

bool XorBasis::insert(BitVector v, int tag) {
  reduce(v, nullptr);
  const auto lead = v.highest();
  if (lead == npos) return false;
  slot_of_lead_[lead] = static_cast<int>(vectors_.size());
  vectors_.push_back(std::move(v));
  tags_.push_back(tag);
  return true;
}

void XorBasis::reduce(BitVector& v, BitVector* tags) const {
  if (v.size() != bits_) throw std::invalid_argument("XorBasis::reduce: length mismatch");
  for (auto lead = v.highest(); lead != npos; lead = v.highest()) {
    const int slot = slot_of_lead_[lead];
    if (slot < 0) return;
    v ^= vectors_[static_cast<std::size_t>(slot)];
    const int t = tags_[static_cast<std::size_t>(slot)];
    if (tags && t >= 0) tags->flip(static_cast<std::size_t>(t));
  }
}

bool XorBasis::contains(BitVector v) const {
  reduce(v, nullptr);
  return v.none();
}

}  // namespace gridhom::gf2
