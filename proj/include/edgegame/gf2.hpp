#pragma once

// Dense linear algebra over GF(2). Rows are bit-packed into 64-bit words.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgegame/errors.hpp"

namespace edgegame::gf2 {

class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

  /// Parses a string of '0'/'1' characters; coordinate i is character i.
  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        v.set(i);
      } else if (bits[i] != '0') {
        throw InputError("bit string may only contain '0' and '1': \"" + std::string(bits) + "\"");
      }
    }
    return v;
  }

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  BitVector& operator^=(const BitVector& other) {
    require_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// Inner product: parity of the common support.
  bool dot(const BitVector& other) const {
    require_same_size(other);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= size_) return size_;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (cur != 0) return std::min(size_, w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
      if (++w == words_.size()) return size_;
      cur = words_[w];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  /// Concatenation [this | tail].
  BitVector concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    for (std::size_t i = find_first(); i < size_; i = find_next(i + 1)) out.set(i);
    for (std::size_t i = tail.find_first(); i < tail.size_; i = tail.find_next(i + 1)) out.set(size_ + i);
    return out;
  }

  BitVector slice(std::size_t begin, std::size_t length) const {
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i)
      if (get(begin + i)) out.set(i);
    return out;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Lexicographic order of the 0/1 strings.
  friend bool operator<(const BitVector& a, const BitVector& b) {
    const std::size_t n = std::min(a.size_, b.size_);
    for (std::size_t i = 0; i < n; ++i)
      if (a.get(i) != b.get(i)) return b.get(i);
    return a.size_ < b.size_;
  }

 private:
  void require_same_size(const BitVector& other) const {
    if (other.size_ != size_)
      throw InputError("GF(2) vector length mismatch: " + std::to_string(size_) + " vs " + std::to_string(other.size_));
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
    return m;
  }

  static BitMatrix from_strings(const std::vector<std::string>& rows, std::size_t cols) {
    BitMatrix m(cols);
    for (const auto& r : rows) m.push_row(BitVector::from_string(r));
    return m;
  }

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  void push_row(BitVector v) {
    if (v.size() != cols_)
      throw InputError("row of length " + std::to_string(v.size()) + " pushed into matrix with " +
                       std::to_string(cols_) + " columns");
    rows_.push_back(std::move(v));
  }

  BitMatrix without_row(std::size_t skip) const {
    BitMatrix m(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != skip) m.rows_.push_back(rows_[i]);
    return m;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = rows_[r].find_first(); c < cols_; c = rows_[r].find_next(c + 1)) t.rows_[c].set(r);
    return t;
  }

  /// Row i of the result is the image of row i under v -> (<v, other.row(j)>)_j.
  BitMatrix times_transpose(const BitMatrix& other) const {
    if (other.cols_ != cols_) throw InputError("matrix product column mismatch");
    BitMatrix out(rows_.size(), other.row_count());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < other.row_count(); ++j)
        if (rows_[i].dot(other.rows_[j])) out.rows_[i].set(j);
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& r : rows_) {
      s += r.to_string();
      s += '\n';
    }
    return s;
  }

  void append_rows(const BitMatrix& other) {
    if (other.cols_ != cols_)
      throw InputError("cannot stack matrices with " + std::to_string(cols_) + " and " +
                       std::to_string(other.cols_) + " columns");
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  }

  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Vertical stack [a; b].
inline BitMatrix stack(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix m = a;
  m.append_rows(b);
  return m;
}

struct Echelon {
  BitMatrix matrix;                 // reduced rows, zero rows dropped
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Reduced row echelon form. Pivots are taken column by column from the left,
/// choosing the lowest remaining row with a one, so the output is canonical.
inline Echelon rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m.col_count() && top < rows.size(); ++col) {
    std::size_t pick = top;
    while (pick < rows.size() && !rows[pick].get(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[top], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != top && rows[r].get(col)) rows[r] ^= rows[top];
    pivots.push_back(col);
    ++top;
  }
  Echelon out{BitMatrix(m.col_count()), std::move(pivots)};
  for (std::size_t r = 0; r < top; ++r) out.matrix.push_row(std::move(rows[r]));
  return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

/// Basis of { v : m v = 0 }, one vector per free column, in increasing free-column order.
inline BitMatrix kernel_basis(const BitMatrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.col_count();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  BitMatrix basis(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(n);
    v.set(free);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (e.matrix.get(r, free)) v.set(e.pivots[r]);
    basis.push_row(std::move(v));
  }
  return basis;
}

inline std::size_t row_space_sum_dim(const BitMatrix& a, const BitMatrix& b) { return rank(stack(a, b)); }

/// Basis of rowspace(a) ∩ rowspace(b), returned in reduced echelon form.
/// Zassenhaus: reduce [a|a ; b|0]; rows whose left half vanishes carry the intersection on the right.
inline BitMatrix row_space_intersection_basis(const BitMatrix& a, const BitMatrix& b) {
  const std::size_t n = a.col_count();
  if (b.col_count() != n)
    throw InputError("row space intersection needs equal column counts (" + std::to_string(n) + " vs " +
                     std::to_string(b.col_count()) + ")");
  BitMatrix joint(2 * n);
  for (const auto& r : a.rows()) joint.push_row(r.concat(r));
  for (const auto& r : b.rows()) joint.push_row(r.concat(BitVector(n)));
  const Echelon e = rref(joint);
  BitMatrix meet(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (e.pivots[r] >= n) meet.push_row(e.matrix.row(r).slice(n, n));
  return rref(meet).matrix;
}

inline bool in_row_space(const BitMatrix& a, const BitVector& v) {
  if (v.size() != a.col_count())
    throw InputError("membership test: vector length " + std::to_string(v.size()) + " vs " +
                     std::to_string(a.col_count()) + " columns");
  const Echelon e = rref(a);
  BitVector rest = v;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    if (rest.get(e.pivots[r])) rest ^= e.matrix.row(r);
  return rest.none();
}

/// True iff every row of `sub` lies in the row space of `sup`.
inline bool row_space_contains(const BitMatrix& sup, const BitMatrix& sub) {
  const Echelon e = rref(sup);
  for (const auto& v : sub.rows()) {
    BitVector rest = v;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (rest.get(e.pivots[r])) rest ^= e.matrix.row(r);
    if (rest.any()) return false;
  }
  return true;
}

inline bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  return rref(a).matrix == rref(b).matrix;
}

}  // namespace edgegame::gf2
