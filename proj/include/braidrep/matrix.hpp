#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidrep/galgebra.hpp"
#include "braidrep/laurent.hpp"
#include "braidrep/words.hpp"

namespace braidrep {

/// The module basis a representation matrix is written in.
struct Basis {
  enum class Kind : std::uint8_t { None, Delta, AugIdeal, Iterated };
  Kind kind = Kind::None;
  int level = 0;

  static Basis delta() { return {Kind::Delta, 1}; }
  static Basis aug_ideal() { return {Kind::AugIdeal, 1}; }
  static Basis iterated(int r) { return {Kind::Iterated, r}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Delta:
        return "delta";
      case Kind::AugIdeal:
        return "aug-ideal";
      case Kind::Iterated:
        return "iterated-" + std::to_string(level);
      case Kind::None:
        break;
    }
    return "none";
  }
  static Basis parse(const std::string& s) {
    if (s == "delta") return delta();
    if (s == "aug-ideal") return aug_ideal();
    if (s == "none") return {};
    if (s.rfind("iterated-", 0) == 0) return iterated(std::stoi(s.substr(9)));
    throw Error("unknown basis tag '" + s + "'");
  }

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// Dense square matrix over a (possibly noncommutative) ring.  Row l holds the
/// coefficients of the image of basis vector l, so a word maps to the product
/// of its letters' matrices in word order.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int size, const T& fill, Basis basis = {})
      : size_(size), basis_(basis), data_(static_cast<std::size_t>(size) * size, fill) {}

  static Matrix identity(int size, const T& one, const T& zero, Basis basis = {}) {
    Matrix m(size, zero, basis);
    for (int k = 0; k < size; ++k) m(k, k) = one;
    return m;
  }

  int size() const { return size_; }
  const Basis& basis() const { return basis_; }
  void set_basis(Basis b) { basis_ = b; }

  // 0-based access.
  T& operator()(int r, int c) { return data_.at(static_cast<std::size_t>(r) * size_ + c); }
  const T& operator()(int r, int c) const { return data_.at(static_cast<std::size_t>(r) * size_ + c); }

  template <typename F>
  auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> out(size_, U{}, basis_);
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) out(r, c) = f((*this)(r, c));
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_compatible(b);
    Matrix out = a;
    for (int r = 0; r < a.size_; ++r) {
      for (int c = 0; c < a.size_; ++c) {
        T acc = zero_like(a(r, 0));
        for (int k = 0; k < a.size_; ++k) {
          const T& x = a(r, k);
          const T& y = b(k, c);
          if (is_zero_entry(x) || is_zero_entry(y)) continue;
          acc += x * y;
        }
        out(r, c) = std::move(acc);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.size_ == b.size_ && a.basis_ == b.basis_ && a.data_ == b.data_;
  }

  /// First (row, col) where the entries differ, 0-based.
  std::optional<std::pair<int, int>> first_difference(const Matrix& o) const {
    check_compatible(o);
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) {
        if (!((*this)(r, c) == o(r, c))) return std::pair{r, c};
      }
    }
    return std::nullopt;
  }

  bool is_identity() const {
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) {
        const T& x = (*this)(r, c);
        if (!(x == (r == c ? one_like(x) : zero_like(x)))) return false;
      }
    }
    return true;
  }

  /// Aligned text grid.
  std::string to_string() const {
    std::vector<std::string> cells(data_.size());
    std::vector<std::size_t> width(size_, 1);
    for (int r = 0; r < size_; ++r) {
      for (int c = 0; c < size_; ++c) {
        cells[r * size_ + c] = render((*this)(r, c));
        width[c] = std::max(width[c], cells[r * size_ + c].size());
      }
    }
    std::ostringstream os;
    for (int r = 0; r < size_; ++r) {
      os << "[ ";
      for (int c = 0; c < size_; ++c) {
        const auto& s = cells[r * size_ + c];
        os << s << std::string(width[c] - s.size(), ' ') << (c + 1 < size_ ? "  " : " ");
      }
      os << "]\n";
    }
    return os.str();
  }

 private:
  static bool is_zero_entry(const T& x) { return x.is_zero(); }

  void check_compatible(const Matrix& o) const {
    if (size_ != o.size_) throw Error("matrix size mismatch");
    if (!(basis_ == o.basis_)) throw Error("matrix basis mismatch: " + basis_.to_string() + " vs " + o.basis_.to_string());
  }

  int size_ = 0;
  Basis basis_;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using AlgebraMatrix = Matrix<AlgebraElement>;

inline PolyMatrix poly_identity(int size, Basis basis = {}) {
  return PolyMatrix::identity(size, LaurentPoly(1), LaurentPoly(), basis);
}

inline AlgebraMatrix algebra_identity(const Ambient& amb, int size, Basis basis = {}) {
  return AlgebraMatrix::identity(size, AlgebraElement::one(amb), AlgebraElement::zero(amb), basis);
}

/// Kronecker product, left factor varying slowest.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b, Basis basis = {}) {
  const int n = a.size() * b.size();
  Matrix<T> out(n, zero_like(a(0, 0)), basis);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.size(); ++k) {
        for (int l = 0; l < b.size(); ++l) out(i * b.size() + k, j * b.size() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

/// Principal submatrix after deleting the given 1-based indices from rows and columns.
template <typename T>
Matrix<T> delete_rows_cols(const Matrix<T>& a, const std::set<int>& drop) {
  for (int d : drop) {
    if (d < 1 || d > a.size()) throw Error("deleted index " + std::to_string(d) + " out of range");
  }
  std::vector<int> keep;
  for (int k = 1; k <= a.size(); ++k) {
    if (!drop.count(k)) keep.push_back(k - 1);
  }
  const int n = static_cast<int>(keep.size());
  Matrix<T> out(n, zero_like(a(0, 0)), a.basis());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out(r, c) = a(keep[r], keep[c]);
  }
  return out;
}

/// Two-sided inverse by Gauss-Jordan elimination with unit pivots.  Row
/// operations multiply from the left, so this is valid over noncommutative
/// rings.  Throws when no unit pivot is available in some column.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  const int n = m.size();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n, one_like(m(0, 0)), zero_like(m(0, 0)), m.basis());
  auto swap_rows = [n](Matrix<T>& x, int r1, int r2) {
    for (int c = 0; c < n; ++c) std::swap(x(r1, c), x(r2, c));
  };
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a(r, col).is_unit()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("matrix has no unit pivot in column " + std::to_string(col + 1));
    swap_rows(a, col, pivot);
    swap_rows(inv, col, pivot);
    const T p = a(col, col).unit_inverse();
    for (int c = 0; c < n; ++c) {
      if (!a(col, c).is_zero()) a(col, c) = p * a(col, c);
      if (!inv(col, c).is_zero()) inv(col, c) = p * inv(col, c);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const T f = a(r, col);
      for (int c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

/// Exact determinant over the commutative Laurent ring, by dynamic programming
/// over the set of columns already used (no division).  Only reachable column
/// sets are stored, so sparse matrices of size up to 32 stay cheap.
inline LaurentPoly determinant(const PolyMatrix& m) {
  const int n = m.size();
  if (n > 32) throw Error("determinant: matrix too large");
  std::map<std::uint32_t, LaurentPoly> layer{{0u, LaurentPoly(1)}};
  for (int row = 0; row < n; ++row) {
    std::map<std::uint32_t, LaurentPoly> next;
    for (const auto& [mask, value] : layer) {
      int above = 0;  // used columns to the right of c decide the sign
      for (int c = n - 1; c >= 0; --c) {
        if (mask & (1u << c)) {
          ++above;
          continue;
        }
        const LaurentPoly& x = m(row, c);
        if (x.is_zero()) continue;
        LaurentPoly term = value * x;
        if (above % 2) term = -term;
        auto& slot = next[mask | (1u << c)];
        slot += term;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    layer = std::move(next);
    if (layer.empty()) return {};
  }
  return layer.begin()->second;
}

template <typename T>
Matrix<T> substitute(const Matrix<T>& m, const Bindings& b) {
  if (b.empty()) return m;
  return m.map([&](const T& x) { return substitute(x, b); });
}

}  // namespace braidrep
