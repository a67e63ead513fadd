#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "surgcalc/presentation.hpp"

namespace surgcalc {

using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix over an exact integer type.
template <typename T>
class MatrixT {
 public:
  MatrixT() = default;
  MatrixT(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  static MatrixT identity(std::size_t n) {
    MatrixT m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const MatrixT& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  MatrixT operator*(const MatrixT& o) const {
    MatrixT r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += q * (*this)(j, c);
  }
  void add_col(std::size_t i, std::size_t j, const T& q) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += q * (*this)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = MatrixT<Int>;

template <typename T>
struct SmithFormT {
  MatrixT<T> d;                     // diagonal, nonnegative, divisibility chain
  MatrixT<T> u;                     // unimodular, rows x rows
  MatrixT<T> v;                     // unimodular, cols x cols
  std::vector<T> invariant_factors; // min(rows, cols) entries, zeros last
};

using SmithForm = SmithFormT<Int>;

namespace detail {
template <typename T>
T abs_val(const T& x) {
  return x < 0 ? T(-x) : x;
}
}  // namespace detail

/// Smith normal form with transforms: u * a * v == d. Deterministic: the
/// pivot is the smallest nonzero absolute value, ties broken row-major.
/// Set WithTransforms=false to skip u/v bookkeeping (factors only).
template <typename T, bool WithTransforms = true>
SmithFormT<T> smith_normal_form_t(const MatrixT<T>& a) {
  SmithFormT<T> s;
  s.d = a;
  if constexpr (WithTransforms) {
    s.u = MatrixT<T>::identity(a.rows());
    s.v = MatrixT<T>::identity(a.cols());
  }
  MatrixT<T>& d = s.d;
  const std::size_t n = a.rows(), m = a.cols();

  for (std::size_t t = 0; t < n && t < m; ++t) {
  restart:
    // pivot: smallest |entry| != 0 in the trailing submatrix
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < m; ++j) {
        if (d(i, j) == 0) continue;
        if (!found || detail::abs_val(d(i, j)) < detail::abs_val(d(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) {
      d.swap_rows(t, pi);
      if constexpr (WithTransforms) s.u.swap_rows(t, pi);
    }
    if (pj != t) {
      d.swap_cols(t, pj);
      if constexpr (WithTransforms) s.v.swap_cols(t, pj);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if constexpr (WithTransforms) s.u.negate_row(t);
    }
    // clear column and row t; restart pivot search if a smaller residue shows up
    for (std::size_t i = t + 1; i < n; ++i) {
      if (d(i, t) == 0) continue;
      T q = d(i, t) / d(t, t);
      if (q != 0) {
        d.add_row(i, t, -q);
        if constexpr (WithTransforms) s.u.add_row(i, t, -q);
      }
      if (d(i, t) != 0) goto restart;
    }
    for (std::size_t j = t + 1; j < m; ++j) {
      if (d(t, j) == 0) continue;
      T q = d(t, j) / d(t, t);
      if (q != 0) {
        d.add_col(j, t, -q);
        if constexpr (WithTransforms) s.v.add_col(j, t, -q);
      }
      if (d(t, j) != 0) goto restart;
    }
    // divisibility: pivot must divide every remaining entry
    for (std::size_t i = t + 1; i < n; ++i)
      for (std::size_t j = t + 1; j < m; ++j)
        if (d(i, j) % d(t, t) != 0) {
          d.add_row(t, i, T(1));
          if constexpr (WithTransforms) s.u.add_row(t, i, T(1));
          goto restart;
        }
  }

  for (std::size_t t = 0; t < n && t < m; ++t)
    s.invariant_factors.push_back(d(t, t));
  return s;
}

inline SmithForm smith_normal_form(const IntMatrix& a) {
  return smith_normal_form_t<Int, true>(a);
}

/// Number of nonzero invariant factors.
template <typename T>
std::size_t rank_of(const MatrixT<T>& a) {
  auto s = smith_normal_form_t<T, false>(a);
  std::size_t r = 0;
  for (const T& f : s.invariant_factors)
    if (f != 0) ++r;
  return r;
}

inline std::size_t rank(const IntMatrix& a) { return rank_of(a); }

/// Entry (i, j) = exponent sum of generator i in relator j.
inline IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix m(p.generator_count(), p.relator_count());
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    const Word& r = p.relators()[j];
    for (std::size_t l = 0; l < r.size(); ++l)
      m(r.gen_at(l), j) += r.sign_at(l);
  }
  return m;
}

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank + Z/t_1 + ... with t_i | t_{i+1}, all t_i >= 2.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Group order; 0 means infinite.
  Int order() const {
    if (free_rank > 0) return 0;
    Int n = 1;
    for (const Int& t : torsion) n *= t;
    return n;
  }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < free_rank; ++i) s += s.empty() ? "Z" : " + Z";
    for (const Int& t : torsion)
      s += (s.empty() ? "Z/" : " + Z/") + t.str();
    return s.empty() ? "0" : s;
  }
};

inline AbelianInvariants abelian_invariants_of_matrix(const IntMatrix& m) {
  AbelianInvariants ai;
  auto s = smith_normal_form_t<Int, false>(m);
  std::size_t r = 0;
  for (const Int& f : s.invariant_factors) {
    if (f == 0) continue;
    ++r;
    if (f > 1) ai.torsion.push_back(f);
  }
  ai.free_rank = m.rows() - r;
  return ai;
}

/// H_1 of the presented group: cokernel of the exponent matrix.
inline AbelianInvariants abelian_invariants(const GroupPresentation& p) {
  return abelian_invariants_of_matrix(exponent_matrix(p));
}

/// True iff the exponent matrix has rank equal to the relator count.
inline bool is_dual_finite_torsion(const GroupPresentation& p) {
  return rank(exponent_matrix(p)) == p.relator_count();
}

/// True iff v lies in the integer column lattice of a (i.e. the element v
/// vanishes in coker(a)); decided through the Smith form.
inline bool in_column_lattice(const IntMatrix& a, const std::vector<Int>& v) {
  auto s = smith_normal_form(a);
  // solve d * y = u * v
  std::vector<Int> uv(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) uv[i] += s.u(i, k) * v[k];
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int di = i < std::min(a.rows(), a.cols()) ? s.d(i, i) : Int(0);
    if (di == 0) {
      if (uv[i] != 0) return false;
    } else if (uv[i] % di != 0) {
      return false;
    }
  }
  return true;
}

/// True iff the class of v has finite order in coker(a).
inline bool finite_order_in_cokernel(const IntMatrix& a, const std::vector<Int>& v) {
  IntMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = v[i];
  }
  return abelian_invariants_of_matrix(aug).free_rank ==
         abelian_invariants_of_matrix(a).free_rank;
}

inline std::vector<Int> exponent_vector(const Word& w, std::size_t ngens) {
  std::vector<Int> v(ngens, 0);
  for (std::size_t l = 0; l < w.size(); ++l) v[w.gen_at(l)] += w.sign_at(l);
  return v;
}

}  // namespace surgcalc
