#ifndef TORIC_LINALG_HPP
#define TORIC_LINALG_HPP

// Exact dense linear algebra over integral domains and fields. Everything here is a
// free function template on the scalar; callers use Integer or Rational.

#include "toric/exact.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace toric {

/// Rank by fraction-free (Bareiss) elimination. Every division is exact, so the
/// scalar only needs to be an integral domain.
template <typename Scalar>
Eigen::Index bareiss_rank(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar prev_pivot(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (m(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));
    const Scalar pivot = m(rank, col);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - m(i, col) * m(rank, j)) / prev_pivot;
      }
      m(i, col) = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

/// Scales each row by the lcm of its denominators, giving an integer matrix with the
/// same row space.
inline IntMatrix clear_denominators(const ExactMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer scale(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      scale = boost::multiprecision::lcm(scale, Integer(boost::multiprecision::denominator(m(i, j))));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Rational scaled = m(i, j) * Rational(scale);
      out(i, j) = boost::multiprecision::numerator(scaled);
    }
  }
  return out;
}

/// Exact rank over Q: denominators are cleared row-wise, then integer Bareiss.
inline Eigen::Index exact_rank(const ExactMatrix& m) { return bareiss_rank<Integer>(clear_denominators(m)); }

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, all positive.
template <typename Scalar>
std::vector<Scalar> smith_invariants(Matrix<Scalar> m) {
  using std::swap;
  std::vector<Scalar> result;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pr = -1;
      Eigen::Index pc = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) return result;
      m.row(pr).swap(m.row(t));
      m.col(pc).swap(m.col(t));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const Scalar q = m(i, t) / m(t, t);
        if (q != 0) m.row(i) -= q * m.row(t);
        if (m(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const Scalar q = m(t, j) / m(t, t);
        if (q != 0) m.col(j) -= q * m.col(t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            m.row(t) += m.row(i);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    result.push_back(abs(m(t, t)));
  }
  return result;
}

/// Z-basis of {x in Z^c : m x = 0}, returned as the columns of the result. Uses
/// unimodular column operations built from extended gcds.
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
  IntMatrix m = a;
  const Eigen::Index cols = m.cols();
  IntMatrix u = IntMatrix::Identity(cols, cols);
  Eigen::Index pivot = 0;
  for (Eigen::Index row = 0; row < m.rows() && pivot < cols; ++row) {
    for (Eigen::Index c = pivot + 1; c < cols; ++c) {
      if (m(row, c) == 0) continue;
      const Integer p = m(row, pivot);
      const Integer q = m(row, c);
      Integer x;
      Integer y;
      const Integer g = extended_gcd(p, q, x, y);
      const Integer pg = p / g;
      const Integer qg = q / g;
      // [col_pivot col_c] * [[x, -qg], [y, pg]], determinant 1.
      IntVector mp = m.col(pivot) * x + m.col(c) * y;
      IntVector mc = m.col(c) * pg - m.col(pivot) * qg;
      m.col(pivot) = mp;
      m.col(c) = mc;
      IntVector up = u.col(pivot) * x + u.col(c) * y;
      IntVector uc = u.col(c) * pg - u.col(pivot) * qg;
      u.col(pivot) = up;
      u.col(c) = uc;
    }
    if (m(row, pivot) != 0) ++pivot;
  }
  return u.rightCols(cols - pivot);
}

/// Solves m x = b over a field by Gauss-Jordan elimination. Free variables are set to
/// zero. Returns nullopt when the system is inconsistent; `rank` receives rank(m).
template <typename Scalar>
std::optional<Vector<Scalar>> solve_exact(Matrix<Scalar> m, Vector<Scalar> b, Eigen::Index* rank = nullptr) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, col) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    m.row(pr).swap(m.row(r));
    std::swap(b(pr), b(r));
    const Scalar inv = Scalar(1) / m(r, col);
    m.row(r) *= inv;
    b(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      m.row(i) -= f * m.row(r);
      b(i) -= f * b(r);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  if (rank != nullptr) *rank = r;
  for (Eigen::Index i = r; i < rows; ++i) {
    if (b(i) != 0) return std::nullopt;
  }
  Vector<Scalar> x = Vector<Scalar>::Zero(cols);
  for (Eigen::Index i = 0; i < r; ++i) x(pivot_cols[static_cast<std::size_t>(i)]) = b(i);
  return x;
}

/// Thrown by lp_minimize when the objective is unbounded below.
struct LpUnbounded : std::runtime_error {
  LpUnbounded() : std::runtime_error("linear program is unbounded") {}
};

/// Exact two-phase simplex with Bland's rule: minimize c.x subject to a x = b, x >= 0.
/// Returns an optimal vertex, or nullopt when infeasible.
template <typename Scalar>
std::optional<Vector<Scalar>> lp_minimize(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                                          const Vector<Scalar>& c) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index n = a.cols();
  // Tableau columns: n structural, rows artificial, then rhs.
  Matrix<Scalar> tab = Matrix<Scalar>::Zero(rows, n + rows + 1);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const bool flip = b(i) < 0;
    for (Eigen::Index j = 0; j < n; ++j) tab(i, j) = flip ? Scalar(-a(i, j)) : a(i, j);
    tab(i, n + i) = 1;
    tab(i, n + rows) = flip ? Scalar(-b(i)) : b(i);
  }
  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = n + i;
  std::vector<bool> active(static_cast<std::size_t>(rows), true);

  auto pivot_on = [&](Eigen::Index pr, Eigen::Index pc) {
    const Scalar inv = Scalar(1) / tab(pr, pc);
    tab.row(pr) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pr || !active[static_cast<std::size_t>(i)] || tab(i, pc) == 0) continue;
      const Scalar f = tab(i, pc);
      tab.row(i) -= f * tab.row(pr);
    }
    basis[static_cast<std::size_t>(pr)] = pc;
  };

  // Runs simplex iterations for the cost vector over the allowed columns.
  auto run = [&](const Vector<Scalar>& cost, Eigen::Index allowed_cols) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed_cols && enter < 0; ++j) {
        Scalar reduced = cost(j);
        for (Eigen::Index i = 0; i < rows; ++i) {
          if (active[static_cast<std::size_t>(i)] && tab(i, j) != 0) {
            reduced -= cost(basis[static_cast<std::size_t>(i)]) * tab(i, j);
          }
        }
        if (reduced < 0) enter = j;
      }
      if (enter < 0) return;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index i = 0; i < rows; ++i) {
        if (!active[static_cast<std::size_t>(i)] || tab(i, enter) <= 0) continue;
        const Scalar ratio = tab(i, n + rows) / tab(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw LpUnbounded();
      pivot_on(leave, enter);
    }
  };

  Vector<Scalar> phase1 = Vector<Scalar>::Zero(n + rows);
  for (Eigen::Index i = 0; i < rows; ++i) phase1(n + i) = 1;
  run(phase1, n + rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (basis[static_cast<std::size_t>(i)] >= n && tab(i, n + rows) != 0) return std::nullopt;
  }
  // Drive zero-level artificials out of the basis; rows that cannot be pivoted are redundant.
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (basis[static_cast<std::size_t>(i)] < n) continue;
    Eigen::Index col = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (tab(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      pivot_on(i, col);
    } else {
      active[static_cast<std::size_t>(i)] = false;
    }
  }
  Vector<Scalar> phase2 = Vector<Scalar>::Zero(n + rows);
  phase2.head(n) = c;
  run(phase2, n);

  Vector<Scalar> x = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (active[static_cast<std::size_t>(i)] && basis[static_cast<std::size_t>(i)] < n) {
      x(basis[static_cast<std::size_t>(i)]) = tab(i, n + rows);
    }
  }
  return x;
}

/// Feasibility of {x >= 0 : a x = b}.
template <typename Scalar>
bool lp_feasible(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  return lp_minimize<Scalar>(a, b, Vector<Scalar>::Zero(a.cols())).has_value();
}

}  // namespace toric

#endif  // TORIC_LINALG_HPP
