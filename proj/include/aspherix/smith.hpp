#pragma once

#include "aspherix/dense_matrix.hpp"
#include "aspherix/errors.hpp"
#include "aspherix/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace aspherix {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::vector<Integer> divisors;  // min(rows, cols) diagonal entries, zeros trail

  [[nodiscard]] std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(divisors.begin(), divisors.end(), [](Integer const& d) { return d != 0; }));
  }
};

namespace detail {

// Elementary operations applied to D together with the transform they act on.
struct SmithState {
  IntMatrix D, U, V;

  void swap_rows(std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, Integer const& q) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(dst, j) += q * D(src, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(dst, j) += q * U(src, j);
  }
  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, Integer const& q) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, dst) += q * D(i, src);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, dst) += q * V(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }

  // Smallest nonzero |D(i, j)| over i, j >= t; ties go to the first in row-major order.
  [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Integer a = abs(D(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = std::move(a);
        }
      }
    return best;
  }
};

}  // namespace detail

/// Smith normal form with transforms. Deterministic for a fixed input.
inline SmithDecomposition snf(IntMatrix const& A) {
  std::size_t const m = A.rows(), n = A.cols();
  detail::SmithState s{A, identity_matrix<Integer>(m), identity_matrix<Integer>(n)};
  std::size_t const steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      auto piv = s.pivot(t);
      if (!piv) {
        exhausted = true;
        break;
      }
      s.swap_rows(t, piv->first);
      s.swap_cols(t, piv->second);
      Integer const p = s.D(t, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.D(i, t) == 0) continue;
        Integer q = s.D(i, t) / p;
        if (q != 0) s.add_row(i, t, -q);
        if (s.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.D(t, j) == 0) continue;
        Integer q = s.D(t, j) / p;
        if (q != 0) s.add_col(j, t, -q);
        if (s.D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold an offending row in.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s.D(i, j) % p != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row(t, *offending, Integer(1));
    }
    if (exhausted) break;
    if (s.D(t, t) < 0) s.negate_row(t);
  }

  SmithDecomposition out{std::move(s.U), std::move(s.V), std::move(s.D), {}};
  out.divisors.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.divisors.push_back(out.D(t, t));
  return out;
}

inline std::vector<Integer> elementary_divisors(IntMatrix const& A) { return snf(A).divisors; }

inline std::size_t rank(IntMatrix const& A) { return snf(A).rank(); }

/// Columns form a Z-basis of ker(A); cols - rank of them.
inline IntMatrix kernel_basis(IntMatrix const& A) {
  SmithDecomposition s = snf(A);
  std::size_t const r = s.rank();
  std::size_t const n = A.cols();
  IntMatrix K(n, n - r, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) K(i, j - r) = s.V(i, j);
  return K;
}

/// Finitely generated abelian group Z^free_rank + sum Z/d_i.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, d_i | d_{i+1}

  [[nodiscard]] bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
};

/// Z^rows / column span of A.
inline AbelianGroup cokernel(IntMatrix const& A) {
  SmithDecomposition s = snf(A);
  AbelianGroup g;
  g.free_rank = A.rows() - s.rank();
  for (auto const& d : s.divisors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

/// Elementary divisors of a sublattice inside an ambient lattice.
struct PairDivisors {
  std::vector<Integer> divisors;  // SNF diagonal of the coordinate matrix
  IntMatrix coordinates;          // sub_basis expressed in ambient_basis coordinates
  AbelianGroup quotient;          // ambient / sub
};

/// Expresses each column of sub_basis in the basis given by the columns of
/// ambient_basis (exact integer solve), then reads the divisors off its SNF.
inline PairDivisors pair_divisors(IntMatrix const& ambient_basis, IntMatrix const& sub_basis) {
  if (ambient_basis.rows() != sub_basis.rows()) throw ShapeError("ambient and sub bases live in different lattices");
  std::size_t const a = ambient_basis.cols();
  std::size_t const s = sub_basis.cols();

  SmithDecomposition B = snf(ambient_basis);
  if (B.rank() != a) throw std::invalid_argument("ambient basis columns are linearly dependent");

  // B = U^-1 D V^-1, so B X = S  <=>  D (V^-1 X) = U S.
  IntMatrix US = B.U * sub_basis;
  IntMatrix Y(a, s, Integer(0));
  for (std::size_t i = 0; i < US.rows(); ++i)
    for (std::size_t j = 0; j < s; ++j) {
      if (i < a) {
        Integer const& d = B.divisors[i];
        if (US(i, j) % d != 0) throw NotContained("sub-basis column " + std::to_string(j) + " is not in the ambient span");
        Y(i, j) = US(i, j) / d;
      } else if (US(i, j) != 0) {
        throw NotContained("sub-basis column " + std::to_string(j) + " is not in the ambient span");
      }
    }
  IntMatrix X = B.V * Y;

  SmithDecomposition sx = snf(X);
  PairDivisors out;
  out.divisors = sx.divisors;
  out.coordinates = std::move(X);
  out.quotient.free_rank = a - sx.rank();
  for (auto const& d : sx.divisors)
    if (d > 1) out.quotient.torsion.push_back(d);
  return out;
}

}  // namespace aspherix
