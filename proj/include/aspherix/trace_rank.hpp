#pragma once

#include "aspherix/errors.hpp"
#include "aspherix/group_ring.hpp"
#include "aspherix/smith.hpp"

#include <cstddef>
#include <string>

namespace aspherix {

/// Trace rank of the projective module im(E): t(E) for a verified idempotent.
template <Scalar S>
S t_rank(GroupRingMatrix<S> const& E) {
  if (!is_idempotent(E)) throw InvalidIdempotent("t-rank is only defined for idempotents");
  return trace_t(E);
}

/// Rank over Z of Z (x) im(E) = trace of eps(E), cross-checked against its SNF rank.
inline std::size_t eps_rank(GroupRingMatrix<Integer> const& E) {
  if (!E.is_square()) throw ShapeError("eps-rank of a non-square matrix");
  IntMatrix const e = augment(E);
  if (!(e * e == e)) throw InvalidIdempotent("eps(E) is not idempotent over Z");
  Integer const tr = trace(e);
  std::size_t const r = rank(e);
  if (tr != r) throw InternalError("trace of an integral idempotent differs from its rank");
  return r;
}

struct RankComparison {
  Integer t_rank;
  std::size_t eps_rank = 0;
  bool agree = false;
  bool idempotent_valid = false;
  bool t_rank_in_bounds = false;  // 0 <= t_rank <= n
  std::string note;                // set on disagreement
};

inline RankComparison compare_ranks(GroupRingMatrix<Integer> const& E) {
  RankComparison c;
  c.t_rank = t_rank(E);
  c.idempotent_valid = true;
  c.eps_rank = eps_rank(E);
  c.agree = c.t_rank == c.eps_rank;
  c.t_rank_in_bounds = c.t_rank >= 0 && c.t_rank <= E.rows();
  if (!c.agree)
    c.note = "counterexample candidate: t-rank and eps-rank differ, so im(E) cannot be stably free";
  return c;
}

}  // namespace aspherix
