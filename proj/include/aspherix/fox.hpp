#pragma once

#include "aspherix/group_ring.hpp"
#include "aspherix/presentation.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace aspherix {

/// Free model on the presentation's generators, carrying their names.
inline GroupModel free_model_of(Presentation const& p) {
  return GroupModel::free(p.generator_count(), p.generator_names());
}

namespace detail {

// Gradient (d w/d x_0, ..., d w/d x_{n-1}) in one left-to-right pass. The
// running prefix is shared by every generator:
//   x_i at position k contributes +prefix_k,
//   x_i^-1 at position k contributes -prefix_k x_i^-1 = -prefix_{k+1}.
inline std::vector<GroupRingElement<Integer>> fox_gradient(Word const& w, GroupModel const& free_model) {
  std::vector<GroupRingElement<Integer>> grad(free_model.rank(), GroupRingElement<Integer>(free_model));
  GroupElement prefix = free_model.identity();
  for (auto const& l : w) {
    if (l.generator >= free_model.rank()) throw std::out_of_range("word uses a generator outside the free model");
    GroupElement next = free_model.multiply(prefix, free_model.generator(l.generator, l.sign));
    if (l.sign > 0) {
      grad[l.generator].add_term(prefix, Integer(1));
    } else {
      grad[l.generator].add_term(next, Integer(-1));
    }
    prefix = std::move(next);
  }
  return grad;
}

}  // namespace detail

/// Fox derivative d w / d x_i in Z[F].
inline GroupRingElement<Integer> fox_derivative(Word const& w, std::size_t i, GroupModel const& free_model) {
  if (free_model.kind() != ModelKind::free) throw std::invalid_argument("Fox calculus needs a free model");
  if (i >= free_model.rank()) throw std::out_of_range("generator index out of range");
  return std::move(detail::fox_gradient(w, free_model)[i]);
}

/// d2: entry (i, j) = d r_j / d x_i, shape #gens x #rels, over Z[F].
inline GroupRingMatrix<Integer> jacobian(Presentation const& p) {
  GroupModel F = free_model_of(p);
  GroupRingMatrix<Integer> d2(F, p.generator_count(), p.relator_count());
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    auto grad = detail::fox_gradient(p.relator(j), F);
    for (std::size_t i = 0; i < grad.size(); ++i) d2.set(i, j, std::move(grad[i]));
  }
  return d2;
}

/// d1: the 1 x #gens row (x_i - 1).
inline GroupRingMatrix<Integer> boundary_d1(Presentation const& p) {
  GroupModel F = free_model_of(p);
  GroupRingMatrix<Integer> d1(F, 1, p.generator_count());
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    d1.set(0, i,
           GroupRingElement<Integer>::monomial(F, F.generator(i)) - GroupRingElement<Integer>::one(F));
  return d1;
}

/// Cellular chain complex of the universal cover, lifted to Z[F].
struct ChainComplexModel {
  Presentation presentation;
  GroupRingMatrix<Integer> d1;
  GroupRingMatrix<Integer> d2;
};

inline ChainComplexModel chain_complex(Presentation const& p) { return {p, boundary_d1(p), jacobian(p)}; }

/// Integer matrix eps(d2); entry (i, j) is the exponent sum of x_i in r_j.
inline IntMatrix augmented_jacobian(Presentation const& p) { return augment(jacobian(p)); }

/// Checks  sum_i J(i, j) (x_i - 1) = r_j - 1  in Z[F] for every column j.
inline bool fundamental_identity_holds(Presentation const& p, GroupRingMatrix<Integer> const& J) {
  GroupModel F = free_model_of(p);
  if (!(J.model() == F) || J.rows() != p.generator_count() || J.cols() != p.relator_count()) return false;
  auto const one = GroupRingElement<Integer>::one(F);
  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    GroupRingElement<Integer> lhs(F);
    for (std::size_t i = 0; i < p.generator_count(); ++i)
      lhs += J(i, j) * (GroupRingElement<Integer>::monomial(F, F.generator(i)) - one);
    GroupRingElement<Integer> rhs = GroupRingElement<Integer>::monomial(F, F.evaluate(p.relator(j))) - one;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

inline bool fundamental_identity_check(Presentation const& p) { return fundamental_identity_holds(p, jacobian(p)); }

}  // namespace aspherix
