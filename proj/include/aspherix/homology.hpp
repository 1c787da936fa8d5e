#pragma once

#include "aspherix/errors.hpp"
#include "aspherix/fox.hpp"
#include "aspherix/group_ring.hpp"
#include "aspherix/presentation.hpp"
#include "aspherix/smith.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aspherix {

struct BettiNumbers {
  std::size_t b0 = 1;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  friend bool operator==(BettiNumbers const&, BettiNumbers const&) = default;
};

/// Integral homology of the presentation 2-complex K.
struct HomologyReport {
  std::size_t generators = 0;
  std::size_t relators = 0;
  AbelianGroup h1;
  std::size_t h2_rank = 0;  // H2(K) is free abelian
  BettiNumbers betti;
  long euler = 0;
};

/// H1(K) = coker eps(d2), H2(K) = ker eps(d2).
inline HomologyReport homology(Presentation const& p) {
  IntMatrix const boundary = augmented_jacobian(p);
  SmithDecomposition const s = snf(boundary);
  std::size_t const r = s.rank();

  HomologyReport h;
  h.generators = p.generator_count();
  h.relators = p.relator_count();
  h.h1.free_rank = h.generators - r;
  for (auto const& d : s.divisors)
    if (d > 1) h.h1.torsion.push_back(d);
  h.h2_rank = h.relators - r;
  h.betti = {1, h.h1.free_rank, h.h2_rank};
  h.euler = 1 - static_cast<long>(h.betti.b1) + static_cast<long>(h.betti.b2);
  if (h.euler != p.euler_characteristic()) throw InternalError("Euler identity violated");
  return h;
}

/// Z-basis of H2(K) inside C2(K) = Z^#rels, as columns.
inline IntMatrix h2_basis(Presentation const& p) { return kernel_basis(augmented_jacobian(p)); }

// ---------------------------------------------------------------------------
// Idempotent input E = h o d2 on C2 of the universal cover.

/// E over Z[G]. `lifted` marks entries that are Z[F] representatives of an
/// unsupported G, in which case only augmentation-level checks are possible.
struct IdempotentInput {
  GroupRingMatrix<Integer> matrix;
  bool lifted = false;
};

struct IdempotentValidation {
  bool idempotency_checked = false;  // E^2 = E verified over Z[G]
  bool splitting_checked = false;    // eps(d2) eps(E) = eps(d2) verified
};

/// Runs every check available for E against p; throws InvalidIdempotent.
inline IdempotentValidation validate_idempotent(Presentation const& p, IdempotentInput const& E) {
  std::size_t const n = p.relator_count();
  auto const& M = E.matrix;
  if (!M.is_square() || M.rows() != n)
    throw ShapeError("idempotent must be " + std::to_string(n) + "x" + std::to_string(n) + " (one row per relator)");

  IdempotentValidation v;
  if (!E.lifted) {
    if (!is_idempotent(M)) throw InvalidIdempotent("E is not idempotent: E*E != E over Z[G]");
    v.idempotency_checked = true;
  }
  IntMatrix const eE = augment(M);
  if (!(eE * eE == eE)) throw InvalidIdempotent("eps(E) is not idempotent over Z");

  IntMatrix const ed2 = augmented_jacobian(p);
  if (!(ed2 * eE == ed2))
    throw InvalidIdempotent("eps(d2)*eps(E) != eps(d2): E is not of the form h o d2 for this presentation");
  v.splitting_checked = true;
  return v;
}

struct SigmaResult {
  std::size_t rank = 0;
  IntMatrix basis;  // columns, in C2 coordinates
  IdempotentValidation validation;
};

/// Spherical 2-cycles Sigma_K = ker eps(E) inside H2(K).
inline SigmaResult sigma_k(Presentation const& p, IdempotentInput const& E) {
  SigmaResult out;
  out.validation = validate_idempotent(p, E);
  out.basis = kernel_basis(augment(E.matrix));
  out.rank = out.basis.cols();
  IntMatrix const ed2 = augmented_jacobian(p);
  if (!is_zero_matrix(ed2 * out.basis)) throw InvalidIdempotent("ker eps(E) is not contained in H2(K)");
  return out;
}

/// H2(G) = H2(K) / Sigma_K and the flags read off the pair's divisors.
struct GroupHomologyResult {
  AbelianGroup h2g;
  std::vector<Integer> pair_divisors;
  bool torsion_free = true;
  bool direct_summand = true;  // every pair divisor is 0 or 1
  bool contradiction = false;  // torsion found: inputs contradict cd(G) = 2 or E is invalid
};

/// Pair analysis on explicit bases; exposed so synthetic pairs can be fed in.
inline GroupHomologyResult analyze_pair(IntMatrix const& h2_basis, IntMatrix const& sigma_basis) {
  PairDivisors pd = pair_divisors(h2_basis, sigma_basis);
  GroupHomologyResult r;
  r.h2g = pd.quotient;
  r.pair_divisors = std::move(pd.divisors);
  r.torsion_free = r.h2g.torsion.empty();
  for (auto const& d : r.pair_divisors)
    if (d != 0 && d != 1) r.direct_summand = false;
  r.contradiction = !r.direct_summand || !r.torsion_free;
  return r;
}

inline GroupHomologyResult h2_of_group(Presentation const& p, IdempotentInput const& E) {
  SigmaResult s = sigma_k(p, E);
  return analyze_pair(h2_basis(p), s.basis);
}

// ---------------------------------------------------------------------------

enum class Verdict { aspherical, not_aspherical, inconclusive };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::aspherical:
      return "aspherical";
    case Verdict::not_aspherical:
      return "not_aspherical";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

struct AsphericityReport {
  HomologyReport homology;
  std::optional<std::size_t> sigma_rank;  // unknown without E when H2(K) != 0
  std::optional<AbelianGroup> h2g;
  std::vector<Integer> pair_divisors;
  bool torsion_free = true;
  bool direct_summand = true;
  bool contradiction = false;
  Verdict verdict = Verdict::inconclusive;
  bool cd2_asserted = false;
  bool idempotent_supplied = false;
  IdempotentValidation validation;
  std::string path;  // "h2_vanishes" (H2(K) = 0) or "idempotent"
  std::string reason;
  std::vector<std::string> notes;
};

/// Asphericity verdict for K(p) given (optionally) E and the cd(G) = 2 assertion.
inline AsphericityReport asphericity_verdict(Presentation const& p, std::optional<IdempotentInput> const& E,
                                             bool cd2_asserted) {
  AsphericityReport rep;
  rep.homology = homology(p);
  rep.cd2_asserted = cd2_asserted;
  rep.idempotent_supplied = E.has_value();

  if (E) {
    SigmaResult s = sigma_k(p, *E);
    rep.validation = s.validation;
    GroupHomologyResult g = analyze_pair(h2_basis(p), s.basis);
    rep.sigma_rank = s.rank;
    rep.h2g = g.h2g;
    rep.pair_divisors = std::move(g.pair_divisors);
    rep.torsion_free = g.torsion_free;
    rep.direct_summand = g.direct_summand;
    rep.contradiction = g.contradiction;
    rep.path = rep.homology.h2_rank == 0 ? "h2_vanishes" : "idempotent";
  } else if (rep.homology.h2_rank == 0) {
    rep.sigma_rank = 0;
    rep.h2g = AbelianGroup{};
    rep.path = "h2_vanishes";
  } else {
    rep.path = "idempotent";
  }

  rep.notes.emplace_back("Sigma_K = image of pi_2(K) -> H_2(K), identified with H_0(G, H_2(K~)) = Z (x)_{Z[G]} ker(E)");

  if (!cd2_asserted) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "cd(G) = 2 not asserted";
    if (rep.sigma_rank && *rep.sigma_rank > 0)
      rep.notes.emplace_back("Sigma_K != 0 already obstructs asphericity (asphericity forces Sigma_K = 0)");
  } else if (!rep.sigma_rank) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "Sigma_K requires the idempotent E when H_2(K) != 0";
  } else if (rep.contradiction) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "torsion in H_2(K)/Sigma_K: inputs contradict cd(G) = 2 or E is invalid";
  } else if (*rep.sigma_rank == 0) {
    rep.verdict = Verdict::aspherical;
    rep.reason = rep.path == "h2_vanishes" ? "H_2(K) = 0, hence Sigma_K = 0" : "Sigma_K = ker eps(E) = 0";
    rep.notes.emplace_back("relation module Z_1(K~) is stably free");
    rep.notes.emplace_back("G is of type FL");
  } else {
    rep.verdict = Verdict::not_aspherical;
    rep.reason = "Sigma_K has rank " + std::to_string(*rep.sigma_rank) + " != 0";
  }
  return rep;
}

/// Balanced presentation with b1 = 0: the Euler count forces b2 = 0.
struct BalancedCheck {
  bool balanced = false;
  bool beta1_zero = false;
  bool b2_forced_zero = false;
  std::size_t beta2 = 0;
};

inline BalancedCheck balanced_perfect_check(Presentation const& p) {
  HomologyReport h = homology(p);
  BalancedCheck c;
  c.balanced = p.generator_count() == p.relator_count();
  c.beta1_zero = h.betti.b1 == 0;
  c.b2_forced_zero = c.balanced && c.beta1_zero;
  c.beta2 = h.betti.b2;
  if (c.b2_forced_zero && c.beta2 != 0) throw InternalError("balanced presentation with b1 = 0 but b2 != 0");
  return c;
}

}  // namespace aspherix
