#pragma once

// A Lie left-action of one algebra on another, stored per actor basis
// vector: mats[j] * m = e_j . m.

#include "xmodlie/lie.hpp"

namespace xmodlie {

struct Action {
  LiePtr actor;   // N
  LiePtr module;  // M
  std::vector<RatMatrix> mats;  // each module-dim x module-dim

  const RatMatrix& of_basis(Index j) const {
    return mats[static_cast<std::size_t>(j)];
  }

  /// Matrix of m -> n . m for an arbitrary actor vector.
  RatMatrix of(const RatVector& n) const;

  RatVector act(const RatVector& n, const RatVector& m) const {
    return of(n) * m;
  }
};

/// Both action axioms on all basis triples:
///   [n,n'] . m = n.(n'.m) - n'.(n.m)  and
///   n . [m,m'] = [n.m, m'] + [m, n.m'].
Verdict verify_action(const Action& a);

Action adjoint_action(const LiePtr& L);
Action zero_action(const LiePtr& actor, const LiePtr& module);

/// Span of all action values e_j . e_i (the seed of D_N(M)).
Subspace action_value_span(const Action& a);

/// Kernel of m -> (e_j . m)_j, i.e. M^N.
Subspace action_fixed_points(const Action& a);

/// Kernel of n -> (n . e_i)_i, i.e. st_N(M).
Subspace action_stabilizer(const Action& a);

}  // namespace xmodlie
