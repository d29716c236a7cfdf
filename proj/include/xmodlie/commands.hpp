#pragma once

// The CLI's operations, as library functions returning structured reports
// so that they can be driven both from the command line and from tests.

#include "xmodlie/corpus.hpp"
#include "xmodlie/report.hpp"

namespace xmodlie {

struct CommandOptions {
  /// When set, derived invariants (remark inclusions, the equalities that
  /// hold whenever [N,N] = N) are enforced: a violation fails the report
  /// instead of only being listed.
  bool strict = false;
};

/// Re-runs the verifier of each named object (all objects when the list is
/// empty) and reports one verdict per object.
Report cmd_verify(const Workspace& ws, const std::vector<std::string>& names,
                  const CommandOptions& opt = {});

/// Centers, commutators, perfectness and the classification-relevant
/// subspaces of a braided crossed module, crossed module, or algebra.
Report cmd_analyze(const Workspace& ws, const std::string& name,
                   const CommandOptions& opt = {});

/// Builds the non-abelian tensor product of two named algebras. Action
/// names may be "adjoint" (same algebra on both sides) or "zero", or name
/// loaded actions; with no actions given, M = N uses adjoint on both sides.
Report cmd_tensor(const Workspace& ws, const std::string& m,
                  const std::string& n, const std::string& act_mn = {},
                  const std::string& act_nm = {},
                  const CommandOptions& opt = {});

/// Universal central extension of a named braided crossed module: either
/// the constructed extension with kernel data, or the non-perfectness
/// certificate plus the two-morphism witness over the identity extension.
Report cmd_uce(const Workspace& ws, const std::string& name,
               const CommandOptions& opt = {});

/// Classifies a named morphism: extension / central / compatible-central
/// flags with the kernel and center subspace dimensions behind them.
Report cmd_classify(const Workspace& ws, const std::string& name,
                    const CommandOptions& opt = {});

/// Self-contained reproductions of the worked examples:
///   k2k3           the compatible-but-not-central projection example
///   uce-perfect    existence and failure of the UCE in both directions
///   sl2-corollary  the isomorphism of the two constructions over sl2
Report cmd_demo(const std::string& id, const CommandOptions& opt = {});

}  // namespace xmodlie
