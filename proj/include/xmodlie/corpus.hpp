#pragma once

// Declarative input format and workspace. One document per file; named
// sections define algebras, actions, crossed modules, braidings (each
// braiding section yields a braided crossed module), tensor-braided
// constructions, and morphisms. Structure constants are sparse
// (i, j, k, value) entries, 1-based in files, with antisymmetric completion
// applied automatically and conflicts rejected. Every object passes its
// verifier during loading.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xmodlie/braid.hpp"
#include "xmodlie/tensor.hpp"

namespace xmodlie {

struct MorphismEntry {
  std::string from, to;
  bool braided = false;
  std::optional<BraidedMorphism> braided_morphism;
  std::optional<XModMorphism> xmod_morphism;
};

struct Workspace {
  std::map<std::string, LiePtr> algebras;
  std::map<std::string, Action> actions;
  std::map<std::string, XModPtr> xmods;
  std::map<std::string, BxPtr> braided;
  std::map<std::string, TensorPtr> tensors;  // presentations of tensor-braided entries
  std::map<std::string, MorphismEntry> morphisms;

  const LiePtr& algebra(const std::string& name) const;
  const XModPtr& xmod(const std::string& name) const;
  const BxPtr& braided_xmod(const std::string& name) const;
  const MorphismEntry& morphism(const std::string& name) const;
};

/// Loads one or more definition files into a workspace. References resolve
/// in document order across the given files. Throws XmodError: parse kind
/// for syntax/reference problems, axiom kind for objects failing their
/// verifier (naming object, axiom and witness indices).
Workspace load(const std::vector<std::string>& paths);

/// Same, from an in-memory document (used by tests).
Workspace load_text(const std::string& text, const std::string& origin = "<memory>");

/// The tensor-braided construction over a base algebra L: the crossed
/// module (L (x) L -> L) with boundary x (x) y -> [x,y], the action
/// z . (x (x) y) = z (x) [x,y], and braiding (x, y) -> x (x) y.
struct TensorBraided {
  TensorPtr pres;
  BxPtr bxmod;
};
Expected<TensorBraided> tensor_braided(const LiePtr& base);

// Built-in algebras used by demos and shipped in the corpus files.
namespace builtin {
LiePtr sl2();         // basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
LiePtr heisenberg();  // basis (x, y, z): [x,y] = z
LiePtr abelian(Index n);
}  // namespace builtin

}  // namespace xmodlie
