#include "xmodlie/commands.hpp"

#include <set>

#include "xmodlie/uce.hpp"

namespace xmodlie {

namespace {

Json verdict_entry(Report& report, const Verdict& v) {
  if (!v.pass()) report.fail(ErrorKind::axiom);
  return json_verdict(v);
}

void note_invariant(Report& report, Json& where, const char* key, bool holds,
                    bool strict) {
  where[key] = holds;
  if (!holds && strict) report.fail(ErrorKind::axiom);
}

Json analyze_braided(Report& report, const BxPtr& bx, bool strict) {
  Json out;
  out["m"] = bx->m()->name();
  out["n"] = bx->n()->name();
  out["dim_m"] = bx->m()->dim();
  out["dim_n"] = bx->n()->dim();

  const Subspace zm = center(*bx->m());
  const Subspace zn = center(*bx->n());
  const Subspace st = stabilizer(bx->xmod);
  const BraidedCenter bc = braided_center(*bx);
  const Subspace zst = intersect(st, zn);
  const BraidedCommutator cm = braided_commutator(*bx);

  Json dims;
  dims["center_m"] = zm.dim();
  dims["center_n"] = zn.dim();
  dims["stabilizer"] = st.dim();
  dims["fixed_points"] = bc.fixed.dim();
  dims["braided_center"] = bc.zb.dim();
  dims["center_cap_stabilizer"] = zst.dim();
  dims["derived_m"] = cm.mm.dim();
  dims["action_commutator"] = cm.d.dim();
  dims["braided_commutator"] = cm.b.dim();
  dims["derived_n"] = cm.derived.dim();
  out["dims"] = std::move(dims);

  out["perfect_xmod"] = is_perfect_xmod(bx->xmod);
  out["perfect_braided"] = is_perfect_braided(*bx);

  Json inv;
  note_invariant(report, inv, "fixed_inside_center_m", zm.contains(bc.fixed),
                 strict);
  note_invariant(report, inv, "braided_center_inside_center_cap_stab",
                 zst.contains(bc.zb), strict);
  note_invariant(report, inv, "fixed_equals_boundary_preimage_of_zb",
                 bc.fixed_matches_boundary_preimage, strict);
  note_invariant(report, inv, "commutator_chain", cm.chain_holds, strict);
  note_invariant(report, inv, "braided_commutator_ideal", cm.b_ideal, strict);
  const PerfectActorReport s4 = check_perfect_actor_identities(bx);
  if (s4.applicable) {
    note_invariant(report, inv, "b_equals_d_when_n_perfect", s4.b_equals_d,
                   strict);
    note_invariant(report, inv, "zb_equals_zst_when_n_perfect",
                   s4.zb_equals_zst, strict);
  }
  out["invariants"] = std::move(inv);
  return out;
}

Json analyze_xmod(Report& report, const XModPtr& x, bool strict) {
  Json out;
  out["m"] = x->m()->name();
  out["n"] = x->n()->name();
  out["dim_m"] = x->m()->dim();
  out["dim_n"] = x->n()->dim();

  const Subspace zm = center(*x->m());
  const CenterPair c = xmod_center(*x);
  const CommutatorPair cm = xmod_commutator(*x);

  Json dims;
  dims["center_m"] = zm.dim();
  dims["center_n"] = center(*x->n()).dim();
  dims["stabilizer"] = stabilizer(*x).dim();
  dims["fixed_points"] = c.fixed.dim();
  dims["center_cap_stabilizer"] = c.zst.dim();
  dims["derived_m"] = derived_subalgebra(*x->m()).dim();
  dims["action_commutator"] = cm.d.dim();
  dims["derived_n"] = cm.derived.dim();
  out["dims"] = std::move(dims);

  out["perfect_xmod"] = is_perfect_xmod(*x);
  out["center_pair_is_crossed_submodule"] = c.flags.crossed_submodule();

  Json inv;
  note_invariant(report, inv, "fixed_inside_center_m", zm.contains(c.fixed),
                 strict);
  note_invariant(report, inv, "action_commutator_ideal", cm.d_ideal, strict);
  out["invariants"] = std::move(inv);
  return out;
}

Json classify_json(const BraidedExtClass& cls) {
  Json out;
  out["morphism"] = json_verdict(cls.morphism);
  out["extension"] = cls.extension;
  out["central"] = cls.central;
  out["compatible_central"] = cls.compatible_central;
  out["central_implies_compatible"] = !cls.central || cls.compatible_central;
  Json dims;
  dims["ker_f1"] = cls.ker1.dim();
  dims["ker_f2"] = cls.ker2.dim();
  dims["fixed_points"] = cls.fixed.dim();
  dims["braided_center"] = cls.zb.dim();
  dims["center_cap_stabilizer"] = cls.zst.dim();
  out["dims"] = std::move(dims);
  Json sub;  // the evidence behind the flags
  sub["ker_f1"] = json_subspace(cls.ker1);
  sub["ker_f2"] = json_subspace(cls.ker2);
  sub["fixed_points"] = json_subspace(cls.fixed);
  sub["braided_center"] = json_subspace(cls.zb);
  sub["center_cap_stabilizer"] = json_subspace(cls.zst);
  out["subspaces"] = std::move(sub);
  return out;
}

Json classify_json(const XModExtClass& cls) {
  Json out;
  out["morphism"] = json_verdict(cls.morphism);
  out["extension"] = cls.extension;
  out["central"] = cls.central;
  Json dims;
  dims["ker_f1"] = cls.ker1.dim();
  dims["ker_f2"] = cls.ker2.dim();
  dims["fixed_points"] = cls.fixed.dim();
  dims["center_cap_stabilizer"] = cls.zst.dim();
  out["dims"] = std::move(dims);
  return out;
}

/// expected == actual check that downgrades the report on mismatch.
template <typename T>
void expect(Report& report, Json& where, const char* key, const T& actual,
            const T& expected) {
  where[key] = actual;
  if (!(actual == expected)) {
    where[std::string(key) + "_expected"] = expected;
    report.fail(ErrorKind::classification);
  }
}

}  // namespace

Report cmd_verify(const Workspace& ws, const std::vector<std::string>& names,
                  const CommandOptions&) {
  Report report;
  report.doc["command"] = "verify";
  Json objects;

  std::set<std::string> resolved;
  auto want = [&](const std::string& name) {
    if (names.empty()) return true;
    if (std::find(names.begin(), names.end(), name) == names.end())
      return false;
    resolved.insert(name);
    return true;
  };

  for (const auto& [name, alg] : ws.algebras)
    if (want(name))
      objects["algebra/" + name] = {
          {"verdict", verdict_entry(report, verify_lie(*alg))}};
  for (const auto& [name, act] : ws.actions)
    if (want(name))
      objects["action/" + name] = {
          {"verdict", verdict_entry(report, verify_action(act))}};
  for (const auto& [name, x] : ws.xmods)
    if (want(name)) {
      Verdict v = verify_action(x->action);
      v.absorb(hom_check(x->boundary));
      v.absorb(verify_xmod(*x));
      objects["xmod/" + name] = {{"verdict", verdict_entry(report, v)}};
    }
  for (const auto& [name, bx] : ws.braided)
    if (want(name)) {
      Verdict v = verify_xmod(bx->xmod);
      v.absorb(verify_braiding(*bx));
      objects["braided/" + name] = {{"verdict", verdict_entry(report, v)}};
    }
  for (const auto& [name, m] : ws.morphisms)
    if (want(name)) {
      const Verdict v = m.braided
                            ? braided_morphism_check(*m.braided_morphism)
                            : xmod_morphism_check(*m.xmod_morphism);
      objects["morphism/" + name] = {{"verdict", verdict_entry(report, v)}};
    }

  for (const std::string& name : names)
    if (!resolved.count(name))
      throw XmodError(ErrorKind::parse,
                      "verify: unknown object '" + name + "'");
  report.doc["objects"] = std::move(objects);
  report.doc["pass"] = report.ok;
  return report;
}

Report cmd_analyze(const Workspace& ws, const std::string& name,
                   const CommandOptions& opt) {
  Report report;
  report.doc["command"] = "analyze";
  report.doc["object"] = name;
  if (auto it = ws.braided.find(name); it != ws.braided.end()) {
    report.doc["kind"] = "braided";
    report.doc["analysis"] = analyze_braided(report, it->second, opt.strict);
  } else if (auto jt = ws.xmods.find(name); jt != ws.xmods.end()) {
    report.doc["kind"] = "xmod";
    report.doc["analysis"] = analyze_xmod(report, jt->second, opt.strict);
  } else if (auto kt = ws.algebras.find(name); kt != ws.algebras.end()) {
    report.doc["kind"] = "algebra";
    Json out;
    out["dim"] = kt->second->dim();
    out["center"] = center(*kt->second).dim();
    out["derived"] = derived_subalgebra(*kt->second).dim();
    out["perfect"] = derived_subalgebra(*kt->second).is_full();
    report.doc["analysis"] = std::move(out);
  } else {
    throw XmodError(ErrorKind::parse, "analyze: unknown object '" + name + "'");
  }
  report.doc["pass"] = report.ok;
  return report;
}

Report cmd_tensor(const Workspace& ws, const std::string& m,
                  const std::string& n, const std::string& act_mn,
                  const std::string& act_nm, const CommandOptions&) {
  Report report;
  report.doc["command"] = "tensor";
  const LiePtr& left = ws.algebra(m);
  const LiePtr& right = ws.algebra(n);

  auto pick = [&](const std::string& choice, const LiePtr& actor,
                  const LiePtr& module) -> Action {
    if (choice.empty() || choice == "adjoint") {
      if (actor != module)
        throw XmodError(ErrorKind::parse,
                        "tensor: adjoint actions need m = n; pass explicit "
                        "action names");
      return adjoint_action(actor);
    }
    if (choice == "zero") return zero_action(actor, module);
    auto it = ws.actions.find(choice);
    if (it == ws.actions.end())
      throw XmodError(ErrorKind::parse, "tensor: unknown action '" + choice + "'");
    if (it->second.actor != actor || it->second.module != module)
      throw XmodError(ErrorKind::parse,
                      "tensor: action '" + choice + "' has wrong endpoints");
    return it->second;
  };
  const Action a_mn = pick(act_mn, left, right);
  const Action a_nm = pick(act_nm, right, left);

  auto tp = build_nonabelian_tensor(left, right, a_mn, a_nm);
  if (!tp.ok()) {
    report.doc["diagnostic"] = tp.error().to_string();
    report.fail(ErrorKind::axiom);
    report.doc["pass"] = false;
    return report;
  }
  report.doc["left"] = left->name();
  report.doc["right"] = right->name();
  report.doc["ambient_dim"] = (*tp)->ambient;
  report.doc["relation_dim"] = (*tp)->relations.dim();
  report.doc["dim"] = (*tp)->quotient->dim();
  report.doc["bracket_is_zero"] =
      derived_subalgebra(*(*tp)->quotient).dim() == 0;
  report.doc["perfect"] = derived_subalgebra(*(*tp)->quotient).is_full();
  report.doc["pass"] = report.ok;
  return report;
}

Report cmd_uce(const Workspace& ws, const std::string& name,
               const CommandOptions&) {
  Report report;
  report.doc["command"] = "uce";
  report.doc["object"] = name;
  const BxPtr& bx = ws.braided_xmod(name);
  auto res = universal_central_extension(bx);
  if (!res.ok())
    throw XmodError(ErrorKind::internal, "uce: " + res.error().to_string());

  if (res->kind == UCEResult::Kind::uce) {
    report.doc["kind"] = "uce";
    Json u;
    u["source_dim"] = res->phi->square.pres->quotient->dim();
    u["classification"] = classify_json(res->classification);
    if (!res->classification.central) report.fail(ErrorKind::classification);
    report.doc["extension"] = std::move(u);
  } else {
    report.doc["kind"] = "not_perfect";
    Json cert;
    cert["braided_commutator_full"] = res->certificate->m_full;
    cert["derived_full"] = res->certificate->n_full;
    cert["braided_commutator_codim"] = res->certificate->b_codim;
    cert["derived_codim"] = res->certificate->derived_codim;
    report.doc["certificate"] = std::move(cert);

    // The other direction: over the identity extension of this base, two
    // different morphisms with equal composites exist.
    auto witness = non_perfect_witness(braided_identity(bx));
    if (!witness.ok())
      throw XmodError(ErrorKind::internal,
                      "uce witness: " + witness.error().to_string());
    Json w;
    w["composites_match"] = witness->composites_match;
    w["h_differs_from_g"] = witness->h_differs_from_g;
    w["projection_central"] = witness->pi1_class.central;
    if (!witness->composites_match || !witness->h_differs_from_g ||
        !witness->pi1_class.central)
      report.fail(ErrorKind::internal);
    report.doc["witness"] = std::move(w);
  }
  report.doc["pass"] = report.ok;
  return report;
}

Report cmd_classify(const Workspace& ws, const std::string& name,
                    const CommandOptions&) {
  Report report;
  report.doc["command"] = "classify";
  report.doc["object"] = name;
  const MorphismEntry& entry = ws.morphism(name);
  if (entry.braided) {
    const BraidedExtClass cls =
        classify_braided_extension(*entry.braided_morphism);
    if (!cls.morphism.pass()) report.fail(ErrorKind::axiom);
    report.doc["kind"] = "braided";
    report.doc["classification"] = classify_json(cls);
  } else {
    const XModExtClass cls = classify_xmod_extension(*entry.xmod_morphism);
    if (!cls.morphism.pass()) report.fail(ErrorKind::axiom);
    report.doc["kind"] = "xmod";
    report.doc["classification"] = classify_json(cls);
  }
  report.doc["pass"] = report.ok;
  return report;
}

namespace {

Report demo_k2k3(const CommandOptions&) {
  Report report;
  report.doc["command"] = "demo";
  report.doc["id"] = "k2k3";

  const LiePtr k2 = builtin::abelian(2);
  const LiePtr k3 = builtin::abelian(3);
  auto tb2 = tensor_braided(k2);
  auto tb3 = tensor_braided(k3);
  if (!tb2.ok() || !tb3.ok())
    throw XmodError(ErrorKind::internal, "demo k2k3: construction failed");

  RatMatrix pi = RatMatrix::Zero(2, 3);
  pi(0, 0) = 1;
  pi(1, 1) = 1;
  const LieHom pi_hom{k3, k2, pi};
  auto pipi = induced_hom(*tb3->pres, *tb2->pres, pi_hom, pi_hom);
  if (!pipi.ok())
    throw XmodError(ErrorKind::internal,
                    "demo k2k3: induced map failed: " + pipi.error().to_string());
  BraidedMorphism f{tb3->bxmod, tb2->bxmod, *pipi, pi_hom};
  const BraidedExtClass cls = classify_braided_extension(f);
  if (!cls.morphism.pass()) report.fail(ErrorKind::axiom);

  Json out;
  expect(report, out, "extension", cls.extension, true);
  expect(report, out, "compatible_central", cls.compatible_central, true);
  expect(report, out, "central", cls.central, false);
  Json dims;
  expect<Index>(report, dims, "braided_center", cls.zb.dim(), 0);
  expect<Index>(report, dims, "center_n", center(*tb3->bxmod->n()).dim(), 3);
  expect<Index>(report, dims, "stabilizer", stabilizer(tb3->bxmod->xmod).dim(),
                3);
  expect<Index>(report, dims, "fixed_points", cls.fixed.dim(), 9);
  expect<Index>(report, dims, "ker_f2", cls.ker2.dim(), 1);
  expect<Index>(report, dims, "ker_f1", cls.ker1.dim(), 5);
  out["dims"] = std::move(dims);
  report.doc["result"] = std::move(out);
  report.doc["pass"] = report.ok;
  return report;
}

Report demo_uce_perfect(const CommandOptions&) {
  Report report;
  report.doc["command"] = "demo";
  report.doc["id"] = "uce-perfect";

  // Perfect direction: the identity braided crossed module over sl2.
  {
    auto res = universal_central_extension(identity_braided(builtin::sl2()));
    if (!res.ok())
      throw XmodError(ErrorKind::internal, "demo: " + res.error().to_string());
    Json out;
    expect(report, out, "kind",
           std::string(res->kind == UCEResult::Kind::uce ? "uce" : "not_perfect"),
           std::string("uce"));
    if (res->kind == UCEResult::Kind::uce) {
      expect<Index>(report, out, "source_dim",
                    res->phi->square.pres->quotient->dim(), 3);
      expect(report, out, "central", res->classification.central, true);
      expect<Index>(report, out, "ker_f1", res->classification.ker1.dim(), 0);
      expect<Index>(report, out, "ker_f2", res->classification.ker2.dim(), 0);
    }
    report.doc["sl2"] = std::move(out);
  }

  // Non-perfect direction: the Heisenberg algebra.
  {
    const BxPtr bx = identity_braided(builtin::heisenberg());
    auto res = universal_central_extension(bx);
    if (!res.ok())
      throw XmodError(ErrorKind::internal, "demo: " + res.error().to_string());
    Json out;
    expect(report, out, "kind",
           std::string(res->kind == UCEResult::Kind::uce ? "uce" : "not_perfect"),
           std::string("not_perfect"));
    if (res->certificate) {
      expect<Index>(report, out, "derived_codim",
                    res->certificate->derived_codim, 2);
      expect<Index>(report, out, "braided_commutator_codim",
                    res->certificate->b_codim, 2);
    }
    auto witness = non_perfect_witness(braided_identity(bx));
    if (!witness.ok())
      throw XmodError(ErrorKind::internal,
                      "demo witness: " + witness.error().to_string());
    expect(report, out, "witness_composites_match", witness->composites_match,
           true);
    expect(report, out, "witness_h_differs_from_g", witness->h_differs_from_g,
           true);
    expect(report, out, "witness_projection_central",
           witness->pi1_class.central, true);
    report.doc["h3"] = std::move(out);
  }
  report.doc["pass"] = report.ok;
  return report;
}

Report demo_sl2_corollary(const CommandOptions&) {
  Report report;
  report.doc["command"] = "demo";
  report.doc["id"] = "sl2-corollary";

  auto tb = tensor_braided(builtin::sl2());
  if (!tb.ok())
    throw XmodError(ErrorKind::internal, "demo: " + tb.error().to_string());
  auto cmp = compare_uce(tb->bxmod);
  if (!cmp.ok())
    throw XmodError(ErrorKind::internal, "demo: " + cmp.error().to_string());

  Json out;
  expect<Index>(report, out, "dim_tensor_square",
                cmp->phi.square.pres->quotient->dim(), 3);
  expect<Index>(report, out, "dim_compatible_source",
                cmp->comp.nm->quotient->dim(), 3);
  expect(report, out, "inverse_pair", cmp->inverse_pair, true);
  expect(report, out, "phi_factors_through_c", cmp->phi_factors, true);
  expect(report, out, "c_factors_through_phi", cmp->c_factors, true);
  report.doc["result"] = std::move(out);
  report.doc["pass"] = report.ok;
  return report;
}

}  // namespace

Report cmd_demo(const std::string& id, const CommandOptions& opt) {
  if (id == "k2k3") return demo_k2k3(opt);
  if (id == "uce-perfect") return demo_uce_perfect(opt);
  if (id == "sl2-corollary") return demo_sl2_corollary(opt);
  throw XmodError(ErrorKind::parse,
                  "unknown demo '" + id +
                      "' (available: k2k3, uce-perfect, sl2-corollary)");
}

}  // namespace xmodlie
