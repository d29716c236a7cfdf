#include "xmodlie/uce.hpp"

namespace xmodlie {

namespace {

bool same_base(const BxPtr& a, const BxPtr& b) {
  if (a == b) return true;
  return a->m()->dim() == b->m()->dim() && a->n()->dim() == b->n()->dim() &&
         exactly_equal(a->xmod.boundary.matrix, b->xmod.boundary.matrix) &&
         exactly_equal(a->braiding.values, b->braiding.values);
}

bool morphisms_equal(const BraidedMorphism& a, const BraidedMorphism& b) {
  return exactly_equal(a.f1.matrix, b.f1.matrix) &&
         exactly_equal(a.f2.matrix, b.f2.matrix);
}

bool is_identity(const LieHom& f) {
  return f.matrix.rows() == f.matrix.cols() &&
         exactly_equal(f.matrix,
                       RatMatrix(RatMatrix::Identity(f.matrix.rows(),
                                                     f.matrix.cols())));
}

/// Adds kernel vectors to the columns of a preimage section, cycling
/// through the kernel basis; still a section of the same surjection.
RatMatrix perturb_section(const RatMatrix& section, const Subspace& ker) {
  RatMatrix out = section;
  if (ker.dim() == 0) return out;
  for (Index j = 0; j < out.cols(); ++j)
    out.col(j) += ker.basis().row(j % ker.dim()).transpose();
  return out;
}

}  // namespace

Expected<TensorSquare> tensor_square_braided(const LiePtr& n) {
  const Action adj = adjoint_action(n);
  auto pres = build_nonabelian_tensor(n, n, adj, adj);
  if (!pres.ok()) return pres.error();
  TensorSquare out{*pres, identity_braided((*pres)->quotient)};
  const Verdict vx = verify_xmod(out.bxmod->xmod);
  if (!vx.pass())
    return Diagnostic{"tensor-square-xmod", vx.summary()};
  const Verdict vb = verify_braiding(*out.bxmod);
  if (!vb.pass())
    return Diagnostic{"tensor-square-braiding", vb.summary()};
  return out;
}

Expected<Phi> build_phi(const BxPtr& bx) {
  auto square = tensor_square_braided(bx->n());
  if (!square.ok()) return square.error();
  const Index dn = bx->n()->dim();

  RatMatrix phi1_sym(bx->m()->dim(), dn * dn);
  RatMatrix phi2_sym(dn, dn * dn);
  for (Index j = 0; j < dn; ++j)
    for (Index jp = 0; jp < dn; ++jp) {
      phi1_sym.col(square->pres->sym(j, jp)) = bx->braiding.value(j, jp);
      phi2_sym.col(square->pres->sym(j, jp)) = bx->n()->bracket_basis(j, jp);
    }
  auto phi1 = generator_map(*square->pres, phi1_sym, bx->m());
  if (!phi1.ok()) return phi1.error();
  auto phi2 = generator_map(*square->pres, phi2_sym, bx->n());
  if (!phi2.ok()) return phi2.error();

  Phi out{*square, BraidedMorphism{square->bxmod, bx, *phi1, *phi2}};

  const Verdict morph = braided_morphism_check(out.morphism);
  if (!morph.pass())
    return Diagnostic{"comparison-not-a-morphism", morph.summary()};
  const BraidedCommutator bc = braided_commutator(*bx);
  if (!(out.morphism.f1.image() == bc.b))
    return Diagnostic{"comparison-image",
                      "image of the first component differs from the braided commutator"};
  if (!(out.morphism.f2.image() == bc.derived))
    return Diagnostic{"comparison-image",
                      "image of the second component differs from the derived subalgebra"};
  const BraidedCenter sc = braided_center(*square->bxmod);
  if (!sc.fixed.contains(out.morphism.f1.kernel()))
    return Diagnostic{"comparison-kernel",
                      "first kernel leaves the fixed subalgebra of the source"};
  if (!sc.zb.contains(out.morphism.f2.kernel()))
    return Diagnostic{"comparison-kernel",
                      "second kernel leaves the braided center of the source"};
  return out;
}

Expected<UCEResult> universal_central_extension(const BxPtr& bx) {
  UCEResult out;
  const BraidedCommutator bc = braided_commutator(*bx);
  if (!bc.b.is_full() || !bc.derived.is_full()) {
    out.kind = UCEResult::Kind::not_perfect;
    out.certificate = UCEResult::Certificate{
        bc.b.is_full(), bc.derived.is_full(),
        bx->m()->dim() - bc.b.dim(), bx->n()->dim() - bc.derived.dim()};
    return out;
  }
  auto phi = build_phi(bx);
  if (!phi.ok()) return phi.error();
  out.kind = UCEResult::Kind::uce;
  out.classification = classify_braided_extension(phi->morphism);
  if (!out.classification.central)
    return Diagnostic{"uce-not-central",
                      "the comparison morphism over a perfect base failed to classify central"};
  out.phi = std::move(*phi);
  return out;
}

Expected<Mediating> mediating_morphism(const BraidedMorphism& f,
                                       const Phi& phi) {
  if (!same_base(f.target, phi.morphism.target))
    return Diagnostic{"mediating-precondition",
                      "extension and comparison morphism have different bases"};
  const BraidedExtClass cls = classify_braided_extension(f);
  if (!cls.morphism.pass())
    return Diagnostic{"mediating-precondition", "f is not a morphism"};
  if (!cls.central)
    return Diagnostic{"mediating-precondition", "f is not a central extension"};

  const BxPtr& x = f.source;
  const Index dn = phi.morphism.target->n()->dim();

  auto assemble = [&](const RatMatrix& sec)
      -> Expected<BraidedMorphism> {
    RatMatrix h1_sym(x->m()->dim(), dn * dn);
    RatMatrix h2_sym(x->n()->dim(), dn * dn);
    for (Index j = 0; j < dn; ++j)
      for (Index jp = 0; jp < dn; ++jp) {
        const RatVector nj = sec.col(j), njp = sec.col(jp);
        h1_sym.col(phi.square.pres->sym(j, jp)) = x->braiding.eval(nj, njp);
        h2_sym.col(phi.square.pres->sym(j, jp)) = x->n()->bracket(nj, njp);
      }
    auto h1 = generator_map(*phi.square.pres, h1_sym, x->m());
    if (!h1.ok()) return h1.error();
    auto h2 = generator_map(*phi.square.pres, h2_sym, x->n());
    if (!h2.ok()) return h2.error();
    return BraidedMorphism{phi.square.bxmod, x, *h1, *h2};
  };

  const RatMatrix section = right_inverse(f.f2.matrix);
  auto h = assemble(section);
  if (!h.ok()) return h.error();
  const Verdict morph = braided_morphism_check(*h);
  if (!morph.pass())
    return Diagnostic{"mediating-not-a-morphism", morph.summary()};

  Mediating out{*h, false, false};
  const BraidedMorphism composite = compose(f, *h);
  out.composite_matches = morphisms_equal(composite, phi.morphism);
  if (!out.composite_matches)
    return Diagnostic{"mediating-composite",
                      "f composed with the mediating morphism differs from the comparison morphism"};

  auto perturbed = assemble(perturb_section(section, f.f2.kernel()));
  if (!perturbed.ok()) return perturbed.error();
  out.section_independent = morphisms_equal(*perturbed, *h);
  if (!out.section_independent)
    return Diagnostic{"mediating-section-dependence",
                      "a kernel-perturbed preimage section changed the mediating morphism"};
  return out;
}

Expected<CompatibleUCE> compatible_uce(const BxPtr& bx) {
  if (!is_perfect_xmod(bx->xmod))
    return Diagnostic{"not-perfect-as-crossed-module",
                      "the compatible construction requires a perfect underlying crossed module"};
  const LiePtr& n = bx->n();
  const LiePtr& m = bx->m();
  const Index dn = n->dim(), dm = m->dim();

  // m * n = [d(m), n], the action of M on N induced by the boundary.
  std::vector<RatMatrix> star_mats;
  star_mats.reserve(static_cast<std::size_t>(dm));
  for (Index i = 0; i < dm; ++i)
    star_mats.push_back(n->ad_of(RatVector(bx->xmod.boundary.matrix.col(i))));
  const Action star{m, n, std::move(star_mats)};

  auto nm = build_nonabelian_tensor(n, m, bx->xmod.action, star);
  if (!nm.ok()) return nm.error();
  auto nn_square = tensor_square_braided(n);
  if (!nn_square.ok()) return nn_square.error();
  const TensorPtr nn = nn_square->pres;

  auto boundary = induced_hom(**nm, *nn, identity_hom(n), bx->xmod.boundary);
  if (!boundary.ok()) return boundary.error();

  const Index qm = (*nm)->quotient->dim();
  const Index qn = nn->quotient->dim();

  // (n (x) n') * (n'' (x) m) = [[n,n'],n''] (x) m + n'' (x) ([n,n'].m)
  auto act_sym = [&](Index sa, Index sb) -> RatVector {
    const Index j = sa / dn, jp = sa % dn;
    const Index js = sb / dm, i = sb % dm;
    const RatVector br = n->bracket_basis(j, jp);
    return (*nm)->pure(n->bracket(br, unit_vector(dn, js)),
                       unit_vector(dm, i)) +
           (*nm)->pure(unit_vector(dn, js),
                       RatVector(bx->xmod.action.of(br).col(i)));
  };
  auto act_bil = QuotientBilinear::build(nn, *nm, qm, act_sym, "induced-action");
  if (!act_bil.ok()) return act_bil.error();

  std::vector<RatMatrix> act_mats(static_cast<std::size_t>(qn),
                                  RatMatrix(qm, qm));
  for (Index a = 0; a < qn; ++a)
    for (Index b = 0; b < qm; ++b)
      act_mats[static_cast<std::size_t>(a)].col(b) =
          act_bil->eval_quotient(unit_vector(qn, a), unit_vector(qm, b));
  const Action action{nn->quotient, (*nm)->quotient, std::move(act_mats)};
  const Verdict va = verify_action(action);
  if (!va.pass()) return Diagnostic{"compatible-action", va.summary()};

  CrossedModule source_xmod{*boundary, action};
  const Verdict vx = verify_xmod(source_xmod);
  if (!vx.pass()) return Diagnostic{"compatible-xmod", vx.summary()};

  // {{ n (x) n', n'' (x) n''' }} = [n,n'] (x) {n'', n'''}
  auto braid_sym = [&](Index sa, Index sb) -> RatVector {
    const Index j = sa / dn, jp = sa % dn;
    const Index js = sb / dn, jt = sb % dn;
    return (*nm)->pure(n->bracket_basis(j, jp), bx->braiding.value(js, jt));
  };
  auto braid_bil =
      QuotientBilinear::build(nn, nn, qm, braid_sym, "induced-braiding");
  if (!braid_bil.ok()) return braid_bil.error();

  Braiding braid{qn, qm, RatMatrix(qn * qn, qm)};
  for (Index a = 0; a < qn; ++a)
    for (Index c = 0; c < qn; ++c)
      braid.values.row(braid.row_index(a, c)) =
          braid_bil->eval_quotient(unit_vector(qn, a), unit_vector(qn, c))
              .transpose();

  auto source = std::make_shared<BraidedXMod>(
      BraidedXMod{std::move(source_xmod), std::move(braid)});
  const Verdict vb = verify_braiding(*source);
  if (!vb.pass()) return Diagnostic{"compatible-braiding", vb.summary()};

  RatMatrix c1_sym(dm, dn * dm);
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < dm; ++i)
      c1_sym.col((*nm)->sym(j, i)) = bx->xmod.action.of_basis(j).col(i);
  RatMatrix c2_sym(dn, dn * dn);
  for (Index j = 0; j < dn; ++j)
    for (Index jp = 0; jp < dn; ++jp)
      c2_sym.col(nn->sym(j, jp)) = n->bracket_basis(j, jp);
  auto c1 = generator_map(**nm, c1_sym, m);
  if (!c1.ok()) return c1.error();
  auto c2 = generator_map(*nn, c2_sym, n);
  if (!c2.ok()) return c2.error();

  CompatibleUCE out{*nm, nn, source, BraidedMorphism{source, bx, *c1, *c2}, {}};
  const Verdict morph = braided_morphism_check(out.c);
  if (!morph.pass())
    return Diagnostic{"compatible-not-a-morphism", morph.summary()};
  out.classification = classify_braided_extension(out.c);
  if (!out.classification.compatible_central)
    return Diagnostic{"compatible-not-compatible-central",
                      "the compatible construction failed its classification"};
  return out;
}

Expected<Mediating> compatible_mediating(const BraidedMorphism& f,
                                         const CompatibleUCE& comp) {
  if (!same_base(f.target, comp.c.target))
    return Diagnostic{"mediating-precondition",
                      "extension and compatible construction have different bases"};
  const BraidedExtClass cls = classify_braided_extension(f);
  if (!cls.morphism.pass())
    return Diagnostic{"mediating-precondition", "f is not a morphism"};
  if (!cls.compatible_central)
    return Diagnostic{"mediating-precondition",
                      "f is not a compatible central extension"};

  const BxPtr& x = f.source;
  const LiePtr& base_n = comp.c.target->n();
  const LiePtr& base_m = comp.c.target->m();
  const Index dn = base_n->dim(), dm = base_m->dim();

  auto assemble = [&](const RatMatrix& sec1, const RatMatrix& sec2)
      -> Expected<BraidedMorphism> {
    RatMatrix h1_sym(x->m()->dim(), dn * dm);
    for (Index j = 0; j < dn; ++j)
      for (Index i = 0; i < dm; ++i)
        h1_sym.col(comp.nm->sym(j, i)) =
            x->xmod.action.act(RatVector(sec2.col(j)), RatVector(sec1.col(i)));
    RatMatrix h2_sym(x->n()->dim(), dn * dn);
    for (Index j = 0; j < dn; ++j)
      for (Index jp = 0; jp < dn; ++jp)
        h2_sym.col(comp.nn->sym(j, jp)) =
            x->n()->bracket(RatVector(sec2.col(j)), RatVector(sec2.col(jp)));
    auto h1 = generator_map(*comp.nm, h1_sym, x->m());
    if (!h1.ok()) return h1.error();
    auto h2 = generator_map(*comp.nn, h2_sym, x->n());
    if (!h2.ok()) return h2.error();
    return BraidedMorphism{comp.source, x, *h1, *h2};
  };

  const RatMatrix sec1 = right_inverse(f.f1.matrix);
  const RatMatrix sec2 = right_inverse(f.f2.matrix);
  auto h = assemble(sec1, sec2);
  if (!h.ok()) return h.error();
  const Verdict morph = braided_morphism_check(*h);
  if (!morph.pass())
    return Diagnostic{"mediating-not-a-morphism", morph.summary()};

  Mediating out{*h, false, false};
  out.composite_matches = morphisms_equal(compose(f, *h), comp.c);
  if (!out.composite_matches)
    return Diagnostic{"mediating-composite",
                      "f composed with the mediating morphism differs from the compatible construction"};

  auto perturbed = assemble(perturb_section(sec1, f.f1.kernel()),
                            perturb_section(sec2, f.f2.kernel()));
  if (!perturbed.ok()) return perturbed.error();
  out.section_independent = morphisms_equal(*perturbed, *h);
  if (!out.section_independent)
    return Diagnostic{"mediating-section-dependence",
                      "a kernel-perturbed preimage section changed the mediating morphism"};
  return out;
}

Expected<CompareUCE> compare_uce(const BxPtr& bx) {
  if (!is_perfect_braided(*bx))
    return Diagnostic{"not-perfect", "comparison requires a perfect braided crossed module"};
  if (!is_perfect_xmod(bx->xmod))
    return Diagnostic{"perfectness-transfer",
                      "perfect braided crossed module is not perfect as a crossed module"};
  auto phi = build_phi(bx);
  if (!phi.ok()) return phi.error();
  auto comp = compatible_uce(bx);
  if (!comp.ok()) return comp.error();
  if (!classify_braided_extension(comp->c).central)
    return Diagnostic{"compatible-not-central",
                      "over a perfect base the compatible construction must be central"};

  auto med_h = mediating_morphism(comp->c, *phi);
  if (!med_h.ok()) return med_h.error();
  auto med_hp = compatible_mediating(phi->morphism, *comp);
  if (!med_hp.ok()) return med_hp.error();

  CompareUCE out{std::move(*phi), std::move(*comp), med_h->h, med_hp->h,
                 false, false, false};
  const BraidedMorphism hp_h = compose(out.hp, out.h);
  const BraidedMorphism h_hp = compose(out.h, out.hp);
  out.inverse_pair = is_identity(hp_h.f1) && is_identity(hp_h.f2) &&
                     is_identity(h_hp.f1) && is_identity(h_hp.f2);
  out.phi_factors = morphisms_equal(compose(out.comp.c, out.h), out.phi.morphism);
  out.c_factors = morphisms_equal(compose(out.phi.morphism, out.hp), out.comp.c);
  return out;
}

PerfectActorReport check_perfect_actor_identities(const BxPtr& bx) {
  PerfectActorReport out;
  out.applicable = derived_subalgebra(*bx->n()).is_full();
  if (!out.applicable) return out;
  const BraidedCommutator bc = braided_commutator(*bx);
  out.b_equals_d = (bc.b == bc.d);
  const BraidedCenter c = braided_center(*bx);
  const Subspace zst = intersect(stabilizer(bx->xmod), center(*bx->n()));
  out.zb_equals_zst = (c.zb == zst);
  return out;
}

UniquenessProbe uniqueness_probe(const BraidedMorphism& f,
                                 const BraidedMorphism& g,
                                 const BraidedMorphism& h) {
  UniquenessProbe out;
  out.composites_match = morphisms_equal(compose(f, g), compose(f, h));
  out.source_perfect = is_perfect_braided(*g.source);
  out.g_equals_h = morphisms_equal(g, h);
  return out;
}

}  // namespace xmodlie
