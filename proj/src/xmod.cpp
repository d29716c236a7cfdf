#include "xmodlie/xmod.hpp"

namespace xmodlie {

namespace {

bool maps_into(const RatMatrix& m, const Subspace& domain_sub,
               const Subspace& target_sub) {
  for (Index k = 0; k < domain_sub.dim(); ++k)
    if (!target_sub.contains(
            RatVector(m * domain_sub.basis().row(k).transpose())))
      return false;
  return true;
}

bool action_maps_into(const Action& act, const Subspace& actor_sub,
                      const Subspace& module_sub) {
  for (Index a = 0; a < actor_sub.dim(); ++a) {
    const RatMatrix m = act.of(RatVector(actor_sub.basis().row(a).transpose()));
    for (Index b = 0; b < module_sub.dim(); ++b)
      if (!module_sub.contains(
              RatVector(m * module_sub.basis().row(b).transpose())))
        return false;
  }
  return true;
}

}  // namespace

Verdict verify_xmod(const CrossedModule& x) {
  Verdict v;
  const Index dm = x.m()->dim(), dn = x.n()->dim();
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < dm; ++i) {
      RatVector lhs = x.boundary.apply(RatVector(x.action.of_basis(j).col(i)));
      RatVector rhs = x.n()->bracket(unit_vector(dn, j),
                                     RatVector(x.boundary.matrix.col(i)));
      if (!exactly_equal(lhs, rhs)) v.fail("equivariance", {j, i});
    }
  for (Index i = 0; i < dm; ++i) {
    const RatMatrix peiffer =
        x.action.of(RatVector(x.boundary.matrix.col(i)));
    for (Index ip = 0; ip < dm; ++ip)
      if (!exactly_equal(RatVector(peiffer.col(ip)),
                         x.m()->bracket_basis(i, ip)))
        v.fail("peiffer", {i, ip});
  }
  return v;
}

Subspace fixed_points(const CrossedModule& x) {
  return action_fixed_points(x.action);
}

Subspace stabilizer(const CrossedModule& x) {
  return action_stabilizer(x.action);
}

SubmodulePairFlags submodule_flags(const CrossedModule& x, const Subspace& s,
                                   const Subspace& t) {
  SubmodulePairFlags f;
  f.m_subalgebra = bracket_closed(*x.m(), s);
  f.n_subalgebra = bracket_closed(*x.n(), t);
  f.boundary_into = maps_into(x.boundary.matrix, s, t);
  f.action_restricts = action_maps_into(x.action, t, s);
  return f;
}

CenterPair xmod_center(const CrossedModule& x) {
  CenterPair c{fixed_points(x),
               intersect(stabilizer(x), center(*x.n())),
               {}};
  c.flags = submodule_flags(x, c.fixed, c.zst);
  return c;
}

CommutatorPair xmod_commutator(const CrossedModule& x) {
  CommutatorPair c{subalgebra_closure(*x.m(), action_value_span(x.action)),
                   derived_subalgebra(*x.n()),
                   {},
                   false};
  c.flags = submodule_flags(x, c.d, c.derived);
  c.d_ideal = bracket_stable(*x.m(), c.d);
  return c;
}

bool is_perfect_xmod(const CrossedModule& x) {
  const CommutatorPair c = xmod_commutator(x);
  return c.d.is_full() && c.derived.is_full();
}

XModMorphism xmod_identity(const XModPtr& x) {
  return {x, x, identity_hom(x->m()), identity_hom(x->n())};
}

Verdict xmod_morphism_check(const XModMorphism& f) {
  Verdict v;
  v.absorb(hom_check(f.f1));
  v.absorb(hom_check(f.f2));
  const Index dn = f.source->n()->dim(), dm = f.source->m()->dim();
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < dm; ++i) {
      RatVector lhs = f.f1.apply(RatVector(f.source->action.of_basis(j).col(i)));
      RatVector rhs = f.target->action.act(RatVector(f.f2.matrix.col(j)),
                                           RatVector(f.f1.matrix.col(i)));
      if (!exactly_equal(lhs, rhs)) v.fail("XLieH1", {j, i});
    }
  if (!exactly_equal(RatMatrix(f.target->boundary.matrix * f.f1.matrix),
                     RatMatrix(f.f2.matrix * f.source->boundary.matrix)))
    v.fail("XLieH2");
  return v;
}

XModExtClass classify_xmod_extension(const XModMorphism& f) {
  XModExtClass out;
  out.morphism = xmod_morphism_check(f);
  out.ker1 = f.f1.kernel();
  out.ker2 = f.f2.kernel();
  const CenterPair c = xmod_center(*f.source);
  out.fixed = c.fixed;
  out.zst = c.zst;
  if (!out.morphism.pass()) return out;
  out.extension = f.f1.surjective() && f.f2.surjective();
  out.central = out.extension && out.fixed.contains(out.ker1) &&
                out.zst.contains(out.ker2);
  return out;
}

XModProduct product_xmod(const XModPtr& x, const XModPtr& y) {
  XModProduct out;
  out.m_sum = direct_sum(x->m(), y->m());
  out.n_sum = direct_sum(x->n(), y->n());
  const Index dmx = x->m()->dim(), dmy = y->m()->dim();
  const Index dnx = x->n()->dim(), dny = y->n()->dim();

  RatMatrix boundary = RatMatrix::Zero(dnx + dny, dmx + dmy);
  boundary.topLeftCorner(dnx, dmx) = x->boundary.matrix;
  boundary.bottomRightCorner(dny, dmy) = y->boundary.matrix;

  std::vector<RatMatrix> mats(static_cast<std::size_t>(dnx + dny),
                              RatMatrix::Zero(dmx + dmy, dmx + dmy));
  for (Index j = 0; j < dnx; ++j)
    mats[static_cast<std::size_t>(j)].topLeftCorner(dmx, dmx) =
        x->action.of_basis(j);
  for (Index j = 0; j < dny; ++j)
    mats[static_cast<std::size_t>(dnx + j)].bottomRightCorner(dmy, dmy) =
        y->action.of_basis(j);

  auto prod = std::make_shared<CrossedModule>(CrossedModule{
      LieHom{out.m_sum.algebra, out.n_sum.algebra, std::move(boundary)},
      Action{out.n_sum.algebra, out.m_sum.algebra, std::move(mats)}});
  out.prod = prod;
  out.proj1 = {prod, x, out.m_sum.proj_left, out.n_sum.proj_left};
  out.proj2 = {prod, y, out.m_sum.proj_right, out.n_sum.proj_right};
  out.incl1 = {x, prod, out.m_sum.incl_left, out.n_sum.incl_left};
  out.incl2 = {y, prod, out.m_sum.incl_right, out.n_sum.incl_right};
  return out;
}

Expected<XModQuotient> quotient_xmod(const XModPtr& x, const Subspace& i1,
                                     const Subspace& i2) {
  if (!maps_into(x->boundary.matrix, i1, i2))
    return Diagnostic{"quotient-precondition",
                      "boundary does not map the first ideal into the second"};
  if (!action_maps_into(x->action, Subspace::full(x->n()->dim()), i1))
    return Diagnostic{"quotient-precondition",
                      "action of N does not stabilize the first ideal"};
  // I2 . M inside I1
  for (Index a = 0; a < i2.dim(); ++a) {
    const RatMatrix m = x->action.of(RatVector(i2.basis().row(a).transpose()));
    for (Index i = 0; i < x->m()->dim(); ++i)
      if (!i1.contains(RatVector(m.col(i))))
        return Diagnostic{"quotient-precondition",
                          "second ideal does not act into the first"};
  }
  auto qm = quotient_lie(x->m(), i1);
  if (!qm.ok())
    return Diagnostic{"quotient-precondition",
                      "first component: " + qm.error().to_string()};
  auto qn = quotient_lie(x->n(), i2);
  if (!qn.ok())
    return Diagnostic{"quotient-precondition",
                      "second component: " + qn.error().to_string()};

  RatMatrix boundary = qn->proj.matrix * x->boundary.matrix * qm->section;
  std::vector<RatMatrix> mats;
  mats.reserve(static_cast<std::size_t>(qn->algebra->dim()));
  for (Index j = 0; j < qn->algebra->dim(); ++j)
    mats.push_back(qm->proj.matrix *
                   x->action.of(RatVector(qn->section.col(j))) * qm->section);
  auto quot = std::make_shared<CrossedModule>(CrossedModule{
      LieHom{qm->algebra, qn->algebra, std::move(boundary)},
      Action{qn->algebra, qm->algebra, std::move(mats)}});
  return XModQuotient{
      quot,
      XModMorphism{x, quot, qm->proj, qn->proj},
      qm->section, qn->section};
}

Expected<XModSub> crossed_submodule(const XModPtr& x, const Subspace& s,
                                    const Subspace& t) {
  const SubmodulePairFlags flags = submodule_flags(*x, s, t);
  if (!flags.crossed_submodule())
    return Diagnostic{"not-a-crossed-submodule",
                      std::string(!flags.m_subalgebra ? "first component not a subalgebra"
                          : !flags.n_subalgebra ? "second component not a subalgebra"
                          : !flags.boundary_into ? "boundary leaves the pair"
                                                 : "action does not restrict")};
  auto sm = restrict_lie(x->m(), s);
  auto sn = restrict_lie(x->n(), t);
  if (!sm.ok() || !sn.ok())
    return Diagnostic{"not-a-crossed-submodule", "component restriction failed"};

  // boundary in sub coordinates: coords_t(d(basis of s))
  RatMatrix boundary(t.dim(), s.dim());
  for (Index i = 0; i < s.dim(); ++i)
    boundary.col(i) = t.coords(
        RatVector(x->boundary.matrix * s.basis().row(i).transpose()));
  std::vector<RatMatrix> mats;
  mats.reserve(static_cast<std::size_t>(t.dim()));
  for (Index j = 0; j < t.dim(); ++j) {
    RatMatrix mj(s.dim(), s.dim());
    const RatMatrix big = x->action.of(RatVector(t.basis().row(j).transpose()));
    for (Index i = 0; i < s.dim(); ++i)
      mj.col(i) = s.coords(RatVector(big * s.basis().row(i).transpose()));
    mats.push_back(std::move(mj));
  }
  auto sub = std::make_shared<CrossedModule>(CrossedModule{
      LieHom{sm->algebra, sn->algebra, std::move(boundary)},
      Action{sn->algebra, sm->algebra, std::move(mats)}});
  return XModSub{sub, XModMorphism{sub, x, sm->include, sn->include}};
}

}  // namespace xmodlie
