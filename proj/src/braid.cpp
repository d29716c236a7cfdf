#include "xmodlie/braid.hpp"

namespace xmodlie {

RatVector Braiding::eval(const RatVector& x, const RatVector& y) const {
  RatVector out = RatVector::Zero(module_dim);
  for (Index j = 0; j < actor_dim; ++j) {
    if (x(j) == 0) continue;
    for (Index jp = 0; jp < actor_dim; ++jp) {
      if (y(jp) == 0) continue;
      out += (x(j) * y(jp)) * value(j, jp);
    }
  }
  return out;
}

RatMatrix Braiding::left_matrix(const RatVector& x) const {
  RatMatrix out(module_dim, actor_dim);
  for (Index jp = 0; jp < actor_dim; ++jp) {
    RatVector col = RatVector::Zero(module_dim);
    for (Index j = 0; j < actor_dim; ++j)
      if (x(j) != 0) col += x(j) * value(j, jp);
    out.col(jp) = col;
  }
  return out;
}

RatMatrix Braiding::right_matrix(const RatVector& y) const {
  RatMatrix out(module_dim, actor_dim);
  for (Index j = 0; j < actor_dim; ++j) {
    RatVector col = RatVector::Zero(module_dim);
    for (Index jp = 0; jp < actor_dim; ++jp)
      if (y(jp) != 0) col += y(jp) * value(j, jp);
    out.col(j) = col;
  }
  return out;
}

BxPtr identity_braided(const LiePtr& L) {
  const Index n = L->dim();
  Braiding b{n, n, RatMatrix(n * n, n)};
  for (Index j = 0; j < n; ++j)
    for (Index jp = 0; jp < n; ++jp)
      b.values.row(b.row_index(j, jp)) = L->bracket_basis(j, jp).transpose();
  return std::make_shared<BraidedXMod>(
      BraidedXMod{CrossedModule{identity_hom(L), adjoint_action(L)},
                  std::move(b)});
}

Verdict verify_braiding(const BraidedXMod& bx) {
  Verdict v;
  const Index dn = bx.n()->dim(), dm = bx.m()->dim();
  const RatMatrix& d = bx.xmod.boundary.matrix;
  const Braiding& br = bx.braiding;

  for (Index j = 0; j < dn; ++j)
    for (Index jp = 0; jp < dn; ++jp)
      if (!exactly_equal(RatVector(d * br.value(j, jp)),
                         bx.n()->bracket_basis(j, jp)))
        v.fail("BLie1", {j, jp});

  for (Index i = 0; i < dm; ++i)
    for (Index ip = 0; ip < dm; ++ip)
      if (!exactly_equal(
              br.eval(RatVector(d.col(i)), RatVector(d.col(ip))),
              bx.m()->bracket_basis(i, ip)))
        v.fail("BLie2", {i, ip});

  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) {
      if (!exactly_equal(
              br.eval(RatVector(d.col(i)), unit_vector(dn, j)),
              RatVector(-bx.xmod.action.of_basis(j).col(i))))
        v.fail("BLie3", {i, j});
      if (!exactly_equal(
              br.eval(unit_vector(dn, j), RatVector(d.col(i))),
              RatVector(bx.xmod.action.of_basis(j).col(i))))
        v.fail("BLie4", {j, i});
    }

  for (Index j = 0; j < dn; ++j)
    for (Index jp = 0; jp < dn; ++jp)
      for (Index js = 0; js < dn; ++js) {
        RatVector lhs5 =
            br.eval(unit_vector(dn, j), bx.n()->bracket_basis(jp, js));
        RatVector rhs5 =
            br.eval(bx.n()->bracket_basis(j, jp), unit_vector(dn, js)) -
            br.eval(bx.n()->bracket_basis(j, js), unit_vector(dn, jp));
        if (!exactly_equal(lhs5, rhs5)) v.fail("BLie5", {j, jp, js});

        RatVector lhs6 =
            br.eval(bx.n()->bracket_basis(j, jp), unit_vector(dn, js));
        RatVector rhs6 =
            br.eval(unit_vector(dn, j), bx.n()->bracket_basis(jp, js)) -
            br.eval(unit_vector(dn, jp), bx.n()->bracket_basis(j, js));
        if (!exactly_equal(lhs6, rhs6)) v.fail("BLie6", {j, jp, js});
      }
  return v;
}

BraidedCenter braided_center(const BraidedXMod& bx) {
  const Index dn = bx.n()->dim(), dm = bx.m()->dim();
  // n lies in Z_B iff {n, e_jp} = 0 for all jp and {e_j, n} = 0 for all j.
  RatMatrix stacked(2 * dn * dm, dn);
  for (Index jp = 0; jp < dn; ++jp)
    stacked.middleRows(jp * dm, dm) = bx.braiding.right_matrix(unit_vector(dn, jp));
  for (Index j = 0; j < dn; ++j)
    stacked.middleRows(dn * dm + j * dm, dm) =
        bx.braiding.left_matrix(unit_vector(dn, j));
  BraidedCenter out{fixed_points(bx.xmod), kernel_basis(stacked), false};

  // Remark: M^N = {m : d(m) in Z_B(N)}, via the quotient map of Z_B.
  const QuotientMap q = quotient(dn, out.zb);
  const Subspace preim = kernel_basis(RatMatrix(q.proj * bx.xmod.boundary.matrix));
  out.fixed_matches_boundary_preimage = (preim == out.fixed);
  return out;
}

BraidedCommutator braided_commutator(const BraidedXMod& bx) {
  BraidedCommutator out;
  out.b = subalgebra_closure(
      *bx.m(), row_space(bx.braiding.values));
  const CommutatorPair cp = xmod_commutator(bx.xmod);
  out.d = cp.d;
  out.mm = derived_subalgebra(*bx.m());
  out.derived = cp.derived;
  out.chain_holds = out.d.contains(out.mm) && out.b.contains(out.d);
  out.b_ideal = bracket_stable(*bx.m(), out.b);
  return out;
}

bool is_perfect_braided(const BraidedXMod& bx) {
  const BraidedCommutator c = braided_commutator(bx);
  return c.b.is_full() && c.derived.is_full();
}

XModMorphism BraidedMorphism::underlying() const {
  return {std::make_shared<CrossedModule>(source->xmod),
          std::make_shared<CrossedModule>(target->xmod), f1, f2};
}

BraidedMorphism braided_identity(const BxPtr& bx) {
  return {bx, bx, identity_hom(bx->m()), identity_hom(bx->n())};
}

BraidedMorphism compose(const BraidedMorphism& g, const BraidedMorphism& f) {
  return {f.source, g.target, compose(g.f1, f.f1), compose(g.f2, f.f2)};
}

Verdict braided_morphism_check(const BraidedMorphism& f) {
  Verdict v = xmod_morphism_check(f.underlying());
  const Index dn = f.source->n()->dim();
  for (Index j = 0; j < dn; ++j)
    for (Index jp = 0; jp < dn; ++jp) {
      RatVector lhs = f.f1.matrix * f.source->braiding.value(j, jp);
      RatVector rhs = f.target->braiding.eval(RatVector(f.f2.matrix.col(j)),
                                              RatVector(f.f2.matrix.col(jp)));
      if (!exactly_equal(lhs, rhs)) v.fail("BXLieH3", {j, jp});
    }
  return v;
}

BraidedExtClass classify_braided_extension(const BraidedMorphism& f) {
  BraidedExtClass out;
  out.morphism = braided_morphism_check(f);
  out.ker1 = f.f1.kernel();
  out.ker2 = f.f2.kernel();
  const BraidedCenter c = braided_center(*f.source);
  out.fixed = c.fixed;
  out.zb = c.zb;
  out.zst = intersect(stabilizer(f.source->xmod), center(*f.source->n()));
  if (!out.morphism.pass()) return out;
  out.extension = f.f1.surjective() && f.f2.surjective();
  if (!out.extension) return out;
  const bool ker1_central = out.fixed.contains(out.ker1);
  out.central = ker1_central && out.zb.contains(out.ker2);
  out.compatible_central = ker1_central && out.zst.contains(out.ker2);
  return out;
}

BraidedProduct product_braided(const BxPtr& x, const BxPtr& y) {
  const XModProduct xp =
      product_xmod(std::make_shared<CrossedModule>(x->xmod),
                   std::make_shared<CrossedModule>(y->xmod));
  const Index dnx = x->n()->dim(), dny = y->n()->dim();
  const Index dmx = x->m()->dim(), dmy = y->m()->dim();
  const Index dn = dnx + dny, dm = dmx + dmy;
  Braiding b{dn, dm, RatMatrix::Zero(dn * dn, dm)};
  for (Index j = 0; j < dnx; ++j)
    for (Index jp = 0; jp < dnx; ++jp)
      b.values.row(b.row_index(j, jp)).head(dmx) =
          x->braiding.value(j, jp).transpose();
  for (Index j = 0; j < dny; ++j)
    for (Index jp = 0; jp < dny; ++jp)
      b.values.row(b.row_index(dnx + j, dnx + jp)).tail(dmy) =
          y->braiding.value(j, jp).transpose();

  BraidedProduct out;
  auto prod = std::make_shared<BraidedXMod>(
      BraidedXMod{*xp.prod, std::move(b)});
  out.prod = prod;
  out.proj1 = {prod, x, xp.proj1.f1, xp.proj1.f2};
  out.proj2 = {prod, y, xp.proj2.f1, xp.proj2.f2};
  out.incl1 = {x, prod, xp.incl1.f1, xp.incl1.f2};
  out.incl2 = {y, prod, xp.incl2.f1, xp.incl2.f2};
  return out;
}

BraidedMorphism pair_braided(const BraidedProduct& prod,
                             const BraidedMorphism& f,
                             const BraidedMorphism& g) {
  if (f.source->m()->dim() != g.source->m()->dim() ||
      f.source->n()->dim() != g.source->n()->dim())
    throw XmodError(ErrorKind::internal, "pair_braided: source mismatch");
  RatMatrix m1(f.f1.matrix.rows() + g.f1.matrix.rows(), f.f1.matrix.cols());
  m1.topRows(f.f1.matrix.rows()) = f.f1.matrix;
  m1.bottomRows(g.f1.matrix.rows()) = g.f1.matrix;
  RatMatrix m2(f.f2.matrix.rows() + g.f2.matrix.rows(), f.f2.matrix.cols());
  m2.topRows(f.f2.matrix.rows()) = f.f2.matrix;
  m2.bottomRows(g.f2.matrix.rows()) = g.f2.matrix;
  return {f.source, prod.prod,
          LieHom{f.source->m(), prod.prod->m(), std::move(m1)},
          LieHom{f.source->n(), prod.prod->n(), std::move(m2)}};
}

Expected<BraidedQuotient> quotient_braided(const BxPtr& bx, const Subspace& i1,
                                           const Subspace& i2) {
  const Index dn = bx->n()->dim();
  for (Index a = 0; a < i2.dim(); ++a) {
    const RatVector k = i2.basis().row(a).transpose();
    for (Index j = 0; j < dn; ++j) {
      if (!i1.contains(bx->braiding.eval(k, unit_vector(dn, j))))
        return Diagnostic{"quotient-precondition",
                          "braiding values {I2, N} leave the first ideal"};
      if (!i1.contains(bx->braiding.eval(unit_vector(dn, j), k)))
        return Diagnostic{"quotient-precondition",
                          "braiding values {N, I2} leave the first ideal"};
    }
  }
  auto xq = quotient_xmod(std::make_shared<CrossedModule>(bx->xmod), i1, i2);
  if (!xq.ok()) return xq.error();

  const Index qn = xq->quot->n()->dim(), qm = xq->quot->m()->dim();
  Braiding b{qn, qm, RatMatrix(qn * qn, qm)};
  for (Index a = 0; a < qn; ++a)
    for (Index c = 0; c < qn; ++c)
      b.values.row(b.row_index(a, c)) =
          (xq->proj.f1.matrix *
           bx->braiding.eval(RatVector(xq->section_n.col(a)),
                             RatVector(xq->section_n.col(c))))
              .transpose();
  auto quot = std::make_shared<BraidedXMod>(
      BraidedXMod{*xq->quot, std::move(b)});
  return BraidedQuotient{
      quot, BraidedMorphism{bx, quot, xq->proj.f1, xq->proj.f2}};
}

Expected<BraidedQuotient> cokernel_of_commutator(const BxPtr& bx) {
  const BraidedCommutator c = braided_commutator(*bx);
  return quotient_braided(bx, c.b, c.derived);
}

Expected<BraidedSub> braided_submodule(const BxPtr& bx, const Subspace& s,
                                       const Subspace& t) {
  for (Index a = 0; a < t.dim(); ++a)
    for (Index c = 0; c < t.dim(); ++c)
      if (!s.contains(bx->braiding.eval(RatVector(t.basis().row(a).transpose()),
                                        RatVector(t.basis().row(c).transpose()))))
        return Diagnostic{"not-a-braided-submodule",
                          "braiding values of the pair leave the first component"};
  auto xs = crossed_submodule(std::make_shared<CrossedModule>(bx->xmod), s, t);
  if (!xs.ok()) return xs.error();

  const Index td = t.dim();
  Braiding b{td, s.dim(), RatMatrix(td * td, s.dim())};
  for (Index a = 0; a < td; ++a)
    for (Index c = 0; c < td; ++c)
      b.values.row(b.row_index(a, c)) =
          s.coords(bx->braiding.eval(RatVector(t.basis().row(a).transpose()),
                                     RatVector(t.basis().row(c).transpose())))
              .transpose();
  auto sub = std::make_shared<BraidedXMod>(
      BraidedXMod{*xs->sub, std::move(b)});
  return BraidedSub{sub, BraidedMorphism{sub, bx, xs->incl.f1, xs->incl.f2}};
}

Expected<NonPerfectWitness> non_perfect_witness(const BraidedMorphism& psi) {
  const BraidedExtClass cls = classify_braided_extension(psi);
  if (!cls.morphism.pass())
    return Diagnostic{"witness-precondition", "psi is not a morphism"};
  if (!cls.central)
    return Diagnostic{"witness-precondition", "psi is not a central extension"};
  auto coker = cokernel_of_commutator(psi.source);
  if (!coker.ok())
    return Diagnostic{"witness-internal", coker.error().to_string()};
  if (coker->quot->m()->dim() == 0 && coker->quot->n()->dim() == 0)
    return Diagnostic{"source-perfect",
                      "the cokernel of the commutator is zero, so h = g"};

  NonPerfectWitness out;
  const BraidedProduct prod = product_braided(psi.target, coker->quot);
  out.product = prod.prod;
  out.pi1 = prod.proj1;
  BraidedMorphism zero{psi.source, coker->quot,
                       zero_hom(psi.source->m(), coker->quot->m()),
                       zero_hom(psi.source->n(), coker->quot->n())};
  out.h = pair_braided(prod, psi, zero);
  out.g = pair_braided(prod, psi, coker->proj);
  const BraidedMorphism ph = compose(out.pi1, out.h);
  const BraidedMorphism pg = compose(out.pi1, out.g);
  out.composites_match = exactly_equal(ph.f1.matrix, psi.f1.matrix) &&
                         exactly_equal(ph.f2.matrix, psi.f2.matrix) &&
                         exactly_equal(pg.f1.matrix, psi.f1.matrix) &&
                         exactly_equal(pg.f2.matrix, psi.f2.matrix);
  out.h_differs_from_g = !exactly_equal(out.h.f1.matrix, out.g.f1.matrix) ||
                         !exactly_equal(out.h.f2.matrix, out.g.f2.matrix);
  out.pi1_class = classify_braided_extension(out.pi1);
  return out;
}

}  // namespace xmodlie
