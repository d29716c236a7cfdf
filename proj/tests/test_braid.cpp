#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "xmodlie/corpus.hpp"

using namespace xmodlie;
using namespace xmodlie::testutil;

namespace {

BxPtr k3_tensor() {
  static BxPtr bx = tensor_braided(builtin::abelian(3)).value_or_throw().bxmod;
  return bx;
}

BxPtr k2_tensor() {
  static BxPtr bx = tensor_braided(builtin::abelian(2)).value_or_throw().bxmod;
  return bx;
}

BxPtr sl2_tensor() {
  static BxPtr bx = tensor_braided(builtin::sl2()).value_or_throw().bxmod;
  return bx;
}

/// Independent evaluation of {x, y} by raw loops over the value tensor.
RatVector naive_eval(const BraidedXMod& bx, const RatVector& x,
                     const RatVector& y) {
  const Index dn = bx.n()->dim(), dm = bx.m()->dim();
  RatVector out = RatVector::Zero(dm);
  for (Index j = 0; j < dn; ++j)
    for (Index jp = 0; jp < dn; ++jp)
      for (Index i = 0; i < dm; ++i)
        out(i) += x(j) * y(jp) * bx.braiding.values(j * dn + jp, i);
  return out;
}

/// Independent bracket via raw structure constants.
RatVector naive_bracket(const LieAlgebra& L, const RatVector& x,
                        const RatVector& y) {
  RatVector out = RatVector::Zero(L.dim());
  for (Index i = 0; i < L.dim(); ++i)
    for (Index j = 0; j < L.dim(); ++j)
      for (Index k = 0; k < L.dim(); ++k) out(k) += x(i) * y(j) * L.c(i, j, k);
  return out;
}

}  // namespace

TEST_CASE("verify_braiding on the canonical examples") {
  CHECK(verify_braiding(*identity_braided(builtin::sl2())).pass());
  CHECK(verify_braiding(*identity_braided(builtin::heisenberg())).pass());
  CHECK(verify_braiding(*k3_tensor()).pass());
  CHECK(verify_braiding(*k2_tensor()).pass());
  CHECK(verify_braiding(*sl2_tensor()).pass());
}

TEST_CASE("a flipped sign breaks BLie1") {
  const BxPtr good = identity_braided(builtin::sl2());
  BraidedXMod bad = *good;
  bad.braiding.values.row(bad.braiding.row_index(0, 1)) *= -1;
  const Verdict v = verify_braiding(bad);
  REQUIRE(!v.pass());
  CHECK(v.violations()[0].axiom == "BLie1");
}

TEST_CASE("BLie5 and BLie6 match an independent naive contraction") {
  Rng rng(42);
  for (const BxPtr& bx : {identity_braided(builtin::sl2()), k3_tensor()}) {
    const Index dn = bx->n()->dim();
    for (int t = 0; t < 8; ++t) {
      const RatVector x = rng.vector(dn), y = rng.vector(dn),
                      z = rng.vector(dn);
      // BLie5: {x,[y,z]} = {[x,y],z} - {[x,z],y}
      const RatVector lhs5 = naive_eval(*bx, x, naive_bracket(*bx->n(), y, z));
      const RatVector rhs5 =
          naive_eval(*bx, naive_bracket(*bx->n(), x, y), z) -
          naive_eval(*bx, naive_bracket(*bx->n(), x, z), y);
      CHECK(exactly_equal(lhs5, rhs5));
      // BLie6: {[x,y],z} = {x,[y,z]} - {y,[x,z]}
      const RatVector lhs6 = naive_eval(*bx, naive_bracket(*bx->n(), x, y), z);
      const RatVector rhs6 =
          naive_eval(*bx, x, naive_bracket(*bx->n(), y, z)) -
          naive_eval(*bx, y, naive_bracket(*bx->n(), x, z));
      CHECK(exactly_equal(lhs6, rhs6));
      // the naive path agrees with the production evaluation
      CHECK(exactly_equal(naive_eval(*bx, x, y), bx->braiding.eval(x, y)));
    }
  }
}

TEST_CASE("braided center") {
  {
    const BraidedCenter c = braided_center(*k3_tensor());
    CHECK(c.zb.dim() == 0);
    CHECK(c.fixed.dim() == 9);
    CHECK(c.fixed_matches_boundary_preimage);
  }
  {
    const BraidedCenter c = braided_center(*identity_braided(builtin::abelian(3)));
    CHECK(c.zb.is_full());
    CHECK(c.fixed.is_full());
  }
  {
    const BraidedCenter c = braided_center(*identity_braided(builtin::sl2()));
    CHECK(c.zb.dim() == 0);
    CHECK(c.fixed.dim() == 0);
  }
}

TEST_CASE("braided center remark inclusions hold on every instance") {
  for (const BxPtr& bx :
       {identity_braided(builtin::sl2()), identity_braided(builtin::heisenberg()),
        identity_braided(builtin::abelian(2)), k2_tensor(), k3_tensor(),
        sl2_tensor()}) {
    const BraidedCenter c = braided_center(*bx);
    const Subspace zst = intersect(stabilizer(bx->xmod), center(*bx->n()));
    CHECK(zst.contains(c.zb));
    CHECK(center(*bx->m()).contains(c.fixed));
    CHECK(c.fixed_matches_boundary_preimage);
  }
}

TEST_CASE("braided commutator") {
  {
    const BraidedCommutator c =
        braided_commutator(*identity_braided(builtin::abelian(3)));
    CHECK(c.b.dim() == 0);
    CHECK(c.derived.dim() == 0);
  }
  {
    const BraidedCommutator c = braided_commutator(*k2_tensor());
    CHECK(c.b.is_full());  // generators m (x) m' span all of K2 (x) K2
    CHECK(c.derived.dim() == 0);
  }
  {
    const BraidedCommutator c = braided_commutator(*identity_braided(builtin::sl2()));
    CHECK(c.b.is_full());
    CHECK(c.derived.is_full());
  }
  for (const BxPtr& bx : {identity_braided(builtin::sl2()),
                          identity_braided(builtin::heisenberg()), k3_tensor(),
                          sl2_tensor()}) {
    const BraidedCommutator c = braided_commutator(*bx);
    CHECK(c.chain_holds);  // [M,M] inside D inside B
    CHECK(c.b_ideal);
  }
}

TEST_CASE("is_perfect_braided") {
  CHECK(is_perfect_braided(*identity_braided(builtin::sl2())));
  CHECK(!is_perfect_braided(*identity_braided(builtin::abelian(2))));
  CHECK(!is_perfect_braided(*identity_braided(builtin::heisenberg())));
  CHECK(is_perfect_braided(*sl2_tensor()));
  CHECK(!is_perfect_braided(*k3_tensor()));
}

TEST_CASE("braided morphism check and the projection counterexample") {
  CHECK(braided_morphism_check(braided_identity(identity_braided(builtin::sl2())))
            .pass());

  // (pi (x) pi, pi) from the K3 tensor object onto the K2 one
  RatMatrix pi = RatMatrix::Zero(2, 3);
  pi(0, 0) = 1;
  pi(1, 1) = 1;
  const LieHom pi_hom{builtin::abelian(3), builtin::abelian(2), pi};
  auto tb3 = tensor_braided(builtin::abelian(3)).value_or_throw();
  auto tb2 = tensor_braided(builtin::abelian(2)).value_or_throw();
  auto pipi = induced_hom(*tb3.pres, *tb2.pres,
                          LieHom{tb3.bxmod->n(), tb2.bxmod->n(), pi},
                          LieHom{tb3.bxmod->n(), tb2.bxmod->n(), pi});
  REQUIRE(pipi.ok());
  BraidedMorphism f{tb3.bxmod, tb2.bxmod, *pipi,
                    LieHom{tb3.bxmod->n(), tb2.bxmod->n(), pi}};
  CHECK(braided_morphism_check(f).pass());

  SUBCASE("negating the target braiding breaks BXLieH3") {
    BraidedXMod negated = *tb2.bxmod;
    negated.braiding.values *= -1;
    CHECK(verify_braiding(negated).pass());  // still a braided crossed module
    BraidedMorphism g = f;
    g.target = std::make_shared<BraidedXMod>(std::move(negated));
    const Verdict v = braided_morphism_check(g);
    REQUIRE(!v.pass());
    CHECK(v.violations()[0].axiom == "BXLieH3");
  }

  SUBCASE("classification: compatible central but not central") {
    const BraidedExtClass cls = classify_braided_extension(f);
    CHECK(cls.morphism.pass());
    CHECK(cls.extension);
    CHECK(cls.compatible_central);
    CHECK(!cls.central);
    CHECK(cls.ker1.dim() == 5);
    CHECK(cls.ker2.dim() == 1);
    CHECK(cls.zb.dim() == 0);
    CHECK(cls.zst.dim() == 3);
    CHECK(cls.fixed.dim() == 9);
  }
}

TEST_CASE("identity morphisms classify as central, and central implies compatible") {
  for (const BxPtr& bx :
       {identity_braided(builtin::sl2()), identity_braided(builtin::heisenberg()),
        k2_tensor(), k3_tensor(), sl2_tensor()}) {
    const BraidedExtClass cls = classify_braided_extension(braided_identity(bx));
    CHECK(cls.extension);
    CHECK(cls.central);
    CHECK(cls.compatible_central);
  }
}

TEST_CASE("product of braided crossed modules") {
  {
    const BxPtr trivial = std::make_shared<BraidedXMod>(BraidedXMod{
        CrossedModule{zero_hom(builtin::abelian(0), builtin::abelian(0)),
                      zero_action(builtin::abelian(0), builtin::abelian(0))},
        Braiding{0, 0, RatMatrix(0, 0)}});
    const BraidedProduct p = product_braided(identity_braided(builtin::sl2()),
                                             trivial);
    CHECK(p.prod->m()->dim() == 3);
    CHECK(verify_braiding(*p.prod).pass());
    const BraidedExtClass cls = classify_braided_extension(p.proj1);
    CHECK(cls.extension);
    CHECK(cls.central);
  }
  {
    const BraidedProduct p = product_braided(k2_tensor(), k3_tensor());
    CHECK(p.prod->m()->dim() == 13);  // 4 + 9
    CHECK(p.prod->n()->dim() == 5);
    CHECK(verify_xmod(p.prod->xmod).pass());
    CHECK(verify_braiding(*p.prod).pass());
    CHECK(braided_morphism_check(p.proj1).pass());
    CHECK(braided_morphism_check(p.proj2).pass());
  }
}

TEST_CASE("cokernel of the commutator") {
  {
    auto q = cokernel_of_commutator(identity_braided(builtin::sl2()));
    REQUIRE(q.ok());
    CHECK(q->quot->m()->dim() == 0);
    CHECK(q->quot->n()->dim() == 0);
  }
  {
    auto q = cokernel_of_commutator(identity_braided(builtin::heisenberg()));
    REQUIRE(q.ok());
    CHECK(q->quot->m()->dim() == 2);
    CHECK(q->quot->n()->dim() == 2);
    CHECK(verify_braiding(*q->quot).pass());
    CHECK(is_zero(q->quot->braiding.values));
    CHECK(braided_morphism_check(q->proj).pass());
    CHECK(q->proj.f1.surjective());
  }
  {
    const BxPtr bx = identity_braided(builtin::abelian(2));
    auto q = cokernel_of_commutator(bx);
    REQUIRE(q.ok());
    CHECK(q->quot->m()->dim() == 2);  // quotient by zero: identity copy
    CHECK(exactly_equal(q->proj.f1.matrix, RatMatrix(RatMatrix::Identity(2, 2))));
  }
}

TEST_CASE("quotient by the zero pair is a central extension of itself") {
  const BxPtr bx = identity_braided(builtin::sl2());
  auto q = quotient_braided(bx, Subspace(3), Subspace(3));
  REQUIRE(q.ok());
  const BraidedExtClass cls = classify_braided_extension(q->proj);
  CHECK(cls.extension);
  CHECK(cls.central);
}

TEST_CASE("braided submodule inclusion") {
  const BxPtr h3 = identity_braided(builtin::heisenberg());
  const BraidedCommutator c = braided_commutator(*h3);
  auto sub = braided_submodule(h3, c.b, c.derived);
  REQUIRE(sub.ok());
  CHECK(braided_morphism_check(sub->incl).pass());
  CHECK(!classify_braided_extension(sub->incl).extension);  // proper inclusion
}

TEST_CASE("non-perfect witness") {
  {
    auto w = non_perfect_witness(
        braided_identity(identity_braided(builtin::heisenberg())));
    REQUIRE(w.ok());
    CHECK(w->composites_match);
    CHECK(w->h_differs_from_g);
    CHECK(w->pi1_class.extension);
    CHECK(w->pi1_class.central);
    CHECK(braided_morphism_check(w->h).pass());
    CHECK(braided_morphism_check(w->g).pass());
  }
  {
    auto w = non_perfect_witness(
        braided_identity(identity_braided(builtin::sl2())));
    REQUIRE(!w.ok());
    CHECK(w.error().condition == "source-perfect");
  }
  {
    // abelian K2: the cokernel projection is the identity onto K2/0
    const BxPtr bx = identity_braided(builtin::abelian(2));
    auto w = non_perfect_witness(braided_identity(bx));
    REQUIRE(w.ok());
    CHECK(w->composites_match);
    CHECK(w->h_differs_from_g);
    RatMatrix expected_g2(4, 2);
    expected_g2.topRows(2) = RatMatrix::Identity(2, 2);
    expected_g2.bottomRows(2) = RatMatrix::Identity(2, 2);
    CHECK(exactly_equal(w->g.f2.matrix, expected_g2));
  }
}
