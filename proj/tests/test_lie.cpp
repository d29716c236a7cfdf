#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "xmodlie/corpus.hpp"

using namespace xmodlie;
using namespace xmodlie::testutil;

namespace {

LiePtr bad_antisymmetry() {
  // [e1,e2] = e1 and [e2,e1] = e1
  std::vector<RatMatrix> ad(2, RatMatrix::Zero(2, 2));
  ad[0](0, 1) = 1;
  ad[1](0, 0) = 1;
  return std::make_shared<LieAlgebra>("bad", 2, std::move(ad));
}

}  // namespace

TEST_CASE("verify_lie") {
  CHECK(verify_lie(*builtin::abelian(4)).pass());
  CHECK(verify_lie(*builtin::sl2()).pass());
  CHECK(verify_lie(*builtin::heisenberg()).pass());

  const Verdict v = verify_lie(*bad_antisymmetry());
  REQUIRE(!v.pass());
  CHECK(v.violations()[0].axiom == "antisymmetry");
  CHECK(v.violations()[0].where == std::vector<long>{0, 1});
}

TEST_CASE("bracket") {
  const LiePtr sl2 = builtin::sl2();
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const RatVector x = rng.vector(3);
    CHECK(is_zero(sl2->bracket(x, x)));
    CHECK(is_zero(builtin::abelian(3)->bracket(x, rng.vector(3))));
  }
  // [e, f] = h in basis order (e, h, f)
  CHECK(exactly_equal(sl2->bracket(vec({1, 0, 0}), vec({0, 0, 1})),
                      vec({0, 1, 0})));
}

TEST_CASE("derived subalgebra") {
  CHECK(derived_subalgebra(*builtin::abelian(3)).dim() == 0);
  CHECK(derived_subalgebra(*builtin::sl2()).is_full());
  const Subspace d = derived_subalgebra(*builtin::heisenberg());
  CHECK(d.dim() == 1);
  CHECK(exactly_equal(d.basis(), mat(1, 3, {0, 0, 1})));
}

TEST_CASE("derived subalgebra is an ideal") {
  for (const LiePtr& L : {builtin::sl2(), builtin::heisenberg(),
                          builtin::abelian(2)})
    CHECK(bracket_stable(*L, derived_subalgebra(*L)));
}

TEST_CASE("center") {
  CHECK(center(*builtin::abelian(3)).is_full());
  CHECK(center(*builtin::sl2()).dim() == 0);
  const Subspace z = center(*builtin::heisenberg());
  CHECK(z.dim() == 1);
  CHECK(z.contains(vec({0, 0, 1})));
}

TEST_CASE("center brackets vanish against every basis vector") {
  for (const LiePtr& L : {builtin::sl2(), builtin::heisenberg()}) {
    const Subspace z = center(*L);
    for (Index k = 0; k < z.dim(); ++k)
      for (Index i = 0; i < L->dim(); ++i)
        CHECK(is_zero(L->bracket(RatVector(z.basis().row(k).transpose()),
                                 unit_vector(L->dim(), i))));
  }
}

TEST_CASE("subalgebra closure") {
  const LiePtr sl2 = builtin::sl2();
  CHECK(subalgebra_closure(*sl2, Subspace(3)).dim() == 0);
  CHECK(subalgebra_closure(*sl2, Subspace::full(3)).is_full());
  // span{e, f} closes to all of sl2 since [e,f] = h
  const Subspace seed = Subspace::span_rows(3, mat(2, 3, {1, 0, 0, 0, 0, 1}));
  CHECK(subalgebra_closure(*sl2, seed).is_full());
}

TEST_CASE("subalgebra closure is idempotent and monotone") {
  Rng rng(17);
  const LiePtr L = builtin::sl2();
  for (int t = 0; t < 15; ++t) {
    const Subspace seed = Subspace::span_rows(3, rng.matrix(t % 3 + 1, 3));
    const Subspace once = subalgebra_closure(*L, seed);
    CHECK(subalgebra_closure(*L, once) == once);
    CHECK(once.contains(seed));
    const Subspace bigger = sum(seed, Subspace::span_rows(3, rng.matrix(1, 3)));
    CHECK(subalgebra_closure(*L, bigger).contains(once));
  }
}

TEST_CASE("hom_check") {
  const LiePtr k3 = builtin::abelian(3);
  const LiePtr k2 = builtin::abelian(2);
  CHECK(hom_check(identity_hom(builtin::sl2())).pass());
  CHECK(hom_check(zero_hom(builtin::sl2(), builtin::heisenberg())).pass());
  // the projection K3 -> K2 between abelian algebras
  CHECK(hom_check(LieHom{k3, k2, mat(2, 3, {1, 0, 0, 0, 1, 0})}).pass());
  // a map that is not a homomorphism: sl2 -> sl2 collapsing onto e
  RatMatrix bad = RatMatrix::Zero(3, 3);
  bad(0, 0) = 1;
  bad(0, 1) = 1;
  bad(0, 2) = 1;
  CHECK(!hom_check(LieHom{builtin::sl2(), builtin::sl2(), bad}).pass());
}

TEST_CASE("quotient_lie") {
  const LiePtr h3 = builtin::heisenberg();
  {
    auto q = quotient_lie(h3, Subspace(3));
    REQUIRE(q.ok());
    CHECK(q->algebra->dim() == 3);
    CHECK(exactly_equal(q->proj.matrix, RatMatrix(RatMatrix::Identity(3, 3))));
  }
  {
    auto q = quotient_lie(h3, Subspace::span_rows(3, mat(1, 3, {0, 0, 1})));
    REQUIRE(q.ok());
    CHECK(q->algebra->dim() == 2);
    CHECK(derived_subalgebra(*q->algebra).dim() == 0);  // abelian K2
  }
  {
    auto q = quotient_lie(h3, Subspace::full(3));
    REQUIRE(q.ok());
    CHECK(q->algebra->dim() == 0);
  }
  {
    // span{e} is not an ideal of sl2: [f, e] = -h falls outside
    auto q = quotient_lie(builtin::sl2(),
                          Subspace::span_rows(3, mat(1, 3, {1, 0, 0})));
    REQUIRE(!q.ok());
    CHECK(q.error().condition == "not-an-ideal");
  }
}

TEST_CASE("quotient projection is a surjective hom with the right kernel") {
  const LiePtr sl2 = builtin::sl2();
  const LiePtr h3 = builtin::heisenberg();
  struct Case {
    LiePtr algebra;
    Subspace ideal;
  };
  for (const Case& c :
       {Case{h3, derived_subalgebra(*h3)}, Case{sl2, Subspace(3)},
        Case{h3, Subspace::full(3)},
        Case{builtin::abelian(4),
             Subspace::span_rows(4, mat(2, 4, {1, 0, 0, 0, 0, 1, 1, 0}))}}) {
    auto q = quotient_lie(c.algebra, c.ideal);
    REQUIRE(q.ok());
    CHECK(verify_lie(*q->algebra).pass());
    CHECK(hom_check(q->proj).pass());
    CHECK(q->proj.surjective());
    CHECK(q->proj.kernel() == c.ideal);
    CHECK(exactly_equal(
        RatMatrix(q->proj.matrix * q->section),
        RatMatrix(RatMatrix::Identity(q->algebra->dim(), q->algebra->dim()))));
  }
}

TEST_CASE("restrict_lie") {
  const LiePtr sl2 = builtin::sl2();
  {
    auto s = restrict_lie(sl2, derived_subalgebra(*sl2));
    REQUIRE(s.ok());
    CHECK(s->algebra->dim() == 3);
    CHECK(hom_check(s->include).pass());
  }
  {
    // span{e, h} is a subalgebra (borel); [e,h] = -2e stays inside
    auto s = restrict_lie(
        sl2, Subspace::span_rows(3, mat(2, 3, {1, 0, 0, 0, 1, 0})));
    REQUIRE(s.ok());
    CHECK(s->algebra->dim() == 2);
    CHECK(verify_lie(*s->algebra).pass());
    CHECK(hom_check(s->include).pass());
  }
  {
    // span{e, f} is not closed: [e,f] = h
    auto s = restrict_lie(
        sl2, Subspace::span_rows(3, mat(2, 3, {1, 0, 0, 0, 0, 1})));
    CHECK(!s.ok());
  }
}

TEST_CASE("direct sum") {
  const LieSum s = direct_sum(builtin::sl2(), builtin::heisenberg());
  CHECK(s.algebra->dim() == 6);
  CHECK(verify_lie(*s.algebra).pass());
  CHECK(hom_check(s.proj_left).pass());
  CHECK(hom_check(s.proj_right).pass());
  CHECK(hom_check(s.incl_left).pass());
  CHECK(hom_check(s.incl_right).pass());
  CHECK(derived_subalgebra(*s.algebra).dim() == 4);  // 3 + 1
  CHECK(center(*s.algebra).dim() == 1);              // 0 + 1
}

TEST_CASE("adjoint action") {
  const Action zero = adjoint_action(builtin::abelian(3));
  for (const auto& m : zero.mats) CHECK(is_zero(m));

  const Action ad = adjoint_action(builtin::sl2());
  // h acting on e gives 2e
  CHECK(exactly_equal(RatVector(ad.of_basis(1).col(0)), vec({2, 0, 0})));
  CHECK(verify_action(ad).pass());
  CHECK(verify_action(adjoint_action(builtin::heisenberg())).pass());
}
