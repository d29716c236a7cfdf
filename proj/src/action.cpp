#include "xmodlie/action.hpp"

namespace xmodlie {

RatMatrix Action::of(const RatVector& n) const {
  const Index dm = module->dim();
  RatMatrix out = RatMatrix::Zero(dm, dm);
  for (Index j = 0; j < actor->dim(); ++j)
    if (n(j) != 0) out += n(j) * of_basis(j);
  return out;
}

Verdict verify_action(const Action& a) {
  Verdict v;
  const Index dn = a.actor->dim(), dm = a.module->dim();
  for (Index j = 0; j < dn; ++j)
    for (Index jp = j + 1; jp < dn; ++jp) {
      const RatMatrix lhs = a.of(a.actor->bracket_basis(j, jp));
      const RatMatrix rhs =
          a.of_basis(j) * a.of_basis(jp) - a.of_basis(jp) * a.of_basis(j);
      if (!exactly_equal(lhs, rhs))
        for (Index i = 0; i < dm; ++i)
          if (!exactly_equal(RatVector(lhs.col(i)), RatVector(rhs.col(i)))) {
            v.fail("action-bracket", {j, jp, i});
            break;
          }
    }
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < dm; ++i)
      for (Index ip = i + 1; ip < dm; ++ip) {
        RatVector lhs = a.of_basis(j) * a.module->bracket_basis(i, ip);
        RatVector rhs =
            a.module->bracket(RatVector(a.of_basis(j).col(i)),
                              unit_vector(dm, ip)) +
            a.module->bracket(unit_vector(dm, i),
                              RatVector(a.of_basis(j).col(ip)));
        if (!exactly_equal(lhs, rhs)) v.fail("action-derivation", {j, i, ip});
      }
  return v;
}

Action adjoint_action(const LiePtr& L) {
  std::vector<RatMatrix> mats;
  mats.reserve(static_cast<std::size_t>(L->dim()));
  for (Index j = 0; j < L->dim(); ++j) mats.push_back(L->ad(j));
  return {L, L, std::move(mats)};
}

Action zero_action(const LiePtr& actor, const LiePtr& module) {
  std::vector<RatMatrix> mats(static_cast<std::size_t>(actor->dim()),
                              RatMatrix::Zero(module->dim(), module->dim()));
  return {actor, module, std::move(mats)};
}

Subspace action_value_span(const Action& a) {
  const Index dn = a.actor->dim(), dm = a.module->dim();
  RatMatrix rows(dn * dm, dm);
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < dm; ++i)
      rows.row(j * dm + i) = a.of_basis(j).col(i).transpose();
  return Subspace::span_rows(dm, rows);
}

Subspace action_fixed_points(const Action& a) {
  const Index dn = a.actor->dim(), dm = a.module->dim();
  RatMatrix stacked(dn * dm, dm);
  for (Index j = 0; j < dn; ++j) stacked.middleRows(j * dm, dm) = a.of_basis(j);
  return kernel_basis(stacked);
}

Subspace action_stabilizer(const Action& a) {
  const Index dn = a.actor->dim(), dm = a.module->dim();
  RatMatrix stacked(dm * dm, dn);
  for (Index i = 0; i < dm; ++i) {
    // map n -> n . e_i, one block of rows per module basis vector
    for (Index j = 0; j < dn; ++j)
      stacked.block(i * dm, j, dm, 1) = a.of_basis(j).col(i);
  }
  return kernel_basis(stacked);
}

}  // namespace xmodlie
