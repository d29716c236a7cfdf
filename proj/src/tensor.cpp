#include "xmodlie/tensor.hpp"

namespace xmodlie {

namespace {

std::string tuple_str(Index a, Index b, Index c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

}  // namespace

std::string TensorPresentation::relation_label(Index row) const {
  const Index dm = left->dim(), dn = right->dim();
  const Index r1_count = dm * dm * dn;
  if (row < r1_count) {
    const Index i = row / (dm * dn);
    const Index ip = (row / dn) % dm;
    const Index j = row % dn;
    return "R1" + tuple_str(i, ip, j);
  }
  const Index r = row - r1_count;
  const Index i = r / (dn * dn);
  const Index j = (r / dn) % dn;
  const Index jp = r % dn;
  return "R2" + tuple_str(i, j, jp);
}

RatVector TensorPresentation::pure(const RatVector& x,
                                   const RatVector& y) const {
  if (x.rows() != left->dim() || y.rows() != right->dim())
    throw XmodError(ErrorKind::internal, "pure: dimension mismatch");
  return q.proj * vec_pure(x, y);
}

Expected<TensorPtr> build_nonabelian_tensor(const LiePtr& m, const LiePtr& n,
                                            const Action& act_mn,
                                            const Action& act_nm,
                                            std::string name) {
  {
    const Verdict va = verify_action(act_mn);
    if (!va.pass())
      return Diagnostic{"action-axioms(left-on-right)", va.summary()};
    const Verdict vb = verify_action(act_nm);
    if (!vb.pass())
      return Diagnostic{"action-axioms(right-on-left)", vb.summary()};
  }

  auto tp = std::make_shared<TensorPresentation>();
  tp->left = m;
  tp->right = n;
  tp->act_lr = act_mn;
  tp->act_rl = act_nm;
  const Index dm = m->dim(), dn = n->dim();
  tp->ambient = dm * dn;

  RatMatrix rows(dm * dm * dn + dm * dn * dn, tp->ambient);
  Index r = 0;
  for (Index i = 0; i < dm; ++i)
    for (Index ip = 0; ip < dm; ++ip)
      for (Index j = 0; j < dn; ++j)
        rows.row(r++) =
            (kron(m->bracket_basis(i, ip), unit_vector(dn, j)) -
             kron(unit_vector(dm, i), RatVector(act_mn.of_basis(ip).col(j))) +
             kron(unit_vector(dm, ip), RatVector(act_mn.of_basis(i).col(j))))
                .transpose();
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j)
      for (Index jp = 0; jp < dn; ++jp)
        rows.row(r++) =
            (kron(unit_vector(dm, i), n->bracket_basis(j, jp)) -
             kron(RatVector(act_nm.of_basis(jp).col(i)), unit_vector(dn, j)) +
             kron(RatVector(act_nm.of_basis(j).col(i)), unit_vector(dn, jp)))
                .transpose();
  tp->relation_rows = std::move(rows);
  tp->relations = Subspace::span_rows(tp->ambient, tp->relation_rows);
  tp->q = quotient(tp->ambient, tp->relations);

  // Bracket of basis symbols: [(i,j), (i',j')] = -(e_j * e_i) (x) (e_i' . e_j').
  auto symbol_bracket = [&](Index s, Index t) -> RatVector {
    const Index i = s / dn, j = s % dn;
    const Index ip = t / dn, jp = t % dn;
    return -kron(RatVector(act_nm.of_basis(j).col(i)),
                 RatVector(act_mn.of_basis(ip).col(jp)));
  };
  auto bilinear_left = [&](const RatVector& w, Index t) {
    RatVector out = RatVector::Zero(tp->ambient);
    for (Index s = 0; s < tp->ambient; ++s)
      if (w(s) != 0) out += w(s) * symbol_bracket(s, t);
    return out;
  };
  auto bilinear_right = [&](Index s, const RatVector& w) {
    RatVector out = RatVector::Zero(tp->ambient);
    for (Index t = 0; t < tp->ambient; ++t)
      if (w(t) != 0) out += w(t) * symbol_bracket(s, t);
    return out;
  };

  // Well-definedness: the bracket must send (W x symbols) and
  // (symbols x W) back into W.
  for (Index k = 0; k < tp->relations.dim(); ++k) {
    const RatVector w = tp->relations.basis().row(k).transpose();
    for (Index t = 0; t < tp->ambient; ++t) {
      if (!tp->relations.contains(bilinear_left(w, t)))
        return Diagnostic{"bracket-not-well-defined",
                          "relation basis row " + std::to_string(k) +
                              " against symbol " + std::to_string(t) +
                              " (left slot)"};
      if (!tp->relations.contains(bilinear_right(t, w)))
        return Diagnostic{"bracket-not-well-defined",
                          "relation basis row " + std::to_string(k) +
                              " against symbol " + std::to_string(t) +
                              " (right slot)"};
    }
  }

  const Index qd = tp->q.dim;
  std::vector<RatMatrix> ad(static_cast<std::size_t>(qd),
                            RatMatrix::Zero(qd, qd));
  for (Index a = 0; a < qd; ++a) {
    const RatVector sa = tp->q.section.col(a);
    for (Index b = 0; b < qd; ++b) {
      const RatVector sb = tp->q.section.col(b);
      RatVector val = RatVector::Zero(tp->ambient);
      for (Index s = 0; s < tp->ambient; ++s)
        if (sa(s) != 0) val += sa(s) * bilinear_right(s, sb);
      ad[static_cast<std::size_t>(a)].col(b) = tp->q.proj * val;
    }
  }
  if (name.empty()) name = m->name() + "(x)" + n->name();
  auto quot = std::make_shared<LieAlgebra>(std::move(name), qd, std::move(ad));
  const Verdict lie = verify_lie(*quot);
  if (!lie.pass())
    return Diagnostic{"quotient-not-lie", lie.summary()};
  tp->quotient = quot;
  return TensorPtr(tp);
}

Expected<LieHom> induced_hom(const TensorPresentation& src,
                             const TensorPresentation& tgt, const LieHom& f,
                             const LieHom& g) {
  const Index dm = src.left->dim(), dn = src.right->dim();
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j) {
      RatVector lhs = g.matrix * src.act_lr.of_basis(i).col(j);
      RatVector rhs = tgt.act_lr.act(RatVector(f.matrix.col(i)),
                                     RatVector(g.matrix.col(j)));
      if (!exactly_equal(lhs, rhs))
        return Diagnostic{"equivariance(left-on-right)",
                          "basis pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")"};
    }
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < dm; ++i) {
      RatVector lhs = f.matrix * src.act_rl.of_basis(j).col(i);
      RatVector rhs = tgt.act_rl.act(RatVector(g.matrix.col(j)),
                                     RatVector(f.matrix.col(i)));
      if (!exactly_equal(lhs, rhs))
        return Diagnostic{"equivariance(right-on-left)",
                          "basis pair (" + std::to_string(j) + "," +
                              std::to_string(i) + ")"};
    }

  const RatMatrix symbol_map = kron_matrix(f.matrix, g.matrix);
  for (Index k = 0; k < src.relations.dim(); ++k)
    if (!tgt.relations.contains(
            RatVector(symbol_map * src.relations.basis().row(k).transpose())))
      return Diagnostic{"relations-not-preserved",
                        "image of relation basis row " + std::to_string(k) +
                            " is outside the target relation subspace"};

  LieHom induced{src.quotient, tgt.quotient,
                 RatMatrix(tgt.q.proj * symbol_map * src.q.section)};
  const Verdict hom = hom_check(induced);
  if (!hom.pass())
    return Diagnostic{"induced-not-a-homomorphism", hom.summary()};
  return induced;
}

Expected<LieHom> generator_map(const TensorPresentation& tp,
                               const RatMatrix& symbol_values,
                               const LiePtr& target) {
  if (symbol_values.cols() != tp.ambient ||
      symbol_values.rows() != target->dim())
    throw XmodError(ErrorKind::internal, "generator_map: shape mismatch");
  for (Index r = 0; r < tp.relation_rows.rows(); ++r)
    if (!is_zero(
            RatVector(symbol_values * tp.relation_rows.row(r).transpose())))
      return Diagnostic{"not-well-defined",
                        "relation " + tp.relation_label(r) +
                            " is not annihilated"};
  LieHom out{tp.quotient, target,
             RatMatrix(symbol_values * tp.q.section)};
  const Verdict hom = hom_check(out);
  if (!hom.pass())
    return Diagnostic{"not-a-homomorphism", hom.summary()};
  return out;
}

Expected<QuotientBilinear> QuotientBilinear::build(TensorPtr a, TensorPtr b,
                                                   Index d,
                                                   const SymbolFn& value,
                                                   const std::string& what) {
  QuotientBilinear out;
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  const Index na = out.a_->ambient, nb = out.b_->ambient;
  out.symbols_.resize(d, na * nb);
  for (Index s = 0; s < na; ++s)
    for (Index t = 0; t < nb; ++t) out.symbols_.col(s * nb + t) = value(s, t);

  for (Index k = 0; k < out.a_->relations.dim(); ++k) {
    const RatVector w = out.a_->relations.basis().row(k).transpose();
    for (Index t = 0; t < nb; ++t) {
      RatVector v = RatVector::Zero(d);
      for (Index s = 0; s < na; ++s)
        if (w(s) != 0) v += w(s) * out.symbols_.col(s * nb + t);
      if (!is_zero(v))
        return Diagnostic{what + "-not-well-defined",
                          "first-slot relation basis row " + std::to_string(k) +
                              " against symbol " + std::to_string(t)};
    }
  }
  for (Index k = 0; k < out.b_->relations.dim(); ++k) {
    const RatVector w = out.b_->relations.basis().row(k).transpose();
    for (Index s = 0; s < na; ++s) {
      RatVector v = RatVector::Zero(d);
      for (Index t = 0; t < nb; ++t)
        if (w(t) != 0) v += w(t) * out.symbols_.col(s * nb + t);
      if (!is_zero(v))
        return Diagnostic{what + "-not-well-defined",
                          "second-slot relation basis row " +
                              std::to_string(k) + " against symbol " +
                              std::to_string(s)};
    }
  }
  return out;
}

RatVector QuotientBilinear::eval_ambient(const RatVector& xa,
                                         const RatVector& xb) const {
  const Index nb = b_->ambient;
  RatVector out = RatVector::Zero(symbols_.rows());
  for (Index s = 0; s < a_->ambient; ++s) {
    if (xa(s) == 0) continue;
    for (Index t = 0; t < nb; ++t) {
      if (xb(t) == 0) continue;
      out += (xa(s) * xb(t)) * symbols_.col(s * nb + t);
    }
  }
  return out;
}

RatVector QuotientBilinear::eval_quotient(const RatVector& qa,
                                          const RatVector& qb) const {
  return eval_ambient(RatVector(a_->q.section * qa),
                      RatVector(b_->q.section * qb));
}

}  // namespace xmodlie
