#include "xmodlie/corpus.hpp"

#include <fstream>
#include <sstream>

namespace xmodlie {

namespace {

struct Token {
  std::string text;
  std::string origin;
  int line = 0;

  std::string where() const { return origin + ":" + std::to_string(line); }
};

std::vector<Token> tokenize(const std::string& text, const std::string& origin) {
  std::vector<Token> out;
  int line = 1;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back({current, origin, line});
      current.clear();
    }
  };
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '#') {
      flush();
      while (k < text.size() && text[k] != '\n') ++k;
      ++line;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (c == '{' || c == '}') {
      flush();
      out.push_back({std::string(1, c), origin, line});
      continue;
    }
    current += c;
  }
  flush();
  return out;
}

[[noreturn]] void parse_fail(const Token& at, const std::string& what) {
  throw XmodError(ErrorKind::parse, at.where() + ": " + what);
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Workspace& ws)
      : tokens_(std::move(tokens)), ws_(ws) {}

  void run() {
    while (!done()) {
      const Token section = next("section keyword");
      if (section.text == "algebra")
        parse_algebra();
      else if (section.text == "action")
        parse_action();
      else if (section.text == "xmod")
        parse_xmod();
      else if (section.text == "braiding")
        parse_braiding();
      else if (section.text == "tensor-braided")
        parse_tensor_braided();
      else if (section.text == "morphism")
        parse_morphism();
      else
        parse_fail(section, "unknown section '" + section.text + "'");
    }
  }

 private:
  bool done() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (done())
      throw XmodError(ErrorKind::parse, "unexpected end of input");
    return tokens_[pos_];
  }

  Token next(const std::string& expect) {
    if (done())
      throw XmodError(ErrorKind::parse,
                      "unexpected end of input, expected " + expect);
    return tokens_[pos_++];
  }

  void expect_symbol(const char* sym) {
    const Token t = next(sym);
    if (t.text != sym) parse_fail(t, std::string("expected '") + sym + "'");
  }

  Index next_index(Index limit, const std::string& what) {
    const Token t = next(what);
    Index v = 0;
    try {
      v = static_cast<Index>(std::stoll(t.text));
    } catch (...) {
      parse_fail(t, "expected a 1-based index for " + what);
    }
    if (v < 1 || v > limit)
      parse_fail(t, what + " index " + t.text + " out of range 1.." +
                        std::to_string(limit));
    return v - 1;
  }

  Rational next_rational() {
    const Token t = next("rational value");
    try {
      return parse_rational(t.text);
    } catch (const XmodError& e) {
      parse_fail(t, e.what());
    }
  }

  std::string section_name() {
    const Token t = next("section name");
    if (t.text == "{" || t.text == "}") parse_fail(t, "expected a name");
    return t.text;
  }

  template <typename Map>
  const typename Map::mapped_type& resolve(const Map& map,
                                           const std::string& kind) {
    const Token t = next(kind + " name");
    auto it = map.find(t.text);
    if (it == map.end())
      parse_fail(t, "unresolved " + kind + " reference '" + t.text + "'");
    return it->second;
  }

  void register_algebra(const Token& at, const std::string& name, LiePtr alg) {
    if (ws_.algebras.count(name))
      parse_fail(at, "duplicate algebra '" + name + "'");
    ws_.algebras.emplace(name, std::move(alg));
  }

  // --- sections -----------------------------------------------------------

  void parse_algebra() {
    const Token at = peek();
    const std::string name = section_name();
    expect_symbol("{");
    Index dim = -1;
    // entries[(i,j,k)] = value for explicitly given constants
    std::vector<std::tuple<Index, Index, Index, Rational, Token>> entries;
    while (peek().text != "}") {
      const Token key = next("algebra entry");
      if (key.text == "dim") {
        const Token t = next("dimension");
        dim = static_cast<Index>(std::stoll(t.text));
        if (dim < 0) parse_fail(t, "negative dimension");
      } else if (key.text == "bracket") {
        if (dim < 0) parse_fail(key, "dim must precede bracket entries");
        const Index i = next_index(dim, "bracket i");
        const Index j = next_index(dim, "bracket j");
        const Index k = next_index(dim, "bracket k");
        entries.emplace_back(i, j, k, next_rational(), key);
      } else {
        parse_fail(key, "unknown algebra entry '" + key.text + "'");
      }
    }
    expect_symbol("}");
    if (dim < 0) parse_fail(at, "algebra '" + name + "' has no dim");

    std::vector<RatMatrix> ad(static_cast<std::size_t>(dim),
                              RatMatrix::Zero(dim, dim));
    enum class Origin : unsigned char { unset, direct, completion };
    std::vector<std::vector<Origin>> origin(
        static_cast<std::size_t>(dim),
        std::vector<Origin>(static_cast<std::size_t>(dim * dim),
                            Origin::unset));
    auto put = [&](Index i, Index j, Index k, const Rational& v,
                   const Token& tok, bool completion) {
      auto& slot = ad[static_cast<std::size_t>(i)](k, j);
      auto& mark = origin[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(j * dim + k)];
      if (mark != Origin::unset && slot != v) {
        const std::string what = "constant for [" + std::to_string(i + 1) +
                                 "," + std::to_string(j + 1) + "] -> " +
                                 std::to_string(k + 1);
        // a clash between an entry and an antisymmetric completion is an
        // antisymmetry violation; a clash of two direct entries is a bad file
        if (completion || mark == Origin::completion)
          throw XmodError(ErrorKind::axiom,
                          tok.where() + ": algebra '" + name +
                              "': antisymmetry conflict in " + what);
        parse_fail(tok, "conflicting " + what);
      }
      slot = v;
      mark = completion ? Origin::completion : Origin::direct;
    };
    for (const auto& [i, j, k, v, tok] : entries) {
      put(i, j, k, v, tok, false);
      put(j, i, k, -v, tok, true);  // antisymmetric completion
    }
    auto alg = std::make_shared<LieAlgebra>(name, dim, std::move(ad));
    const Verdict lie = verify_lie(*alg);
    if (!lie.pass())
      throw XmodError(ErrorKind::axiom,
                      at.where() + ": algebra '" + name + "': " + lie.summary());
    register_algebra(at, name, std::move(alg));
  }

  Action parse_action_body(const Token& at) {
    LiePtr actor, module;
    enum class Mode { entries, adjoint, zero } mode = Mode::entries;
    std::vector<std::tuple<Index, Index, Index, Rational>> entries;
    std::vector<Token> entry_tokens;
    while (peek().text != "}") {
      const Token key = next("action entry");
      if (key.text == "actor")
        actor = resolve(ws_.algebras, "algebra");
      else if (key.text == "module")
        module = resolve(ws_.algebras, "algebra");
      else if (key.text == "adjoint")
        mode = Mode::adjoint;
      else if (key.text == "zero")
        mode = Mode::zero;
      else if (key.text == "act") {
        if (!actor || !module)
          parse_fail(key, "actor and module must precede act entries");
        const Index j = next_index(actor->dim(), "act j");
        const Index i = next_index(module->dim(), "act i");
        const Index k = next_index(module->dim(), "act k");
        entries.emplace_back(j, i, k, next_rational());
        entry_tokens.push_back(key);
      } else {
        parse_fail(key, "unknown action entry '" + key.text + "'");
      }
    }
    expect_symbol("}");
    if (!actor || !module) parse_fail(at, "action needs actor and module");
    if (mode == Mode::adjoint) {
      if (actor != module)
        parse_fail(at, "adjoint action needs actor = module");
      return adjoint_action(actor);
    }
    if (mode == Mode::zero) return zero_action(actor, module);
    std::vector<RatMatrix> mats(
        static_cast<std::size_t>(actor->dim()),
        RatMatrix::Zero(module->dim(), module->dim()));
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto& [j, i, k, v] = entries[e];
      auto& slot = mats[static_cast<std::size_t>(j)](k, i);
      if (slot != 0 && slot != v)
        parse_fail(entry_tokens[e], "conflicting act entry");
      slot = v;
    }
    return Action{actor, module, std::move(mats)};
  }

  void parse_action() {
    const Token at = peek();
    const std::string name = section_name();
    expect_symbol("{");
    Action a = parse_action_body(at);
    const Verdict v = verify_action(a);
    if (!v.pass())
      throw XmodError(ErrorKind::axiom,
                      at.where() + ": action '" + name + "': " + v.summary());
    if (ws_.actions.count(name)) parse_fail(at, "duplicate action '" + name + "'");
    ws_.actions.emplace(name, std::move(a));
  }

  void parse_xmod() {
    const Token at = peek();
    const std::string name = section_name();
    expect_symbol("{");
    LiePtr module, actor;
    std::optional<Action> action;
    std::optional<RatMatrix> boundary;
    std::vector<std::tuple<Index, Index, Rational, Token>> boundary_entries;
    while (peek().text != "}") {
      const Token key = next("xmod entry");
      if (key.text == "module")
        module = resolve(ws_.algebras, "algebra");
      else if (key.text == "actor")
        actor = resolve(ws_.algebras, "algebra");
      else if (key.text == "action") {
        const Token t = next("action name");
        if (t.text == "adjoint") {
          if (!actor || actor != module)
            parse_fail(t, "adjoint action needs actor = module");
          action = adjoint_action(actor);
        } else if (t.text == "zero") {
          if (!actor || !module)
            parse_fail(t, "actor and module must precede the action");
          action = zero_action(actor, module);
        } else {
          auto it = ws_.actions.find(t.text);
          if (it == ws_.actions.end())
            parse_fail(t, "unresolved action reference '" + t.text + "'");
          action = it->second;
        }
      } else if (key.text == "boundary") {
        if (!actor || !module)
          parse_fail(key, "actor and module must precede the boundary");
        const Token t = peek();
        if (t.text == "identity") {
          next("identity");
          if (module->dim() != actor->dim())
            parse_fail(t, "identity boundary needs matching dimensions");
          boundary = RatMatrix::Identity(actor->dim(), module->dim());
        } else if (t.text == "zero") {
          next("zero");
          boundary = RatMatrix::Zero(actor->dim(), module->dim());
        } else {
          const Index i = next_index(module->dim(), "boundary i");
          const Index k = next_index(actor->dim(), "boundary k");
          boundary_entries.emplace_back(i, k, next_rational(), key);
        }
      } else {
        parse_fail(key, "unknown xmod entry '" + key.text + "'");
      }
    }
    expect_symbol("}");
    if (!module || !actor) parse_fail(at, "xmod needs module and actor");
    if (!action) parse_fail(at, "xmod needs an action");
    if (!boundary && !boundary_entries.empty())
      boundary = RatMatrix::Zero(actor->dim(), module->dim());
    if (!boundary) parse_fail(at, "xmod needs a boundary");
    for (const auto& [i, k, v, tok] : boundary_entries) (*boundary)(k, i) = v;
    if (action->actor != actor || action->module != module)
      parse_fail(at, "action endpoints do not match the xmod");

    auto x = std::make_shared<CrossedModule>(
        CrossedModule{LieHom{module, actor, std::move(*boundary)}, *action});
    Verdict v = verify_action(x->action);
    v.absorb(hom_check(x->boundary));
    v.absorb(verify_xmod(*x));
    if (!v.pass())
      throw XmodError(ErrorKind::axiom,
                      at.where() + ": xmod '" + name + "': " + v.summary());
    if (ws_.xmods.count(name)) parse_fail(at, "duplicate xmod '" + name + "'");
    ws_.xmods.emplace(name, std::move(x));
  }

  void parse_braiding() {
    const Token at = peek();
    const std::string name = section_name();
    expect_symbol("{");
    XModPtr over;
    enum class Mode { entries, bracket, zero } mode = Mode::entries;
    std::vector<std::tuple<Index, Index, Index, Rational>> entries;
    while (peek().text != "}") {
      const Token key = next("braiding entry");
      if (key.text == "over")
        over = resolve(ws_.xmods, "xmod");
      else if (key.text == "bracket")
        mode = Mode::bracket;
      else if (key.text == "zero")
        mode = Mode::zero;
      else if (key.text == "brace") {
        if (!over) parse_fail(key, "over must precede brace entries");
        const Index j = next_index(over->n()->dim(), "brace j");
        const Index jp = next_index(over->n()->dim(), "brace j'");
        const Index i = next_index(over->m()->dim(), "brace i");
        entries.emplace_back(j, jp, i, next_rational());
      } else {
        parse_fail(key, "unknown braiding entry '" + key.text + "'");
      }
    }
    expect_symbol("}");
    if (!over) parse_fail(at, "braiding needs an xmod");
    const Index dn = over->n()->dim(), dm = over->m()->dim();
    Braiding b{dn, dm, RatMatrix::Zero(dn * dn, dm)};
    if (mode == Mode::bracket) {
      if (dn != dm)
        parse_fail(at, "bracket braiding needs matching dimensions");
      for (Index j = 0; j < dn; ++j)
        for (Index jp = 0; jp < dn; ++jp)
          b.values.row(b.row_index(j, jp)) =
              over->m()->bracket_basis(j, jp).transpose();
    } else if (mode == Mode::entries) {
      for (const auto& [j, jp, i, v] : entries)
        b.values(b.row_index(j, jp), i) = v;
    }
    auto bx = std::make_shared<BraidedXMod>(BraidedXMod{*over, std::move(b)});
    const Verdict v = verify_braiding(*bx);
    if (!v.pass())
      throw XmodError(ErrorKind::axiom,
                      at.where() + ": braiding '" + name + "': " + v.summary());
    if (ws_.braided.count(name))
      parse_fail(at, "duplicate braiding '" + name + "'");
    ws_.braided.emplace(name, std::move(bx));
  }

  void parse_tensor_braided() {
    const Token at = peek();
    const std::string name = section_name();
    expect_symbol("{");
    LiePtr base;
    while (peek().text != "}") {
      const Token key = next("tensor-braided entry");
      if (key.text == "base")
        base = resolve(ws_.algebras, "algebra");
      else
        parse_fail(key, "unknown tensor-braided entry '" + key.text + "'");
    }
    expect_symbol("}");
    if (!base) parse_fail(at, "tensor-braided needs a base algebra");
    auto tb = tensor_braided(base);
    if (!tb.ok())
      throw XmodError(ErrorKind::axiom, at.where() + ": tensor-braided '" +
                                            name + "': " +
                                            tb.error().to_string());
    if (ws_.braided.count(name))
      parse_fail(at, "duplicate braiding '" + name + "'");
    register_algebra(at, name + ".m", tb->pres->quotient);
    ws_.tensors.emplace(name, tb->pres);
    ws_.braided.emplace(name, tb->bxmod);
  }

  struct HomSpec {
    enum class Kind { entries, identity, zero, induced } kind = Kind::entries;
    std::vector<std::tuple<Index, Index, Rational>> entries;
  };

  void parse_morphism() {
    const Token at = peek();
    const std::string name = section_name();
    expect_symbol("{");
    std::string from, to;
    HomSpec f1, f2;
    bool saw_f1 = false, saw_f2 = false;
    auto parse_hom = [&](HomSpec& h) {
      const Token t = peek();
      if (t.text == "identity" || t.text == "zero" || t.text == "induced") {
        next("hom keyword");
        h.kind = t.text == "identity" ? HomSpec::Kind::identity
                 : t.text == "zero"   ? HomSpec::Kind::zero
                                      : HomSpec::Kind::induced;
        return;
      }
      h.kind = HomSpec::Kind::entries;
      const Token tr = next("entry row");
      const Token tc = next("entry col");
      Index r = 0, c = 0;
      try {
        r = static_cast<Index>(std::stoll(tr.text)) - 1;
        c = static_cast<Index>(std::stoll(tc.text)) - 1;
      } catch (...) {
        parse_fail(tr, "expected matrix entry indices");
      }
      if (r < 0 || c < 0) parse_fail(tr, "matrix entry indices are 1-based");
      h.entries.emplace_back(r, c, next_rational());
    };
    while (peek().text != "}") {
      const Token key = next("morphism entry");
      if (key.text == "from")
        from = next("source name").text;
      else if (key.text == "to")
        to = next("target name").text;
      else if (key.text == "f1") {
        parse_hom(f1);
        saw_f1 = true;
      } else if (key.text == "f2") {
        parse_hom(f2);
        saw_f2 = true;
      } else {
        parse_fail(key, "unknown morphism entry '" + key.text + "'");
      }
    }
    expect_symbol("}");
    if (from.empty() || to.empty() || !saw_f1 || !saw_f2)
      parse_fail(at, "morphism needs from, to, f1 and f2");
    build_morphism(at, name, from, to, f1, f2);
  }

  RatMatrix hom_matrix(const Token& at, const HomSpec& h, Index rows,
                       Index cols) {
    switch (h.kind) {
      case HomSpec::Kind::identity:
        if (rows != cols)
          parse_fail(at, "identity map needs matching dimensions");
        return RatMatrix::Identity(rows, cols);
      case HomSpec::Kind::zero:
        return RatMatrix::Zero(rows, cols);
      case HomSpec::Kind::entries: {
        RatMatrix m = RatMatrix::Zero(rows, cols);
        for (const auto& [r, c, v] : h.entries) {
          if (r >= rows || c >= cols)
            parse_fail(at, "matrix entry out of range");
          m(r, c) = v;
        }
        return m;
      }
      case HomSpec::Kind::induced:
        parse_fail(at, "induced is only valid for f1 between tensor-braided objects");
    }
    parse_fail(at, "unreachable");
  }

  void build_morphism(const Token& at, const std::string& name,
                      const std::string& from, const std::string& to,
                      const HomSpec& f1, const HomSpec& f2) {
    MorphismEntry entry;
    entry.from = from;
    entry.to = to;
    const bool braided_ends = ws_.braided.count(from) && ws_.braided.count(to);
    const bool xmod_ends = ws_.xmods.count(from) && ws_.xmods.count(to);
    if (!braided_ends && !xmod_ends)
      parse_fail(at, "morphism endpoints '" + from + "', '" + to +
                         "' do not name a braided or crossed module pair");

    const LiePtr src_m = braided_ends ? ws_.braided.at(from)->m()
                                      : ws_.xmods.at(from)->m();
    const LiePtr src_n = braided_ends ? ws_.braided.at(from)->n()
                                      : ws_.xmods.at(from)->n();
    const LiePtr tgt_m =
        braided_ends ? ws_.braided.at(to)->m() : ws_.xmods.at(to)->m();
    const LiePtr tgt_n =
        braided_ends ? ws_.braided.at(to)->n() : ws_.xmods.at(to)->n();

    LieHom hom2{src_n, tgt_n, hom_matrix(at, f2, tgt_n->dim(), src_n->dim())};
    LieHom hom1{src_m, tgt_m, RatMatrix()};
    if (f1.kind == HomSpec::Kind::induced) {
      if (!ws_.tensors.count(from) || !ws_.tensors.count(to))
        parse_fail(at, "induced f1 needs tensor-braided endpoints");
      auto ih = induced_hom(*ws_.tensors.at(from), *ws_.tensors.at(to), hom2,
                            hom2);
      if (!ih.ok())
        throw XmodError(ErrorKind::axiom, at.where() + ": morphism '" + name +
                                              "': " + ih.error().to_string());
      hom1 = *ih;
      hom1.source = src_m;
      hom1.target = tgt_m;
    } else {
      hom1.matrix = hom_matrix(at, f1, tgt_m->dim(), src_m->dim());
    }

    if (braided_ends) {
      entry.braided = true;
      entry.braided_morphism = BraidedMorphism{
          ws_.braided.at(from), ws_.braided.at(to), hom1, hom2};
      const Verdict v = braided_morphism_check(*entry.braided_morphism);
      if (!v.pass())
        throw XmodError(ErrorKind::axiom, at.where() + ": morphism '" + name +
                                              "': " + v.summary());
    } else {
      entry.xmod_morphism =
          XModMorphism{ws_.xmods.at(from), ws_.xmods.at(to), hom1, hom2};
      const Verdict v = xmod_morphism_check(*entry.xmod_morphism);
      if (!v.pass())
        throw XmodError(ErrorKind::axiom, at.where() + ": morphism '" + name +
                                              "': " + v.summary());
    }
    if (ws_.morphisms.count(name))
      parse_fail(at, "duplicate morphism '" + name + "'");
    ws_.morphisms.emplace(name, std::move(entry));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Workspace& ws_;
};

}  // namespace

const LiePtr& Workspace::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end())
    throw XmodError(ErrorKind::parse, "unknown algebra '" + name + "'");
  return it->second;
}

const XModPtr& Workspace::xmod(const std::string& name) const {
  auto it = xmods.find(name);
  if (it == xmods.end())
    throw XmodError(ErrorKind::parse, "unknown xmod '" + name + "'");
  return it->second;
}

const BxPtr& Workspace::braided_xmod(const std::string& name) const {
  auto it = braided.find(name);
  if (it == braided.end())
    throw XmodError(ErrorKind::parse, "unknown braided xmod '" + name + "'");
  return it->second;
}

const MorphismEntry& Workspace::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end())
    throw XmodError(ErrorKind::parse, "unknown morphism '" + name + "'");
  return it->second;
}

Workspace load(const std::vector<std::string>& paths) {
  Workspace ws;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in)
      throw XmodError(ErrorKind::parse, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Parser(tokenize(buffer.str(), path), ws).run();
  }
  return ws;
}

Workspace load_text(const std::string& text, const std::string& origin) {
  Workspace ws;
  Parser(tokenize(text, origin), ws).run();
  return ws;
}

Expected<TensorBraided> tensor_braided(const LiePtr& base) {
  const Action adj = adjoint_action(base);
  auto pres = build_nonabelian_tensor(base, base, adj, adj);
  if (!pres.ok()) return pres.error();
  const TensorPtr tp = *pres;
  const Index d = base->dim();
  const Index qd = tp->quotient->dim();

  // boundary x (x) y -> [x, y]
  RatMatrix boundary_sym(d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index ip = 0; ip < d; ++ip)
      boundary_sym.col(tp->sym(i, ip)) = base->bracket_basis(i, ip);
  auto boundary = generator_map(*tp, boundary_sym, base);
  if (!boundary.ok()) return boundary.error();

  // action z . (x (x) y) = z (x) [x, y]; must kill the relation subspace
  std::vector<RatMatrix> mats(static_cast<std::size_t>(d), RatMatrix(qd, qd));
  for (Index j = 0; j < d; ++j) {
    RatMatrix sym_values(qd, d * d);
    for (Index i = 0; i < d; ++i)
      for (Index ip = 0; ip < d; ++ip)
        sym_values.col(tp->sym(i, ip)) =
            tp->pure(unit_vector(d, j), base->bracket_basis(i, ip));
    for (Index k = 0; k < tp->relations.dim(); ++k)
      if (!is_zero(RatVector(sym_values *
                             tp->relations.basis().row(k).transpose())))
        return Diagnostic{"tensor-braided-action-not-well-defined",
                          "actor basis " + std::to_string(j) +
                              " against relation basis row " +
                              std::to_string(k)};
    mats[static_cast<std::size_t>(j)] = sym_values * tp->q.section;
  }
  Action action{base, tp->quotient, std::move(mats)};
  const Verdict va = verify_action(action);
  if (!va.pass()) return Diagnostic{"tensor-braided-action", va.summary()};

  Braiding braid{d, qd, RatMatrix(d * d, qd)};
  for (Index j = 0; j < d; ++j)
    for (Index jp = 0; jp < d; ++jp)
      braid.values.row(braid.row_index(j, jp)) =
          tp->pure(unit_vector(d, j), unit_vector(d, jp)).transpose();

  auto bx = std::make_shared<BraidedXMod>(BraidedXMod{
      CrossedModule{*boundary, std::move(action)}, std::move(braid)});
  Verdict v = verify_xmod(bx->xmod);
  v.absorb(verify_braiding(*bx));
  if (!v.pass()) return Diagnostic{"tensor-braided-axioms", v.summary()};
  return TensorBraided{tp, bx};
}

namespace builtin {

LiePtr sl2() {
  const Index d = 3;  // basis order (e, h, f)
  std::vector<RatMatrix> ad(3, RatMatrix::Zero(d, d));
  auto set = [&](Index i, Index j, Index k, int v) {
    ad[static_cast<std::size_t>(i)](k, j) = v;
    ad[static_cast<std::size_t>(j)](k, i) = -v;
  };
  set(1, 0, 0, 2);   // [h, e] = 2e
  set(1, 2, 2, -2);  // [h, f] = -2f
  set(0, 2, 1, 1);   // [e, f] = h
  return std::make_shared<LieAlgebra>("sl2", d, std::move(ad));
}

LiePtr heisenberg() {
  const Index d = 3;  // basis order (x, y, z)
  std::vector<RatMatrix> ad(3, RatMatrix::Zero(d, d));
  ad[0](2, 1) = 1;   // [x, y] = z
  ad[1](2, 0) = -1;
  return std::make_shared<LieAlgebra>("h3", d, std::move(ad));
}

LiePtr abelian(Index n) {
  return LieAlgebra::abelian("k" + std::to_string(n), n);
}

}  // namespace builtin

}  // namespace xmodlie
