#pragma once

// Structured command reports. The machine rendering is a JSON document with
// stable field order and rationals as "p/q" strings; parsing and re-emitting
// it is byte-identical. The human rendering is an indented key/value view of
// the same tree.

#include <json.hpp>

#include "xmodlie/braid.hpp"
#include "xmodlie/subspace.hpp"

namespace xmodlie {

using Json = nlohmann::ordered_json;

struct Report {
  Json doc;
  bool ok = true;
  ErrorKind fail_kind = ErrorKind::axiom;

  void fail(ErrorKind kind) {
    if (ok) {
      ok = false;
      fail_kind = kind;
      return;
    }
    // keep the most severe (largest) category
    if (static_cast<int>(kind) > static_cast<int>(fail_kind)) fail_kind = kind;
  }

  int exit_code() const { return ok ? 0 : static_cast<int>(fail_kind); }

  std::string render(bool machine) const;
};

Json json_rational(const Rational& r);
Json json_matrix(const RatMatrix& m);
Json json_subspace(const Subspace& s);
Json json_verdict(const Verdict& v);

}  // namespace xmodlie
