#include "incmon/json_io.hpp"

#include <fstream>

#include "incmon/errors.hpp"

namespace incmon {

namespace {

const Json& field_or_fail(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail("ParseError", std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j;
  j["labels"] = p.labels();
  Json covers = Json::array();
  for (const auto& [u, v] : p.cover_relations()) covers.push_back(Json::array({u, v}));
  j["covers"] = std::move(covers);
  return j;
}

Poset poset_from_json(const Json& j) {
  const Json& labels = field_or_fail(j, "labels");
  const Json& covers = field_or_fail(j, "covers");
  if (!labels.is_array() || !covers.is_array())
    fail("ParseError", "'labels' and 'covers' must be arrays");
  std::vector<std::string> ls;
  for (const auto& l : labels) {
    if (!l.is_string()) fail("ParseError", "labels must be strings");
    ls.push_back(l.get<std::string>());
  }
  std::vector<std::pair<int, int>> cs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      fail("ParseError", "covers must be [i, j] integer pairs");
    cs.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return Poset::build(ls, cs);
}

Json matrix_to_json(const ExactMatrix& x) {
  Json j;
  Json entries = Json::array();
  for (int i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < x.cols(); ++c) {
      if (x.field().kind == FieldKind::rationals)
        row.push_back(x.at(i, c).str());
      else
        row.push_back(x.at(i, c).gf().value);
    }
    entries.push_back(std::move(row));
  }
  if (x.field().kind == FieldKind::rationals) {
    j["field"] = "rationals";
  } else {
    j["field"] = "gf";
    j["q"] = x.field().q;
  }
  j["entries"] = std::move(entries);
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  const Json& fieldname = field_or_fail(j, "field");
  Field f;
  if (fieldname == "rationals") {
    f = rationals_field();
  } else if (fieldname == "gf") {
    const Json& q = field_or_fail(j, "q");
    if (!q.is_number_unsigned()) fail("ParseError", "'q' must be a positive integer");
    f = gf_field(q.get<unsigned>());
  } else {
    fail("ParseError", "'field' must be \"rationals\" or \"gf\"");
  }
  const Json& entries = field_or_fail(j, "entries");
  if (!entries.is_array() || entries.empty()) fail("ParseError", "'entries' must be a nonempty array");
  const int rows = static_cast<int>(entries.size());
  int cols = -1;
  for (const auto& row : entries) {
    if (!row.is_array()) fail("ParseError", "matrix rows must be arrays");
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (cols != static_cast<int>(row.size()))
      fail("ParseError", "matrix rows have uneven lengths");
  }
  ExactMatrix x(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) {
      const Json& v = entries[i][c];
      if (f.kind == FieldKind::rationals) {
        if (v.is_number_integer())
          x.set(i, c, Scalar(Rational(v.get<long>())));
        else if (v.is_string())
          x.set(i, c, Scalar(parse_rational(v.get<std::string>())));
        else
          fail("ParseError", "rational entries must be strings or integers");
      } else {
        if (!v.is_number_integer()) fail("ParseError", "GF entries must be integers");
        x.set(i, c, Scalar(gf_of(f.q, v.get<long>())));
      }
    }
  return x;
}

Json index_set_to_json(const IndexSet& s) { return Json(s.members()); }

Json context_to_json(const MonoidContext& ctx) {
  Json j;
  j["poset"] = poset_to_json(ctx.poset());
  if (ctx.kind() == ContextKind::full_incidence) {
    j["kind"] = "full_incidence";
  } else {
    j["kind"] = "antichain_monoid";
    j["antichain"] = index_set_to_json(*ctx.antichain());
  }
  return j;
}

MonoidContext context_from_json(const Json& j) {
  Poset p = poset_from_json(field_or_fail(j, "poset"));
  const Json& kind = field_or_fail(j, "kind");
  if (kind == "full_incidence") return MonoidContext::full_incidence(std::move(p));
  if (kind != "antichain_monoid")
    fail("ParseError", "'kind' must be \"full_incidence\" or \"antichain_monoid\"");
  const Json& a = field_or_fail(j, "antichain");
  if (!a.is_array()) fail("ParseError", "'antichain' must be an array of 1-based indices");
  std::vector<int> members;
  for (const auto& v : a) {
    if (!v.is_number_integer()) fail("ParseError", "antichain members must be integers");
    members.push_back(v.get<int>());
  }
  int n = p.size();
  return MonoidContext::antichain_monoid(std::move(p), IndexSet(n, std::move(members)));
}

BlockPair block_pair_from_json(const Json& j) {
  const Json& k = field_or_fail(j, "k");
  if (!k.is_number_integer()) fail("ParseError", "'k' must be an integer");
  ExactMatrix x = matrix_from_json(field_or_fail(j, "x"));
  ExactMatrix y = matrix_from_json(field_or_fail(j, "y"));
  return BlockPair{BlockElement::from_matrix(x, k.get<int>()),
                   BlockElement::from_matrix(y, k.get<int>())};
}

Json verdict_to_json(const ConjugacyVerdict& v) {
  Json j;
  j["related"] = v.related;
  j["case"] = conjugacy_case_name(v.case_tag);
  if (v.witness_pair) {
    j["witness"] = Json{{"z", matrix_to_json(v.witness_pair->first.to_matrix())},
                        {"w", matrix_to_json(v.witness_pair->second.to_matrix())}};
  } else if (v.conjugator) {
    j["witness"] = Json{{"conjugator", matrix_to_json(v.conjugator->to_matrix())}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json orthodoxy_report_to_json(const OrthodoxyReport& r, const OrthodoxMode& mode) {
  Json j;
  if (mode.kind == OrthodoxMode::Kind::exhaustive_gf) {
    j["mode"] = "exhaustive_gf";
    j["q"] = mode.q;
  } else {
    j["mode"] = "random_rational";
    j["trials"] = mode.trials;
    j["seed"] = mode.seed;
  }
  j["idempotents_seen"] = r.idempotents_seen;
  j["pairs_checked"] = r.pairs_checked;
  j["passed"] = r.passed;
  Json violations = Json::array();
  for (const auto& [e, f] : r.violations)
    violations.push_back(Json{{"left", matrix_to_json(e)}, {"right", matrix_to_json(f)}});
  j["violations"] = std::move(violations);
  return j;
}

Json enumeration_to_json(const IdempotentEnumeration& e, bool include_elements) {
  Json j;
  j["q"] = e.q;
  j["candidates"] = e.candidates;
  j["total"] = e.total();
  Json comps = Json::array();
  for (const auto& slice : e.components) {
    Json c;
    c["J"] = index_set_to_json(slice.J);
    c["count"] = slice.elements.size();
    if (include_elements) {
      Json els = Json::array();
      for (const auto& m : slice.elements) els.push_back(matrix_to_json(m));
      c["elements"] = std::move(els);
    }
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j;
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("ParseError", "malformed JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileError", "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json_text(text);
}

}  // namespace incmon
