#include "incmon/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>

#include "incmon/dot.hpp"
#include "incmon/errors.hpp"
#include "incmon/json_io.hpp"

namespace incmon::cli {

namespace {

struct Options {
  std::string poset_file;
  std::vector<std::string> antichain;
  std::string matrix_file;
  std::string x_file, y_file;
  std::string pair_file;
  std::string relation = "J";
  std::vector<int> pattern;  // -J
  int k = 1, m = 1;
  unsigned q = 2;
  bool use_gf = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_search = 0;  // 0: use the module default / env override
  bool dot = false;
  bool elements = false;
};

std::uint64_t env_max_search(std::uint64_t fallback) {
  if (const char* env = std::getenv("INCMON_MAX_SEARCH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    require(end && *end == '\0' && v > 0, "ParseError",
            "INCMON_MAX_SEARCH must be a positive integer");
    return v;
  }
  return fallback;
}

std::uint64_t cap_of(const Options& o, std::uint64_t fallback) {
  return o.max_search ? o.max_search : env_max_search(fallback);
}

Poset load_poset(const Options& o) { return poset_from_json(load_json_file(o.poset_file)); }

// Antichain tokens may be 1-based indices or element labels.
IndexSet resolve_antichain(const Poset& p, const std::vector<std::string>& tokens) {
  std::vector<int> members;
  for (const auto& t : tokens) {
    bool digits = !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
    if (digits) {
      members.push_back(std::stoi(t));
      continue;
    }
    int found = -1;
    for (int i = 0; i < p.size(); ++i)
      if (p.label(i) == t) found = i + 1;
    require(found > 0, "IndexOutOfRange", "no element labelled '" + t + "'");
    members.push_back(found);
  }
  return IndexSet(p.size(), std::move(members));
}

MonoidContext load_context(const Options& o) {
  Poset p = load_poset(o);
  if (o.antichain.empty()) return MonoidContext::full_incidence(std::move(p));
  IndexSet a = resolve_antichain(p, o.antichain);
  return MonoidContext::antichain_monoid(std::move(p), std::move(a));
}

ExactMatrix load_matrix(const std::string& path) {
  return matrix_from_json(load_json_file(path));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// The admissible diagonal patterns of a context, smallest mask first; the
// node set of the component poset.
std::vector<IndexSet> component_patterns(const MonoidContext& ctx) {
  const int n = ctx.size();
  std::vector<int> open, pinned;
  for (int i = 0; i < n; ++i)
    (ctx.diagonal_fixed(i) ? pinned : open).push_back(i + 1);
  require(open.size() <= 12, "SizeCapExceeded",
          "component listing with 2^" + std::to_string(open.size()) + " patterns");
  std::vector<IndexSet> nodes;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << open.size()); ++s) {
    std::vector<int> members = pinned;
    for (std::size_t t = 0; t < open.size(); ++t)
      if (s & (std::uint64_t{1} << t)) members.push_back(open[t]);
    nodes.emplace_back(n, std::move(members));
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.mask() < b.mask(); });
  return nodes;
}

int execute(const std::string& group, const std::string& action, const Options& o,
            std::ostream& out) {
  if (group == "poset") {
    Poset p = load_poset(o);
    if (action == "build") {
      if (o.dot)
        out << hasse_dot(p);
      else
        emit(out, poset_to_json(p));
    } else if (action == "classify") {
      PosetClass cls = classify(p);
      Json j{{"tag", poset_tag_name(cls.tag)}};
      if (cls.tag == PosetTag::bipartite || cls.tag == PosetTag::complete_bipartite) {
        j["k"] = cls.k;
        j["m"] = cls.m;
      }
      emit(out, j);
    } else {  // components
      Json comps = Json::array();
      for (const auto& c : connected_components(p)) comps.push_back(poset_to_json(c));
      emit(out, Json{{"components", comps}});
    }
    return 0;
  }

  if (group == "ctx") {
    MonoidContext ctx = load_context(o);
    if (action == "build") {
      emit(out, context_to_json(ctx));
    } else if (action == "contains") {
      emit(out, Json{{"contains", contains(ctx, load_matrix(o.matrix_file))}});
    } else {  // decompose
      Json comps = Json::array();
      for (const auto& part : decompose(ctx)) comps.push_back(context_to_json(part));
      emit(out, Json{{"components", comps}});
    }
    return 0;
  }

  if (group == "idem") {
    if (action == "dim") {
      IndexSet J(o.k + o.m, o.pattern);
      Json j{{"k", o.k}, {"m", o.m}, {"J", index_set_to_json(J)},
             {"dimension", component_dimension(o.k, o.m, J)}};
      emit(out, j);
      return 0;
    }
    MonoidContext ctx = load_context(o);
    if (action == "components") {
      if (o.dot) {
        out << component_poset_dot(ctx);
        return 0;
      }
      PosetClass cls = classify(ctx.poset());
      Json comps = Json::array();
      for (const auto& J : component_patterns(ctx)) {
        Json c{{"J", index_set_to_json(J)}};
        if (cls.tag == PosetTag::complete_bipartite)
          c["dimension"] = component_dimension(cls.k, cls.m, J);
        comps.push_back(std::move(c));
      }
      emit(out, Json{{"components", comps}});
    } else if (action == "enumerate") {
      IdempotentEnumeration e =
          enumerate_idempotents_gf(ctx, o.q, cap_of(o, kDefaultEnumerationCap));
      emit(out, enumeration_to_json(e, o.elements));
    } else {  // orthodox
      OrthodoxMode mode;
      if (o.use_gf) {
        mode.kind = OrthodoxMode::Kind::exhaustive_gf;
        mode.q = o.q;
      } else {
        require(o.trials > 0, "ParseError", "random mode needs --trials");
        mode.kind = OrthodoxMode::Kind::random_rational;
        mode.trials = o.trials;
        mode.seed = o.seed;
      }
      emit(out, orthodoxy_report_to_json(check_orthodox(ctx, mode), mode));
    }
    return 0;
  }

  if (group == "green") {
    if (action == "rel") {
      BlockElement x = BlockElement::from_matrix(load_matrix(o.x_file), o.k);
      BlockElement y = BlockElement::from_matrix(load_matrix(o.y_file), o.k);
      GreenRel rel = green_rel_from(o.relation);
      emit(out, Json{{"relation", green_rel_name(rel)},
                     {"related", green_related(x, y, rel)}});
    } else if (action == "lattice") {
      CrossSectionLattice lattice(o.k, o.m);
      if (o.dot) {
        out << lattice_dot(lattice);
        return 0;
      }
      Json els = Json::array();
      for (const auto& J : lattice.elements()) els.push_back(index_set_to_json(J));
      emit(out, Json{{"k", o.k}, {"m", o.m}, {"elements", els}});
    } else {  // inverse
      BlockElement x = BlockElement::from_matrix(load_matrix(o.x_file), o.k);
      emit(out, Json{{"inverse", matrix_to_json(canonical_inverse(x).to_matrix())}});
    }
    return 0;
  }

  if (group == "conj") {
    BlockPair pair = block_pair_from_json(load_json_file(o.pair_file));
    if (action == "p") {
      emit(out, verdict_to_json(p_conjugate(pair.x, pair.y)));
    } else if (action == "group") {
      emit(out, verdict_to_json(group_conjugate(pair.x, pair.y)));
    } else {  // o-witness
      auto [z, w] = o_conjugacy_witness(pair.x, pair.y);
      emit(out, Json{{"z", matrix_to_json(z.to_matrix())},
                     {"w", matrix_to_json(w.to_matrix())}});
    }
    return 0;
  }

  // group == "oracle"
  MonoidContext ctx = load_context(o);
  FiniteMonoid s = FiniteMonoid::materialize(ctx, o.q, cap_of(o, kDefaultMaterializeCap));
  if (action == "materialize") {
    Json j{{"q", o.q}, {"size", s.size()}, {"units", s.units().size()}};
    if (o.elements) {
      Json els = Json::array();
      for (std::size_t i = 0; i < s.size(); ++i) els.push_back(matrix_to_json(s.element(i)));
      j["elements"] = std::move(els);
    }
    emit(out, j);
  } else if (action == "green") {
    std::size_t a = s.index_of(load_matrix(o.x_file));
    std::size_t b = s.index_of(load_matrix(o.y_file));
    GreenRel rel = green_rel_from(o.relation);
    emit(out, Json{{"relation", green_rel_name(rel)},
                   {"related", green_oracle(s, a, b, rel)}});
  } else if (action == "pconj") {
    std::size_t a = s.index_of(load_matrix(o.x_file));
    std::size_t b = s.index_of(load_matrix(o.y_file));
    auto zw = p_conjugacy_oracle(s, a, b);
    Json j{{"related", zw.has_value()}};
    if (zw) {
      j["z"] = matrix_to_json(s.element(zw->first));
      j["w"] = matrix_to_json(s.element(zw->second));
    }
    emit(out, j);
  } else {  // report
    auto class_count = [&s](GreenRel rel) {
      std::vector<int> id(s.size(), -1);
      int next = 0;
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (id[a] >= 0) continue;
        for (std::size_t b = a; b < s.size(); ++b)
          if (id[b] < 0 && green_oracle(s, a, b, rel)) id[b] = next;
        ++next;
      }
      return next;
    };
    RegularityReport reg = completely_regular_check(s);
    Json j{{"q", o.q},
           {"size", s.size()},
           {"units", s.units().size()},
           {"green_class_counts",
            Json{{"R", class_count(GreenRel::R)},
                 {"L", class_count(GreenRel::L)},
                 {"J", class_count(GreenRel::J)},
                 {"H", class_count(GreenRel::H)},
                 {"D", class_count(GreenRel::D)}}},
           {"completely_regular",
            Json{{"checked", reg.checked}, {"failures", reg.failures}}}};
    emit(out, j);
  }
  return 0;
}

void add_common_matrix_opts(CLI::App* cmd, Options& o, bool need_y) {
  cmd->add_option("-x,--x", o.x_file, "matrix JSON file")->required();
  if (need_y) cmd->add_option("-y,--y", o.y_file, "matrix JSON file")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"exact incidence-monoid toolkit"};
  app.require_subcommand(1);

  auto add_poset_opts = [&o](CLI::App* cmd, bool antichain_required) {
    cmd->add_option("-f,--file", o.poset_file, "poset JSON file")->required();
    auto* a = cmd->add_option("-a,--antichain", o.antichain,
                              "antichain members (1-based indices or labels)")
                  ->delimiter(',');
    if (antichain_required) a->required();
  };

  auto* poset_cmd = app.add_subcommand("poset", "build, classify and split posets");
  poset_cmd->require_subcommand(1);
  add_poset_opts(poset_cmd->add_subcommand("build", "normalize a poset file"), false);
  poset_cmd->get_subcommand("build")->add_flag("--dot", o.dot, "emit the Hasse diagram");
  add_poset_opts(poset_cmd->add_subcommand("classify", "shape of a poset"), false);
  add_poset_opts(poset_cmd->add_subcommand("components", "connected components"), false);

  auto* ctx_cmd = app.add_subcommand("ctx", "monoid contexts and membership");
  ctx_cmd->require_subcommand(1);
  add_poset_opts(ctx_cmd->add_subcommand("build", "construct a context"), false);
  auto* ctx_contains = ctx_cmd->add_subcommand("contains", "membership of a matrix");
  add_poset_opts(ctx_contains, false);
  ctx_contains->add_option("-m,--matrix", o.matrix_file, "matrix JSON file")->required();
  add_poset_opts(ctx_cmd->add_subcommand("decompose", "split along poset components"), true);

  auto* idem_cmd = app.add_subcommand("idem", "idempotent variety components");
  idem_cmd->require_subcommand(1);
  auto* idem_components = idem_cmd->add_subcommand("components", "list diagonal patterns");
  add_poset_opts(idem_components, false);
  idem_components->add_flag("--dot", o.dot, "emit the component poset");
  auto* idem_dim = idem_cmd->add_subcommand("dim", "component dimension");
  idem_dim->add_option("-k", o.k, "number of minimal elements")->required();
  idem_dim->add_option("-m", o.m, "number of maximal elements")->required();
  idem_dim->add_option("-J", o.pattern, "diagonal pattern (1-based)")
      ->delimiter(',')
      ->required();
  auto* idem_enum = idem_cmd->add_subcommand("enumerate", "all idempotents over GF(q)");
  add_poset_opts(idem_enum, false);
  idem_enum->add_option("--gf", o.q, "field size")->required();
  idem_enum->add_flag("--elements", o.elements, "include the matrices");
  idem_enum->add_option("--max-search", o.max_search, "search-space cap");
  auto* idem_orth = idem_cmd->add_subcommand("orthodox", "idempotent products stay idempotent");
  add_poset_opts(idem_orth, true);
  auto* orth_gf = idem_orth->add_option("--gf", o.q, "exhaustive mode field size");
  idem_orth->add_option("--trials", o.trials, "random rational mode trial count")
      ->excludes(orth_gf);
  idem_orth->add_option("--seed", o.seed, "random seed");

  auto* green_cmd = app.add_subcommand("green", "Green relations in block form");
  green_cmd->require_subcommand(1);
  auto* green_rel = green_cmd->add_subcommand("rel", "relation between two elements");
  green_rel->add_option("-k", o.k, "number of minimal elements")->required();
  green_rel->add_option("--rel", o.relation, "one of R, L, J, H, D")->required();
  add_common_matrix_opts(green_rel, o, true);
  auto* green_lat = green_cmd->add_subcommand("lattice", "cross-section lattice");
  green_lat->add_option("-k", o.k, "number of minimal elements")->required();
  green_lat->add_option("-m", o.m, "number of maximal elements")->required();
  green_lat->add_flag("--dot", o.dot, "emit DOT");
  auto* green_inv = green_cmd->add_subcommand("inverse", "canonical commuting inverse");
  green_inv->add_option("-k", o.k, "number of minimal elements")->required();
  add_common_matrix_opts(green_inv, o, false);

  auto* conj_cmd = app.add_subcommand("conj", "conjugacy relations");
  conj_cmd->require_subcommand(1);
  for (const char* name : {"p", "group", "o-witness"})
    conj_cmd->add_subcommand(name)->add_option("-f,--file", o.pair_file, "pair JSON file")
        ->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force finite-monoid checks");
  oracle_cmd->require_subcommand(1);
  auto add_oracle_opts = [&](CLI::App* cmd) {
    cmd->add_option("-f,--file", o.poset_file, "poset JSON file")->required();
    cmd->add_option("-a,--antichain", o.antichain,
                    "antichain members (1-based indices or labels)")
        ->delimiter(',');
    cmd->add_option("--gf", o.q, "field size")->required();
    cmd->add_option("--max-search", o.max_search, "materialization cap");
  };
  auto* om = oracle_cmd->add_subcommand("materialize", "list the finite monoid");
  add_oracle_opts(om);
  om->add_flag("--elements", o.elements, "include the matrices");
  auto* og = oracle_cmd->add_subcommand("green", "definitional Green relation");
  add_oracle_opts(og);
  og->add_option("--rel", o.relation, "one of R, L, J, H, D")->required();
  add_common_matrix_opts(og, o, true);
  auto* op = oracle_cmd->add_subcommand("pconj", "definitional two-sided conjugacy");
  add_oracle_opts(op);
  add_common_matrix_opts(op, o, true);
  add_oracle_opts(oracle_cmd->add_subcommand("report", "classes and regularity summary"));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    CLI::App* group = app.get_subcommands().front();
    CLI::App* action = group->get_subcommands().front();
    std::string action_name = action->get_name();
    if (group->get_name() == "idem" && action_name == "orthodox")
      o.use_gf = action->count("--gf") > 0;
    return execute(group->get_name(), action_name, o, out);
  } catch (const Error& e) {
    emit(out, Json{{"error", e.code()}, {"message", e.what()}});
    return 1;
  }
}

}  // namespace incmon::cli
