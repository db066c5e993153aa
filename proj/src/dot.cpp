#include "incmon/dot.hpp"

#include <algorithm>
#include <sstream>

#include "incmon/errors.hpp"
#include "incmon/idempotent.hpp"

namespace incmon {

namespace {

std::string bit_label(const IndexSet& s) {
  std::string bits(s.ambient(), '0');
  for (int i : s.members()) bits[i - 1] = '1';
  return bits;
}

void emit_inclusion_covers(std::ostringstream& out, const std::vector<IndexSet>& nodes) {
  for (const auto& a : nodes)
    for (const auto& b : nodes) {
      if (a.size() + 1 != b.size() || !a.subset_of(b)) continue;
      out << "  \"" << bit_label(a) << "\" -> \"" << bit_label(b) << "\";\n";
    }
}

}  // namespace

std::string hasse_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) out << "  \"" << p.label(i) << "\";\n";
  for (const auto& [u, v] : p.cover_relations())
    out << "  \"" << p.label(u) << "\" -> \"" << p.label(v) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string lattice_dot(const CrossSectionLattice& lattice) {
  std::ostringstream out;
  out << "digraph cross_section_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& J : lattice.elements()) out << "  \"" << bit_label(J) << "\";\n";
  emit_inclusion_covers(out, lattice.elements());
  out << "}\n";
  return out.str();
}

std::string component_poset_dot(const MonoidContext& ctx) {
  const int n = ctx.size();
  std::vector<int> open;  // 1-based indices whose diagonal entry is free
  for (int i = 0; i < n; ++i)
    if (!ctx.diagonal_fixed(i)) open.push_back(i + 1);
  require(open.size() <= 12, "SizeCapExceeded",
          "component poset with 2^" + std::to_string(open.size()) + " nodes");
  std::vector<int> pinned;
  for (int i = 0; i < n; ++i)
    if (ctx.diagonal_fixed(i)) pinned.push_back(i + 1);

  PosetClass cls = classify(ctx.poset());
  std::vector<IndexSet> nodes;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << open.size()); ++s) {
    std::vector<int> members = pinned;
    for (std::size_t t = 0; t < open.size(); ++t)
      if (s & (std::uint64_t{1} << t)) members.push_back(open[t]);
    nodes.emplace_back(n, std::move(members));
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.mask() < b.mask(); });

  std::ostringstream out;
  out << "digraph component_poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& J : nodes) {
    out << "  \"" << bit_label(J) << "\"";
    if (cls.tag == PosetTag::complete_bipartite)
      out << " [label=\"" << bit_label(J) << "\\ndim " << component_dimension(cls.k, cls.m, J)
          << "\"]";
    out << ";\n";
  }
  emit_inclusion_covers(out, nodes);
  out << "}\n";
  return out.str();
}

}  // namespace incmon
