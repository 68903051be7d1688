#include "qrep/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qrep/errors.hpp"

namespace qrep {

bool LevelData::contains(int color) const {
  return std::binary_search(colors.begin(), colors.end(), color);
}

LevelData level_data(int p) {
  if (p < 5) {
    throw PreconditionError("level must be at least 5, got " + std::to_string(p));
  }
  LevelData level{p, p % 2 != 0 ? Parity::Odd : Parity::Even, {}};
  if (level.parity == Parity::Odd) {
    for (int c = 0; c <= p - 3; c += 2) level.colors.push_back(c);
  } else {
    for (int c = 0; c <= (p - 4) / 2; ++c) level.colors.push_back(c);
  }
  return level;
}

// ---------------------------------------------------------------------------
// Graphs

std::vector<int> ColoredGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(std::max(vertex_count, 0)), 0);
  for (const Edge& e : edges) {
    ++deg.at(static_cast<std::size_t>(e.u));
    ++deg.at(static_cast<std::size_t>(e.v));
  }
  for (const Tail& t : tails) ++deg.at(static_cast<std::size_t>(t.vertex));
  return deg;
}

void ColoredGraph::validate() const {
  if (vertex_count <= 0) throw InvalidGraph("graph has no vertices");
  auto in_range = [this](int v) { return v >= 0 && v < vertex_count; };
  for (const Edge& e : edges) {
    if (!in_range(e.u) || !in_range(e.v)) {
      throw InvalidGraph("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " references a missing vertex");
    }
  }
  for (const Tail& t : tails) {
    if (!in_range(t.vertex)) {
      throw InvalidGraph("tail at missing vertex " + std::to_string(t.vertex));
    }
  }
  const std::vector<int> deg = degrees();
  for (int v = 0; v < vertex_count; ++v) {
    if (deg[static_cast<std::size_t>(v)] != 3) {
      throw InvalidGraph("vertex " + std::to_string(v) + " has degree " +
                         std::to_string(deg[static_cast<std::size_t>(v)]) + ", expected 3");
    }
  }
}

int ColoredGraph::component_count() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  int components = vertex_count;
  for (const Edge& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

std::string ColoredGraph::to_string() const {
  std::ostringstream os;
  os << "vertices=" << vertex_count << "; edges=";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i ? "," : "") << edges[i].u << "-" << edges[i].v;
  }
  os << "; tails=";
  for (std::size_t i = 0; i < tails.size(); ++i) {
    os << (i ? "," : "") << tails[i].vertex << ":" << tails[i].color;
  }
  return os.str();
}

ColoredGraph tadpole_graph(int tail_color) { return {1, {{0, 0}}, {{0, tail_color}}}; }

ColoredGraph theta_graph() { return {2, {{0, 1}, {0, 1}, {0, 1}}, {}}; }

ColoredGraph genus2_dumbbell_graph() { return {2, {{0, 0}, {0, 1}, {1, 1}}, {}}; }

ColoredGraph genus3_chain_graph() {
  return {4, {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}}, {}};
}

// ---------------------------------------------------------------------------
// Admissibility

bool admissible_triple(int a, int b, int c, const LevelData& level) {
  if (a < 0 || b < 0 || c < 0) return false;
  if (c < std::abs(a - b) || c > a + b) return false;
  const int sum = a + b + c;
  return sum % 2 == 0 && sum <= level.sum_bound();
}

bool is_admissible(int a, int b, int c, int p) {
  const LevelData level = level_data(p);
  for (int x : {a, b, c}) {
    if (!level.contains(x)) {
      throw InvalidColor("color " + std::to_string(x) + " is not a level-" + std::to_string(p) +
                         " color");
    }
  }
  return admissible_triple(a, b, c, level);
}

namespace {

// One vertex constraint. A slot is either a free edge variable or a fixed
// tail color.
struct Slot {
  bool fixed;
  int value;  // edge index when free, color when fixed
};

std::vector<std::vector<Slot>> vertex_slots(const ColoredGraph& graph) {
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(graph.vertex_count));
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const Edge& edge = graph.edges[e];
    slots[static_cast<std::size_t>(edge.u)].push_back({false, static_cast<int>(e)});
    slots[static_cast<std::size_t>(edge.v)].push_back({false, static_cast<int>(e)});
  }
  for (const Tail& t : graph.tails) {
    slots[static_cast<std::size_t>(t.vertex)].push_back({true, t.color});
  }
  return slots;
}

void check_tails(const ColoredGraph& graph, const LevelData& level) {
  for (const Tail& t : graph.tails) {
    if (t.color < 0 || t.color > level.max_color()) {
      throw InvalidColor("tail color " + std::to_string(t.color) + " is out of range for level " +
                         std::to_string(level.p));
    }
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("block dimension overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("block dimension overflows 64 bits");
  return r;
}

// Table over the colorings of `vars`, indexed in mixed radix with the first
// variable least significant.
struct Factor {
  std::vector<int> vars;
  std::vector<std::uint64_t> table;
};

std::size_t table_size(std::size_t arity, std::size_t radix) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) n *= radix;
  return n;
}

}  // namespace

std::uint64_t block_dimension(const ColoredGraph& graph, int p) {
  graph.validate();
  const LevelData level = level_data(p);
  check_tails(graph, level);
  const std::vector<int>& colors = level.colors;
  const std::size_t radix = colors.size();

  // Vertex factors.
  std::vector<Factor> factors;
  for (const auto& slots : vertex_slots(graph)) {
    std::set<int> scope;
    for (const Slot& s : slots) {
      if (!s.fixed) scope.insert(s.value);
    }
    Factor f{{scope.begin(), scope.end()}, {}};
    f.table.assign(table_size(f.vars.size(), radix), 0);
    std::vector<int> assignment(f.vars.size(), 0);
    for (std::size_t idx = 0; idx < f.table.size(); ++idx) {
      std::size_t rest = idx;
      for (auto& digit : assignment) {
        digit = static_cast<int>(rest % radix);
        rest /= radix;
      }
      int triple[3];
      for (std::size_t k = 0; k < 3; ++k) {
        const Slot& s = slots[k];
        if (s.fixed) {
          triple[k] = s.value;
        } else {
          const auto pos = std::lower_bound(f.vars.begin(), f.vars.end(), s.value) - f.vars.begin();
          triple[k] = colors[static_cast<std::size_t>(assignment[static_cast<std::size_t>(pos)])];
        }
      }
      f.table[idx] = admissible_triple(triple[0], triple[1], triple[2], level) ? 1 : 0;
    }
    factors.push_back(std::move(f));
  }

  // Eliminate edge variables, smallest resulting scope first.
  std::set<int> remaining;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) remaining.insert(static_cast<int>(e));
  while (!remaining.empty()) {
    int best = -1;
    std::size_t best_width = 0;
    for (int var : remaining) {
      std::set<int> scope;
      for (const Factor& f : factors) {
        if (std::binary_search(f.vars.begin(), f.vars.end(), var)) scope.insert(f.vars.begin(), f.vars.end());
      }
      if (best < 0 || scope.size() < best_width) {
        best = var;
        best_width = scope.size();
      }
    }
    remaining.erase(best);

    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      (std::binary_search(f.vars.begin(), f.vars.end(), best) ? touching : rest).push_back(std::move(f));
    }
    std::set<int> scope_set;
    for (const Factor& f : touching) scope_set.insert(f.vars.begin(), f.vars.end());
    std::vector<int> scope(scope_set.begin(), scope_set.end());  // includes `best`
    const auto best_pos = static_cast<std::size_t>(std::lower_bound(scope.begin(), scope.end(), best) - scope.begin());

    Factor out;
    for (int v : scope) {
      if (v != best) out.vars.push_back(v);
    }
    out.table.assign(table_size(out.vars.size(), radix), 0);

    // Positions of each touching factor's variables inside `scope`.
    std::vector<std::vector<std::size_t>> positions;
    for (const Factor& f : touching) {
      std::vector<std::size_t> pos;
      for (int v : f.vars) {
        pos.push_back(static_cast<std::size_t>(std::lower_bound(scope.begin(), scope.end(), v) - scope.begin()));
      }
      positions.push_back(std::move(pos));
    }

    std::vector<std::size_t> digits(scope.size(), 0);
    const std::size_t total = table_size(scope.size(), radix);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      for (auto& d : digits) {
        d = r % radix;
        r /= radix;
      }
      std::uint64_t value = 1;
      for (std::size_t fi = 0; fi < touching.size() && value != 0; ++fi) {
        std::size_t fidx = 0;
        std::size_t mult = 1;
        for (std::size_t pos : positions[fi]) {
          fidx += digits[pos] * mult;
          mult *= radix;
        }
        value = checked_mul(value, touching[fi].table[fidx]);
      }
      if (value == 0) continue;
      std::size_t oidx = 0;
      std::size_t mult = 1;
      for (std::size_t k = 0; k < scope.size(); ++k) {
        if (k == best_pos) continue;
        oidx += digits[k] * mult;
        mult *= radix;
      }
      out.table[oidx] = checked_add(out.table[oidx], value);
    }
    rest.push_back(std::move(out));
    factors = std::move(rest);
  }

  std::uint64_t result = 1;
  for (const Factor& f : factors) result = checked_mul(result, f.table.at(0));
  return result;
}

std::uint64_t block_dimension_exhaustive(const ColoredGraph& graph, int p) {
  graph.validate();
  const LevelData level = level_data(p);
  check_tails(graph, level);
  const auto slots = vertex_slots(graph);
  const std::size_t radix = level.colors.size();
  const std::size_t n_edges = graph.edges.size();

  double space = 1.0;
  for (std::size_t i = 0; i < n_edges; ++i) space *= static_cast<double>(radix);
  if (space > 2e8) throw PreconditionError("coloring space too large for exhaustive enumeration");

  std::vector<std::size_t> digits(n_edges, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& vs : slots) {
      int triple[3];
      for (std::size_t k = 0; k < 3; ++k) {
        triple[k] = vs[k].fixed ? vs[k].value : level.colors[digits[static_cast<std::size_t>(vs[k].value)]];
      }
      if (!admissible_triple(triple[0], triple[1], triple[2], level)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n_edges && ++digits[i] == radix) digits[i++] = 0;
    if (i == n_edges) break;
  }
  return count;
}

std::vector<int> tadpole_basis(int boundary_color, int p) {
  const LevelData level = level_data(p);
  if (!level.contains(boundary_color)) {
    throw InvalidColor("boundary color " + std::to_string(boundary_color) + " is not a level-" +
                       std::to_string(p) + " color");
  }
  std::vector<int> basis;
  for (int a : level.colors) {
    if (admissible_triple(a, a, boundary_color, level)) basis.push_back(a);
  }
  return basis;
}

ColoredGraph cut_graph(const ColoredGraph& graph, const std::vector<int>& cut_edges,
                       const std::vector<int>& colors) {
  if (cut_edges.size() != colors.size()) {
    throw PreconditionError("one color is needed per cut edge");
  }
  std::map<int, int> cut_color;
  for (std::size_t i = 0; i < cut_edges.size(); ++i) {
    const int e = cut_edges[i];
    if (e < 0 || static_cast<std::size_t>(e) >= graph.edges.size()) {
      throw InvalidGraph("cut edge " + std::to_string(e) + " is not an internal edge");
    }
    if (!cut_color.emplace(e, colors[i]).second) {
      throw InvalidGraph("edge " + std::to_string(e) + " listed twice in the cut");
    }
  }
  ColoredGraph out{graph.vertex_count, {}, graph.tails};
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto it = cut_color.find(static_cast<int>(e));
    if (it == cut_color.end()) {
      out.edges.push_back(graph.edges[e]);
    } else {
      out.tails.push_back({graph.edges[e].u, it->second});
      out.tails.push_back({graph.edges[e].v, it->second});
    }
  }
  return out;
}

CutIdentity cut_identity(const ColoredGraph& graph, const std::vector<int>& cut_edges, int p) {
  const LevelData level = level_data(p);
  CutIdentity id{block_dimension_exhaustive(graph, p), 0, 0};
  std::vector<std::size_t> digits(cut_edges.size(), 0);
  std::vector<int> colors(cut_edges.size(), 0);
  const std::size_t radix = level.colors.size();
  while (true) {
    for (std::size_t i = 0; i < digits.size(); ++i) colors[i] = level.colors[digits[i]];
    id.summed = checked_add(id.summed, block_dimension(cut_graph(graph, cut_edges, colors), p));
    ++id.colorings;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == radix) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return id;
}

bool cut_identity_check(const ColoredGraph& graph, const std::vector<int>& cut_edges, int p) {
  return cut_identity(graph, cut_edges, p).holds();
}

}  // namespace qrep
