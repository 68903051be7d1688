#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrep/level.hpp"

namespace qrep {

struct Edge {
  int u;
  int v;
  bool is_loop() const { return u == v; }
};

struct Tail {
  int vertex;
  int color;
};

/// Trivalent graph whose internal edges carry free colors and whose tails
/// carry fixed boundary colors. Loops count twice toward a vertex degree.
struct ColoredGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Tail> tails;

  /// Throws InvalidGraph unless every vertex has degree 3.
  void validate() const;
  std::vector<int> degrees() const;
  int component_count() const;
  std::string to_string() const;
};

// Standard graphs used throughout.
ColoredGraph tadpole_graph(int tail_color);
ColoredGraph theta_graph();            // closed genus 2
ColoredGraph genus2_dumbbell_graph();  // closed genus 2, separating middle edge
ColoredGraph genus3_chain_graph();     // closed genus 3, two separating edges

bool is_admissible(int a, int b, int c, int p);

/// Admissibility without the color-set membership check; colors of the wrong
/// parity simply fail.
bool admissible_triple(int a, int b, int c, const LevelData& level);

/// Number of admissible colorings, by variable elimination over edges.
std::uint64_t block_dimension(const ColoredGraph& graph, int p);

/// Same count by enumerating every coloring of the internal edges.
std::uint64_t block_dimension_exhaustive(const ColoredGraph& graph, int p);

/// Loop colors a with (a, a, i) admissible, increasing.
std::vector<int> tadpole_basis(int boundary_color, int p);

/// Cuts the listed internal edges. Each cut edge becomes two tails colored
/// by the matching entry of `colors`.
ColoredGraph cut_graph(const ColoredGraph& graph, const std::vector<int>& cut_edges,
                       const std::vector<int>& colors);

struct CutIdentity {
  std::uint64_t whole;       // exhaustive count on the uncut graph
  std::uint64_t summed;      // sum over cut colorings, counted by elimination
  std::uint64_t colorings;   // number of cut-edge colorings visited
  bool holds() const { return whole == summed; }
};

CutIdentity cut_identity(const ColoredGraph& graph, const std::vector<int>& cut_edges, int p);
bool cut_identity_check(const ColoredGraph& graph, const std::vector<int>& cut_edges, int p);

/// Parses `vertices=n; edges=u-v,...; tails=v:color,...`. Whitespace is
/// ignored; loops are written u-u. Errors name the offending token.
ColoredGraph parse_graph(const std::string& text);

}  // namespace qrep
