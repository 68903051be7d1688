#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qrep {

/// Two multicurves c = (c_1..c_m) and d = (d_1..d_k) in minimal position:
/// the m-by-k table of intersection numbers i(c_i, d_j) plus a positive
/// multiplicity per component (c components first).
class ConfigurationGraph {
 public:
  ConfigurationGraph(std::vector<std::vector<int>> intersections, std::vector<int> multiplicities);

  // Named families. Bipartite 2-coloring decides which vertices are c curves.
  static ConfigurationGraph path(int n);        // A_n
  static ConfigurationGraph dynkin_d(int n);    // D_n, n >= 4
  static ConfigurationGraph dynkin_e(int n);    // E_6, E_7, E_8
  static ConfigurationGraph cycle(int n);       // even n >= 2; n = 2 is the double edge
  static ConfigurationGraph star(int leaves);
  static ConfigurationGraph affine_d(int n);    // n + 1 vertices, n >= 4
  static ConfigurationGraph affine_e(int n);    // n + 1 vertices, n in {6, 7, 8}

  /// Simple or multi-graph on n vertices given by an edge list; must be
  /// bipartite.
  static ConfigurationGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int c_count() const { return m_; }
  int d_count() const { return k_; }
  int vertex_count() const { return m_ + k_; }
  int intersection(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<int>& multiplicities() const { return mult_; }
  std::string vertex_name(int v) const;

  bool is_connected() const;

  /// Symmetric adjacency of the configuration graph, edge weights = i(c_i, d_j).
  Eigen::MatrixXd adjacency() const;

  /// Same graph with vertices reordered; `order[new] = old`. Keeps the c/d split.
  ConfigurationGraph relabeled(const std::vector<int>& c_order, const std::vector<int>& d_order) const;

 private:
  int m_;
  int k_;
  std::vector<std::vector<int>> table_;
  std::vector<int> mult_;
};

/// Parses `A:n`, `D:n`, `E:n`, `cycle:n`, `star:n`, `affineD:n`, `affineE:n`,
/// or `c=m; d=k; inter=(i,j,count),...; mult=d1,d2,...` with 1-based indices.
ConfigurationGraph parse_configuration(const std::string& text);

/// Assembles an explicit configuration; m or k < 0 means "infer from indices"
/// and an empty multiplicity list means all ones. `position` is reported in
/// parse errors.
ConfigurationGraph build_configuration(int m, int k, const std::vector<std::array<int, 3>>& inter,
                                       const std::vector<int>& mult, std::size_t position = 0);

/// N = (d_i * i(gamma_i, gamma_j)) with zero diagonal blocks.
Eigen::MatrixXd intersection_matrix(const ConfigurationGraph& g);

struct PerronData {
  double mu;
  Eigen::VectorXd v;  // unit length, strictly positive
  double residual;    // ||N v - mu v||
  int iterations;
};

inline constexpr int kPerronIterationCap = 2'000'000;

/// Dominant eigenpair of a nonnegative irreducible matrix. Power iteration
/// runs on N + I from the all-ones vector, so bipartite period-2 oscillation
/// cannot occur; stops when ||N v - mu v|| <= tol * mu.
PerronData perron(const Eigen::MatrixXd& n, double tol = 1e-12);

struct SL2Mat {
  double a;
  double b;
  double c;
  double d;

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  SL2Mat inverse() const { return {d, -b, -c, a}; }
  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
};

/// Checked constructor; throws PreconditionError when |det - 1| > 1e-12.
SL2Mat make_sl2(double a, double b, double c, double d);

/// DT_c = [[1, mu], [0, 1]] and DT_d = [[1, 0], [-mu, 1]].
std::pair<SL2Mat, SL2Mat> multitwist_matrices(double mu);

enum class SL2Class { Elliptic, Parabolic, Anosov };
SL2Class classify_sl2(const SL2Mat& m);
const char* to_string(SL2Class c);

enum class GraphClass { Recessive, Critical, Dominant };
const char* to_string(GraphClass c);

/// Spectral radius of the configuration graph against 2, decided from its
/// shape alone: Dynkin diagrams are recessive, affine Dynkin diagrams
/// critical, everything else dominant.
GraphClass classify_graph(const ConfigurationGraph& g);

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
double spectral_radius(const ConfigurationGraph& g);

/// Classification read off spectral_radius with tolerance 1e-9.
GraphClass classify_graph_spectral(const ConfigurationGraph& g);

struct LatticeCertificate {
  GraphClass graph_class;
  bool finite_index;          // the two multitwists generate a finite-index subgroup
  double mu;
  bool teichmuller_by_mu;     // mu <= 2 + 1e-9
};

LatticeCertificate lattice_certificate(const ConfigurationGraph& g);

/// One rectangle per intersection point of c_i and d_j, with side lengths
/// taken from the Perron vector. The c-curves run horizontally, so the
/// rectangle is v_{d_j} wide and v_{c_i} tall.
struct Rectangle {
  int id;
  int c;
  int d;
  int copy;  // 0 .. i(c, d) - 1
  double width;
  double height;
};

/// Two rectangles sharing a vertical side (consecutive along a c-curve) or a
/// horizontal side (consecutive along a d-curve). Each curve closes up
/// cyclically.
struct Gluing {
  enum class Side { Vertical, Horizontal };
  int from;
  int to;
  Side side;
  int curve;  // index of the shared c- or d-curve
};

struct FlatSurfaceData {
  std::vector<Rectangle> rectangles;
  std::vector<Gluing> gluings;
  double area() const;
};

FlatSurfaceData flat_surface(const ConfigurationGraph& g);

}  // namespace qrep
