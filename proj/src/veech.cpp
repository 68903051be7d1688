#include "qrep/veech.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <Eigen/Eigenvalues>

#include "qrep/errors.hpp"

namespace qrep {

namespace {

constexpr double kCriticalTolerance = 1e-9;

using EdgeList = std::vector<std::pair<int, int>>;

// Tree with one branch vertex (vertex 0) and arms of the given lengths.
EdgeList arms_tree(const std::vector<int>& arms, int& vertex_count) {
  EdgeList edges;
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  vertex_count = next;
  return edges;
}

EdgeList path_edges(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

}  // namespace

ConfigurationGraph::ConfigurationGraph(std::vector<std::vector<int>> intersections,
                                       std::vector<int> multiplicities)
    : m_(static_cast<int>(intersections.size())),
      k_(intersections.empty() ? 0 : static_cast<int>(intersections.front().size())),
      table_(std::move(intersections)),
      mult_(std::move(multiplicities)) {
  if (m_ == 0 || k_ == 0) throw PreconditionError("both multicurves need at least one component");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != k_) throw PreconditionError("intersection table is ragged");
    for (int x : row) {
      if (x < 0) throw PreconditionError("intersection numbers are nonnegative");
    }
  }
  if (static_cast<int>(mult_.size()) != m_ + k_) {
    throw PreconditionError("expected one multiplicity per curve component");
  }
  for (int d : mult_) {
    if (d <= 0) throw PreconditionError("multiplicities are positive");
  }
}

ConfigurationGraph ConfigurationGraph::from_edges(int n, const EdgeList& edges) {
  if (n <= 0) throw PreconditionError("graph needs at least one vertex");
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("configuration graphs have no loops");
    nbrs[static_cast<std::size_t>(u)].push_back(v);
    nbrs[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : nbrs[static_cast<std::size_t>(u)]) {
        if (side[static_cast<std::size_t>(v)] < 0) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
          throw PreconditionError("graph is not bipartite");
        }
      }
    }
  }
  std::vector<int> index(static_cast<std::size_t>(n));
  int m = 0;
  int k = 0;
  for (int v = 0; v < n; ++v) index[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] == 0 ? m++ : k++;
  if (k == 0) throw PreconditionError("graph needs an edge");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (const auto& [u, v] : edges) {
    const auto [c, d] = side[static_cast<std::size_t>(u)] == 0 ? std::pair{u, v} : std::pair{v, u};
    ++table[static_cast<std::size_t>(index[static_cast<std::size_t>(c)])][static_cast<std::size_t>(index[static_cast<std::size_t>(d)])];
  }
  return {std::move(table), std::vector<int>(static_cast<std::size_t>(m + k), 1)};
}

ConfigurationGraph ConfigurationGraph::path(int n) {
  if (n < 2) throw PreconditionError("A_n needs n >= 2 for two nonempty multicurves");
  return from_edges(n, path_edges(n));
}

ConfigurationGraph ConfigurationGraph::dynkin_d(int n) {
  if (n < 4) throw PreconditionError("D_n needs n >= 4");
  EdgeList edges = path_edges(n - 1);
  edges.emplace_back(n - 3, n - 1);
  return from_edges(n, edges);
}

ConfigurationGraph ConfigurationGraph::dynkin_e(int n) {
  if (n < 6 || n > 8) throw PreconditionError("E_n exists for n in {6, 7, 8}");
  int count = 0;
  const EdgeList edges = arms_tree({1, 2, n - 4}, count);
  return from_edges(count, edges);
}

ConfigurationGraph ConfigurationGraph::cycle(int n) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("cycle length must be even and >= 2");
  EdgeList edges = path_edges(n);
  edges.emplace_back(n - 1, 0);
  return from_edges(n, edges);
}

ConfigurationGraph ConfigurationGraph::star(int leaves) {
  if (leaves < 1) throw PreconditionError("star needs at least one leaf");
  int count = 0;
  const EdgeList edges = arms_tree(std::vector<int>(static_cast<std::size_t>(leaves), 1), count);
  return from_edges(count, edges);
}

ConfigurationGraph ConfigurationGraph::affine_d(int n) {
  if (n < 4) throw PreconditionError("affine D_n needs n >= 4");
  if (n == 4) return star(4);
  EdgeList edges = path_edges(n - 1);
  edges.emplace_back(1, n - 1);
  edges.emplace_back(n - 3, n);
  return from_edges(n + 1, edges);
}

ConfigurationGraph ConfigurationGraph::affine_e(int n) {
  int count = 0;
  EdgeList edges;
  switch (n) {
    case 6:
      edges = arms_tree({2, 2, 2}, count);
      break;
    case 7:
      edges = arms_tree({1, 3, 3}, count);
      break;
    case 8:
      edges = arms_tree({1, 2, 5}, count);
      break;
    default:
      throw PreconditionError("affine E_n exists for n in {6, 7, 8}");
  }
  return from_edges(count, edges);
}

std::string ConfigurationGraph::vertex_name(int v) const {
  return v < m_ ? "c" + std::to_string(v + 1) : "d" + std::to_string(v - m_ + 1);
}

bool ConfigurationGraph::is_connected() const {
  const int n = vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      const bool adjacent = u < m_ ? (v >= m_ && intersection(u, v - m_) > 0)
                                   : (v < m_ && intersection(v, u - m_) > 0);
      if (adjacent) {
        seen[static_cast<std::size_t>(v)] = true;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

Eigen::MatrixXd ConfigurationGraph::adjacency() const {
  const int n = vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < k_; ++j) {
      a(i, m_ + j) = a(m_ + j, i) = intersection(i, j);
    }
  }
  return a;
}

ConfigurationGraph ConfigurationGraph::relabeled(const std::vector<int>& c_order,
                                                 const std::vector<int>& d_order) const {
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m_), std::vector<int>(static_cast<std::size_t>(k_)));
  std::vector<int> mult(mult_.size());
  for (int i = 0; i < m_; ++i) {
    mult[static_cast<std::size_t>(i)] = mult_[static_cast<std::size_t>(c_order[static_cast<std::size_t>(i)])];
    for (int j = 0; j < k_; ++j) {
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          intersection(c_order[static_cast<std::size_t>(i)], d_order[static_cast<std::size_t>(j)]);
    }
  }
  for (int j = 0; j < k_; ++j) {
    mult[static_cast<std::size_t>(m_ + j)] = mult_[static_cast<std::size_t>(m_ + d_order[static_cast<std::size_t>(j)])];
  }
  return {std::move(table), std::move(mult)};
}

// ---------------------------------------------------------------------------

Eigen::MatrixXd intersection_matrix(const ConfigurationGraph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("configuration graph is disconnected");
  const int m = g.c_count();
  const int n = g.vertex_count();
  const auto& d = g.multiplicities();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < g.d_count(); ++j) {
      const double x = g.intersection(i, j);
      out(i, m + j) = d[static_cast<std::size_t>(i)] * x;
      out(m + j, i) = d[static_cast<std::size_t>(m + j)] * x;
    }
  }
  return out;
}

PerronData perron(const Eigen::MatrixXd& n, double tol) {
  if (n.rows() != n.cols() || n.rows() == 0) throw PreconditionError("perron needs a nonempty square matrix");
  if ((n.array() < 0.0).any()) throw PreconditionError("perron needs a nonnegative matrix");
  const Eigen::Index size = n.rows();
  const Eigen::MatrixXd shifted = n + Eigen::MatrixXd::Identity(size, size);

  Eigen::VectorXd v = Eigen::VectorXd::Ones(size).normalized();
  for (int it = 1; it <= kPerronIterationCap; ++it) {
    v = (shifted * v).normalized();
    const Eigen::VectorXd nv = n * v;
    const double mu = v.dot(nv);
    const double residual = (nv - mu * v).norm();
    if (mu > 0.0 && residual <= tol * mu) {
      if ((v.array() <= 0.0).any()) throw NoConvergence("Perron vector is not strictly positive; matrix reducible?");
      return {mu, v, residual, it};
    }
  }
  throw NoConvergence("power iteration did not converge within " + std::to_string(kPerronIterationCap) +
                      " iterations");
}

SL2Mat make_sl2(double a, double b, double c, double d) {
  const SL2Mat m{a, b, c, d};
  const double scale = std::max(1.0, std::abs(a * d) + std::abs(b * c));
  if (std::abs(m.det() - 1.0) > 1e-12 * scale) throw PreconditionError("matrix is not in SL(2,R)");
  return m;
}

std::pair<SL2Mat, SL2Mat> multitwist_matrices(double mu) {
  if (!(mu > 0.0)) throw PreconditionError("mu must be positive");
  return {SL2Mat{1.0, mu, 0.0, 1.0}, SL2Mat{1.0, 0.0, -mu, 1.0}};
}

SL2Class classify_sl2(const SL2Mat& m) {
  make_sl2(m.a, m.b, m.c, m.d);
  const double t = std::abs(m.trace());
  if (std::abs(t - 2.0) <= kCriticalTolerance) return SL2Class::Parabolic;
  return t < 2.0 ? SL2Class::Elliptic : SL2Class::Anosov;
}

const char* to_string(SL2Class c) {
  switch (c) {
    case SL2Class::Elliptic:
      return "elliptic";
    case SL2Class::Parabolic:
      return "parabolic";
    case SL2Class::Anosov:
      return "anosov";
  }
  return "?";
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Recessive:
      return "recessive";
    case GraphClass::Critical:
      return "critical";
    case GraphClass::Dominant:
      return "dominant";
  }
  return "?";
}

GraphClass classify_graph(const ConfigurationGraph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("configuration graph is disconnected");
  const int n = g.vertex_count();
  const int m = g.c_count();

  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  int edges = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < g.d_count(); ++j) {
      const int w = g.intersection(i, j);
      if (w == 0) continue;
      if (w >= 3) return GraphClass::Dominant;
      if (w == 2) return n == 2 ? GraphClass::Critical : GraphClass::Dominant;  // affine A_1
      nbrs[static_cast<std::size_t>(i)].push_back(m + j);
      nbrs[static_cast<std::size_t>(m + j)].push_back(i);
      ++edges;
    }
  }
  auto degree = [&nbrs](int v) { return static_cast<int>(nbrs[static_cast<std::size_t>(v)].size()); };

  if (edges > n) return GraphClass::Dominant;
  if (edges == n) {
    // Exactly one cycle: critical only when the whole graph is that cycle.
    for (int v = 0; v < n; ++v) {
      if (degree(v) != 2) return GraphClass::Dominant;
    }
    return GraphClass::Critical;
  }

  // Tree.
  std::vector<int> branches;
  for (int v = 0; v < n; ++v) {
    if (degree(v) >= 5) return GraphClass::Dominant;
    if (degree(v) == 4) return n == 5 ? GraphClass::Critical : GraphClass::Dominant;
    if (degree(v) == 3) branches.push_back(v);
  }
  if (branches.empty()) return GraphClass::Recessive;
  if (branches.size() >= 3) return GraphClass::Dominant;
  if (branches.size() == 2) {
    for (int b : branches) {
      int leaves = 0;
      for (int u : nbrs[static_cast<std::size_t>(b)]) leaves += degree(u) == 1 ? 1 : 0;
      if (leaves != 2) return GraphClass::Dominant;
    }
    return GraphClass::Critical;  // affine D_n
  }

  // One branch vertex: classify by arm lengths.
  const int center = branches.front();
  std::vector<int> arms;
  for (int start : nbrs[static_cast<std::size_t>(center)]) {
    int prev = center;
    int cur = start;
    int len = 1;
    while (degree(cur) == 2) {
      const auto& nb = nbrs[static_cast<std::size_t>(cur)];
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const int a = arms[0];
  const int b = arms[1];
  const int c = arms[2];
  if (a == 1 && b == 1) return GraphClass::Recessive;                 // D_n
  if (a == 1 && b == 2 && c <= 4) return GraphClass::Recessive;       // E_6, E_7, E_8
  if ((a == 2 && b == 2 && c == 2) || (a == 1 && b == 3 && c == 3) || (a == 1 && b == 2 && c == 5)) {
    return GraphClass::Critical;                                      // affine E_6, E_7, E_8
  }
  return GraphClass::Dominant;
}

double spectral_radius(const ConfigurationGraph& g) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

GraphClass classify_graph_spectral(const ConfigurationGraph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("configuration graph is disconnected");
  const double r = spectral_radius(g);
  if (std::abs(r - 2.0) <= kCriticalTolerance) return GraphClass::Critical;
  return r < 2.0 ? GraphClass::Recessive : GraphClass::Dominant;
}

LatticeCertificate lattice_certificate(const ConfigurationGraph& g) {
  const GraphClass cls = classify_graph(g);
  const double mu = perron(intersection_matrix(g)).mu;
  return {cls, cls != GraphClass::Dominant, mu, mu <= 2.0 + kCriticalTolerance};
}

double FlatSurfaceData::area() const {
  double total = 0.0;
  for (const Rectangle& r : rectangles) total += r.width * r.height;
  return total;
}

FlatSurfaceData flat_surface(const ConfigurationGraph& g) {
  const PerronData pd = perron(intersection_matrix(g));
  const int m = g.c_count();
  FlatSurfaceData out;
  std::vector<std::vector<int>> along_c(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> along_d(static_cast<std::size_t>(g.d_count()));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < g.d_count(); ++j) {
      for (int copy = 0; copy < g.intersection(i, j); ++copy) {
        const int id = static_cast<int>(out.rectangles.size());
        out.rectangles.push_back({id, i, j, copy, pd.v(m + j), pd.v(i)});
        along_c[static_cast<std::size_t>(i)].push_back(id);
        along_d[static_cast<std::size_t>(j)].push_back(id);
      }
    }
  }
  auto close_up = [&out](const std::vector<std::vector<int>>& chains, Gluing::Side side) {
    for (std::size_t curve = 0; curve < chains.size(); ++curve) {
      const auto& ids = chains[curve];
      for (std::size_t t = 0; t < ids.size(); ++t) {
        out.gluings.push_back({ids[t], ids[(t + 1) % ids.size()], side, static_cast<int>(curve)});
      }
    }
  };
  close_up(along_c, Gluing::Side::Vertical);
  close_up(along_d, Gluing::Side::Horizontal);
  return out;
}

}  // namespace qrep
