#include "qrep/report.hpp"

#include <algorithm>

namespace qrep {

namespace {

json root_json(const RootOfUnity& z) { return {{"order", z.order()}, {"exponent", z.exponent()}}; }

json matrix_json(const SL2Mat& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json side_json(const CurveSide& s) {
  json out{{"genus", s.genus}, {"punctures", s.punctures}};
  if (!s.labels.empty()) out["labels"] = s.labels;
  return out;
}

bool is_tadpole(const ColoredGraph& g) {
  return g.vertex_count == 1 && g.edges.size() == 1 && g.edges[0].is_loop() && g.tails.size() == 1;
}

}  // namespace

json Report::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"results", results}, {"notes", notes}, {"version", kVersion}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

json certificate_json(const InfinitenessCertificate& cert) {
  json out{{"p", cert.p}, {"route", to_string(cert.route)}, {"odd_part", cert.odd_part}};
  if (cert.odd) {
    const OddBurauDetails& d = *cert.odd;
    out["boundary_color"] = d.boundary_color;
    out["loop_colors"] = d.loop_colors;
    if (d.loop_colors.size() == 2) {
      out["burau_parameter"] = root_json(d.burau_parameter);
      out["minus_q_order"] = d.minus_q_order;
    }
  }
  if (cert.even) {
    const EvenCoxeterDetails& d = *cert.even;
    out["ell"] = d.ell;
    out["signature"] = {d.profile.n_plus, d.profile.n_minus};
    out["diagonal_signs"] = d.profile.pattern();
    json cases = json::array();
    for (const SubspaceCase& c : d.cases) {
      json item{{"multiset", c.multiset}, {"resolution", to_string(c.resolution)}};
      if (c.irreducibility_asserted) item["irreducibility"] = "asserted";
      cases.push_back(std::move(item));
    }
    out["cases"] = std::move(cases);
  }
  if (!cert.failed.empty()) out["failed"] = cert.failed;
  if (!cert.notes.empty()) out["notes"] = cert.notes;
  return out;
}

json blocks_json(const ColoredGraph& graph, int p) {
  json out{{"graph", graph.to_string()}, {"level", p}, {"dimension", block_dimension(graph, p)}};
  if (is_tadpole(graph)) out["loop_colors"] = tadpole_basis(graph.tails[0].color, p);
  return out;
}

json veech_json(const ConfigurationGraph& g) {
  const Eigen::MatrixXd n = intersection_matrix(g);
  const PerronData pd = perron(n, kPerronTolerance);
  const LatticeCertificate lc = lattice_certificate(g);
  const auto [dtc, dtd] = multitwist_matrices(pd.mu);
  const SL2Mat prod = dtc * dtd.inverse();

  json table = json::array();
  for (int i = 0; i < g.c_count(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.d_count(); ++j) row.push_back(g.intersection(i, j));
    table.push_back(std::move(row));
  }
  json names = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) names.push_back(g.vertex_name(v));

  const FlatSurfaceData fs = flat_surface(g);
  json rects = json::array();
  for (const Rectangle& r : fs.rectangles) {
    rects.push_back({{"id", r.id}, {"c", r.c}, {"d", r.d}, {"copy", r.copy}, {"width", r.width}, {"height", r.height}});
  }
  json glue = json::array();
  for (const Gluing& e : fs.gluings) {
    glue.push_back({{"from", e.from},
                    {"to", e.to},
                    {"side", e.side == Gluing::Side::Vertical ? "vertical" : "horizontal"},
                    {"curve", e.curve}});
  }

  return {{"c_count", g.c_count()},
          {"d_count", g.d_count()},
          {"intersections", std::move(table)},
          {"multiplicities", g.multiplicities()},
          {"vertices", std::move(names)},
          {"perron",
           {{"mu", pd.mu},
            {"v", std::vector<double>(pd.v.data(), pd.v.data() + pd.v.size())},
            {"residual", pd.residual},
            {"iterations", pd.iterations},
            {"tolerance", kPerronTolerance}}},
          {"class", to_string(lc.graph_class)},
          {"spectral_radius", spectral_radius(g)},
          {"lattice",
           {{"finite_index", lc.finite_index},
            {"teichmuller_by_mu", lc.teichmuller_by_mu},
            {"verdict", lc.finite_index ? "FiniteIndexInVeech" : "NotFiniteIndex"}}},
          {"dt_c", {{"matrix", matrix_json(dtc)}, {"class", to_string(classify_sl2(dtc))}}},
          {"dt_d", {{"matrix", matrix_json(dtd)}, {"class", to_string(classify_sl2(dtd))}}},
          {"dt_c_dt_d_inv", {{"trace", prod.trace()}, {"class", to_string(classify_sl2(prod))}}},
          {"rectangles", std::move(rects)},
          {"gluings", std::move(glue)},
          {"area", fs.area()}};
}

json orbits_json(int g, int n, bool labeled) {
  const std::uint64_t count = count_orbits(g, n, labeled);
  json orbits = json::array();
  for (const CurveType& t : enumerate_orbits(g, n, labeled)) {
    if (t.kind == CurveType::Kind::NonSeparating) {
      orbits.push_back({{"kind", "nonseparating"}});
    } else {
      orbits.push_back({{"kind", "separating"}, {"sides", {side_json(t.side1), side_json(t.side2)}}});
    }
  }
  const H2Bounds h = h2_bounds(g, n);
  return {{"g", g},
          {"n", n},
          {"labeled", labeled},
          {"count", count},
          {"orbits", std::move(orbits)},
          {"h2_bounds",
           {{"lower_rank", h.lower_rank},
            {"upper_bound", h.upper_bound},
            {"upper_bound_valid", h.upper_bound_valid},
            {"nonvanishing", h.nonvanishing()}}}};
}

}  // namespace qrep
