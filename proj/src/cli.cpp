#include "qrep/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iomanip>
#include <sstream>

#include "qrep/errors.hpp"
#include "qrep/report.hpp"

namespace qrep::cli {

namespace {

struct Context {
  std::string format = "table";
  bool quiet = false;
};

int parse_int(const std::string& text, std::size_t begin, std::size_t end) {
  int value = 0;
  const char* first = text.data() + begin;
  const char* last = text.data() + end;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last) {
    throw ParseError("expected a positive integer", std::string(first, last), begin);
  }
  if (value < 1) throw ParseError("levels must be positive", std::string(first, last), begin);
  return value;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

void emit(const Report& report, const Context& ctx, std::ostream& out, const std::function<void()>& table) {
  if (ctx.format == "json") {
    out << report.dump();
  } else {
    table();
    if (!ctx.quiet) {
      for (const std::string& n : report.notes) out << "note: " << n << "\n";
    }
  }
}

// --- certify ---------------------------------------------------------------

void cmd_certify(const std::string& range, const Context& ctx, std::ostream& out) {
  const std::vector<int> levels = parse_levels(range);
  std::vector<InfinitenessCertificate> certs;
  certs.reserve(levels.size());
  for (int p : levels) certs.push_back(certify_level(p));

  std::vector<int> certified;
  std::vector<int> uncertified;
  json list = json::array();
  for (const auto& c : certs) {
    (c.route == Route::Uncertified ? uncertified : certified).push_back(c.p);
    if (!ctx.quiet) list.push_back(certificate_json(c));
  }

  Report report{"certify", {{"range", range}, {"levels", levels.size()}}, json::object(), {}};
  report.results["summary"] = {{"certified", certified}, {"uncertified", uncertified}};
  if (!ctx.quiet) report.results["certificates"] = std::move(list);
  report.notes.push_back("the four-punctured sphere case is outside certification scope");
  report.notes.push_back("cases marked asserted rely on irreducibility that is not computed here");

  emit(report, ctx, out, [&] {
    if (!ctx.quiet) {
      for (const auto& c : certs) {
        out << "p=" << std::setw(4) << std::left << c.p << " " << std::setw(13) << to_string(c.route);
        if (c.odd && c.route == Route::OddBurau) {
          out << " odd_part=" << c.odd->odd_part << " boundary=" << c.odd->boundary_color
              << " -q order=" << c.odd->minus_q_order;
        }
        if (c.even) out << " ell=" << c.even->ell << " signs=" << c.even->profile.pattern();
        for (const std::string& f : c.failed) out << " [" << f << "]";
        out << std::right << "\n";
        for (const std::string& n : c.notes) out << "    " << n << "\n";
      }
    }
    out << "certified: " << certified.size() << "\n";
    out << "uncertified: {" << join_ints(uncertified) << "}\n";
  });
}

// --- blocks ----------------------------------------------------------------

ColoredGraph named_graph(const std::string& spec, const std::optional<int>& tail) {
  if (spec == "tadpole") {
    if (!tail) throw ParseError("tadpole needs --tail", spec, 0);
    return tadpole_graph(*tail);
  }
  if (tail) throw ParseError("--tail only applies to the tadpole", spec, 0);
  if (spec == "theta") return theta_graph();
  if (spec == "dumbbell") return genus2_dumbbell_graph();
  if (spec == "chain3") return genus3_chain_graph();
  return parse_graph(spec);
}

void cmd_blocks(const std::string& spec, const std::optional<int>& tail, int p, const Context& ctx,
                std::ostream& out) {
  const ColoredGraph graph = named_graph(spec, tail);
  json inputs{{"graph", spec}, {"level", p}};
  if (tail) inputs["tail"] = *tail;
  Report report{"blocks", std::move(inputs), blocks_json(graph, p), {}};
  emit(report, ctx, out, [&] {
    out << "graph: " << report.results["graph"].get<std::string>() << "\n";
    out << "level: " << p << "\n";
    out << "dimension: " << report.results["dimension"].get<std::uint64_t>() << "\n";
    if (report.results.contains("loop_colors")) {
      out << "loop colors: {" << join_ints(report.results["loop_colors"].get<std::vector<int>>()) << "}\n";
    }
  });
}

// --- veech -----------------------------------------------------------------

void cmd_veech(const std::string& spec, const std::string& inter, const std::string& mult, const Context& ctx,
               std::ostream& out) {
  std::string text = spec;
  if (!inter.empty()) {
    if (!spec.empty()) throw ParseError("give either a graph spec or --inter", spec, 0);
    text = "inter=" + inter;
    if (!mult.empty()) text += "; mult=" + mult;
  } else if (!mult.empty()) {
    throw ParseError("--mult needs --inter", mult, 0);
  }
  if (text.empty()) throw ParseError("missing configuration graph", "", 0);
  const ConfigurationGraph g = parse_configuration(text);
  Report report{"veech", {{"graph", text}}, veech_json(g), {}};
  report.notes.push_back("classification is combinatorial; the spectral radius is a float cross-check");
  emit(report, ctx, out, [&] {
    const json& r = report.results;
    std::ostringstream v;
    v << std::setprecision(12);
    for (std::size_t i = 0; i < r["perron"]["v"].size(); ++i) v << (i ? ", " : "") << r["perron"]["v"][i].get<double>();
    out << std::setprecision(12);
    out << "mu: " << r["perron"]["mu"].get<double>() << "\n";
    out << "class: " << r["class"].get<std::string>() << "\n";
    out << "lattice: " << r["lattice"]["verdict"].get<std::string>() << "\n";
    if (!ctx.quiet) {
      out << "v: (" << v.str() << ")\n";
      out << "DT_c: " << r["dt_c"]["matrix"].dump() << " " << r["dt_c"]["class"].get<std::string>() << "\n";
      out << "DT_d: " << r["dt_d"]["matrix"].dump() << " " << r["dt_d"]["class"].get<std::string>() << "\n";
      out << "DT_c DT_d^-1: trace " << r["dt_c_dt_d_inv"]["trace"].get<double>() << " "
          << r["dt_c_dt_d_inv"]["class"].get<std::string>() << "\n";
      out << "rectangles: " << r["rectangles"].size() << ", area " << r["area"].get<double>() << "\n";
    }
  });
}

// --- orbits ----------------------------------------------------------------

void cmd_orbits(int g, int n, bool labeled, const Context& ctx, std::ostream& out) {
  Report report{"orbits", {{"g", g}, {"n", n}, {"labeled", labeled}}, orbits_json(g, n, labeled), {}};
  if (g < 4) report.notes.push_back("the H^2 upper bound is only established for genus at least 4");
  emit(report, ctx, out, [&] {
    const json& r = report.results;
    out << "N: " << r["count"].get<std::uint64_t>() << "\n";
    if (!ctx.quiet) {
      for (const CurveType& t : enumerate_orbits(g, n, labeled)) out << "  " << t.to_string() << "\n";
    }
    out << "H2 bounds: (" << r["h2_bounds"]["lower_rank"].get<std::uint64_t>() << ", "
        << r["h2_bounds"]["upper_bound"].get<std::uint64_t>() << ")\n";
  });
}

}  // namespace

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty level range", "", 0);
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::size_t dots = text.find("..", pos);
    if (dots != std::string::npos && dots < comma) {
      const int lo = parse_int(text, pos, dots);
      const int hi = parse_int(text, dots + 2, comma);
      if (hi < lo) throw ParseError("empty range", text.substr(pos, comma - pos), pos);
      if (hi - lo > 1'000'000) throw ParseError("range too long", text.substr(pos, comma - pos), pos);
      for (int p = lo; p <= hi; ++p) out.push_back(p);
    } else {
      out.push_back(parse_int(text, pos, comma));
    }
    pos = comma + 1;
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum representation certificates and flat-surface diagnostics", "qrep"};
  app.fallthrough();
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--quiet", ctx.quiet, "Summary output only");
  app.set_version_flag("--version", kVersion);

  std::string range;
  auto* certify = app.add_subcommand("certify", "Certify infinite image level by level");
  certify->add_option("range", range, "Levels, e.g. 7, 1..30 or 1..5,9")->required();

  std::string graph_spec;
  std::optional<int> tail;
  int level = 0;
  auto* blocks = app.add_subcommand("blocks", "Conformal block dimension of a colored graph");
  blocks->add_option("graph", graph_spec, "tadpole, theta, dumbbell, chain3 or a graph description")->required();
  blocks->add_option("--tail", tail, "Boundary color of the tadpole");
  blocks->add_option("--level", level, "Level p")->required()->check(CLI::PositiveNumber);

  std::string veech_spec;
  std::string inter;
  std::string mult;
  auto* veech = app.add_subcommand("veech", "Thurston construction for a pair of multicurves");
  veech->add_option("graph", veech_spec, "A:n, D:n, E:n, cycle:n, star:n, affineD:n, affineE:n or explicit form");
  veech->add_option("--inter", inter, "Intersections as (i,j,count),...");
  veech->add_option("--mult", mult, "Multiplicities, c curves first");

  int genus = 0;
  int punctures = 0;
  bool labeled = false;
  auto* orbits = app.add_subcommand("orbits", "Orbits of simple closed curves");
  orbits->add_option("g", genus, "Genus")->required()->check(CLI::NonNegativeNumber);
  orbits->add_option("n", punctures, "Number of punctures")->required()->check(CLI::NonNegativeNumber);
  orbits->add_flag("--labeled", labeled, "Keep punctures distinguishable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (certify->parsed()) cmd_certify(range, ctx, out);
    if (blocks->parsed()) cmd_blocks(graph_spec, tail, level, ctx, out);
    if (veech->parsed()) cmd_veech(veech_spec, inter, mult, ctx, out);
    if (orbits->parsed()) cmd_orbits(genus, punctures, labeled, ctx, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonHyperbolic& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidColor& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qrep"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qrep::cli
