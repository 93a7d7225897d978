// Command-line front end: partition functions, Hilbert spaces, Euler
// numbers and the verification suites, all emitted as JSON.
//
// Exit codes: 0 success, 1 identity failure, 2 validation error, 3 search cap.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tqft/tqft.hpp"

namespace {

using tqft::io::Json;

struct RunConfig {
  std::string manifold;
  std::string group;
  std::string cocycle = "trivial";
  std::string output = "both";
  std::optional<int> genus;
  std::string surface;
  std::string suite;
  std::string bundle;
  std::uint64_t seed = 0;
  std::uint64_t max_nodes = tqft::kDefaultSearchCap;
  bool timing = false;
};

std::string stage = "startup";

Json render(const tqft::PhaseSum& z, const std::string& mode) {
  Json full = tqft::io::phase_sum_to_json(z);
  if (mode == "exact") full.erase("approx");
  if (mode == "approx") {
    full.erase("exact");
    full.erase("value");
  }
  return full;
}

Json cmd_z(const RunConfig& cfg) {
  stage = "loading group";
  const tqft::FiniteGroup g = tqft::io::load_group(cfg.group);
  stage = "loading cocycle";
  const tqft::Cochain w = tqft::io::load_cocycle(cfg.cocycle, g);
  stage = "loading manifold";
  const tqft::Manifold m = tqft::io::load_manifold(cfg.manifold);
  stage = "state sum";
  const auto start = std::chrono::steady_clock::now();
  const tqft::PhaseSum z = tqft::partition_closed(m.complex, g, w, cfg.max_nodes);
  stage = "bundle classes";
  const tqft::GroupoidSum classes = tqft::partition_groupoid(m.complex, g, w, cfg.max_nodes);
  const auto stop = std::chrono::steady_clock::now();

  Json sectors = Json::array();
  for (const tqft::ClosedSector& s : classes.sectors) {
    Json j{{"representative", tqft::io::coloring_to_json(s.representative)},
           {"aut", s.automorphisms},
           {"orbit", s.orbit_size},
           {"action", s.action.str()}};
    if (m.loops && !m.loops->empty()) {
      Json hol = Json::object();
      const auto inv = tqft::holonomy_class_invariants(m, g, s.representative);
      for (std::size_t i = 0; i < inv.size(); ++i) hol[(*m.loops)[i].name] = inv[i];
      j["holonomy_classes"] = hol;
    }
    sectors.push_back(j);
  }
  Json out = render(z, cfg.output);
  out["command"] = "z";
  out["sectors"] = sectors;
  out["meta"] = {{"manifold", cfg.manifold},
                 {"group", cfg.group},
                 {"cocycle", cfg.cocycle},
                 {"tetrahedra", m.complex.num_tets()},
                 {"vertex_classes", m.complex.num_vertices()},
                 {"edge_classes", m.complex.num_edges()},
                 {"groupoid_sum_matches", classes.value == z}};
  if (cfg.timing) out["meta"]["seconds"] = std::chrono::duration<double>(stop - start).count();
  return out;
}

Json cmd_hilbert(const RunConfig& cfg) {
  int genus = 0;
  if (cfg.genus) {
    genus = *cfg.genus;
  } else if (cfg.surface == "S2") {
    genus = 0;
  } else if (cfg.surface == "T2") {
    genus = 1;
  } else {
    throw tqft::Error(tqft::Errc::UnsupportedSurface, "give --genus or --surface S2|T2");
  }
  stage = "loading group";
  const tqft::FiniteGroup g = tqft::io::load_group(cfg.group);
  stage = "loading cocycle";
  const tqft::Cochain w = tqft::io::load_cocycle(cfg.cocycle, g);
  stage = "sectors";
  const tqft::HilbertSum h = tqft::hilbert_space(genus, g, w, cfg.max_nodes);
  Json sectors = Json::array();
  for (const tqft::Sector& s : h.sectors)
    sectors.push_back({{"label", s.label}, {"weight", tqft::to_string(s.weight)}, {"survives", s.survives}});
  return {{"command", "hilbert"},
          {"dim", h.dim()},
          {"sectors", sectors},
          {"meta", {{"genus", genus}, {"group", cfg.group}, {"cocycle", cfg.cocycle}}}};
}

Json cmd_euler(const RunConfig& cfg) {
  stage = "loading bundle";
  const tqft::LineBundleConn l = tqft::io::bundle_from_json(tqft::io::read_json_file(cfg.bundle));
  stage = "euler number";
  Json out{{"command", "euler"}, {"meta", {{"bundle", cfg.bundle}}}};
  if (l.base.is_closed()) {
    out["euler"] = std::stoll(tqft::euler_closed(l).str());
  } else {
    const tqft::ZTorsorElem e = tqft::relative_euler(l);
    Json hol = Json::array(), ref = Json::array();
    for (const auto& h : e.torsor.holonomy) hol.push_back(h.str());
    for (const auto& r : e.torsor.reference()) ref.push_back(tqft::io::fraction(r));
    out["offset"] = std::stoll(e.offset.str());
    out["reference_lift"] = ref;
    out["boundary_holonomy"] = hol;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact state sums for 3d finite gauge theory"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("TQFT_MAX_NODES")) {
    try {
      cfg.max_nodes = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "TQFT_MAX_NODES must be a positive integer\n";
      return 2;
    }
  }
  app.add_option("--max-nodes", cfg.max_nodes, "search-node cap")->check(CLI::PositiveNumber);

  auto* z = app.add_subcommand("z", "partition function of a closed complex");
  z->add_option("--manifold", cfg.manifold, "preset name or triangulation file")->required();
  z->add_option("--group", cfg.group, "preset name or group file")->required();
  z->add_option("--cocycle", cfg.cocycle, "trivial, cyclic:n:p or cocycle file");
  z->add_option("--output", cfg.output)->check(CLI::IsMember({"exact", "approx", "both"}));
  z->add_flag("--timing", cfg.timing, "include wall-clock time in meta");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert space of a closed surface");
  hilbert->add_option("--genus", cfg.genus)->check(CLI::NonNegativeNumber);
  hilbert->add_option("--surface", cfg.surface)->check(CLI::IsMember({"S2", "T2"}));
  hilbert->add_option("--group", cfg.group)->required();
  hilbert->add_option("--cocycle", cfg.cocycle);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite)->required()->check(
      CLI::IsMember({"gluing", "coboundary", "triangulation", "verlinde", "euler", "all"}));
  verify->add_option("--seed", cfg.seed);

  auto* euler = app.add_subcommand("euler", "Euler number of a line bundle file");
  euler->add_option("bundle", cfg.bundle)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      stage = "verify " + cfg.suite;
      bool pass = true;
      Json suites = Json::array();
      for (const auto& r : tqft::verify::run(cfg.suite, cfg.seed)) {
        pass = pass && r.pass();
        suites.push_back(r.to_json());
      }
      std::cout << Json{{"command", "verify"}, {"seed", cfg.seed}, {"pass", pass}, {"suites", suites}}.dump(2) << "\n";
      return pass ? 0 : 1;
    }
    Json out;
    if (z->parsed()) out = cmd_z(cfg);
    if (hilbert->parsed()) out = cmd_hilbert(cfg);
    if (euler->parsed()) out = cmd_euler(cfg);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const tqft::Error& e) {
    std::cerr << Json{{"error", std::string(tqft::errc_name(e.code()))}, {"stage", stage}, {"message", e.what()}}.dump()
              << "\n";
    return e.code() == tqft::Errc::SizeLimit ? 3 : 2;
  }
}
