#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "moplex/asteroidal.hpp"
#include "moplex/classes.hpp"
#include "moplex/corpus.hpp"
#include "moplex/edge_list.hpp"
#include "moplex/errors.hpp"
#include "moplex/gadgets.hpp"
#include "moplex/hamiltonian.hpp"
#include "moplex/moplex.hpp"
#include "moplex/orderings.hpp"

namespace moplex::cli {

using nlohmann::json;

namespace {

struct LoadedGraph {
  Graph graph;
  std::optional<std::vector<std::string>> labels;

  json vertex(Vertex v) const {
    if (labels) return (*labels)[v];
    return v;
  }
  json sequence(const std::vector<Vertex>& vs) const {
    json out = json::array();
    for (Vertex v : vs) out.push_back(vertex(v));
    return out;
  }
  json sequence(const VertexOrdering& order) const { return sequence(order.sequence()); }
  json set(const VertexSet& s) const { return sequence(s.to_vector()); }

  Vertex parse_vertex(const std::string& token) const {
    if (labels) {
      auto it = std::find(labels->begin(), labels->end(), token);
      if (it != labels->end()) return static_cast<Vertex>(it - labels->begin());
    }
    Vertex v = 0;
    const char* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw InputError("unknown vertex '" + token + "'");
    if (v >= graph.order()) throw InputError("vertex " + token + " out of range");
    return v;
  }
  Vertex parse_vertex(const json& j) const {
    if (j.is_string()) return parse_vertex(j.get<std::string>());
    if (j.is_number_unsigned()) {
      const auto v = j.get<std::uint64_t>();
      if (v >= graph.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
      return static_cast<Vertex>(v);
    }
    throw InputError("vertex must be a label or a non-negative integer");
  }
  VertexOrdering parse_ordering(const std::string& text) const {
    std::istringstream in(text);
    std::vector<Vertex> seq;
    for (std::string token; in >> token;) seq.push_back(parse_vertex(token));
    return VertexOrdering(std::move(seq));
  }
  VertexOrdering parse_ordering(const json& j) const {
    if (!j.is_array()) throw InputError("ordering must be a JSON array");
    std::vector<Vertex> seq;
    for (const auto& item : j) seq.push_back(parse_vertex(item));
    return VertexOrdering(std::move(seq));
  }
};

LoadedGraph load(const std::filesystem::path& path) {
  LoadedGraph out{read_edge_list(path), read_sidecar_labels(path)};
  if (out.labels && out.labels->size() != out.graph.order()) {
    throw InputError("label file names " + std::to_string(out.labels->size()) + " vertices, graph has " +
                     std::to_string(out.graph.order()));
  }
  return out;
}

json edges_json(const Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

json graph_summary(const Graph& g) {
  return {{"order", g.order()}, {"edges", g.edge_count()}, {"connected", is_connected(g)}};
}

json header(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"status", "ok"}};
}

CommandResult error_result(const std::string& command, ExitCode code, const std::string& kind,
                           const std::string& message, std::optional<std::size_t> line = std::nullopt) {
  json payload = header(command);
  payload["status"] = "error";
  payload["error"] = {{"kind", kind}, {"message", message}};
  if (line) payload["error"]["line"] = *line;
  return {code, payload};
}

template <typename Body>
CommandResult guarded(const std::string& command, Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return error_result(command, ExitCode::input_error, "parse", e.what(), e.line());
  } catch (const InputError& e) {
    return error_result(command, ExitCode::input_error, "input", e.what());
  } catch (const PreconditionError& e) {
    return error_result(command, ExitCode::input_error, "precondition", e.what());
  } catch (const ResourceLimitError& e) {
    return error_result(command, ExitCode::resource_limit, "resource_limit", e.what());
  } catch (const PropertyViolation& e) {
    return error_result(command, ExitCode::property_violation, "property_violation", e.what());
  } catch (const json::exception& e) {
    return error_result(command, ExitCode::input_error, "json", e.what());
  } catch (const std::exception& e) {
    return error_result(command, ExitCode::input_error, "io", e.what());
  }
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return json::parse(in);
}

json moplex_json(const LoadedGraph& lg, const Moplex& m) {
  return {{"vertices", lg.set(m.vertices)}, {"neighborhood", lg.set(m.neighborhood)}, {"simplicial", m.simplicial}};
}

// text rendering: one "key: value" line per scalar, dotted paths for nesting
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); })) {
    out << prefix << ":";
    for (const auto& v : j) out << ' ' << scalar(v);
    out << '\n';
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << scalar(j) << '\n';
  }
}

std::optional<std::pair<VertexSet, VertexSet>> sides_for(const std::string& kind, const Graph& g) {
  if (kind == "maxcut") return clique_partition(g);
  return bipartition(g);
}

GadgetOutput build_gadget(const std::string& kind, const Graph& g, const std::optional<VertexOrdering>& sigma) {
  if (kind == "embed") {
    if (!sigma) throw PreconditionError("embedding needs an umbrella-free ordering");
    return embed_in_2moplex(g, *sigma);
  }
  if (kind != "maxcut" && kind != "gi") throw InputError("unknown gadget kind '" + kind + "'");
  const auto sides = sides_for(kind, g);
  if (!sides) {
    throw PreconditionError(kind == "maxcut" ? "graph is not cobipartite" : "graph is not bipartite");
  }
  return kind == "maxcut" ? maxcut_gadget(g, sides->first, sides->second)
                          : gi_gadget(g, sides->first, sides->second);
}

}  // namespace

std::string render(const CommandResult& result, Format format) {
  if (format == Format::json) return result.payload.dump(2) + "\n";
  std::ostringstream out;
  flatten(result.payload, "", out);
  return out.str();
}

CommandResult cmd_analyze(const std::filesystem::path& path) {
  return guarded("analyze", [&] {
    const auto lg = load(path);
    const Graph& g = lg.graph;
    json payload = header("analyze");
    payload["graph"] = graph_summary(g);
    json list = json::array();
    const auto found = moplexes(g);
    for (const auto& m : found) list.push_back(moplex_json(lg, m));
    payload["moplexes"] = list;
    payload["moplex_number"] = found.size();
    payload["avoidable"] = lg.set(avoidable_vertices(g));
    const std::size_t an = asteroidal_number(g);
    payload["asteroidal_number"] = an;
    payload["classes"] = {
        {"chordal", is_chordal(g)},
        {"claw_free", is_claw_free(g)},
        {"at_free", an <= 2},
        {"proper_interval", is_proper_interval(g)},
        {"cochain", is_cochain(g)},
        {"cobipartite", is_cobipartite(g)},
        {"cocomparability", is_cocomparability(g)},
    };
    return CommandResult{ExitCode::ok, payload};
  });
}

CommandResult cmd_hampath(const std::filesystem::path& path) {
  return guarded("hampath", [&] {
    const auto lg = load(path);
    const Graph& g = lg.graph;
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    std::string method;
    std::optional<HamPathCertificate> cert;
    const std::size_t mn = moplex_number(g);
    if (mn <= 2) {
      method = "2-moplex";
      cert = hamiltonian_path_2moplex(g);
    } else {
      const std::size_t avoidable = avoidable_vertices(g).size();
      if (avoidable > 2) {
        throw PreconditionError("graph has " + std::to_string(mn) + " moplexes and " + std::to_string(avoidable) +
                                " avoidable vertices");
      }
      method = "few-avoidable";
      cert = hamiltonian_path_few_avoidable(g);
    }
    const bool valid = verify_certificate(g, *cert);
    json payload = header("hampath");
    payload["method"] = method;
    payload["path"] = lg.sequence(cert->path);
    payload["source_ordering"] = lg.sequence(cert->source_ordering);
    payload["verified"] = valid;
    return CommandResult{valid ? ExitCode::ok : ExitCode::property_violation, payload};
  });
}

CommandResult cmd_order(const std::filesystem::path& path, const std::string& kind,
                        const std::optional<std::string>& tau) {
  return guarded("order", [&] {
    const auto lg = load(path);
    const Graph& g = lg.graph;
    json payload = header("order");
    payload["kind"] = kind;
    std::optional<VertexOrdering> result;
    if (kind == "cocomp") {
      if (tau) throw InputError("--tau does not apply to cocomp");
      result = cocomparability_ordering(g);
    } else if (kind == "dfs+" || kind == "ldfs+") {
      const VertexOrdering prior = tau ? lg.parse_ordering(*tau) : VertexOrdering::identity(g.order());
      payload["tau"] = lg.sequence(prior);
      result = kind == "dfs+" ? dfs_plus(g, prior) : ldfs_plus(g, prior);
    } else {
      throw InputError("unknown ordering kind '" + kind + "'");
    }
    if (!result) {
      payload["ordering"] = nullptr;
      payload["properties"] = {{"cocomparability", false}};
      return CommandResult{ExitCode::property_violation, payload};
    }
    payload["ordering"] = lg.sequence(*result);
    json props = {{"umbrella_free", !is_umbrella_free(g, *result).has_value()}};
    if (is_connected(g)) {
      props["dfs"] = is_dfs_ordering(g, *result);
      props["ldfs"] = is_ldfs_ordering(g, *result);
    }
    payload["properties"] = props;
    return CommandResult{ExitCode::ok, payload};
  });
}

CommandResult cmd_gadget(const std::filesystem::path& path, const GadgetArgs& args) {
  return guarded("gadget", [&] {
    const auto lg = load(path);
    const Graph& g = lg.graph;
    std::optional<VertexOrdering> sigma;
    if (args.kind == "embed") {
      sigma = args.tau ? lg.parse_ordering(*args.tau) : cocomparability_ordering(g);
      if (!sigma) throw PreconditionError("graph is not a cocomparability graph");
    } else if (args.tau) {
      throw InputError("--tau applies to embed only");
    }
    const GadgetOutput out = build_gadget(args.kind, g, sigma);

    json roles = json::object();
    for (const auto& [role, id] : out.role_map) roles[role] = id;
    json payload = header("gadget");
    payload["kind"] = args.kind;
    payload["source"] = graph_summary(g);
    if (sigma) payload["source_ordering"] = sigma->sequence();
    payload["gadget"] = graph_summary(out.graph);
    payload["gadget"]["edge_list"] = edges_json(out.graph);
    payload["role_map"] = roles;
    payload["moplex_number"] = moplex_number(out.graph);

    if (args.out_prefix) {
      const std::filesystem::path el = args.out_prefix->string() + ".el";
      const std::filesystem::path rj = args.out_prefix->string() + ".roles.json";
      write_edge_list(out.graph, el);
      json certificate = {{"schema_version", kSchemaVersion}, {"kind", args.kind}, {"role_map", roles},
                          {"source_order", g.order()}};
      if (sigma) certificate["source_ordering"] = sigma->sequence();
      std::ofstream file(rj);
      if (!file) throw InputError("cannot write " + rj.string());
      file << certificate.dump(2) << '\n';
      payload["written"] = {el.string(), rj.string()};
    }
    return CommandResult{ExitCode::ok, payload};
  });
}

CommandResult cmd_verify(const std::filesystem::path& path, const VerifyArgs& args) {
  return guarded("verify", [&] {
    const auto lg = load(path);
    const Graph& g = lg.graph;
    const json cert = read_json(args.certificate);
    json payload = header("verify");
    payload["artifact"] = args.artifact;
    json checks = json::object();

    if (args.artifact == "hampath") {
      const auto path_order = lg.parse_ordering(cert.at("path"));
      checks["hamiltonian_path"] = verify_hamiltonian_path(g, path_order);
      if (cert.contains("source_ordering")) {
        const HamPathCertificate full{path_order, lg.parse_ordering(cert.at("source_ordering"))};
        checks["source_ordering"] = verify_certificate(g, full);
      }
    } else if (args.artifact == "ordering") {
      const auto kind = cert.at("kind").get<std::string>();
      const auto order = lg.parse_ordering(cert.at("ordering"));
      const bool umbrella_free = !is_umbrella_free(g, order).has_value();
      if (kind == "cocomp") {
        checks["umbrella_free"] = umbrella_free;
      } else if (kind == "dfs+" || kind == "ldfs+") {
        checks[kind == "dfs+" ? "dfs" : "ldfs"] =
            kind == "dfs+" ? is_dfs_ordering(g, order) : is_ldfs_ordering(g, order);
        if (cert.contains("tau")) {
          const auto prior = lg.parse_ordering(cert.at("tau"));
          checks["matches_sweep"] = (kind == "dfs+" ? dfs_plus(g, prior) : ldfs_plus(g, prior)) == order;
        }
      } else {
        throw InputError("unknown ordering kind '" + kind + "'");
      }
    } else if (args.artifact == "gadget") {
      GadgetOutput out{g, {}};
      for (const auto& [role, id] : cert.at("role_map").items()) out.role_map.emplace(role, id.get<Vertex>());
      checks["roles_consistent"] = out.roles_are_consistent();
      checks["connected"] = is_connected(g);
      checks["two_moplex"] = moplex_number(g) <= 2;
      const auto kind = cert.at("kind").get<std::string>();
      if (kind == "maxcut") checks["cobipartite"] = is_cobipartite(g);
      if (args.original) {
        const auto source = load(*args.original);
        std::optional<VertexOrdering> sigma;
        if (cert.contains("source_ordering")) sigma = VertexOrdering(cert.at("source_ordering").get<std::vector<Vertex>>());
        const GadgetOutput rebuilt = build_gadget(kind, source.graph, sigma);
        checks["rebuild_matches"] = rebuilt.graph == out.graph && rebuilt.role_map == out.role_map;
      }
    } else {
      throw InputError("unknown artifact '" + args.artifact + "'");
    }

    const bool valid = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c.get<bool>(); });
    payload["checks"] = checks;
    payload["valid"] = valid;
    return CommandResult{valid ? ExitCode::ok : ExitCode::property_violation, payload};
  });
}

CommandResult cmd_corpus(const CorpusArgs& args) {
  return guarded("corpus", [&] {
    const auto kind = parse_corpus_kind(args.kind);
    if (!kind) throw InputError("unknown corpus kind '" + args.kind + "'");
    Corpus corpus({*kind, args.n, args.p, args.seed, args.limit});
    json graphs = json::array();
    while (graphs.size() < args.limit) {
      auto g = corpus.next();
      if (!g) break;
      graphs.push_back({{"order", g->order()}, {"edge_list", edges_json(*g)}});
    }
    json payload = header("corpus");
    payload["kind"] = args.kind;
    payload["n"] = args.n;
    payload["seed"] = args.seed;
    payload["count"] = graphs.size();
    payload["graphs"] = graphs;
    return CommandResult{ExitCode::ok, payload};
  });
}

}  // namespace moplex::cli
