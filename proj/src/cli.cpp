#include "commalg/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "commalg/algebra.hpp"
#include "commalg/errors.hpp"
#include "commalg/graph.hpp"
#include "commalg/homology.hpp"
#include "commalg/oracle.hpp"
#include "commalg/parser.hpp"
#include "commalg/random.hpp"
#include "commalg/skeleton.hpp"

namespace commalg::cli {

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const RunConfiguration& config, std::istream& in) {
  if (config.inline_dsl) return *config.inline_dsl;
  if (config.input == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(config.input);
  if (!file) throw ValidationError("cannot open input file '" + config.input + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

Quiver load_quiver(const RunConfiguration& config, std::istream& in) {
  const std::string text = read_input(config, in);
  try {
    return parse_quiver(text);
  } catch (const ParseError& e) {
    const std::string where = config.inline_dsl ? "<inline>"
                              : config.input == "-" ? "<stdin>"
                                                    : config.input;
    throw ValidationError(where + ": " + e.what());
  }
}

std::vector<std::string> names_of(const Quiver& q,
                                  const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (VertexIndex v : vs) out.push_back(q.vertex_name(v));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_format(const RunConfiguration& config,
                    std::initializer_list<OutputFormat> allowed) {
  for (OutputFormat f : allowed) {
    if (f == config.format) return;
  }
  throw ValidationError("output format not supported by '" + config.command + "'");
}

std::string cmd_parse(const RunConfiguration& config, const Quiver& q) {
  if (config.format == OutputFormat::Dot) return to_dot(q);
  if (config.format == OutputFormat::Pretty) return to_dsl(q);
  json arrows = json::array();
  for (const auto& a : q.arrows()) {
    arrows.push_back({{"id", a.id},
                      {"source", q.vertex_name(a.source)},
                      {"target", q.vertex_name(a.target)},
                      {"weight", format_scalar(a.weight.value_or(Scalar(1)))}});
  }
  return dump({{"name", q.name()},
               {"vertex_count", q.vertex_count()},
               {"arrow_count", q.arrow_count()},
               {"vertices", q.vertices()},
               {"arrows", arrows}});
}

std::string cmd_components(const RunConfiguration& config, const Quiver& q) {
  require_format(config, {OutputFormat::Json, OutputFormat::Pretty});
  const ComponentPartition parts = path_components(q);
  const auto order = consistent_ordering(q, parts);
  const ReachabilityPattern reach = reachability(q);
  const CondensationOrder cond = condensation(parts, reach);
  const auto pattern = reach.reordered(order).bits.rows();

  if (config.format == OutputFormat::Pretty) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.count(); ++i) {
      os << "D" << i + 1 << " = {";
      const auto names = names_of(q, parts.components[i]);
      for (std::size_t k = 0; k < names.size(); ++k) {
        os << (k ? ", " : "") << names[k];
      }
      os << "}\n";
    }
    os << "order:";
    for (const auto& name : names_of(q, order)) os << ' ' << name;
    os << '\n';
    for (const auto& row : pattern) os << row << '\n';
    return os.str();
  }
  json comps = json::array();
  for (const auto& c : parts.components) comps.push_back(names_of(q, c));
  return dump({{"components", comps},
               {"order", names_of(q, order)},
               {"pattern", pattern},
               {"condensation", cond.relation.rows()},
               {"longest_chain", longest_chain(cond)}});
}

std::string cmd_blockform(const RunConfiguration& config, const Quiver& q) {
  require_format(config, {OutputFormat::Json, OutputFormat::Pretty});
  const CommutingAlgebra a = commuting_algebra(q, config.field);
  if (config.format == OutputFormat::Pretty) return pretty_block_display(a);
  return dump({{"field", config.field.descriptor()},
               {"order", names_of(q, a.order())},
               {"block_sizes", a.block_sizes()},
               {"component_pattern", a.block_pattern().rows()},
               {"pattern", a.pattern().bits.rows()},
               {"total_dimension", total_dimension(a)}});
}

json cover_list(const HasseDiagram& h) {
  json edges = json::array();
  for (const auto& [x, y] : h.covers) {
    edges.push_back({Poset::element_name(x), Poset::element_name(y)});
  }
  return edges;
}

std::vector<std::string> element_names(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(Poset::element_name(i));
  return out;
}

std::string cmd_skeleton(const RunConfiguration& config, const Quiver& q) {
  const Skeleton s = skeleton(q);
  const HasseDiagram h = hasse(s.poset);
  if (config.format == OutputFormat::Dot) return to_dot(hasse_quiver(s.poset));
  const IncidenceAlgebra incid(s.poset, config.field);
  if (config.format == OutputFormat::Pretty) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.poset.size(); ++i) {
      os << Poset::element_name(i) << " <- " << q.vertex_name(s.representatives[i])
         << '\n';
    }
    for (const auto& [x, y] : h.covers) {
      os << Poset::element_name(x) << " -> " << Poset::element_name(y) << '\n';
    }
    os << "incidence dimension " << incid.dimension() << '\n';
    return os.str();
  }
  json comps = json::array();
  for (const auto& c : s.components.components) comps.push_back(names_of(q, c));
  return dump({{"elements", element_names(s.poset.size())},
               {"representatives", names_of(q, s.representatives)},
               {"components", comps},
               {"leq", s.poset.matrix().rows()},
               {"hasse", cover_list(h)},
               {"incidence_dimension", incid.dimension()}});
}

std::string cmd_incidence(const RunConfiguration& config, const Quiver& q) {
  require_format(config, {OutputFormat::Json, OutputFormat::Pretty});
  const Skeleton s = skeleton(q);
  const IncidenceAlgebra incid(s.poset, config.field);
  const IsoWitness witness = skeleton_iso_incidence(s, config.field);
  if (config.format == OutputFormat::Pretty) {
    std::ostringstream os;
    for (const auto& e : witness.mapping) {
      os << "p(" << Poset::element_name(e.pair.first) << ", "
         << Poset::element_name(e.pair.second) << ") -> e(" << q.vertex_name(e.source)
         << ", " << q.vertex_name(e.target) << ")\n";
    }
    os << "dimension " << incid.dimension() << ", " << witness.products_checked
       << " products checked\n";
    return os.str();
  }
  json basis = json::array();
  for (const auto& e : witness.mapping) {
    basis.push_back({{"pair",
                      {Poset::element_name(e.pair.first),
                       Poset::element_name(e.pair.second)}},
                     {"image", {q.vertex_name(e.source), q.vertex_name(e.target)}}});
  }
  return dump({{"elements", element_names(s.poset.size())},
               {"dimension", incid.dimension()},
               {"basis", basis},
               {"products_checked", witness.products_checked},
               {"isomorphism", "PASS"}});
}

std::string cmd_gldim(const RunConfiguration& config, const Quiver& q) {
  require_format(config, {OutputFormat::Json, OutputFormat::Pretty});
  const Skeleton s = skeleton(q);
  const std::size_t chain = longest_chain(s.poset);
  std::vector<std::size_t> pds;
  std::size_t gd = 0;
  for (std::size_t x = 0; x < s.poset.size(); ++x) {
    pds.push_back(projective_dimension(s.poset, x, config.field));
    gd = std::max(gd, pds.back());
  }
  const bool pass = gd <= chain;
  if (config.format == OutputFormat::Pretty) {
    std::ostringstream os;
    for (std::size_t x = 0; x < pds.size(); ++x) {
      os << "pd S(" << Poset::element_name(x) << ") = " << pds[x] << '\n';
    }
    os << "gldim " << gd << " <= longest chain " << chain << ": "
       << (pass ? "PASS" : "FAIL") << '\n';
    return os.str();
  }
  json per = json::array();
  for (std::size_t x = 0; x < pds.size(); ++x) {
    per.push_back({{"element", Poset::element_name(x)},
                   {"representative", q.vertex_name(s.representatives[x])},
                   {"projective_dimension", pds[x]}});
  }
  return dump({{"simples", per},
               {"global_dimension", gd},
               {"longest_chain", chain},
               {"bound", pass ? "PASS" : "FAIL"}});
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::string cmd_verify(const RunConfiguration& config, const Quiver& q,
                       bool& all_pass) {
  require_format(config, {OutputFormat::Json, OutputFormat::Pretty});
  const std::size_t n = q.vertex_count();
  const std::size_t trunc = config.truncation.value_or(n + 2);
  const CommutingAlgebra a = commuting_algebra(q, config.field);
  std::vector<Check> checks;

  checks.push_back({"block_form",
                    has_block_form(a) && total_dimension(a) <= n * n,
                    "total dimension " + std::to_string(total_dimension(a))});

  json pairs = json::array();
  bool oracle_ok = true;
  std::string oracle_detail = "truncation " + std::to_string(trunc);
  std::vector<TruncatedQuotientReport> reports;
  try {
    reports = truncated_dimension_table(q, GeneralCoefficientTable::uniform(q),
                                        trunc, config.field);
  } catch (const TruncationOverflow& e) {
    oracle_ok = false;
    oracle_detail = e.what();
  }
  for (const auto& r : reports) {
    const int expected = hom_dimension(a, r.source, r.target);
    if (r.dimension != expected || !r.certified) oracle_ok = false;
    pairs.push_back({{"source", q.vertex_name(r.source)},
                     {"target", q.vertex_name(r.target)},
                     {"paths", r.path_count},
                     {"relations", r.relation_count},
                     {"rank", r.relation_rank},
                     {"dimension", r.dimension},
                     {"pattern", expected},
                     {"certified", r.certified}});
  }
  checks.push_back({"oracle_equivalence", oracle_ok, oracle_detail});

  bool nondegenerate = !reports.empty();
  for (const auto& r : reports) {
    if (r.source == r.target && r.dimension != 1) nondegenerate = false;
  }
  checks.push_back({"vertex_nondegeneracy", nondegenerate, ""});

  bool has_weights = false;
  for (const auto& arrow : q.arrows()) has_weights |= arrow.weight.has_value();
  if (has_weights) {
    const auto f = CoefficientFunction::from_quiver(q);
    const auto weighted = quasi_commuting_algebra(q, f, config.field);
    bool ok = weighted.algebra.pattern().bits == a.pattern().bits;
    try {
      const GeneralCoefficientTable table(q, f.weights());
      for (const auto& r : reports) {
        ok = ok && truncated_hom_dimension(q, table, r.source, r.target, trunc,
                                           config.field)
                           .dimension == r.dimension;
      }
    } catch (const TruncationOverflow&) {
      ok = false;
    }
    checks.push_back({"quasi_commuting_invariance", ok, ""});
  }

  const Skeleton s = skeleton(q);
  const IsoWitness witness = skeleton_iso_incidence(s, config.field);
  checks.push_back({"skeleton_iso_incidence", true,
                    std::to_string(witness.products_checked) + " products"});
  checks.push_back({"idempotence", idempotence_check(s.poset), ""});

  bool prop_ok = true;
  for (std::size_t i = 0; i < s.poset.size(); ++i) {
    for (std::size_t j = 0; j < s.poset.size(); ++j) {
      const int expected = s.poset.leq(j, i) ? 1 : 0;
      if (end_hom_dims(s, i, j) != expected) prop_ok = false;
    }
  }
  checks.push_back({"end_hom_dims", prop_ok, ""});

  const std::size_t gd = global_dimension(s.poset, config.field);
  const std::size_t chain = longest_chain(s.poset);
  checks.push_back({"gldim_bound", gd <= chain,
                    "gldim " + std::to_string(gd) + ", longest chain " +
                        std::to_string(chain)});

  all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && c.pass;

  if (config.format == OutputFormat::Pretty) {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << '\n';
    }
    os << (all_pass ? "PASS" : "FAIL") << '\n';
    return os.str();
  }
  json check_list = json::array();
  for (const auto& c : checks) {
    check_list.push_back({{"name", c.name},
                          {"status", c.pass ? "PASS" : "FAIL"},
                          {"detail", c.detail}});
  }
  return dump({{"truncation", trunc},
               {"checks", check_list},
               {"pairs", pairs},
               {"result", all_pass ? "PASS" : "FAIL"}});
}

void emit(const RunConfiguration& config, const std::string& report,
          std::ostream& out) {
  if (!config.out_path) {
    out << report;
    return;
  }
  std::ofstream file(*config.out_path);
  if (!file) {
    throw ValidationError("cannot open output file '" + *config.out_path + "'");
  }
  file << report;
  if (!file) {
    throw ValidationError("failed writing output file '" + *config.out_path + "'");
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "pretty") return OutputFormat::Pretty;
  if (name == "dot") return OutputFormat::Dot;
  throw ValidationError("unknown output format '" + name + "'");
}

int run(const RunConfiguration& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    if (config.command == "random") {
      emit(config, to_dsl(random_quiver(config.vertices, config.arrows, config.seed)),
           out);
      return kExitOk;
    }

    using Handler = std::function<std::string(const RunConfiguration&, const Quiver&)>;
    const std::vector<std::pair<std::string, Handler>> handlers = {
        {"parse", cmd_parse},         {"components", cmd_components},
        {"blockform", cmd_blockform}, {"skeleton", cmd_skeleton},
        {"incidence", cmd_incidence}, {"gldim", cmd_gldim},
    };
    for (const auto& [name, handler] : handlers) {
      if (name == config.command) {
        emit(config, handler(config, load_quiver(config, in)), out);
        return kExitOk;
      }
    }
    if (config.command == "verify") {
      bool pass = false;
      emit(config, cmd_verify(config, load_quiver(config, in), pass), out);
      return pass ? kExitOk : kExitValidation;
    }
    throw ValidationError("unknown command '" + config.command + "'");
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace commalg::cli
