#include "sachs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sachs/enumeration.hpp"
#include "sachs/families.hpp"
#include "sachs/graph6.hpp"
#include "sachs/invariants.hpp"
#include "sachs/recognition.hpp"
#include "sachs/report.hpp"
#include "sachs/transforms.hpp"
#include "sachs/verify.hpp"

namespace sachs {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 20211;
  int threads = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty block list");
  return out;
}

std::string format_threshold(const ThresholdVector& tv) {
  std::string s = "(";
  for (std::size_t i = 0; i < tv.blocks().size(); ++i)
    s += (i ? "," : "") + std::to_string(i % 2) + "^" + std::to_string(tv.blocks()[i]);
  return s + ")";
}

std::string join_ints(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  for (int v : members(s)) out.push_back(v);
  return out;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  int run(const std::vector<std::string>& args);

 private:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

  void emit(const std::string& command, Json params, const std::string& status, Json results, Json minimizers) {
    out_ << report_document(command, std::move(params), status, std::move(results), std::move(minimizers),
                            elapsed_ms())
                .dump(2)
         << '\n';
  }

  int coeff(const std::string& g6);
  int family(const std::string& kind, const std::vector<std::string>& params);
  int compress_cmd(const std::string& g6, int u, int v);
  int recognize(const std::string& g6);
  int enumerate_cmd(int n, std::optional<int> m, bool bipartite, bool disconnected);
  int search_min(int n, int m, bool bipartite);
  int verify(std::vector<std::string> ids, const CheckScope& scope);

  void print_report(const ExtremalReport& r, const std::string& indent);

  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
  Options opt_;
};

int Cli::coeff(const std::string& g6) {
  const Graph g = g6_decode(g6);
  std::vector<Integer> coeffs;
  if (g.order() <= 20) {
    coeffs = char_poly(g).coefficients();
  } else {
    for (int i = 0; i <= g.order(); ++i) coeffs.push_back(sachs_coefficient(g, i));
  }
  const Integer m2 = matching_count(g, 2);
  const Integer q = quadrangle_count(g);
  const Integer a4 = a4_combinatorial(g);
  if (opt_.json) {
    Json c = Json::array();
    for (Integer v : coeffs) c.push_back(to_json(v));
    emit("coeff", {{"graph6", g6}}, "ok",
         {{"n", g.order()}, {"m", g.size()}, {"coefficients", c}, {"m2", to_json(m2)}, {"q", to_json(q)},
          {"a4", to_json(a4)}},
         nullptr);
  } else {
    out_ << "n=" << g.order() << " m=" << g.size() << '\n'
         << "coefficients: " << join_ints(coeffs) << '\n'
         << "m2=" << to_string(m2) << " q=" << to_string(q) << " a4=" << to_string(a4) << '\n';
  }
  return 0;
}

int Cli::family(const std::string& kind, const std::vector<std::string>& params) {
  auto arg = [&](std::size_t i) {
    if (i >= params.size()) throw UsageError("family " + kind + ": missing parameter");
    try {
      return std::stoi(params[i]);
    } catch (const std::logic_error&) {
      throw UsageError("family " + kind + ": '" + params[i] + "' is not an integer");
    }
  };
  auto arity = [&](std::size_t k) {
    if (params.size() != k) throw UsageError("family " + kind + " takes " + std::to_string(k) + " parameter(s)");
  };
  Graph g;
  std::string label;
  if (kind == "threshold") {
    arity(1);
    const auto tv = ThresholdVector::normalized(parse_int_list(params[0]));
    g = threshold_from_vector(tv);
    label = format_threshold(tv);
  } else if (kind == "difference") {
    arity(2);
    const auto dv = DifferenceVector::normalized(parse_int_list(params[0]), parse_int_list(params[1]));
    g = difference_from_vector(dv);
    label = "difference";
  } else if (kind == "named") {
    if (params.empty()) throw UsageError("family named needs a name");
    const std::string& name = params[0];
    const std::vector<std::string> rest(params.begin() + 1, params.end());
    auto need = [&](std::size_t k) {
      if (rest.size() != k) throw UsageError(name + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "complete") need(1), g = complete(arg(1));
    else if (name == "complete-bipartite") need(2), g = complete_bipartite(arg(1), arg(2));
    else if (name == "path") need(1), g = path(arg(1));
    else if (name == "cycle") need(1), g = cycle(arg(1));
    else if (name == "star") need(1), g = star(arg(1));
    else if (name == "G1") need(1), g = extremal_G1(arg(1));
    else if (name == "G2") need(2), g = extremal_G2(arg(1), arg(2));
    else if (name == "G3") need(2), g = extremal_G3(arg(1), arg(2));
    else
      throw UsageError("unknown family '" + name + "' (complete, complete-bipartite, path, cycle, star, G1, G2, G3)");
    label = name;
  } else {
    throw UsageError("family kind must be threshold, difference or named");
  }
  const std::string code = g6_encode(g);
  if (opt_.json) {
    emit("family", {{"kind", kind}, {"params", params}}, "ok",
         {{"graph6", code}, {"n", g.order()}, {"m", g.size()}}, nullptr);
  } else {
    out_ << code << '\n';
  }
  return 0;
}

int Cli::compress_cmd(const std::string& g6, int u, int v) {
  const Graph g = g6_decode(g6);
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw UsageError("compress needs two distinct vertices below " + std::to_string(g.order()));
  const auto ctx = compression_context(g, u, v);
  const Graph h = compress(g, u, v);
  const Integer before = a4_combinatorial(g), after = a4_combinatorial(h);
  if (opt_.json) {
    Json cross = Json::array();
    for (const auto& [a, b] : ctx.cross_edges) cross.push_back({a, b});
    emit("compress", {{"graph6", g6}, {"u", u}, {"v", v}}, "ok",
         {{"graph6", g6_encode(h)},
          {"a4_before", to_json(before)},
          {"a4_after", to_json(after)},
          {"common", vertex_list(ctx.common)},
          {"u_private", vertex_list(ctx.u_private)},
          {"v_private", vertex_list(ctx.v_private)},
          {"cross_edges", cross}},
         nullptr);
  } else {
    out_ << g6_encode(h) << '\n'
         << "a4_before=" << to_string(before) << " a4_after=" << to_string(after) << '\n'
         << "cross_edges=" << ctx.cross_edges.size();
    for (const auto& [a, b] : ctx.cross_edges) out_ << ' ' << a << '-' << b;
    out_ << '\n';
  }
  return 0;
}

int Cli::recognize(const std::string& g6) {
  const Graph g = g6_decode(g6);
  const bool connected = g.is_connected();
  const bool bipartite = is_bipartite(g).has_value();
  const bool difference = is_difference(g);
  const bool threshold = is_threshold(g);
  const bool p5 = has_induced_p5(g);
  const auto tv = threshold_vector_of(g);
  const auto witness = has_spanning_difference_subgraph(g);
  if (opt_.json) {
    Json w = nullptr;
    if (witness)
      w = {{"left", vertex_list(witness->parts.left)},
           {"right", vertex_list(witness->parts.right)},
           {"u", witness->u},
           {"w", witness->w}};
    emit("recognize", {{"graph6", g6}}, "ok",
         {{"connected", connected},
          {"bipartite", bipartite},
          {"difference", difference},
          {"threshold", threshold},
          {"induced_p5", p5},
          {"threshold_vector", tv ? Json(tv->blocks()) : Json(nullptr)},
          {"spanning_difference", w}},
         nullptr);
  } else {
    out_ << "connected=" << yes_no(connected) << " bipartite=" << yes_no(bipartite)
         << " difference=" << yes_no(difference) << " threshold=" << yes_no(threshold)
         << " induced_p5=" << yes_no(p5) << '\n';
    if (tv) out_ << "threshold_vector=" << format_threshold(*tv) << '\n';
    if (witness) {
      out_ << "spanning_difference: double star on " << witness->u << '-' << witness->w << ", parts {";
      for (int v : members(witness->parts.left)) out_ << ' ' << v;
      out_ << " } {";
      for (int v : members(witness->parts.right)) out_ << ' ' << v;
      out_ << " }\n";
    } else {
      out_ << "spanning_difference: none\n";
    }
  }
  return 0;
}

int Cli::enumerate_cmd(int n, std::optional<int> m, bool bipartite, bool disconnected) {
  EnumSpec spec{n, m, !disconnected, bipartite};
  validate(spec);
  Json params{{"n", n}, {"m", m ? Json(*m) : Json(nullptr)}, {"bipartite", bipartite}, {"connected", !disconnected}};
  if (opt_.json) {
    Json graphs = Json::array();
    enumerate(spec, [&](const Graph& g) { graphs.push_back(g6_encode(g)); }, opt_.threads);
    const std::size_t total = graphs.size();
    emit("enumerate", std::move(params), "ok", {{"count", total}, {"graphs", std::move(graphs)}}, nullptr);
  } else {
    enumerate(spec, [&](const Graph& g) { out_ << g6_encode(g) << '\n'; }, opt_.threads);
  }
  return 0;
}

void Cli::print_report(const ExtremalReport& r, const std::string& indent) {
  out_ << indent << "n=" << r.n << " m=" << r.m << " class=" << to_string(r.graph_class)
       << " min_a4=" << to_string(r.min_a4);
  if (r.predicted) out_ << " predicted=" << to_string(*r.predicted);
  if (r.matches) out_ << " matches=" << yes_no(*r.matches);
  out_ << " examined=" << r.examined << '\n';
  out_ << indent << "minimizers:";
  for (const auto& c : r.minimizers) out_ << ' ' << g6_encode(c.graph());
  out_ << '\n';
}

int Cli::search_min(int n, int m, bool bipartite) {
  const auto r = extremal_search(n, m, bipartite ? GraphClass::bipartite : GraphClass::general, opt_.threads);
  if (opt_.json) {
    Json mins = Json::array();
    for (const auto& c : r.minimizers) mins.push_back(g6_encode(c.graph()));
    emit("search-min", {{"n", n}, {"m", m}, {"class", std::string(to_string(r.graph_class))}}, "ok", to_json(r),
         std::move(mins));
  } else {
    print_report(r, "");
  }
  return 0;
}

int Cli::verify(std::vector<std::string> ids, const CheckScope& scope) {
  if (ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end()) ids = check_ids();
  for (const auto& id : ids)
    if (!is_check_id(id)) throw UsageError("unknown check id '" + id + "'");

  bool all_pass = true;
  Json results = Json::array();
  for (const auto& id : ids) {
    const CheckResult r = run_check(id, scope);
    const bool pass = r.status == CheckStatus::pass;
    all_pass = all_pass && pass;
    if (opt_.json) {
      results.push_back(to_json(r));
      continue;
    }
    out_ << id << ' ' << (pass ? "PASS" : "FAIL") << " instances=" << r.instances << '\n';
    if (r.counterexample)
      out_ << "  counterexample " << (r.counterexample->graph6.empty() ? "-" : r.counterexample->graph6) << ": "
           << r.counterexample->details << '\n';
    for (const auto& t : r.tables) print_report(t, "  ");
    for (const auto& note : r.notes) out_ << "  " << note << '\n';
  }
  if (opt_.json) {
    Json params{{"ids", ids}, {"seed", scope.seed}};
    if (scope.n_min) params["n_min"] = *scope.n_min;
    if (scope.n_max) params["n_max"] = *scope.n_max;
    if (scope.m_min) params["m_min"] = *scope.m_min;
    if (scope.m_max) params["m_max"] = *scope.m_max;
    emit("verify", std::move(params), all_pass ? "pass" : "fail", std::move(results), nullptr);
  }
  return all_pass ? 0 : 1;
}

int Cli::run(const std::vector<std::string>& args) {
  CLI::App app{"Exact adjacency-coefficient computations and extremal a4 checks", "sachs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt_.json, "Emit a JSON report document");
  app.add_option("--seed", opt_.seed, "Seed for randomized checks");
  app.add_option("--threads", opt_.threads, "Worker threads (0 = OpenMP default, 1 = serial)")
      ->check(CLI::NonNegativeNumber);

  std::string g6;
  auto* coeff_cmd = app.add_subcommand("coeff", "Characteristic polynomial coefficients and a4 terms");
  coeff_cmd->add_option("graph6", g6)->required();

  std::string kind;
  std::vector<std::string> family_params;
  auto* family_cmd = app.add_subcommand("family", "Build a graph family member and print its graph6");
  family_cmd->add_option("kind", kind, "threshold | difference | named")->required();
  family_cmd->add_option("params", family_params,
                         "threshold: exponents h1,h2,...; difference: x1,...  y1,...; named: <name> <int>...");

  int u = 0, v = 0;
  auto* compress_sub = app.add_subcommand("compress", "Compress u into v");
  compress_sub->add_option("graph6", g6)->required();
  compress_sub->add_option("u", u)->required();
  compress_sub->add_option("v", v)->required();

  auto* recognize_cmd = app.add_subcommand("recognize", "Class membership and spanning difference witness");
  recognize_cmd->add_option("graph6", g6)->required();

  int n = 0;
  std::optional<int> m;
  bool bipartite = false, disconnected = false;
  auto* enumerate_sub = app.add_subcommand("enumerate", "Stream one graph6 per isomorphism class");
  enumerate_sub->add_option("n", n)->required();
  enumerate_sub->add_option("m", m);
  enumerate_sub->add_flag("--bipartite", bipartite);
  enumerate_sub->add_flag("--disconnected", disconnected, "Include disconnected graphs");

  int search_m = 0;
  auto* search_cmd = app.add_subcommand("search-min", "Exhaustive minimum of a4 over connected (n,m)-graphs");
  search_cmd->add_option("n", n)->required();
  search_cmd->add_option("m", search_m)->required();
  search_cmd->add_flag("--bipartite", bipartite);

  std::vector<std::string> ids;
  std::optional<int> n_fixed, n_min, n_max, m_fixed, m_min, m_max;
  auto* verify_cmd = app.add_subcommand("verify", "Run named checks (default: all)");
  verify_cmd->add_option("ids", ids);
  verify_cmd->add_option("--n", n_fixed, "Single order");
  verify_cmd->add_option("--n-min", n_min);
  verify_cmd->add_option("--n-max", n_max);
  verify_cmd->add_option("--m", m_fixed, "Single edge count");
  verify_cmd->add_option("--m-min", m_min);
  verify_cmd->add_option("--m-max", m_max);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }

  try {
    if (*coeff_cmd) return coeff(g6);
    if (*family_cmd) return family(kind, family_params);
    if (*compress_sub) return compress_cmd(g6, u, v);
    if (*recognize_cmd) return recognize(g6);
    if (*enumerate_sub) return enumerate_cmd(n, m, bipartite, disconnected);
    if (*search_cmd) return search_min(n, search_m, bipartite);
    CheckScope scope;
    scope.seed = opt_.seed;
    scope.threads = opt_.threads;
    scope.n_min = n_fixed ? n_fixed : n_min;
    scope.n_max = n_fixed ? n_fixed : n_max;
    scope.m_min = m_fixed ? m_fixed : m_min;
    scope.m_max = m_fixed ? m_fixed : m_max;
    return verify(ids, scope);
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err_ << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace sachs
