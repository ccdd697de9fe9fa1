#include "mvis/cli.hpp"

#include "mvis/cographs.hpp"
#include "mvis/constructions.hpp"
#include "mvis/errors.hpp"
#include "mvis/generators.hpp"
#include "mvis/genlang.hpp"
#include "mvis/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace mvis::cli {

auto to_json(const SolveResult &r) -> Json
{
  return Json{{"variant", to_string(r.variant)},
              {"value", r.value},
              {"witness", r.witness.members()},
              {"exact", r.exact},
              {"nodes", r.nodes}};
}

auto to_json(const VisibilityReport &r) -> Json
{
  Json j{{"valid", r.valid}, {"failing_pair", nullptr}, {"pair_class", nullptr}};
  if (r.failing_pair)
    j["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
  if (r.pair_class)
    j["pair_class"] = to_string(*r.pair_class);
  return j;
}

auto to_json(const ExtremalResult &r) -> Json
{
  return Json{{"max_edges", r.max_edges}, {"witness", io::write_graph6(r.witness)}, {"certified", r.certified}};
}

auto to_json(const ZarankiewiczResult &r) -> Json
{
  return Json{{"max_ones", r.max_ones}, {"matrix", r.matrix}, {"certified", r.certified}};
}

auto load_graph_arg(const std::string &text) -> Graph
{
  std::filesystem::path path(text);
  auto ext = path.extension();
  std::error_code ec;
  if ((ext == ".g6" || ext == ".el") && std::filesystem::is_regular_file(path, ec))
    return io::load_graph(path);
  return eval(parse_spec(text));
}

namespace {

auto read_file(const std::string &path) -> std::string
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Splits at commas and whitespace outside parentheses.
auto split_tokens(const std::string &text) -> std::vector<std::string>
{
  std::vector<std::string> tokens;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    if (depth == 0 && (c == ',' || std::isspace(static_cast<unsigned char>(c)))) {
      if (!cur.empty())
        tokens.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (!cur.empty())
    tokens.push_back(cur);
  return tokens;
}

auto resolve_vertex(const Graph &g, const std::string &token) -> int
{
  if (auto v = g.find_label(token))
    return *v;
  // Edge labels may be given in either orientation.
  if (auto dash = token.find('-'); dash != std::string::npos && dash > 0)
    if (auto v = g.find_label(token.substr(dash + 1) + "-" + token.substr(0, dash)))
      return *v;
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != token.size() || token.empty())
    throw std::invalid_argument("unknown vertex '" + token + "'");
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("vertex " + token + " out of range [0, " + std::to_string(g.order()) + ")");
  return v;
}

auto variants_of(const std::string &name) -> std::vector<Variant>
{
  if (name == "all")
    return {std::begin(kAllVariants), std::end(kAllVariants)};
  return {parse_variant(name)};
}

auto solve(const Graph &g, Variant v, Strategy s, int threads) -> SolveResult
{
  SolveOptions opts;
  opts.variant = v;
  opts.strategy = s;
  opts.threads = threads;
  return max_visibility(g, opts);
}

auto labels_of(const Graph &g, const VertexSet &x) -> std::vector<std::string>
{
  std::vector<std::string> out;
  x.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}

auto construction_json(const Graph &host, Variant v, const VertexSet &x, const std::string &family) -> Json
{
  SolveResult r;
  r.variant = v;
  r.value = x.count();
  r.witness = x;
  // Constructions certify validity, not maximality.
  r.exact = false;
  r.nodes = 0;
  Json j = to_json(r);
  j["source"] = "construction";
  j["family"] = family;
  j["labels"] = labels_of(host, x);
  return j;
}

auto edges_json(const std::vector<Edge> &f) -> Json
{
  Json a = Json::array();
  for (auto e : f)
    a.push_back({e.u, e.v});
  return a;
}

auto numbers_json(const VisibilityNumbers &n) -> Json
{
  return Json{{"total", n.total}, {"outer", n.outer}, {"dual", n.dual}, {"mutual", n.mutual}};
}

// ---------------------------------------------------------------- reports

auto hamming_report(const ReportOptions &opts) -> Report
{
  Report rep{"hamming", {}, true};
  for (int n = 3; n <= 5; ++n)
    for (int m = 3; m <= 5; ++m) {
      Graph g = cartesian_product(complete(n), complete(m));
      int dual = solve(g, Variant::Dual, Strategy::Auto, opts.threads).value;
      int outer = solve(g, Variant::Outer, Strategy::Auto, opts.threads).value;
      int total = solve(g, Variant::Total, Strategy::Auto, opts.threads).value;
      int dual_c = dual_set_cartesian_cliques(n, m).count();
      int outer_c = outer_set_cartesian_cliques(n, m).count();
      bool agree = dual == n + m - 1 && dual_c == dual && outer == n + m - 2 && outer_c == outer &&
                   total == std::max(n, m);
      rep.agree = rep.agree && agree;
      rep.rows.push_back({{"n", n},
                          {"m", m},
                          {"dual_formula", n + m - 1},
                          {"dual_solver", dual},
                          {"dual_construction", dual_c},
                          {"outer_formula", n + m - 2},
                          {"outer_solver", outer},
                          {"outer_construction", outer_c},
                          {"total_formula", std::max(n, m)},
                          {"total_solver", total},
                          {"agree", agree}});
    }
  return rep;
}

auto direct_report(const ReportOptions &opts) -> Report
{
  Report rep{"direct", {}, true};
  for (auto [n, m] : {std::pair{5, 5}, std::pair{5, 6}, std::pair{6, 6}}) {
    Graph g = direct_product(complete(n), complete(m));
    Json row{{"n", n}, {"m", m}, {"formula", n * m - 4}};
    bool agree = true;
    for (Variant v : kAllVariants) {
      int value = solve(g, v, Strategy::Descending, opts.threads).value;
      row[to_string(v) + "_solver"] = value;
      agree = agree && value == n * m - 4;
    }
    int built = total_set_direct_cliques(n, m).count();
    row["total_construction"] = built;
    agree = agree && built == n * m - 4;
    row["agree"] = agree;
    rep.agree = rep.agree && agree;
    rep.rows.push_back(row);
  }
  return rep;
}

auto line_complete_report(const ReportOptions &opts) -> Report
{
  // Reference values of ex(n; {K4, induced C4}) for n = 1..10.
  constexpr int kPairSequence[] = {0, 1, 3, 5, 7, 10, 12, 15, 18, 21};
  Report rep{"line-complete", {}, true};
  for (int n = 4; n <= 6; ++n) {
    Graph g = line_graph(complete(n)).first;
    auto value = [&](Variant v) { return solve(g, v, Strategy::Auto, opts.threads).value; };
    int mu = value(Variant::Mutual), total = value(Variant::Total);
    int outer = value(Variant::Outer), dual = value(Variant::Dual);
    int mu_formula = static_cast<int>(turan_edge_count(n, 3));
    int mu_ex = ex_forbidden(n, ForbiddenPattern::K4).max_edges;
    int total_formula = n - 1 + (n - 1) / 2;
    int total_ex = ex_forbidden(n, ForbiddenPattern::C4).max_edges;
    int total_c = static_cast<int>(total_set_line_complete(n).size());
    int outer_ex = ex_forbidden(n, ForbiddenPattern::K4Minus).max_edges;
    int dual_ex = ex_forbidden(n, ForbiddenPattern::K4C4).max_edges;
    int dual_seq = kPairSequence[n - 1];
    bool agree = mu == mu_formula && mu == mu_ex && total == total_formula && total == total_ex &&
                 total_c == total && outer == outer_ex && dual == dual_ex && dual == dual_seq;
    rep.agree = rep.agree && agree;
    rep.rows.push_back({{"n", n},
                        {"mu_formula", mu_formula},
                        {"mu_extremal", mu_ex},
                        {"mu_solver", mu},
                        {"total_formula", total_formula},
                        {"total_extremal", total_ex},
                        {"total_construction", total_c},
                        {"total_solver", total},
                        {"outer_extremal", outer_ex},
                        {"outer_solver", outer},
                        {"dual_sequence", dual_seq},
                        {"dual_extremal", dual_ex},
                        {"dual_solver", dual},
                        {"agree", agree}});
  }
  return rep;
}

auto cographs_report(const ReportOptions &opts) -> Report
{
  Report rep{"cographs", {}, true};
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> order(2, std::max(2, opts.max_n));
  for (int i = 0; i < opts.count; ++i) {
    Graph g = random_connected_cograph(order(rng), rng);
    int n = g.order();
    bool split = cograph_split_regime(g);
    auto formula = cograph_visibility_numbers(g);
    VisibilityNumbers solver{solve(g, Variant::Total, Strategy::Auto, opts.threads).value,
                             solve(g, Variant::Outer, Strategy::Auto, opts.threads).value,
                             solve(g, Variant::Dual, Strategy::Auto, opts.threads).value,
                             solve(g, Variant::Mutual, Strategy::Auto, opts.threads).value};
    bool regime = split ? solver == VisibilityNumbers{n - 2, n - 2, n - 1, n - 1}
                        : solver.total == solver.mutual && solver.outer == solver.mutual &&
                              solver.dual == solver.mutual;
    bool agree = formula == solver && regime;
    rep.agree = rep.agree && agree;
    rep.rows.push_back({{"index", i},
                        {"n", n},
                        {"graph6", io::write_graph6(g)},
                        {"split_regime", split},
                        {"formula", numbers_json(formula)},
                        {"solver", numbers_json(solver)},
                        {"agree", agree}});
  }
  return rep;
}

auto family_row(const std::string &family, const std::vector<int> &params, const Graph &g, int sum,
                const std::map<Variant, VertexSet> &built, int threads) -> std::pair<Json, bool>
{
  VisibilityNumbers formula;
  if (family == "c5")
    formula = {sum, sum + 2, sum + 2, sum + 3};
  else
    formula = {sum, sum + 3, sum == 0 ? 3 : sum + 2, sum + 4};
  VisibilityNumbers solver{solve(g, Variant::Total, Strategy::Auto, threads).value,
                           solve(g, Variant::Outer, Strategy::Auto, threads).value,
                           solve(g, Variant::Dual, Strategy::Auto, threads).value,
                           solve(g, Variant::Mutual, Strategy::Auto, threads).value};
  VisibilityNumbers sizes{built.at(Variant::Total).count(), built.at(Variant::Outer).count(),
                          built.at(Variant::Dual).count(), built.at(Variant::Mutual).count()};
  int n = g.order();
  bool edges_ok = g.size() == 2 * n - 5;
  bool diameter_two = diameter(g) == 2;
  bool no_universal = !has_universal_vertex(g);
  bool agree = formula == solver && sizes == solver && edges_ok && diameter_two && no_universal;
  Json row{{"family", family},
           {"params", params},
           {"n", n},
           {"m", g.size()},
           {"formula", numbers_json(formula)},
           {"solver", numbers_json(solver)},
           {"construction", numbers_json(sizes)},
           {"edges_2n_minus_5", edges_ok},
           {"diameter_two", diameter_two},
           {"no_universal_vertex", no_universal},
           {"agree", agree}};
  return {row, agree};
}

auto family_report(const ReportOptions &opts) -> Report
{
  Report rep{"family-g", {}, true};
  int s = opts.max_sum;
  for (int i = 0; i <= s; ++i)
    for (int j = 0; i + j <= s; ++j) {
      auto [row, ok] = family_row("c5", {i, j}, c5_family(i, j), i + j, c5_family_witnesses(i, j), opts.threads);
      rep.agree = rep.agree && ok;
      rep.rows.push_back(row);
    }
  for (int i = 0; i <= s; ++i)
    for (int j = 0; i + j <= s; ++j)
      for (int k = 0; i + j + k <= s; ++k) {
        auto [row, ok] = family_row("g7", {i, j, k}, g7_family(i, j, k), i + j + k,
                                    g7_family_witnesses(i, j, k), opts.threads);
        rep.agree = rep.agree && ok;
        rep.rows.push_back(row);
      }
  return rep;
}

auto csv_cell(const Json &v) -> std::string
{
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

/// Nested objects become columns such as formula_dual; arrays become one space-separated cell.
auto flatten_row(const Json &node, const std::string &prefix, Json &out) -> void
{
  if (node.is_object()) {
    for (const auto &[key, value] : node.items())
      flatten_row(value, prefix.empty() ? key : prefix + "_" + key, out);
    return;
  }
  if (node.is_array()) {
    std::string cell;
    for (const auto &item : node)
      cell += (cell.empty() ? "" : " ") + (item.is_string() ? item.get<std::string>() : item.dump());
    out[prefix] = cell;
    return;
  }
  out[prefix] = node;
}

auto write_csv(const std::vector<Json> &rows, std::ostream &out) -> void
{
  if (rows.empty())
    return;
  std::vector<Json> flat;
  for (const auto &row : rows) {
    Json f = Json::object();
    flatten_row(row, "", f);
    flat.push_back(f);
  }
  std::set<std::string> columns;
  for (const auto &row : flat)
    for (const auto &[key, _] : row.items())
      columns.insert(key);
  std::vector<std::string> keys(columns.begin(), columns.end());
  for (std::size_t c = 0; c < keys.size(); ++c)
    out << (c ? "," : "") << keys[c];
  out << "\n";
  for (const auto &row : flat) {
    for (std::size_t c = 0; c < keys.size(); ++c)
      out << (c ? "," : "") << csv_cell(row.value(keys[c], Json()));
    out << "\n";
  }
}

auto emit(const Json &j, const std::string &format, std::ostream &out) -> void
{
  if (format == "csv")
    write_csv(j.is_array() ? j.get<std::vector<Json>>() : std::vector<Json>{j}, out);
  else
    out << j.dump(2) << "\n";
}

} // namespace

auto parse_vertex_set(const Graph &g, const std::string &text) -> VertexSet
{
  std::string body = !text.empty() && text.front() == '@' ? read_file(text.substr(1)) : text;
  VertexSet x(g.order());
  for (const auto &token : split_tokens(body))
    x.set(resolve_vertex(g, token));
  return x;
}

auto build_report(const std::string &suite, const ReportOptions &opts) -> Report
{
  if (suite == "hamming")
    return hamming_report(opts);
  if (suite == "direct")
    return direct_report(opts);
  if (suite == "line-complete")
    return line_complete_report(opts);
  if (suite == "cographs")
    return cographs_report(opts);
  if (suite == "family-g")
    return family_report(opts);
  throw std::invalid_argument("unknown report suite '" + suite + "'");
}

auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int
{
  CLI::App app{"Mutual-visibility numbers of graphs: exact solver, constructions and extremal oracles", "mvis"};
  app.require_subcommand(1);

  std::string graph_text, variant_name = "all", strategy_name = "auto", format = "json";
  int threads = 1;
  std::optional<double> budget;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto *compute = app.add_subcommand("compute", "Exact visibility numbers");
  compute->add_option("--graph", graph_text, "Graph expression or .g6/.el file")->required();
  compute->add_option("--variant", variant_name, "mu|outer|dual|total|all");
  compute->add_option("--strategy", strategy_name, "auto|descending|bnb");
  compute->add_option("--budget", budget, "Time budget in seconds");
  std::string symmetry_name = "none";
  compute->add_option("--symmetry", symmetry_name, "none|orbits")->check(CLI::IsMember({"none", "orbits"}));
  add_common(compute);

  auto *verify_cmd = app.add_subcommand("verify", "Check a vertex set");
  std::string set_text;
  verify_cmd->add_option("--graph", graph_text, "Graph expression or .g6/.el file")->required();
  verify_cmd->add_option("--set", set_text, "Indices or labels, or @file")->required();
  verify_cmd->add_option("--variant", variant_name, "mu|outer|dual|total")->required();

  auto *construct = app.add_subcommand("construct", "Closed-form witness sets");
  std::string family;
  int n = 0, m = 0, i = 0, j = 0, k = 0;
  bool with_graph6 = false;
  construct
      ->add_option("family", family,
                   "dual-cart|outer-cart|total-direct|mu-lkn|total-lkn|lk10-witness|cograph|c5|g7")
      ->required();
  construct->add_option("--n", n);
  construct->add_option("--m", m);
  construct->add_option("--i", i)->check(CLI::NonNegativeNumber);
  construct->add_option("--j", j)->check(CLI::NonNegativeNumber);
  construct->add_option("--k", k)->check(CLI::NonNegativeNumber);
  construct->add_option("--graph", graph_text, "Host graph for the cograph family");
  construct->add_flag("--graph6", with_graph6, "Include the host graph in graph6");

  auto *oracle = app.add_subcommand("oracle", "Extremal oracles");
  oracle->require_subcommand(1);
  auto *oracle_ex = oracle->add_subcommand("ex", "ex(n; forbidden pattern)");
  std::string forbid;
  oracle_ex->add_option("--n", n)->required();
  oracle_ex->add_option("--forbid", forbid, "c4|k4|k4minus|k4c4")->required();
  oracle_ex->add_option("--threads", threads)->check(CLI::Range(1, 256));
  auto *oracle_z = oracle->add_subcommand("zarankiewicz", "z(m,n;2,2)");
  oracle_z->add_option("--m", m)->required();
  oracle_z->add_option("--n", n)->required();

  auto *report = app.add_subcommand("report", "Self-auditing tables");
  std::string suite;
  ReportOptions ropts;
  report->add_option("suite", suite, "hamming|direct|line-complete|cographs|family-g")->required();
  report->add_option("--seed", seed, "Seed for random corpora");
  report->add_option("--count", ropts.count, "Random cographs")->check(CLI::PositiveNumber);
  report->add_option("--max-n", ropts.max_n, "Largest random cograph")->check(CLI::Range(2, 30));
  report->add_option("--max-sum", ropts.max_sum, "Largest duplicate count")->check(CLI::Range(0, 8));
  add_common(report);

  auto *cograph = app.add_subcommand("cograph", "Cograph tools");
  cograph->require_subcommand(1);
  auto *analyze = cograph->add_subcommand("analyze", "Recognition, decomposition and numbers");
  analyze->add_option("--graph", graph_text)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*compute) {
      Graph g = load_graph_arg(graph_text);
      Strategy strategy = parse_strategy(strategy_name);
      Json results = Json::array();
      bool exhausted = false;
      for (Variant v : variants_of(variant_name)) {
        SolveOptions opts;
        opts.variant = v;
        opts.strategy = strategy;
        opts.threads = threads;
        opts.symmetry = symmetry_name == "orbits" ? Symmetry::VertexOrbits : Symmetry::None;
        if (budget)
          opts.time_budget = std::chrono::duration<double>(*budget);
        auto r = max_visibility(g, opts);
        exhausted = exhausted || !r.exact;
        results.push_back(to_json(r));
      }
      emit(results.size() == 1 ? results[0] : results, format, out);
      return exhausted ? kExitBudget : kExitOk;
    }

    if (*verify_cmd) {
      Graph g = load_graph_arg(graph_text);
      VertexSet x = parse_vertex_set(g, set_text);
      out << to_json(verify(g, x, parse_variant(variant_name))).dump(2) << "\n";
      return kExitOk;
    }

    if (*construct) {
      Json result;
      std::optional<Graph> host;
      auto line_family = [&](int order, std::vector<Edge> f, Variant v) {
        host = line_graph(complete(order)).first;
        result = construction_json(*host, v, line_complete_vertices(order, f), family);
        result["edges"] = edges_json(f);
      };
      auto per_variant = [&](const std::map<Variant, VertexSet> &sets) {
        result = Json::array();
        for (Variant v : kAllVariants)
          result.push_back(construction_json(*host, v, sets.at(v), family));
      };
      if (family == "dual-cart" || family == "outer-cart") {
        host = cartesian_product(complete(n), complete(m));
        bool dual = family == "dual-cart";
        result = construction_json(*host, dual ? Variant::Dual : Variant::Outer,
                                   dual ? dual_set_cartesian_cliques(n, m) : outer_set_cartesian_cliques(n, m),
                                   family);
      } else if (family == "total-direct") {
        host = direct_product(complete(n), complete(m));
        result = construction_json(*host, Variant::Total, total_set_direct_cliques(n, m), family);
      } else if (family == "mu-lkn") {
        line_family(n, mu_set_line_complete(n), Variant::Mutual);
      } else if (family == "total-lkn") {
        line_family(n, total_set_line_complete(n), Variant::Total);
      } else if (family == "lk10-witness") {
        line_family(10, total_witness_lk10(), Variant::Total);
      } else if (family == "cograph") {
        if (graph_text.empty())
          throw std::invalid_argument("construct cograph requires --graph");
        host = load_graph_arg(graph_text);
        per_variant(cograph_witnesses(*host));
      } else if (family == "c5") {
        host = c5_family(i, j);
        per_variant(c5_family_witnesses(i, j));
      } else if (family == "g7") {
        host = g7_family(i, j, k);
        per_variant(g7_family_witnesses(i, j, k));
      } else {
        throw std::invalid_argument("unknown construction family '" + family + "'");
      }
      if (with_graph6)
        result = Json{{"graph6", io::write_graph6(*host)}, {"witnesses", result}};
      out << result.dump(2) << "\n";
      return kExitOk;
    }

    if (*oracle_ex) {
      auto pattern = parse_pattern(forbid);
      Json j = to_json(ex_forbidden(n, pattern, -1, threads));
      j["kind"] = "ex";
      j["n"] = n;
      j["forbid"] = to_string(pattern);
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*oracle_z) {
      Json j = to_json(zarankiewicz(m, n));
      j["kind"] = "zarankiewicz";
      j["m"] = m;
      j["n"] = n;
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*report) {
      ropts.seed = seed;
      ropts.threads = threads;
      Report rep = build_report(suite, ropts);
      if (format == "csv")
        write_csv(rep.rows, out);
      else
        out << Json{{"suite", rep.suite}, {"rows", rep.rows}, {"agree", rep.agree}}.dump(2) << "\n";
      if (!rep.agree)
        err << "report " << suite << ": formula and computed columns disagree\n";
      return rep.agree ? kExitOk : kExitAudit;
    }

    if (*analyze) {
      Graph g = load_graph_arg(graph_text);
      bool cog = is_cograph(g);
      bool connected = is_connected(g);
      Json j{{"is_cograph", cog}, {"connected", connected}, {"big_mu", nullptr}, {"numbers", nullptr}};
      if (auto dec = big_mu_decompose(g))
        j["big_mu"] = {{"apex", dec->apex},
                       {"t", dec->t()},
                       {"clique", dec->clique.members()},
                       {"h", dec->h.members()},
                       {"split_regime", !has_universal_vertex(g)}};
      if (cog && connected)
        j["numbers"] = numbers_json(cograph_visibility_numbers(g));
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const CeilingError &e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error &e) {
    err << "internal error: " << e.what() << "\n";
    return kExitAudit;
  }
  return kExitInput;
}

} // namespace mvis::cli
