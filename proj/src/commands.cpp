#include "tripart/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "tripart/closed_form.hpp"
#include "tripart/decomposition.hpp"
#include "tripart/errors.hpp"
#include "tripart/oracles.hpp"

namespace tripart {
namespace {

const std::set<std::string> kKnownOracles{"sums", "kirchhoff", "minors", "detLI", "census",
                                          "construction"};

OutputRecord make_record(std::string quantity, const PartSizes& parts,
                         std::optional<std::uint32_t> r, BigCount value) {
  return OutputRecord{std::move(quantity), parts.m, parts.n, parts.p, r, std::move(value), {}, {}};
}

struct TupleReport {
  std::vector<OutputRecord> rows;
  std::vector<std::string> warnings;
};

TupleReport verify_tuple(const PartSizes& parts, const VerifyOptions& opt) {
  TupleReport rep;
  auto has = [&](const char* name) { return opt.oracles.contains(name); };
  auto compare = [&](std::string quantity, std::optional<std::uint32_t> r, const BigCount& value,
                     const BigCount& oracle) {
    auto rec = make_record(std::move(quantity), parts, r, value);
    rec.set_oracle(oracle);
    rep.rows.push_back(std::move(rec));
  };

  const BigCount trees = tripartite_tree_count(parts);
  const BigCount total = total_rooted_forest_count(parts);
  std::vector<BigCount> forests_r(parts.p + 1);
  for (std::uint32_t r = 1; r <= parts.p; ++r) forests_r[r] = forest_count_r_roots_in_part(parts, r);

  if (has("sums")) {
    compare("trees/sum", std::nullopt, trees, tree_count_via_sum(parts));
    for (std::uint32_t r = 1; r <= parts.p; ++r)
      compare("forests-r/sum", r, forests_r[r], forest_count_via_sum(parts, r));
    compare("total-forests/sum", std::nullopt, total, total_via_sum(parts));
  }

  const LabeledGraph g = build_complete_multipartite(parts);
  if (has("kirchhoff")) compare("trees/kirchhoff", std::nullopt, trees, spanning_tree_count_kirchhoff(g));
  if (has("minors"))
    for (std::uint32_t r = 1; r <= parts.p; ++r)
      compare("forests-r/minors", r, forests_r[r], forest_count_r_in_part_oracle(g, parts, r));
  if (has("detLI")) compare("total-forests/detLI", std::nullopt, total, total_rooted_forest_oracle(g));

  if (has("census")) {
    try {
      const ForestCensus census = exhaustive_census(g, parts, opt.max_edges);
      compare("total-forests/census", std::nullopt, total, census.total());
      for (std::uint32_t r = 1; r <= parts.p; ++r)
        compare("forests-r/census", r, forests_r[r], census.at(RootProfile{0, 0, r}));
    } catch (const ResourceLimit& e) {
      std::ostringstream w;
      w << "skipping census for (" << parts.m << "," << parts.n << "," << parts.p << "): " << e.what();
      rep.warnings.push_back(w.str());
    }
  }

  if (has("construction")) {
    if (parts.total() > kDefaultConstructionMaxVertices) {
      std::ostringstream w;
      w << "skipping construction for (" << parts.m << "," << parts.n << "," << parts.p
        << "): more than " << kDefaultConstructionMaxVertices << " vertices";
      rep.warnings.push_back(w.str());
    } else {
      for (std::uint32_t r = 1; r <= parts.p; ++r) {
        const BigCount per_set = enumerate_constructions(parts, r).count();
        compare("forests-r/construction", r, forests_r[r], binomial(parts.p, r) * per_set);
      }
    }
  }
  return rep;
}

std::vector<std::uint32_t> bench_sizes(std::uint32_t max_size) {
  std::vector<std::uint32_t> sizes;
  for (std::uint32_t s : {1u, 2u, 5u, 10u, 20u, 50u, 100u, 200u, 500u})
    if (s <= max_size) sizes.push_back(s);
  if (sizes.empty() || sizes.back() != max_size) sizes.push_back(max_size);
  return sizes;
}

template <typename Fn>
std::int64_t best_time_ns(std::uint32_t reps, Fn&& fn) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min<std::int64_t>(
        best, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  return best;
}

bool sampleable(const PartSizes& parts) {
  const int nonempty = (parts.m > 0) + (parts.n > 0) + (parts.p > 0);
  return parts.total() == 1 || nonempty >= 2;
}

}  // namespace

std::uint32_t census_edge_bound_from_env() {
  const char* raw = std::getenv("FOREST_CENSUS_MAX_EDGES");
  if (raw == nullptr || *raw == '\0') return kDefaultCensusMaxEdges;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v > std::numeric_limits<std::uint32_t>::max())
    throw InvalidInput(std::string("FOREST_CENSUS_MAX_EDGES is not a count: ") + raw);
  return static_cast<std::uint32_t>(v);
}

int cmd_count(const CountOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const PartSizes& parts = opt.parts;
    OutputRecord rec;
    std::optional<BigCount> oracle;
    auto graph = [&] { return build_complete_multipartite(parts); };

    if (opt.quantity == "trees") {
      rec = make_record(opt.quantity, parts, std::nullopt, tripartite_tree_count(parts));
      if (opt.with_oracle) oracle = spanning_tree_count_kirchhoff(graph());
    } else if (opt.quantity == "rooted-trees") {
      rec = make_record(opt.quantity, parts, std::nullopt, rooted_tree_count_root_in_part(parts));
      if (opt.with_oracle) oracle = forest_count_r_in_part_oracle(graph(), parts, 1);
    } else if (opt.quantity == "forests-r") {
      if (!opt.r) throw InvalidInput("forests-r needs --r");
      rec = make_record(opt.quantity, parts, opt.r, forest_count_r_roots_in_part(parts, *opt.r));
      if (opt.with_oracle) oracle = forest_count_r_in_part_oracle(graph(), parts, *opt.r);
    } else if (opt.quantity == "total-forests") {
      rec = make_record(opt.quantity, parts, std::nullopt, total_rooted_forest_count(parts));
      if (opt.with_oracle) oracle = total_rooted_forest_oracle(graph());
    } else {
      throw InvalidInput("unknown quantity '" + opt.quantity + "'");
    }
    if (oracle) rec.set_oracle(*oracle);
    emit_records(out, opt.format, {rec});
    return rec.match.value_or(true) ? kExitOk : kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.max_m < 1 || opt.max_n < 1 || opt.max_p < 1) {
    err << "error: verify bounds must be at least 1\n";
    return kExitUsage;
  }
  for (const auto& name : opt.oracles) {
    if (!kKnownOracles.contains(name)) {
      err << "error: unknown oracle '" << name << "'\n";
      return kExitUsage;
    }
  }

  std::vector<PartSizes> tuples;
  for (std::uint32_t m = 1; m <= opt.max_m; ++m)
    for (std::uint32_t n = 1; n <= opt.max_n; ++n)
      for (std::uint32_t p = 1; p <= opt.max_p; ++p) tuples.push_back({m, n, p});

  std::vector<TupleReport> reports(tuples.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < tuples.size(); ++i) reports[i] = verify_tuple(tuples[i], opt);

  std::vector<OutputRecord> shown;
  std::size_t compared = 0;
  std::size_t mismatches = 0;
  for (const auto& rep : reports) {
    for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    for (const auto& row : rep.rows) {
      ++compared;
      const bool bad = !row.match.value_or(false);
      mismatches += bad;
      if (bad || opt.show_all) shown.push_back(row);
    }
  }
  emit_records(out, opt.format, shown);
  (opt.format == OutputFormat::Plain ? out : err)
      << "verify: " << compared << " comparisons over " << tuples.size() << " tuples, "
      << mismatches << " mismatches\n";
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_census(const CensusOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const LabeledGraph g = build_complete_multipartite(opt.parts);
    const ForestCensus census = exhaustive_census(g, opt.parts, opt.max_edges);
    std::vector<OutputRecord> rows;
    for (const auto& [profile, count] : census.counts) {
      std::ostringstream q;
      q << "census-profile(" << profile.l << "," << profile.k << "," << profile.r << ")";
      rows.push_back(make_record(q.str(), opt.parts, profile.r, count));
    }
    auto total = make_record("census-total", opt.parts, std::nullopt, census.total());
    total.set_oracle(total_rooted_forest_count(opt.parts));
    rows.push_back(total);
    emit_records(out, opt.format, rows);
    return *total.match ? kExitOk : kExitMismatch;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.parts.total() == 0 || !sampleable(opt.parts)) {
    err << "error: K_{" << opt.parts.m << "," << opt.parts.n << "," << opt.parts.p
        << "} is not connected\n";
    return kExitUsage;
  }
  const LabeledGraph g = build_complete_multipartite(opt.parts);
  if (opt.format == OutputFormat::Csv) out << "index,vertex,parent\n";
  for (std::uint32_t i = 0; i < opt.count; ++i) {
    const RootedForest tree = sample_spanning_tree(g, derive_seed(opt.seed, i));
    switch (opt.format) {
      case OutputFormat::Plain: {
        out << "tree " << i << ':';
        for (Vertex par : tree.parent) {
          out << ' ';
          if (par == kNoParent) out << '-';
          else out << par;
        }
        out << '\n';
        break;
      }
      case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["quantity"] = "sample";
        j["m"] = opt.parts.m;
        j["n"] = opt.parts.n;
        j["p"] = opt.parts.p;
        j["seed"] = opt.seed;
        j["index"] = i;
        j["parent"] = nlohmann::ordered_json::array();
        for (Vertex par : tree.parent)
          j["parent"].push_back(par == kNoParent ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(par));
        out << j.dump() << '\n';
        break;
      }
      case OutputFormat::Csv:
        for (Vertex v = 0; v < tree.vertex_count(); ++v) {
          out << i << ',' << v << ',';
          if (tree.parent[v] != kNoParent) out << tree.parent[v];
          out << '\n';
        }
        break;
    }
  }
  return kExitOk;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.repetitions == 0) {
    err << "error: repetitions must be at least 1\n";
    return kExitUsage;
  }
  if (opt.max_size == 0) {
    err << "error: max size must be at least 1\n";
    return kExitUsage;
  }
  struct Row {
    std::uint32_t size;
    std::string method;
    std::int64_t ns;
  };
  std::vector<Row> rows;
  for (std::uint32_t s : bench_sizes(opt.max_size)) {
    const PartSizes parts{s, s, s};
    BigCount sink;
    rows.push_back({s, "closed-form", best_time_ns(opt.repetitions, [&] {
                      sink = tripartite_tree_count(parts);
                    })});
    const LabeledGraph g = build_complete_multipartite(parts);
    rows.push_back({s, "determinant", best_time_ns(opt.repetitions, [&] {
                      sink = spanning_tree_count_kirchhoff(g);
                    })});
  }

  if (opt.format == OutputFormat::Csv) out << "size,method,nanoseconds\n";
  for (const auto& row : rows) {
    switch (opt.format) {
      case OutputFormat::Csv: out << row.size << ',' << row.method << ',' << row.ns << '\n'; break;
      case OutputFormat::Json: {
        nlohmann::ordered_json j;
        j["size"] = row.size;
        j["method"] = row.method;
        j["nanoseconds"] = row.ns;
        out << j.dump() << '\n';
        break;
      }
      case OutputFormat::Plain:
        out << "K_{" << row.size << "," << row.size << "," << row.size << "} " << row.method
            << ": " << row.ns << " ns\n";
        break;
    }
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spanning tree and rooted forest counts for complete tripartite graphs"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    format_name = fallback;
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
  };
  std::uint32_t max_edges = 0;
  bool max_edges_set = false;
  auto add_max_edges = [&](CLI::App* sub) {
    sub->add_option("--max-edges", max_edges, "Census edge bound (default 22)")
        ->each([&](const std::string&) { max_edges_set = true; });
  };

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Evaluate a closed-form count");
  count_cmd->add_option("quantity", count.quantity, "trees | rooted-trees | forests-r | total-forests")
      ->required()
      ->check(CLI::IsMember({"trees", "rooted-trees", "forests-r", "total-forests"}));
  count_cmd->add_option("m", count.parts.m)->required();
  count_cmd->add_option("n", count.parts.n)->required();
  count_cmd->add_option("p", count.parts.p)->required();
  count_cmd->add_option("--r", count.r, "Number of roots in H_p (forests-r)");
  count_cmd->add_flag("--oracle", count.with_oracle, "Also evaluate the determinant oracle");

  VerifyOptions verify;
  std::string oracle_list = "sums,kirchhoff,minors,detLI";
  auto* verify_cmd = app.add_subcommand("verify", "Sweep closed forms against sums and oracles");
  verify_cmd->add_option("max_m", verify.max_m)->required();
  verify_cmd->add_option("max_n", verify.max_n)->required();
  verify_cmd->add_option("max_p", verify.max_p)->required();
  verify_cmd->add_option("--oracles", oracle_list,
                         "Comma list of sums,kirchhoff,minors,detLI,census,construction or all");
  verify_cmd->add_flag("--all", verify.show_all, "Print matching rows too");

  CensusOptions census;
  auto* census_cmd = app.add_subcommand("census", "Exhaustive per-profile forest census");
  census_cmd->add_option("m", census.parts.m)->required();
  census_cmd->add_option("n", census.parts.n)->required();
  census_cmd->add_option("p", census.parts.p)->required();

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Uniform random spanning trees");
  sample_cmd->add_option("m", sample.parts.m)->required();
  sample_cmd->add_option("n", sample.parts.n)->required();
  sample_cmd->add_option("p", sample.parts.p)->required();
  sample_cmd->add_option("--count", sample.count, "Number of trees");
  sample_cmd->add_option("--seed", sample.seed, "Generator seed");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed form against the determinant");
  bench_cmd->add_option("max_size", bench.max_size)->required();
  bench_cmd->add_option("repetitions", bench.repetitions)->required();

  for (auto* sub : {count_cmd, verify_cmd, census_cmd, sample_cmd}) add_format(sub, "plain");
  add_format(bench_cmd, "csv");
  format_name = "plain";
  add_max_edges(verify_cmd);
  add_max_edges(census_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const bool bench_default = bench_cmd->parsed() && bench_cmd->count("--format") == 0;
    const OutputFormat format = bench_default ? OutputFormat::Csv : parse_format(format_name);
    const std::uint32_t edge_bound = max_edges_set ? max_edges : census_edge_bound_from_env();

    if (count_cmd->parsed()) {
      count.format = format;
      return cmd_count(count, out, err);
    }
    if (verify_cmd->parsed()) {
      verify.format = format;
      verify.max_edges = edge_bound;
      verify.oracles.clear();
      std::stringstream list(oracle_list);
      for (std::string item; std::getline(list, item, ',');) {
        if (item == "all")
          verify.oracles.insert(kKnownOracles.begin(), kKnownOracles.end());
        else if (!item.empty())
          verify.oracles.insert(item);
      }
      return cmd_verify(verify, out, err);
    }
    if (census_cmd->parsed()) {
      census.format = format;
      census.max_edges = edge_bound;
      return cmd_census(census, out, err);
    }
    if (sample_cmd->parsed()) {
      sample.format = format;
      return cmd_sample(sample, out, err);
    }
    bench.format = format;
    return cmd_bench(bench, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tripart
