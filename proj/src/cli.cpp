#include "sfp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfp/bounds.hpp"
#include "sfp/graph.hpp"
#include "sfp/hierarchy.hpp"
#include "sfp/sampler.hpp"
#include "sfp/walk.hpp"

namespace sfp {

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

ModelParams params_from(const Json& j) { return params_from_json(j.dump()); }

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed,
                    const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      throw validation_error(std::string("unknown key '") + it.key() + "' in " +
                             where);
  }
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw validation_error(std::string("invalid JSON in ") + what + ": " + e.what());
  }
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct OutputSink {
  fs::path dir;
  Json digests = Json::object();

  void write(const std::string& name, const std::string& bytes) {
    fs::create_directories(dir);
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) throw resource_error("cannot open output file " + (dir / name).string());
    os << bytes;
    std::ostringstream hex;
    hex << std::hex << fnv1a(bytes);
    digests[name] = hex.str();
  }
};

BoxGeometry make_geometry(const ExperimentSpec& spec, std::int64_t side) {
  BoxGeometry g;
  g.origin.assign(spec.params.d, 0);
  g.side = side;
  g.boundary = spec.boundary;
  return g;
}

SampleOptions make_sample_options(const Json& opts, int threads) {
  SampleOptions s;
  s.threads = threads;
  if (opts.contains("restrict_to_green"))
    s.restrict_to_green = opts.at("restrict_to_green").get<bool>();
  if (opts.contains("max_pairs")) s.max_pairs = opts.at("max_pairs").get<std::int64_t>();
  s.max_pairs = max_pairs_from_env(s.max_pairs);
  return s;
}

// ---- runners ---------------------------------------------------------------

void run_sample(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
                int threads) {
  reject_unknown(opts, {"restrict_to_green", "max_pairs"}, "sample options");
  const SampleOptions sopts = make_sample_options(opts, threads);
  for (std::int64_t side : spec.sides)
    for (std::uint64_t seed : spec.seeds) {
      const Configuration cfg =
          sample_configuration(make_geometry(spec, side), spec.params, seed, sopts);
      std::ostringstream vs, es;
      write_vertices_csv(cfg, vs);
      write_edges_csv(cfg, es);
      const std::string tag = std::to_string(side) + "_" + std::to_string(seed);
      sink.write("vertices_" + tag + ".csv", vs.str());
      sink.write("edges_" + tag + ".csv", es.str());
    }
}

void run_degrees(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
                 int threads) {
  reject_unknown(opts, {"restrict_to_green", "max_pairs"}, "degrees options");
  const SampleOptions sopts = make_sample_options(opts, threads);
  std::ostringstream summary;
  summary << "side,seed,max_degree,gamma_hat\n";
  for (std::int64_t side : spec.sides)
    for (std::uint64_t seed : spec.seeds) {
      const Configuration cfg =
          sample_configuration(make_geometry(spec, side), spec.params, seed, sopts);
      const DegreeTail tail = degree_tail(cfg);
      std::ostringstream os;
      os << "degree,ccdf\n";
      for (auto [s, p] : tail.ccdf) os << s << ',' << p << '\n';
      const std::string tag = std::to_string(side) + "_" + std::to_string(seed);
      sink.write("ccdf_" + tag + ".csv", os.str());
      summary << side << ',' << seed << ','
              << *std::max_element(tail.degrees.begin(), tail.degrees.end()) << ',';
      if (tail.gamma_hat)
        summary << *tail.gamma_hat;
      else
        summary << "nan";
      summary << '\n';
    }
  sink.write("degrees_summary.csv", summary.str());
}

void run_distances(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
                   int threads) {
  reject_unknown(opts, {"n_pairs", "k", "max_pairs"}, "distances options");
  DiameterExperimentOptions dopts;
  if (opts.contains("n_pairs")) dopts.n_pairs = opts.at("n_pairs").get<std::int64_t>();
  const std::int64_t k = opts.contains("k") ? opts.at("k").get<std::int64_t>() : 2;
  dopts.n_seeds = static_cast<int>(spec.seeds.size());
  dopts.seed_base = spec.seeds.empty() ? 1 : spec.seeds.front();
  dopts.sample.threads = threads;
  if (opts.contains("max_pairs"))
    dopts.sample.max_pairs = opts.at("max_pairs").get<std::int64_t>();
  dopts.sample.max_pairs = max_pairs_from_env(dopts.sample.max_pairs);
  const auto reports = diameter_experiment(spec.params, spec.sides, dopts);
  std::ostringstream os;
  os << "side,n_pairs,fraction_within_" << k
     << ",diameter_lower_bound,largest_cluster\n";
  for (const auto& r : reports)
    os << r.box_side << ',' << r.n_pairs_sampled << ',' << r.fraction_within(k) << ','
       << r.diameter_lower_bound << ',' << r.largest_cluster_size << '\n';
  sink.write("distances.csv", os.str());
}

void run_walk(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
              int threads) {
  reject_unknown(opts, {"radii", "n_walks", "max_steps", "max_pairs"},
                 "walk options");
  WalkOptions wopts;
  if (opts.contains("n_walks")) wopts.n_walks = opts.at("n_walks").get<std::int64_t>();
  if (opts.contains("max_steps"))
    wopts.max_steps = opts.at("max_steps").get<std::int64_t>();
  std::vector<double> radii{4.0, 8.0, 16.0};
  if (opts.contains("radii")) radii = opts.at("radii").get<std::vector<double>>();
  SampleOptions sopts = make_sample_options(Json::object(), threads);
  if (opts.contains("max_pairs")) sopts.max_pairs = opts.at("max_pairs").get<std::int64_t>();

  for (std::int64_t side : spec.sides)
    for (std::uint64_t seed : spec.seeds) {
      const Configuration cfg =
          sample_configuration(make_geometry(spec, side), spec.params, seed, sopts);
      const ClusterLabeling cl = clusters(cfg);
      if (cl.largest_size() < 2) {
        sink.write("walk_" + std::to_string(side) + "_" + std::to_string(seed) +
                       ".csv",
                   "radius,r_eff,escape,escape_err\n");
        continue;
      }
      std::int32_t start = 0;
      for (std::int32_t v = 0; v < cfg.vertex_count(); ++v)
        if (cl.label[v] == cl.largest_id) {
          start = v;
          break;
        }
      wopts.walk_seed = seed;
      const ResistanceCurve curve = resistance_curve(cfg, start, radii, wopts);
      std::ostringstream os;
      os << "radius,r_eff,escape,escape_err\n";
      for (size_t i = 0; i < curve.radii.size(); ++i)
        os << curve.radii[i] << ',' << curve.r_eff[i] << ',' << curve.escape[i] << ','
           << curve.escape_err[i] << '\n';
      sink.write("walk_" + std::to_string(side) + "_" + std::to_string(seed) + ".csv",
                 os.str());
    }
}

void run_hct(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
             int threads) {
  reject_unknown(opts, {"xi", "xi_prime", "d1", "mode", "m", "max_pairs"},
                 "hct options");
  const double xi_hi = xi_upper_bound(spec.params);
  double xi_prime = xi_hi / 2.0;
  if (opts.contains("xi")) {
    const double xi = opts.at("xi").get<double>();
    if (!(xi > 0.0 && xi < xi_hi))
      throw validation_error("xi must lie in (0, xi_upper_bound)");
    xi_prime = 0.5 * (xi + xi_hi);  // default midpoint of (xi, upper bound)
  }
  if (opts.contains("xi_prime")) xi_prime = opts.at("xi_prime").get<double>();
  const std::int64_t d1 = opts.contains("d1") ? opts.at("d1").get<std::int64_t>() : 4;
  const std::string mode =
      opts.contains("mode") ? opts.at("mode").get<std::string>() : "stage";
  if (mode != "stage" && mode != "general")
    throw validation_error("hct mode must be 'stage' or 'general'");
  SampleOptions sopts = make_sample_options(Json::object(), threads);
  if (opts.contains("max_pairs")) sopts.max_pairs = opts.at("max_pairs").get<std::int64_t>();

  std::ostringstream summary;
  summary << "side,seed,success,tree_size,tree_diameter,certificate_valid\n";
  for (std::int64_t side : spec.sides)
    for (std::uint64_t seed : spec.seeds) {
      const Configuration cfg =
          sample_configuration(make_geometry(spec, side), spec.params, seed, sopts);
      std::optional<std::pair<WeightedTree, HctCertificate>> result;
      if (mode == "stage") {
        const StageHierarchy h =
            build_stage_hierarchy(spec.params, xi_prime, d1, {}, cfg);
        result = construct_hct(h, cfg);
      } else {
        const std::int64_t m =
            opts.contains("m") ? opts.at("m").get<std::int64_t>() : side;
        result = extend_to_general_m(spec.params, xi_prime, d1, m, cfg);
      }
      const std::string tag = std::to_string(side) + "_" + std::to_string(seed);
      if (!result) {
        summary << side << ',' << seed << ",0,0,0,0\n";
        continue;
      }
      const auto& [tree, cert] = *result;
      const HctReport rep =
          validate_hct(tree, cert.rho, cert.K, HctMode::Certificate, &cert);
      sink.write("hct_" + tag + ".json", tree_to_json(tree, &cert));
      summary << side << ',' << seed << ",1," << tree.vertices.size() << ','
              << tree.diameter() << ',' << (rep.valid() ? 1 : 0) << '\n';
    }
  sink.write("hct_summary.csv", summary.str());
}

void run_bounds(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
                int /*threads*/) {
  reject_unknown(opts,
                 {"lemma", "n", "K1", "K2", "N", "beta", "k", "k_schedule", "u",
                  "lambda_scale", "n_seeds", "n_max", "grid"},
                 "bounds options");
  if (!opts.contains("lemma"))
    throw validation_error("bounds experiment needs options.lemma");
  const std::string lemma = opts.at("lemma").get<std::string>();
  const ModelParams& p = spec.params;
  auto get_i = [&](const char* k, std::int64_t dflt) {
    return opts.contains(k) ? opts.at(k).get<std::int64_t>() : dflt;
  };
  auto get_d = [&](const char* k, double dflt) {
    return opts.contains(k) ? opts.at(k).get<double>() : dflt;
  };

  if (lemma == "max_weight") {
    const double c = std::holds_alternative<ParetoC>(p.weight_law)
                         ? std::get<ParetoC>(p.weight_law).c
                         : 1.0;
    const auto r = max_weight_conditional(get_i("n", 2), get_d("K1", 1.0),
                                          get_d("K2", 2.0), p.tau, c);
    sink.write("bounds.json", r.to_json());
  } else if (lemma == "big_degree") {
    const auto r = big_degree_box_probability(get_i("N", 16), get_d("beta", 1.0), p);
    sink.write("bounds.json", r.to_json());
  } else if (lemma == "coarse_connectivity") {
    const auto r = coarse_connectivity_domination(
        get_i("N", 16), get_i("k", 4), get_d("beta", 1.0), p,
        get_i("n_seeds", 10000), spec.seeds.empty() ? 1 : spec.seeds.front());
    sink.write("bounds.json", r.to_json());
  } else if (lemma == "cluster_connectivity") {
    const auto r =
        cluster_connectivity_bound(get_i("N", 16), get_i("k", 2), get_d("beta", 1.0), p);
    sink.write("bounds.json", r.to_json());
  } else if (lemma == "product_weight") {
    const double c = std::holds_alternative<ParetoC>(p.weight_law)
                         ? std::get<ParetoC>(p.weight_law).c
                         : 1.0;
    const auto r = product_weight_expectation(get_d("u", 100.0), p.tau, c,
                                              get_d("lambda_scale", 1.0));
    sink.write("bounds.json", r.to_json());
  } else if (lemma == "recurrence_marginal") {
    std::vector<std::int64_t> ks{8, 16, 32, 64, 128, 256, 512};
    if (opts.contains("k_schedule"))
      ks = opts.at("k_schedule").get<std::vector<std::int64_t>>();
    const auto r = recurrence_marginal_check(p, ks);
    std::ostringstream os;
    os << "k,value\n";
    for (size_t i = 0; i < r.k.size(); ++i) os << r.k[i] << ',' << r.values[i] << '\n';
    sink.write("recurrence_marginal.csv", os.str());
    sink.write("bounds.json", r.report.to_json());
  } else if (lemma == "transience") {
    const auto t = transience_sequences(static_cast<int>(get_i("n_max", 12)), p);
    std::ostringstream os;
    os << "n,log_D,log_C,log_u,partial_sum_C_inv,identity_residual\n";
    for (size_t i = 0; i < t.n.size(); ++i)
      os << t.n[i] << ',' << t.log_D[i] << ',' << t.log_C[i] << ',' << t.log_u[i]
         << ',' << t.partial_sum_C_inv[i] << ',' << t.identity_residual[i] << '\n';
    sink.write("transience_sequences.csv", os.str());
  } else {
    throw validation_error("unknown bounds lemma '" + lemma + "'");
  }
}

void run_renorm(const ExperimentSpec& spec, const Json& opts, OutputSink& sink,
                int threads) {
  reject_unknown(opts, {"N", "beta", "mode", "max_pairs"}, "renorm options");
  const std::int64_t N = opts.contains("N") ? opts.at("N").get<std::int64_t>() : 16;
  const double beta = opts.contains("beta") ? opts.at("beta").get<double>() : 1.0;
  const std::string mode_name =
      opts.contains("mode") ? opts.at("mode").get<std::string>() : "max_weight";
  CoarseMode mode;
  if (mode_name == "max_weight")
    mode = CoarseMode::MaxWeight;
  else if (mode_name == "largest_cluster")
    mode = CoarseMode::LargestCluster;
  else
    throw validation_error("renorm mode must be max_weight or largest_cluster");
  SampleOptions sopts = make_sample_options(Json::object(), threads);
  if (opts.contains("max_pairs")) sopts.max_pairs = opts.at("max_pairs").get<std::int64_t>();

  std::ostringstream summary;
  summary << "side,seed,boxes,good_boxes,box_edges,dominated_lambda\n";
  for (std::int64_t side : spec.sides)
    for (std::uint64_t seed : spec.seeds) {
      const Configuration cfg =
          sample_configuration(make_geometry(spec, side), spec.params, seed, sopts);
      const CoarseGrainResult r = coarse_grain(cfg, N, beta, mode);
      std::ostringstream os;
      os << "box,good,dominant\n";
      for (size_t b = 0; b < r.good.size(); ++b)
        os << b << ',' << int(r.good[b]) << ',' << r.dominant[b] << '\n';
      const std::string tag = std::to_string(side) + "_" + std::to_string(seed);
      sink.write("renorm_" + tag + ".csv", os.str());
      std::int64_t ngood = 0;
      for (auto g : r.good) ngood += g;
      summary << side << ',' << seed << ',' << r.good.size() << ',' << ngood << ','
              << r.box_edges.size() << ',' << r.dominated.lambda << '\n';
    }
  sink.write("renorm_summary.csv", summary.str());
}

}  // namespace

ExperimentSpec spec_from_json(const std::string& text) {
  const Json j = parse_json(text, "experiment spec");
  reject_unknown(j, {"kind", "params", "geometry", "seeds", "options"},
                 "experiment spec");
  ExperimentSpec spec;
  if (!j.contains("kind")) throw validation_error("spec needs a kind");
  spec.kind = j.at("kind").get<std::string>();
  static const char* kinds[] = {"sample", "degrees", "distances", "walk",
                                "hct",    "bounds",  "renorm"};
  bool known = false;
  for (const char* k : kinds)
    if (spec.kind == k) known = true;
  if (!known) throw validation_error("unknown experiment kind '" + spec.kind + "'");
  if (!j.contains("params")) throw validation_error("spec needs model params");
  spec.params = params_from(j.at("params"));

  if (j.contains("geometry")) {
    const Json& g = j.at("geometry");
    reject_unknown(g, {"sides", "boundary"}, "geometry");
    if (g.contains("sides"))
      spec.sides = g.at("sides").get<std::vector<std::int64_t>>();
    if (g.contains("boundary")) {
      const std::string b = g.at("boundary").get<std::string>();
      if (b == "free")
        spec.boundary = Boundary::Free;
      else if (b == "torus")
        spec.boundary = Boundary::Torus;
      else
        throw validation_error("boundary must be 'free' or 'torus'");
    }
  }
  if (spec.sides.empty()) spec.sides = {16};
  for (std::int64_t s : spec.sides)
    if (s < 1) throw validation_error("box sides must be positive");

  if (j.contains("seeds")) {
    const Json& s = j.at("seeds");
    if (s.is_array()) {
      spec.seeds = s.get<std::vector<std::uint64_t>>();
    } else {
      reject_unknown(s, {"base", "count"}, "seeds");
      const std::uint64_t base = s.at("base").get<std::uint64_t>();
      const std::int64_t count = s.at("count").get<std::int64_t>();
      if (count < 0) throw validation_error("seed count must be nonnegative");
      for (std::int64_t i = 0; i < count; ++i)
        spec.seeds.push_back(base + static_cast<std::uint64_t>(i));
    }
  }
  const bool needs_seeds = spec.kind != "bounds";
  if (needs_seeds && spec.seeds.empty())
    throw validation_error("seed list must not be empty");

  if (j.contains("options")) spec.options_json = j.at("options").dump();
  return spec;
}

std::string validate_spec(const std::string& text) {
  const ExperimentSpec spec = spec_from_json(text);
  const Json opts = parse_json(spec.options_json, "options");
  std::ostringstream diag;
  diag << "ok kind=" << spec.kind << " gamma=" << gamma_param(spec.params);
  if (spec.kind == "hct") {
    const double g = gamma_param(spec.params);
    if (!(g > 1.0 && g < 2.0))
      throw validation_error("hct requires 1 < gamma < 2; got gamma = " +
                             std::to_string(g));
    diag << " xi_upper_bound=" << xi_upper_bound(spec.params);
  }
  if (spec.kind == "bounds" && opts.contains("lemma")) {
    const std::string lemma = opts.at("lemma").get<std::string>();
    if (lemma == "recurrence_marginal") {
      const double g = gamma_param(spec.params);
      if (spec.params.d != 2 || !(spec.params.alpha >= 4.0) ||
          !(spec.params.tau > 2.0 || g > 2.0))
        throw validation_error(
            "recurrence_marginal requires d=2, alpha >= 4, tau > 2 or gamma > 2");
    }
    if (lemma == "max_weight" && opts.contains("K1") && opts.contains("K2") &&
        opts.at("K2").get<double>() < opts.at("K1").get<double>())
      throw validation_error("max_weight needs K2 >= K1");
    if (lemma == "transience" && !(gamma_param(spec.params) < 2.0))
      throw validation_error("transience sequences require gamma < 2");
  }
  return diag.str();
}

void run_spec(const std::string& text, const std::string& out_dir, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentSpec spec = spec_from_json(text);
  validate_spec(text);
  const Json opts = parse_json(spec.options_json, "options");

  OutputSink sink;
  sink.dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);

  if (spec.kind == "sample")
    run_sample(spec, opts, sink, threads);
  else if (spec.kind == "degrees")
    run_degrees(spec, opts, sink, threads);
  else if (spec.kind == "distances")
    run_distances(spec, opts, sink, threads);
  else if (spec.kind == "walk")
    run_walk(spec, opts, sink, threads);
  else if (spec.kind == "hct")
    run_hct(spec, opts, sink, threads);
  else if (spec.kind == "bounds")
    run_bounds(spec, opts, sink, threads);
  else
    run_renorm(spec, opts, sink, threads);

  const auto t1 = std::chrono::steady_clock::now();
  Json manifest;
  manifest["spec"] = parse_json(text, "experiment spec");
  manifest["version"] = "sfp-lab 1.0";
  manifest["wall_time_seconds"] =
      std::chrono::duration<double>(t1 - t0).count();
  manifest["outputs"] = sink.digests;
  Json seeds = Json::array();
  for (auto s : spec.seeds) seeds.push_back(s);
  manifest["seeds"] = seeds;
  sink.write("manifest.json", manifest.dump(2));
}

int cli_main(int argc, char** argv) {
  CLI::App app{"scale-free percolation lab"};
  app.require_subcommand(1);

  std::string spec_path, out_dir = ".";
  int threads = 1;
  std::uint64_t seed_base = 0;
  std::int64_t seed_count = -1;
  bool have_seed_base = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", spec_path, "experiment spec JSON file")->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads");
    sub->add_option("--seed-base", seed_base, "override: first seed")
        ->each([&](const std::string&) { have_seed_base = true; });
    sub->add_option("--seed-count", seed_count, "override: number of seeds");
  };

  CLI::App* run = app.add_subcommand("run", "run an experiment spec");
  add_common(run);
  CLI::App* validate = app.add_subcommand("validate", "validate a spec only");
  validate->add_option("--spec", spec_path, "experiment spec JSON file")->required();

  std::map<std::string, CLI::App*> kind_subs;
  for (const char* kind : {"sample", "degrees", "distances", "walk", "hct", "bounds",
                           "renorm"}) {
    CLI::App* sub = app.add_subcommand(kind, std::string("run a ") + kind + " spec");
    add_common(sub);
    kind_subs[kind] = sub;
  }
  // kind-specific overrides
  double hct_xi = -1.0, hct_xi_prime = -1.0;
  std::int64_t hct_d1 = -1;
  std::string hct_mode, bounds_lemma, bounds_grid;
  kind_subs["hct"]->add_option("--xi", hct_xi, "target xi");
  kind_subs["hct"]->add_option("--xi-prime", hct_xi_prime, "construction xi'");
  kind_subs["hct"]->add_option("--d1", hct_d1, "first stage size D1");
  kind_subs["hct"]->add_option("--mode", hct_mode, "stage | general");
  kind_subs["bounds"]->add_option("--lemma", bounds_lemma, "which oracle");
  kind_subs["bounds"]->add_option("--grid", bounds_grid, "grid CSV (unused keys ok)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    std::ifstream in(spec_path);
    if (!in) throw validation_error("cannot read spec file " + spec_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    // fold command-line overrides back into the spec text
    Json j = parse_json(text, "experiment spec");
    if (have_seed_base || seed_count >= 0) {
      const std::uint64_t base = have_seed_base ? seed_base : 1;
      const std::int64_t count = seed_count >= 0 ? seed_count : 1;
      j["seeds"] = {{"base", base}, {"count", count}};
    }
    for (const auto& [name, sub] : kind_subs)
      if (sub->parsed() && j.contains("kind") && j.at("kind") != name)
        throw validation_error("spec kind does not match subcommand '" + name + "'");
    if (kind_subs["hct"]->parsed()) {
      if (hct_xi >= 0.0) j["options"]["xi"] = hct_xi;
      if (hct_xi_prime >= 0.0) j["options"]["xi_prime"] = hct_xi_prime;
      if (hct_d1 >= 0) j["options"]["d1"] = hct_d1;
      if (!hct_mode.empty()) j["options"]["mode"] = hct_mode;
    }
    if (kind_subs["bounds"]->parsed() && !bounds_lemma.empty())
      j["options"]["lemma"] = bounds_lemma;
    text = j.dump();

    if (validate->parsed()) {
      std::cout << validate_spec(text) << '\n';
      return 0;
    }
    run_spec(text, out_dir, threads);
    return 0;
  } catch (const validation_error& e) {
    std::cerr << "error: validation: " << e.what() << '\n';
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: resource: " << e.what() << '\n';
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "error: numeric: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace sfp
