#include "sfp/params.hpp"

#include <cmath>
#include <cstdlib>

#include <json.hpp>

namespace sfp {

using nlohmann::json;

void ModelParams::validate() const {
  if (d < 1) throw validation_error("dimension must be a positive integer");
  if (!(alpha > 0)) throw validation_error("alpha must be > 0");
  if (!(tau > 1)) throw validation_error("tau must be > 1");
  if (!(lambda >= 0)) throw validation_error("lambda must be >= 0");
  if (!(mu > 0) || !(mu <= 1)) throw validation_error("mu must be in (0,1]");
  if (const auto* pc = std::get_if<ParetoC>(&weight_law)) {
    if (!(pc->c > 0)) throw validation_error("ParetoC constant c must be > 0");
  }
  if (const auto* cw = std::get_if<Constant>(&weight_law)) {
    if (!(cw->w0 > 0)) throw validation_error("constant weight w0 must be > 0");
  }
}

std::int64_t BoxGeometry::vertex_count() const {
  std::int64_t n = 1;
  for (int i = 0; i < dim(); ++i) n *= side;
  return n;
}

std::vector<std::int64_t> BoxGeometry::coords(std::int64_t index) const {
  std::vector<std::int64_t> xyz(origin.size());
  for (int i = dim() - 1; i >= 0; --i) {
    xyz[i] = origin[i] + index % side;
    index /= side;
  }
  return xyz;
}

std::int64_t BoxGeometry::index_of(const std::vector<std::int64_t>& xyz) const {
  std::int64_t idx = 0;
  for (int i = 0; i < dim(); ++i) {
    const std::int64_t rel = xyz[i] - origin[i];
    if (rel < 0 || rel >= side) throw validation_error("coordinate outside box");
    idx = idx * side + rel;
  }
  return idx;
}

void BoxGeometry::validate() const {
  if (origin.empty()) throw validation_error("box origin must have length d >= 1");
  if (side < 1) throw validation_error("box side must be a positive integer");
}

double gamma_param(const ModelParams& p) {
  return p.alpha * (p.tau - 1.0) / static_cast<double>(p.d);
}

double weight_quantile(const WeightLaw& law, double tau, double u) {
  if (!(u > 0.0) || !(u <= 1.0))
    throw validation_error("weight quantile argument must lie in (0,1]");
  const double inv = 1.0 / (tau - 1.0);
  return std::visit(
      [&](const auto& l) -> double {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, Constant>) {
          return l.w0;
        } else if constexpr (std::is_same_v<L, StandardPareto>) {
          return std::pow(u, -inv);
        } else {
          return std::pow(l.c / u, inv);
        }
      },
      law);
}

double weight_support_min(const WeightLaw& law, double tau) {
  return std::visit(
      [&](const auto& l) -> double {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, Constant>) return l.w0;
        else if constexpr (std::is_same_v<L, StandardPareto>) return 1.0;
        else return std::pow(l.c, 1.0 / (tau - 1.0));
      },
      law);
}

double weight_tail(const WeightLaw& law, double tau, double w) {
  return std::visit(
      [&](const auto& l) -> double {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, Constant>) {
          return w <= l.w0 ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<L, StandardPareto>) {
          return w <= 1.0 ? 1.0 : std::pow(w, -(tau - 1.0));
        } else {
          return std::min(1.0, l.c * std::pow(w, -(tau - 1.0)));
        }
      },
      law);
}

double sample_weight(const WeightLaw& law, double tau, const RngStream& stream) {
  return weight_quantile(law, tau, stream_uniform(stream));
}

double edge_probability(double wx, double wy, double dist, double lambda,
                        double alpha) {
  if (!(wx > 0) || !(wy > 0)) throw validation_error("weights must be positive");
  if (!(dist > 0)) throw validation_error("edge distance must be positive (no self-loops)");
  return -std::expm1(-lambda * wx * wy / std::pow(dist, alpha));
}

double vertex_distance(const std::vector<std::int64_t>& x,
                       const std::vector<std::int64_t>& y,
                       const BoxGeometry& geometry, Norm norm) {
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    std::int64_t diff = std::llabs(x[i] - y[i]);
    if (geometry.boundary == Boundary::Torus) {
      diff = std::min(diff, geometry.side - diff);
    }
    if (norm == Norm::L1)
      acc += static_cast<double>(diff);
    else
      acc = std::max(acc, static_cast<double>(diff));
  }
  return acc;
}

std::string law_name(const WeightLaw& law) {
  if (std::holds_alternative<ParetoC>(law)) return "pareto_c";
  if (std::holds_alternative<StandardPareto>(law)) return "standard_pareto";
  return "constant";
}

std::string params_to_json(const ModelParams& p) {
  json j;
  j["d"] = p.d;
  j["alpha"] = p.alpha;
  j["tau"] = p.tau;
  j["lambda"] = p.lambda;
  json law;
  law["kind"] = law_name(p.weight_law);
  if (const auto* pc = std::get_if<ParetoC>(&p.weight_law)) law["c"] = pc->c;
  if (const auto* cw = std::get_if<Constant>(&p.weight_law)) law["w0"] = cw->w0;
  j["weight_law"] = law;
  j["mu"] = p.mu;
  j["norm"] = p.norm == Norm::L1 ? "l1" : "linf";
  return j.dump();
}

namespace {
void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok)
      throw validation_error(std::string("unknown key '") + it.key() + "' in " + where);
  }
}
}  // namespace

ModelParams params_from_json_obj(const json& j) {
  reject_unknown(j, {"d", "alpha", "tau", "lambda", "weight_law", "mu", "norm"},
                 "model params");
  ModelParams p;
  p.d = j.at("d").get<int>();
  p.alpha = j.at("alpha").get<double>();
  p.tau = j.at("tau").get<double>();
  p.lambda = j.at("lambda").get<double>();
  if (j.contains("mu")) p.mu = j.at("mu").get<double>();
  if (j.contains("norm")) {
    const std::string n = j.at("norm").get<std::string>();
    if (n == "l1")
      p.norm = Norm::L1;
    else if (n == "linf")
      p.norm = Norm::Linf;
    else
      throw validation_error("norm must be 'l1' or 'linf'");
  }
  const json& law = j.at("weight_law");
  reject_unknown(law, {"kind", "c", "w0"}, "weight_law");
  const std::string kind = law.at("kind").get<std::string>();
  if (kind == "pareto_c") {
    p.weight_law = ParetoC{law.at("c").get<double>()};
  } else if (kind == "standard_pareto") {
    p.weight_law = StandardPareto{};
  } else if (kind == "constant") {
    p.weight_law = Constant{law.at("w0").get<double>()};
  } else {
    throw validation_error("weight_law.kind must be pareto_c|standard_pareto|constant");
  }
  p.validate();
  return p;
}

ModelParams params_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    return params_from_json_obj(j);
  } catch (const json::exception& e) {
    throw validation_error(std::string("bad model params: ") + e.what());
  }
}

}  // namespace sfp
