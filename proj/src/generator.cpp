#include "ahncut/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "ahncut/errors.hpp"
#include "ahncut/io.hpp"
#include "ahncut/rng.hpp"
#include "ahncut/validate.hpp"

namespace ahncut {
namespace {

long long parse_integer(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("key '" + key + "' needs an integer, got '" + value + "'", line);
  }
}

double parse_real(const std::string& key, const std::string& value, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("key '" + key + "' needs a finite number, got '" + value + "'", line);
  }
}

// Working representation of one auxiliary variable while the instance is being
// laid out. Link weights are rescaled at the end to enforce the hierarchical
// consistency margin.
struct AuxPlan {
  std::vector<double> unary;            // num_labels + 1 entries
  std::vector<int> children;            // indices on the level below
  std::vector<double> child_weights;    // one per child
  double incident_lambda = 0.0;
};

std::vector<double> draw_aux_unary(Rng& rng, int num_labels, double scale) {
  std::vector<double> u(num_labels + 1, 0.0);
  double max_base = 0.0;
  for (int l = 0; l < num_labels; ++l) {
    u[l] = rng.dyadic(scale);
    max_base = std::max(max_base, u[l]);
  }
  u[num_labels] = max_base + rng.dyadic(2.0);
  return u;
}

// Doubles the link weights of each auxiliary variable until its strongest base
// label (plus same-level edge slack) costs strictly less than half the total
// child weight, which is exactly the pass condition of the consistency check.
void enforce_consistency(std::vector<AuxPlan>& plans, int num_labels) {
  for (AuxPlan& plan : plans) {
    double need = 0.0;
    for (int l = 0; l < num_labels; ++l) need = std::max(need, plan.unary[l]);
    need += plan.incident_lambda;
    double total = 0.0;
    for (double w : plan.child_weights) total += w;
    double factor = 1.0;
    while (!(need < 0.5 * factor * total)) factor *= 2.0;
    if (factor > 1.0)
      for (double& w : plan.child_weights) w *= factor;
  }
}

void check_dyadic_scale(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale) ||
      static_cast<double>(std::llround(scale * 64.0)) / 64.0 != scale)
    throw ParameterError("cost_scale must be a positive multiple of 1/64");
}

HierarchicalNetwork generate_random_small(const GeneratorSpec& spec) {
  if (spec.base_vars < 1) throw ParameterError("random_small needs base_vars >= 1");
  if (spec.base_edges < 0 || spec.aux_edges < 0 || spec.aux_vars < 0 || spec.aux2_vars < 0)
    throw ParameterError("random_small size keys must be non-negative");
  if (spec.aux2_vars > 0 && spec.aux_vars == 0)
    throw ParameterError("aux2_vars needs aux_vars >= 1");

  Rng rng(spec.seed);
  const int K = spec.labels;
  const int num_levels = 1 + (spec.aux_vars > 0 ? 1 : 0) + (spec.aux2_vars > 0 ? 1 : 0);
  NetworkBuilder builder(K, num_levels);

  builder.set_level_size(0, spec.base_vars);
  for (int v = 0; v < spec.base_vars; ++v) {
    std::vector<double> u(K);
    for (int l = 0; l < K; ++l) u[l] = rng.dyadic(spec.cost_scale);
    builder.set_unary(0, v, std::move(u));
  }
  std::set<std::pair<int, int>> base_seen;
  for (int t = 0; t < spec.base_edges; ++t) {
    const int u = static_cast<int>(rng.below(spec.base_vars));
    const int v = static_cast<int>(rng.below(spec.base_vars));
    const double lambda = rng.dyadic(spec.cost_scale);
    const auto key = std::minmax(u, v);
    if (u == v || !base_seen.insert(key).second) continue;
    builder.add_edge(0, u, v, lambda);
  }

  const auto draw_children = [&rng](int pool, int want) {
    std::vector<int> out;
    while (static_cast<int>(out.size()) < want) {
      const int c = static_cast<int>(rng.below(pool));
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
  };

  std::vector<AuxPlan> level1(spec.aux_vars > 0 ? spec.aux_vars : 0);
  for (AuxPlan& plan : level1) {
    plan.unary = draw_aux_unary(rng, K, spec.cost_scale);
    const int want = 1 + static_cast<int>(rng.below(std::min(3, spec.base_vars)));
    plan.children = draw_children(spec.base_vars, want);
    for (std::size_t i = 0; i < plan.children.size(); ++i)
      plan.child_weights.push_back(1.0 + rng.dyadic(spec.cost_scale));
  }
  std::vector<std::tuple<int, int, double>> aux_edges;
  if (spec.aux_vars > 1) {
    std::set<std::pair<int, int>> aux_seen;
    for (int t = 0; t < spec.aux_edges; ++t) {
      const int u = static_cast<int>(rng.below(spec.aux_vars));
      const int v = static_cast<int>(rng.below(spec.aux_vars));
      const double lambda = 0.25 * rng.dyadic(spec.cost_scale);
      const auto key = std::minmax(u, v);
      if (u == v || !aux_seen.insert(key).second) continue;
      aux_edges.emplace_back(u, v, lambda);
      level1[u].incident_lambda += lambda;
      level1[v].incident_lambda += lambda;
    }
  }
  std::vector<AuxPlan> level2(spec.aux2_vars > 0 ? spec.aux2_vars : 0);
  for (AuxPlan& plan : level2) {
    plan.unary = draw_aux_unary(rng, K, spec.cost_scale);
    const int want = 1 + static_cast<int>(rng.below(std::min(3, spec.aux_vars)));
    plan.children = draw_children(spec.aux_vars, want);
    for (std::size_t i = 0; i < plan.children.size(); ++i)
      plan.child_weights.push_back(1.0 + rng.dyadic(spec.cost_scale));
  }

  enforce_consistency(level1, K);
  enforce_consistency(level2, K);

  const auto emit_level = [&builder](int level, std::vector<AuxPlan>& plans) {
    builder.set_level_size(level, static_cast<int>(plans.size()));
    for (std::size_t a = 0; a < plans.size(); ++a) {
      builder.set_unary(level, static_cast<int>(a), std::move(plans[a].unary));
      for (std::size_t i = 0; i < plans[a].children.size(); ++i)
        builder.add_link(level, static_cast<int>(a), plans[a].children[i],
                         plans[a].child_weights[i]);
    }
  };
  if (!level1.empty()) {
    emit_level(1, level1);
    for (const auto& [u, v, lambda] : aux_edges) builder.add_edge(1, u, v, lambda);
  }
  if (!level2.empty()) emit_level(2, level2);

  return builder.build();
}

HierarchicalNetwork generate_grid_hierarchy(const GeneratorSpec& spec) {
  if (spec.width < 1 || spec.height < 1)
    throw ParameterError("grid_hierarchy needs width >= 1 and height >= 1");
  if (spec.partitions < 0 || spec.segments < 0 || spec.super_segments < 0)
    throw ParameterError("partition and segment counts must be non-negative");
  const bool has_aux = spec.partitions > 0 && spec.segments > 0;
  if (has_aux && spec.segments > std::min(spec.width, spec.height))
    throw ParameterError("segments must not exceed the grid side lengths");
  const int num_segments = has_aux ? spec.partitions * spec.segments : 0;
  if (spec.super_segments > num_segments)
    throw ParameterError("super_segments must not exceed partitions * segments");

  Rng rng(spec.seed);
  const int K = spec.labels;
  const int num_levels = 1 + (has_aux ? 1 : 0) + (spec.super_segments > 0 ? 1 : 0);
  NetworkBuilder builder(K, num_levels);

  const int n = spec.width * spec.height;
  const auto pixel = [&](int r, int c) { return r * spec.width + c; };

  // Overlapping stripe partitions with seeded boundary jitter; partition p
  // slices rows when p is even and columns when odd. band[p][coordinate] is the
  // stripe index along the sliced axis.
  std::vector<std::vector<int>> band(std::max(spec.partitions, 0));
  for (int p = 0; p < spec.partitions && has_aux; ++p) {
    const int axis = (p % 2 == 0) ? spec.height : spec.width;
    std::vector<int> cuts(spec.segments + 1, 0);
    cuts[spec.segments] = axis;
    for (int s = 1; s < spec.segments; ++s) {
      const int jitter = static_cast<int>(rng.below(3)) - 1;
      cuts[s] = s * axis / spec.segments + jitter;
    }
    for (int s = 1; s < spec.segments; ++s)
      cuts[s] = std::clamp(cuts[s], cuts[s - 1] + 1, axis - (spec.segments - s));
    band[p].assign(axis, 0);
    for (int a = 0, s = 0; a < axis; ++a) {
      while (a >= cuts[s + 1]) ++s;
      band[p][a] = s;
    }
  }
  const auto segment_of = [&](int p, int r, int c) {
    return p * spec.segments + band[p][p % 2 == 0 ? r : c];
  };

  // Each segment prefers one label; pixel unaries are noise with partition 0's
  // preferred label discounted.
  std::vector<int> preferred(std::max(num_segments, 1), 0);
  for (int& p : preferred) p = static_cast<int>(rng.below(K));

  builder.set_level_size(0, n);
  for (int r = 0; r < spec.height; ++r) {
    for (int c = 0; c < spec.width; ++c) {
      std::vector<double> u(K);
      for (int l = 0; l < K; ++l) u[l] = rng.dyadic(spec.cost_scale);
      if (has_aux) u[preferred[segment_of(0, r, c)]] *= 0.25;
      builder.set_unary(0, pixel(r, c), std::move(u));
    }
  }
  for (int r = 0; r < spec.height; ++r)
    for (int c = 0; c < spec.width; ++c) {
      if (c + 1 < spec.width)
        builder.add_edge(0, pixel(r, c), pixel(r, c + 1), rng.dyadic(spec.cost_scale));
      if (r + 1 < spec.height)
        builder.add_edge(0, pixel(r, c), pixel(r + 1, c), rng.dyadic(spec.cost_scale));
    }
  if (!has_aux) return builder.build();

  std::vector<AuxPlan> seg_plans(num_segments);
  for (AuxPlan& plan : seg_plans) plan.unary = draw_aux_unary(rng, K, spec.cost_scale);
  for (int p = 0; p < spec.partitions; ++p)
    for (int r = 0; r < spec.height; ++r)
      for (int c = 0; c < spec.width; ++c) {
        AuxPlan& plan = seg_plans[segment_of(p, r, c)];
        plan.children.push_back(pixel(r, c));
        plan.child_weights.push_back(0.25 + rng.dyadic(2.0));
      }
  // Chain edges between consecutive stripes of the same partition.
  std::vector<std::tuple<int, int, double>> seg_edges;
  for (int p = 0; p < spec.partitions; ++p)
    for (int s = 0; s + 1 < spec.segments; ++s) {
      const int u = p * spec.segments + s;
      const double lambda = 0.25 * rng.dyadic(spec.cost_scale);
      seg_edges.emplace_back(u, u + 1, lambda);
      seg_plans[u].incident_lambda += lambda;
      seg_plans[u + 1].incident_lambda += lambda;
    }

  std::vector<AuxPlan> super_plans;
  if (spec.super_segments > 0) {
    super_plans.resize(spec.super_segments);
    for (AuxPlan& plan : super_plans) plan.unary = draw_aux_unary(rng, K, spec.cost_scale);
    for (int s = 0; s < num_segments; ++s) {
      AuxPlan& plan =
          super_plans[static_cast<long long>(s) * spec.super_segments / num_segments];
      plan.children.push_back(s);
      plan.child_weights.push_back(0.25 + rng.dyadic(2.0));
    }
  }

  enforce_consistency(seg_plans, K);
  enforce_consistency(super_plans, K);

  builder.set_level_size(1, num_segments);
  for (int s = 0; s < num_segments; ++s) {
    builder.set_unary(1, s, std::move(seg_plans[s].unary));
    for (std::size_t i = 0; i < seg_plans[s].children.size(); ++i)
      builder.add_link(1, s, seg_plans[s].children[i], seg_plans[s].child_weights[i]);
  }
  for (const auto& [u, v, lambda] : seg_edges) builder.add_edge(1, u, v, lambda);
  if (!super_plans.empty()) {
    builder.set_level_size(2, static_cast<int>(super_plans.size()));
    for (std::size_t s = 0; s < super_plans.size(); ++s) {
      builder.set_unary(2, static_cast<int>(s), std::move(super_plans[s].unary));
      for (std::size_t i = 0; i < super_plans[s].children.size(); ++i)
        builder.add_link(2, static_cast<int>(s), super_plans[s].children[i],
                         super_plans[s].child_weights[i]);
    }
  }
  return builder.build();
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec spec;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const std::size_t eq = token.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError("expected key=value, got '" + token + "'", line_no);
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "kind") {
        if (value != "random_small" && value != "grid_hierarchy")
          throw ParseError("unknown kind '" + value + "'", line_no);
        spec.kind = value;
      } else if (key == "labels") {
        spec.labels = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "seed") {
        spec.seed = static_cast<std::uint64_t>(parse_integer(key, value, line_no));
      } else if (key == "cost_scale") {
        spec.cost_scale = parse_real(key, value, line_no);
      } else if (key == "base_vars") {
        spec.base_vars = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "base_edges") {
        spec.base_edges = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "aux_vars") {
        spec.aux_vars = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "aux_edges") {
        spec.aux_edges = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "aux2_vars") {
        spec.aux2_vars = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "width") {
        spec.width = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "height") {
        spec.height = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "partitions") {
        spec.partitions = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "segments") {
        spec.segments = static_cast<int>(parse_integer(key, value, line_no));
      } else if (key == "super_segments") {
        spec.super_segments = static_cast<int>(parse_integer(key, value, line_no));
      } else {
        throw ParseError("unknown generator key '" + key + "'", line_no);
      }
    }
  }
  return spec;
}

std::string GeneratorSpec::to_text() const {
  std::string out;
  out += "kind=" + kind;
  out += " labels=" + std::to_string(labels);
  out += " seed=" + std::to_string(seed);
  out += " cost_scale=" + format_number(cost_scale);
  if (kind == "random_small") {
    out += " base_vars=" + std::to_string(base_vars);
    out += " base_edges=" + std::to_string(base_edges);
    out += " aux_vars=" + std::to_string(aux_vars);
    out += " aux_edges=" + std::to_string(aux_edges);
    out += " aux2_vars=" + std::to_string(aux2_vars);
  } else {
    out += " width=" + std::to_string(width);
    out += " height=" + std::to_string(height);
    out += " partitions=" + std::to_string(partitions);
    out += " segments=" + std::to_string(segments);
    out += " super_segments=" + std::to_string(super_segments);
  }
  return out;
}

HierarchicalNetwork generate(const GeneratorSpec& spec) {
  if (spec.labels < 1) throw ParameterError("generator needs labels >= 1");
  check_dyadic_scale(spec.cost_scale);
  HierarchicalNetwork net = spec.kind == "grid_hierarchy" ? generate_grid_hierarchy(spec)
                                                          : generate_random_small(spec);
  if (net.num_levels() > 1 && !check_hierarchical_consistency(net).all_pass)
    throw StructureError("generated network violates the consistency margin");
  return net;
}

}  // namespace ahncut
