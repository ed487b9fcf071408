#include "rsg/generate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "rsg/error.hpp"

namespace rsg {

GraphSpec GraphSpec::parse(std::string_view text) {
  GraphSpec spec;
  if (text == "empty") return spec;
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string arg =
      colon == std::string_view::npos ? "" : std::string(text.substr(colon + 1));
  const std::string usage = "graph spec '" + std::string(text) +
                            "' is not one of empty, gnp:<p>, cliques:<k>";
  if (arg.empty()) throw ParseError(usage);
  if (kind == "gnp") {
    std::size_t used = 0;
    try {
      spec.p = std::stod(arg, &used);
    } catch (const std::exception&) {
      throw ParseError(usage);
    }
    if (used != arg.size() || spec.p < 0.0 || spec.p > 1.0) {
      throw ParseError(usage);
    }
    spec.kind = Kind::kGnp;
    return spec;
  }
  if (kind == "cliques") {
    const auto [ptr, ec] =
        std::from_chars(arg.data(), arg.data() + arg.size(), spec.k);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || spec.k < 1) {
      throw ParseError(usage);
    }
    spec.kind = Kind::kCliques;
    return spec;
  }
  throw ParseError(usage);
}

std::string GraphSpec::to_string() const {
  switch (kind) {
    case Kind::kEmpty:
      return "empty";
    case Kind::kGnp: {
      std::ostringstream out;
      out << "gnp:" << p;
      return out.str();
    }
    case Kind::kCliques:
      return "cliques:" + std::to_string(k);
  }
  return "?";
}

SocialGraph make_disjoint_cliques(int players, int k) {
  if (k < 1) throw ContractError("clique size must be at least 1");
  SocialGraph graph(players);
  for (int start = 0; start < players; start += k) {
    const int end = std::min(players, start + k);
    for (int i = start; i < end; ++i) {
      for (int j = i + 1; j < end; ++j) graph.add_edge(i, j);
    }
  }
  return graph;
}

SocialGraph make_graph(int players, const GraphSpec& spec,
                       std::mt19937_64& rng) {
  switch (spec.kind) {
    case GraphSpec::Kind::kEmpty:
      return SocialGraph(players);
    case GraphSpec::Kind::kCliques:
      return make_disjoint_cliques(players, spec.k);
    case GraphSpec::Kind::kGnp: {
      SocialGraph graph(players);
      std::bernoulli_distribution coin(spec.p);
      for (int i = 0; i < players; ++i) {
        for (int j = i + 1; j < players; ++j) {
          if (coin(rng)) graph.add_edge(i, j);
        }
      }
      return graph;
    }
  }
  return SocialGraph(players);
}

RandomGame gen_random(int players, int resources, Cost delay_max,
                      const GraphSpec& graph, std::uint64_t seed) {
  if (players < 1 || resources < 1) {
    throw ParseError("need at least one player and one resource");
  }
  if (delay_max < players) {
    throw ParseError("delay_max (" + std::to_string(delay_max) +
                     ") must be at least the player count (" +
                     std::to_string(players) + ")");
  }
  std::mt19937_64 rng(seed);
  std::vector<Cost> pool(static_cast<std::size_t>(delay_max) + 1);
  std::iota(pool.begin(), pool.end(), Cost{0});
  std::vector<std::vector<Cost>> delays(resources);
  for (auto& table : delays) {
    // std::sample keeps the relative order of the pool, so tables come out
    // sorted.
    std::sample(pool.begin(), pool.end(), std::back_inserter(table), players,
                rng);
  }
  GameInstance instance(players, std::move(delays));
  SocialGraph g = make_graph(players, graph, rng);
  return RandomGame{std::move(instance), std::move(g)};
}

}  // namespace rsg
