#include "rsg/social.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rsg/error.hpp"

namespace rsg {
namespace {

bool size_then_lex(const PlayerSet& a, const PlayerSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<PlayerId> intersect(const std::vector<PlayerId>& a,
                                std::span<const PlayerId> b) {
  std::vector<PlayerId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

void bron_kerbosch(const SocialGraph& g, std::vector<PlayerId>& r,
                   std::vector<PlayerId> p, std::vector<PlayerId> x,
                   std::vector<PlayerSet>& out) {
  if (p.empty()) {
    if (x.empty()) {
      PlayerSet clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  // Pivot on the vertex of P u X with the most neighbors in P.
  PlayerId pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (PlayerId u : *set) {
      const std::size_t c = intersect(p, g.neighbors(u)).size();
      if (pivot < 0 || c > best) {
        pivot = u;
        best = c;
      }
    }
  }
  std::vector<PlayerId> candidates;
  for (PlayerId v : p) {
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  }
  for (PlayerId v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect(p, g.neighbors(v)),
                  intersect(x, g.neighbors(v)), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

SocialGraph::SocialGraph(int players)
    : adjacency_(players),
      matrix_(static_cast<std::size_t>(players) * players, 0) {
  if (players < 0) throw ContractError("negative player count");
}

void SocialGraph::add_edge(PlayerId i, PlayerId j) {
  const int n = players();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw ContractError("edge {" + std::to_string(i) + "," +
                        std::to_string(j) + "} has an endpoint outside [0, " +
                        std::to_string(n) + ")");
  }
  if (i == j) {
    throw ContractError("self-loop on player " + std::to_string(i));
  }
  if (adjacent(i, j)) return;
  matrix_[static_cast<std::size_t>(i) * n + j] = 1;
  matrix_[static_cast<std::size_t>(j) * n + i] = 1;
  auto& ai = adjacency_[i];
  ai.insert(std::upper_bound(ai.begin(), ai.end(), j), j);
  auto& aj = adjacency_[j];
  aj.insert(std::upper_bound(aj.begin(), aj.end(), i), i);
  ++edge_count_;
}

std::vector<std::pair<PlayerId, PlayerId>> SocialGraph::edges() const {
  std::vector<std::pair<PlayerId, PlayerId>> out;
  out.reserve(edge_count_);
  for (PlayerId i = 0; i < players(); ++i) {
    for (PlayerId j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

bool SocialGraph::is_clique(std::span<const PlayerId> players) const {
  for (std::size_t a = 0; a < players.size(); ++a) {
    for (std::size_t b = a + 1; b < players.size(); ++b) {
      if (!adjacent(players[a], players[b])) return false;
    }
  }
  return true;
}

PlayerSet neighborhood(const SocialGraph& graph,
                       std::span<const PlayerId> coalition) {
  std::vector<char> mark(graph.players(), 0);
  for (PlayerId i : coalition) {
    for (PlayerId j : graph.neighbors(i)) mark[j] = 1;
  }
  PlayerSet out;
  for (PlayerId j = 0; j < graph.players(); ++j) {
    if (mark[j]) out.push_back(j);
  }
  return out;
}

int same_resource_neighbors(const SocialGraph& graph, const State& state,
                            PlayerId player, ResourceId resource) {
  int count = 0;
  for (PlayerId j : graph.neighbors(player)) {
    if (state[j] == resource) ++count;
  }
  return count;
}

int same_resource_neighbors(const SocialGraph& graph, const State& state,
                            PlayerId player) {
  return same_resource_neighbors(graph, state, player, state[player]);
}

std::vector<PlayerSet> maximal_cliques(const SocialGraph& graph) {
  std::vector<PlayerSet> out;
  std::vector<PlayerId> r;
  std::vector<PlayerId> p(graph.players());
  for (PlayerId i = 0; i < graph.players(); ++i) p[i] = i;
  bron_kerbosch(graph, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

CliqueSet enumerate_cliques(const SocialGraph& graph, int max_size,
                            std::size_t cap) {
  if (max_size < 1) throw ContractError("max_size must be at least 1");
  std::set<PlayerSet> seen;
  auto admit = [&](PlayerSet s) {
    if (seen.insert(std::move(s)).second && seen.size() > cap) {
      throw BudgetExceeded("clique enumeration exceeded the cap of " +
                               std::to_string(cap),
                           seen.size());
    }
  };
  for (const PlayerSet& maximal : maximal_cliques(graph)) {
    const int size = static_cast<int>(maximal.size());
    // Visit subsets of `maximal` with at most max_size members by
    // extending index combinations in increasing order.
    PlayerSet current;
    auto extend = [&](auto&& self, int start) -> void {
      for (int k = start; k < size; ++k) {
        current.push_back(maximal[k]);
        admit(current);
        if (static_cast<int>(current.size()) < max_size) self(self, k + 1);
        current.pop_back();
      }
    };
    extend(extend, 0);
  }
  CliqueSet result;
  result.cliques.assign(seen.begin(), seen.end());
  std::stable_sort(result.cliques.begin(), result.cliques.end(),
                   size_then_lex);
  return result;
}

std::optional<std::vector<PlayerSet>> partition_classes(
    const SocialGraph& graph) {
  const int n = graph.players();
  std::vector<char> done(n, 0);
  std::vector<PlayerSet> classes;
  for (PlayerId start = 0; start < n; ++start) {
    if (done[start]) continue;
    PlayerSet component{start};
    done[start] = 1;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (PlayerId j : graph.neighbors(component[head])) {
        if (!done[j]) {
          done[j] = 1;
          component.push_back(j);
        }
      }
    }
    std::sort(component.begin(), component.end());
    for (PlayerId i : component) {
      if (graph.degree(i) + 1 != static_cast<int>(component.size())) {
        return std::nullopt;
      }
    }
    classes.push_back(std::move(component));
  }
  return classes;
}

}  // namespace rsg
