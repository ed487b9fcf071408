#ifndef RSG_SOCIAL_HPP_
#define RSG_SOCIAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rsg/game.hpp"

namespace rsg {

// Sorted, duplicate-free list of player ids.
using PlayerSet = std::vector<PlayerId>;

// Undirected, unweighted social network over the players.
class SocialGraph {
 public:
  SocialGraph() = default;
  explicit SocialGraph(int players);

  int players() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  // Adds {i, j}. Self-loops and out-of-range endpoints are ContractErrors;
  // a repeated edge is ignored.
  void add_edge(PlayerId i, PlayerId j);

  bool adjacent(PlayerId i, PlayerId j) const {
    return matrix_[static_cast<std::size_t>(i) * adjacency_.size() + j] != 0;
  }

  // Sorted neighbor list of i.
  std::span<const PlayerId> neighbors(PlayerId i) const {
    return adjacency_[i];
  }
  int degree(PlayerId i) const {
    return static_cast<int>(adjacency_[i].size());
  }

  // All edges as (i, j) with i < j, sorted.
  std::vector<std::pair<PlayerId, PlayerId>> edges() const;

  bool is_clique(std::span<const PlayerId> players) const;

  friend bool operator==(const SocialGraph& a, const SocialGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<PlayerId>> adjacency_;
  std::vector<char> matrix_;
  std::size_t edge_count_ = 0;
};

// N(C) = { j : some i in C has {i, j} in E }. Members of C adjacent to other
// members are included.
PlayerSet neighborhood(const SocialGraph& graph,
                       std::span<const PlayerId> coalition);

// |N_{i,r}(s)|: neighbors of `player` currently on `resource`.
int same_resource_neighbors(const SocialGraph& graph, const State& state,
                            PlayerId player, ResourceId resource);

// |N_i(s)| = |N_{i,s_i}(s)|.
int same_resource_neighbors(const SocialGraph& graph, const State& state,
                            PlayerId player);

struct CliqueSet {
  // Ordered by size, then lexicographically.
  std::vector<PlayerSet> cliques;

  std::size_t size() const { return cliques.size(); }
};

inline constexpr std::size_t kDefaultCliqueCap = 20000;

// Maximal cliques via Bron-Kerbosch with pivoting, each sorted; the list is
// sorted lexicographically.
std::vector<PlayerSet> maximal_cliques(const SocialGraph& graph);

// Every clique of size 1..max_size (not only maximal ones), each exactly
// once. Throws BudgetExceeded once more than `cap` cliques are produced.
CliqueSet enumerate_cliques(const SocialGraph& graph, int max_size,
                            std::size_t cap = kDefaultCliqueCap);

// If the graph is a disjoint union of cliques, returns the classes (sorted
// by smallest member). Isolated vertices form singleton classes.
std::optional<std::vector<PlayerSet>> partition_classes(
    const SocialGraph& graph);

}  // namespace rsg

#endif  // RSG_SOCIAL_HPP_
