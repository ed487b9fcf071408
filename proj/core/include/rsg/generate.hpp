#ifndef RSG_GENERATE_HPP_
#define RSG_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "rsg/game.hpp"
#include "rsg/social.hpp"

namespace rsg {

// Seeded instance and graph generators. Everything is a function of the
// seed and the parameters; std::mt19937_64 drives all draws.

inline constexpr std::uint64_t kDefaultSeed = 20100716;

struct GraphSpec {
  enum class Kind { kEmpty, kGnp, kCliques };
  Kind kind = Kind::kEmpty;
  double p = 0.0;  // kGnp
  int k = 1;       // kCliques

  // "empty", "gnp:<p>", "cliques:<k>"; ParseError otherwise.
  static GraphSpec parse(std::string_view text);
  std::string to_string() const;
};

SocialGraph make_graph(int players, const GraphSpec& spec,
                       std::mt19937_64& rng);
// Classes {0..k-1}, {k..2k-1}, ...; the last one may be smaller.
SocialGraph make_disjoint_cliques(int players, int k);

struct RandomGame {
  GameInstance instance;
  SocialGraph graph;
};

// Each delay table is a sorted sample of n distinct integers from
// [0, delay_max]. Requires n >= 1, m >= 1, delay_max >= n (ParseError
// otherwise, as these come from user parameters).
RandomGame gen_random(int players, int resources, Cost delay_max,
                      const GraphSpec& graph, std::uint64_t seed);

}  // namespace rsg

#endif  // RSG_GENERATE_HPP_
