#ifndef RSG_IO_HPP_
#define RSG_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "rsg/game.hpp"
#include "rsg/moves.hpp"
#include "rsg/social.hpp"

namespace rsg::io {

// Line-oriented text formats. '#' starts a comment; blank lines are
// ignored. All indices are 0-based.
//
//   players <n>
//   resources <m>
//   delay <r> <d_r(1)> ... <d_r(n)>      (one line per resource)
//   edge <i> <j>                         (optional, any number)
//
//   state <s_0> ... <s_{n-1}>
//
//   move <k> <p_1>:<r_1> ... <p_k>:<r_k>
//
// Parse failures throw ParseError naming the line and the expected grammar;
// invalid delay tables throw ParseError naming the resource.

struct InstanceFile {
  GameInstance instance;
  SocialGraph graph;
};

InstanceFile parse_instance(std::string_view text);
// Canonical form: header, delay lines by resource, edges sorted with i < j.
std::string format_instance(const GameInstance& instance,
                            const SocialGraph& graph);

// If `instance` is given the state is range-checked against it.
State parse_state(std::string_view text);
State parse_state(std::string_view text, const GameInstance& instance);
std::string format_state(const State& state);  // no trailing newline

Deviation parse_move(std::string_view line);
std::string format_move(const Deviation& dev);  // no trailing newline

std::vector<Deviation> parse_schedule(std::string_view text);
std::string format_schedule(const std::vector<Deviation>& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace rsg::io

#endif  // RSG_IO_HPP_
