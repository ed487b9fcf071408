#include "rsg/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "rsg/error.hpp"

namespace rsg::io {
namespace {

constexpr const char* kInstanceGrammar =
    "'players <n>', 'resources <m>', 'delay <r> <d_r(1)> ... <d_r(n)>' or "
    "'edge <i> <j>'";
constexpr const char* kStateGrammar = "'state <s_0> ... <s_{n-1}>'";
constexpr const char* kMoveGrammar = "'move <k> <p_1>:<r_1> ... <p_k>:<r_k>'";

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const std::size_t hash = raw.find('#'); hash != raw.npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t end = pos;
      while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
      if (end > pos) line.tokens.push_back(raw.substr(pos, end - pos));
      pos = end;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message,
                       const char* grammar) {
  std::string what = "line " + std::to_string(line) + ": " + message;
  if (grammar) what += " (expected " + std::string(grammar) + ")";
  throw ParseError(what);
}

template <typename Int>
Int parse_int(std::string_view token, int line, const char* grammar) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    fail(line, "'" + std::string(token) + "' is not an integer", grammar);
  }
  return value;
}

Deviation parse_move_tokens(const Line& line) {
  const auto& t = line.tokens;
  if (t[0] != "move" || t.size() < 2) {
    fail(line.number, "not a move line", kMoveGrammar);
  }
  const int k = parse_int<int>(t[1], line.number, kMoveGrammar);
  if (k < 1 || static_cast<std::size_t>(k) + 2 != t.size()) {
    fail(line.number, "move declares " + std::string(t[1]) +
                          " members but lists " + std::to_string(t.size() - 2),
         kMoveGrammar);
  }
  std::vector<std::pair<PlayerId, ResourceId>> moves;
  for (std::size_t a = 2; a < t.size(); ++a) {
    const std::size_t colon = t[a].find(':');
    if (colon == std::string_view::npos) {
      fail(line.number, "'" + std::string(t[a]) + "' is not <player>:<resource>",
           kMoveGrammar);
    }
    moves.emplace_back(
        parse_int<PlayerId>(t[a].substr(0, colon), line.number, kMoveGrammar),
        parse_int<ResourceId>(t[a].substr(colon + 1), line.number,
                              kMoveGrammar));
  }
  try {
    return Deviation(std::move(moves));
  } catch (const ContractError& e) {
    fail(line.number, e.what(), kMoveGrammar);
  }
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  int players = -1;
  int resources = -1;
  std::vector<std::vector<Cost>> delays;
  std::vector<int> delay_line;
  std::vector<std::pair<std::pair<PlayerId, PlayerId>, int>> edges;

  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "players") {
      if (t.size() != 2 || players >= 0) {
        fail(line.number, "bad or repeated 'players' line", kInstanceGrammar);
      }
      players = parse_int<int>(t[1], line.number, kInstanceGrammar);
      if (players < 1) fail(line.number, "need at least one player", nullptr);
    } else if (t[0] == "resources") {
      if (t.size() != 2 || resources >= 0) {
        fail(line.number, "bad or repeated 'resources' line", kInstanceGrammar);
      }
      resources = parse_int<int>(t[1], line.number, kInstanceGrammar);
      if (resources < 1) fail(line.number, "need at least one resource", nullptr);
      delays.assign(resources, {});
      delay_line.assign(resources, 0);
    } else if (t[0] == "delay") {
      if (players < 0 || resources < 0) {
        fail(line.number, "'delay' before 'players' and 'resources'",
             kInstanceGrammar);
      }
      if (t.size() != static_cast<std::size_t>(players) + 2) {
        fail(line.number,
             "delay line needs exactly " + std::to_string(players) + " values",
             kInstanceGrammar);
      }
      const int r = parse_int<int>(t[1], line.number, kInstanceGrammar);
      if (r < 0 || r >= resources) {
        fail(line.number, "resource index " + std::to_string(r) + " out of range",
             nullptr);
      }
      if (delay_line[r] != 0) {
        fail(line.number, "resource " + std::to_string(r) + " has two delay lines",
             nullptr);
      }
      delay_line[r] = line.number;
      auto& table = delays[r];
      for (std::size_t a = 2; a < t.size(); ++a) {
        table.push_back(parse_int<Cost>(t[a], line.number, kInstanceGrammar));
        const std::size_t x = table.size();
        if (table.back() < 0) {
          fail(line.number, "resource " + std::to_string(r) +
                                ": negative delay at load " + std::to_string(x),
               nullptr);
        }
        if (x > 1 && table[x - 1] <= table[x - 2]) {
          fail(line.number, "resource " + std::to_string(r) +
                                ": delays not strictly increasing at load " +
                                std::to_string(x),
               nullptr);
        }
      }
    } else if (t[0] == "edge") {
      if (t.size() != 3) fail(line.number, "bad 'edge' line", kInstanceGrammar);
      edges.push_back({{parse_int<PlayerId>(t[1], line.number, kInstanceGrammar),
                        parse_int<PlayerId>(t[2], line.number, kInstanceGrammar)},
                       line.number});
    } else {
      fail(line.number, "unknown directive '" + std::string(t[0]) + "'",
           kInstanceGrammar);
    }
  }
  if (players < 0 || resources < 0) {
    throw ParseError("instance is missing 'players' or 'resources'");
  }
  for (int r = 0; r < resources; ++r) {
    if (delay_line[r] == 0) {
      throw ParseError("resource " + std::to_string(r) + " has no delay line");
    }
  }
  InstanceFile file{GameInstance(players, std::move(delays)),
                    SocialGraph(players)};
  for (const auto& [e, number] : edges) {
    try {
      file.graph.add_edge(e.first, e.second);
    } catch (const ContractError& err) {
      fail(number, err.what(), nullptr);
    }
  }
  return file;
}

std::string format_instance(const GameInstance& instance,
                            const SocialGraph& graph) {
  std::ostringstream out;
  out << "players " << instance.players() << "\n";
  out << "resources " << instance.resources() << "\n";
  for (ResourceId r = 0; r < instance.resources(); ++r) {
    out << "delay " << r;
    for (Cost d : instance.table(r)) out << ' ' << d;
    out << "\n";
  }
  for (const auto& [i, j] : graph.edges()) out << "edge " << i << ' ' << j << "\n";
  return out.str();
}

State parse_state(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "state") {
    throw ParseError("state file must contain exactly one line (expected " +
                     std::string(kStateGrammar) + ")");
  }
  State state;
  const Line& line = lines[0];
  for (std::size_t a = 1; a < line.tokens.size(); ++a) {
    state.assignment.push_back(
        parse_int<ResourceId>(line.tokens[a], line.number, kStateGrammar));
  }
  if (state.assignment.empty()) fail(line.number, "empty state", kStateGrammar);
  return state;
}

State parse_state(std::string_view text, const GameInstance& instance) {
  State state = parse_state(text);
  try {
    validate_state(instance, state);
  } catch (const ContractError& e) {
    throw ParseError(std::string("state does not fit the instance: ") + e.what());
  }
  return state;
}

std::string format_state(const State& state) {
  std::string out = "state";
  for (ResourceId r : state.assignment) out += " " + std::to_string(r);
  return out;
}

Deviation parse_move(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) {
    throw ParseError("expected a single " + std::string(kMoveGrammar));
  }
  return parse_move_tokens(lines[0]);
}

std::string format_move(const Deviation& dev) {
  std::string out = "move " + std::to_string(dev.coalition.size());
  for (std::size_t a = 0; a < dev.coalition.size(); ++a) {
    out += " " + std::to_string(dev.coalition[a]) + ":" +
           std::to_string(dev.targets[a]);
  }
  return out;
}

std::vector<Deviation> parse_schedule(std::string_view text) {
  std::vector<Deviation> out;
  for (const Line& line : tokenize(text)) out.push_back(parse_move_tokens(line));
  return out;
}

std::string format_schedule(const std::vector<Deviation>& schedule) {
  std::string out;
  for (const Deviation& d : schedule) out += format_move(d) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << contents;
  if (!out) throw ParseError("failed writing " + path);
}

}  // namespace rsg::io
