#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qborel/decomp.hpp"
#include "qborel/resolution.hpp"

namespace qborel {

/// Variable declarations of a session; variables are ordered as declared
/// (x_1 first) and names are unique.
struct Ring {
  std::vector<std::string> names;

  int nvars() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;
};

// Parses a monomial word against the declared names: juxtaposed powers with
// optional '^' and '*', longest declared name wins ("a2b", "a^2*b").
Monomial parse_monomial(const Ring& ring, const std::string& text);
Monomial parse_monomial_at(const Ring& ring, const std::string& text, int line,
                           int col);

struct SessionIdeal {
  MonomialIdeal ideal;
  std::string poset_name;           // empty: the antichain
  std::optional<Monomial> q_generator;  // set when declared as Q[P](m)
  std::vector<Monomial> declared_gens;
};

struct Command {
  std::string name;
  std::vector<std::string> args;
  int line = 0, col = 0;
};

struct Session {
  Ring ring;
  std::vector<std::string> poset_order;
  std::map<std::string, Poset> posets;
  std::vector<std::string> ideal_order;
  std::map<std::string, SessionIdeal> ideals;
  std::vector<Command> commands;
};

Session parse_session(const std::string& text);

struct ExecOptions {
  Exponent degree_bound = -1;  // <0: per-command defaults
  std::size_t node_limit = kDefaultClosureLimit;
};

struct CommandResult {
  std::string command;
  std::string text;  // human rendering, one block
  std::string json;  // one serialized JSON object
};

std::vector<CommandResult> execute(const Session& session,
                                   const ExecOptions& opts = {});

enum class RenderFormat { Text, Json };

std::string render(const std::vector<CommandResult>& results,
                   RenderFormat format);

}  // namespace qborel
