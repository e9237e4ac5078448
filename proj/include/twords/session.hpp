#pragma once

// Command interpreter behind the twords CLI. One Session holds a base space
// and named bindings; `run` executes one command and returns its output.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twords/error.hpp"
#include "twords/oracle.hpp"
#include "twords/ordinal.hpp"
#include "twords/product.hpp"
#include "twords/space.hpp"
#include "twords/syntax.hpp"
#include "twords/word.hpp"

namespace twords {

enum class OutputFormat { pretty, machine };

struct SessionOptions {
  std::size_t oracle_depth = 6;
  OutputFormat format = OutputFormat::pretty;
};

/// Process exit status for a failed command.
enum class ExitCode : int { ok = 0, usage = 1, parse = 2, semantic = 3 };

inline constexpr std::string_view session_usage =
    "commands:\n"
    "  reduce EXPR              canonical form of a product (or union) expression\n"
    "  includes LEFT RIGHT      decide LEFT ⊆ RIGHT, with a finite witness when one is found\n"
    "  intersect LEFT RIGHT     intersection as an antichain of reduced products\n"
    "  rank EXPR                ordinal rank of a reduced product\n"
    "  closure WORD             closure of a symbolic word\n"
    "  leq WORD WORD            specialization preorder on symbolic words\n"
    "  member WORD EXPR         decide whether a word lies in a closed set\n"
    "  alpha-normalize EXPR A   intersection with X^{<A} as A-products\n"
    "  let (product|word|ordinal) NAME = EXPR\n"
    "                           bind a value, referenced later as $NAME\n"
    "  help\n";

/// Splits a command line on whitespace; double quotes group.
inline std::vector<std::string> split_command_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false, have = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (c == ' ' || c == '\t' || c == '\r' || c == '\n')) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (quoted) throw parse_error("unterminated quote", line.size());
  if (have) out.push_back(cur);
  return out;
}

class Session {
 public:
  Session(SpacePtr space, SessionOptions options = {}) : space_(std::move(space)), options_(options) {}

  const SpacePtr& space() const { return space_; }
  const SessionOptions& options() const { return options_; }

  /// Executes one command. Output lines are newline-terminated.
  std::string run(const std::vector<std::string>& args) {
    if (args.empty()) return {};
    const std::string& cmd = args[0];
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    if (cmd == "help") return std::string(session_usage);
    if (cmd == "reduce") return show(union_arg(join(rest, 1, "reduce EXPR")));
    if (cmd == "includes") {
      need(rest, 2, "includes LEFT RIGHT");
      return includes(union_arg(rest[0]), union_arg(rest[1]));
    }
    if (cmd == "intersect") {
      need(rest, 2, "intersect LEFT RIGHT");
      return show(union_intersect(union_arg(rest[0]), union_arg(rest[1])));
    }
    if (cmd == "rank") return line(to_string(product_rank(single(union_arg(join(rest, 1, "rank EXPR"))))));
    if (cmd == "closure") return line(to_string(word_closure(word_arg(join(rest, 1, "closure WORD")))));
    if (cmd == "leq") {
      need(rest, 2, "leq WORD WORD");
      return boolean(word_leq(word_arg(rest[0]), word_arg(rest[1])));
    }
    if (cmd == "member") {
      need(rest, 2, "member WORD EXPR");
      return boolean(word_member(word_arg(rest[0]), union_arg(rest[1])));
    }
    if (cmd == "alpha-normalize" || cmd == "alpha") {
      if (rest.size() < 2) throw parse_error("usage: alpha-normalize EXPR A", 0);
      const std::vector<std::string> expr(rest.begin(), rest.end() - 1);
      const Ordinal a = ordinal_arg(rest.back());
      auto alpha = Bound::from_ordinal(a);
      if (!alpha) throw invalid_argument(to_string(a) + " is not a bound");
      return show(alpha_normalize(union_arg(join(expr, 1, "alpha-normalize EXPR A")), *alpha));
    }
    if (cmd == "let") return let(rest);
    throw parse_error("unknown command '" + cmd + "'", 0);
  }

 private:
  using Value = std::variant<ProductUnion, SymbolicWord, Ordinal>;

  static void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
    if (args.size() != n) throw parse_error(std::string("usage: ") + usage, 0);
  }

  static std::string join(const std::vector<std::string>& args, std::size_t min, const char* usage) {
    if (args.size() < min) throw parse_error(std::string("usage: ") + usage, 0);
    std::string out;
    for (const auto& a : args) {
      if (!out.empty()) out += ' ';
      out += a;
    }
    return out;
  }

  static std::string line(const std::string& s) { return s + "\n"; }

  static std::string boolean(bool b) { return b ? "true\n" : "false\n"; }

  static const Product& single(const ProductUnion& u) {
    if (u.size() != 1) throw invalid_argument("expression does not denote a single product");
    return u.members().front();
  }

  template <typename T>
  const T* lookup(const std::string& arg, const char* kind) const {
    if (arg.empty() || arg[0] != '$') return nullptr;
    auto it = bindings_.find(arg.substr(1));
    if (it == bindings_.end()) throw invalid_argument("unbound name '" + arg.substr(1) + "'");
    const T* v = std::get_if<T>(&it->second);
    if (!v) throw invalid_argument("'" + arg.substr(1) + "' is not a " + kind);
    return v;
  }

  ProductUnion union_arg(const std::string& text) const {
    if (const auto* v = lookup<ProductUnion>(text, "product")) return *v;
    return parse_union(text, space_);
  }
  SymbolicWord word_arg(const std::string& text) const {
    if (const auto* v = lookup<SymbolicWord>(text, "word")) return *v;
    return parse_word(text, space_);
  }
  Ordinal ordinal_arg(const std::string& text) const {
    if (const auto* v = lookup<Ordinal>(text, "ordinal")) return *v;
    return parse_ordinal(text);
  }

  std::string show(const ProductUnion& u) const {
    if (options_.format == OutputFormat::pretty) return line(to_string(u));
    std::string out = "union " + std::to_string(u.size()) + "\n";
    for (const auto& p : u.members()) out += line(to_string(p));
    return out;
  }

  std::string includes(const ProductUnion& left, const ProductUnion& right) const {
    if (union_includes(left, right)) return "true\n";
    if (space_->is_finite()) {
      for (const auto& p : left.members()) {
        auto w = oracle::find_inclusion_counterexample(*space_, p, right, options_.oracle_depth);
        if (!w) continue;
        const std::string text = to_string(*space_, *w);
        if (options_.format == OutputFormat::pretty) return "false (witness: " + text + ")\n";
        return "false\nwitness " + text + "\n";
      }
    }
    return "false\n";
  }

  std::string let(const std::vector<std::string>& args) {
    if (args.size() < 4 || args[2] != "=") throw parse_error("usage: let (product|word|ordinal) NAME = EXPR", 0);
    const std::string& kind = args[0];
    const std::string& name = args[1];
    Cursor check(name);
    if (check.identifier() != name) throw parse_error("invalid binding name '" + name + "'", 0);
    const std::vector<std::string> expr(args.begin() + 3, args.end());
    const std::string text = join(expr, 1, "let KIND NAME = EXPR");
    std::string shown;
    if (kind == "product") {
      auto u = union_arg(text);
      shown = to_string(u);
      bindings_.insert_or_assign(name, std::move(u));
    } else if (kind == "word") {
      auto w = word_arg(text);
      shown = to_string(w);
      bindings_.insert_or_assign(name, std::move(w));
    } else if (kind == "ordinal") {
      auto o = ordinal_arg(text);
      shown = to_string(o);
      bindings_.insert_or_assign(name, std::move(o));
    } else {
      throw parse_error("unknown binding kind '" + kind + "'", 0);
    }
    return name + " = " + shown + "\n";
  }

  SpacePtr space_;
  SessionOptions options_;
  std::map<std::string, Value> bindings_;
};

}  // namespace twords
