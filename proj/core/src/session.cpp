#include "qborel/session.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>

namespace qborel {

using Json = nlohmann::ordered_json;

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind = End;
  std::string text;
  long value = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    cur_ = Token{};
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word += text_[pos_++];
        ++col_;
      }
      cur_.kind = Token::Ident;
      cur_.text = word;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      std::string word;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        word += text_[pos_++];
        ++col_;
      }
      cur_.kind = Token::Number;
      cur_.text = word;
      cur_.value = v;
      return;
    }
    cur_.kind = Token::Symbol;
    cur_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(msg + (t.kind == Token::End
                              ? std::string(" (at end of input)")
                              : " near '" + t.text + "'"),
                   t.line, t.col);
}

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Session run() {
    Session s;
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Token::End) break;
      if (t.kind != Token::Ident) fail(t, "expected a declaration or command");
      if (t.text == "vars")
        parse_vars(s);
      else if (t.text == "poset")
        parse_poset(s);
      else if (t.text == "ideal")
        parse_ideal(s);
      else if (t.text == "cmd")
        parse_cmd(s);
      else
        fail(t, "unknown declaration '" + t.text + "'");
    }
    return s;
  }

private:
  Token expect_symbol(const std::string& sym) {
    Token t = lex_.next();
    if (t.kind != Token::Symbol || t.text != sym)
      fail(t, "expected '" + sym + "'");
    return t;
  }

  Token expect_ident() {
    Token t = lex_.next();
    if (t.kind != Token::Ident) fail(t, "expected a name");
    return t;
  }

  void check_fresh(const Session& s, const Token& t) {
    if (s.posets.count(t.text) || s.ideals.count(t.text) ||
        s.ring.index_of(t.text) >= 0)
      fail(t, "name '" + t.text + "' already declared");
  }

  void parse_vars(Session& s) {
    lex_.next();  // vars
    if (!s.ring.names.empty())
      fail(lex_.peek(), "variables already declared");
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Token::Symbol && t.text == ";") break;
      if (t.kind != Token::Ident) fail(t, "expected a variable name");
      lex_.next();
      if (s.ring.index_of(t.text) >= 0)
        fail(t, "duplicate variable '" + t.text + "'");
      s.ring.names.push_back(t.text);
    }
    expect_symbol(";");
    if (s.ring.names.empty())
      throw ParseError("empty variable declaration", 1, 1);
  }

  void parse_poset(Session& s) {
    lex_.next();  // poset
    Token name = expect_ident();
    check_fresh(s, name);
    expect_symbol("{");
    std::vector<std::pair<int, int>> covers;
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Token::Symbol && t.text == "}") break;
      if (t.kind == Token::Symbol && t.text == ";") {
        lex_.next();
        continue;
      }
      Token a = expect_ident();
      int ia = s.ring.index_of(a.text);
      if (ia < 0) fail(a, "undeclared variable '" + a.text + "'");
      expect_symbol("<");
      Token b = expect_ident();
      int ib = s.ring.index_of(b.text);
      if (ib < 0) fail(b, "undeclared variable '" + b.text + "'");
      if (ia >= ib)
        fail(a, "natural labeling violated: '" + a.text + " < " + b.text +
                    "' needs the left variable to come first in vars");
      covers.emplace_back(ia, ib);
    }
    expect_symbol("}");
    s.posets.emplace(name.text, Poset::build(s.ring.nvars(), covers));
    s.poset_order.push_back(name.text);
  }

  Monomial parse_monomial_tokens(const Session& s) {
    const int n = s.ring.nvars();
    std::vector<Exponent> e(n, 0);
    bool any = false;
    int last_var = -1;
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Token::Symbol &&
          (t.text == "," || t.text == ")" || t.text == ";"))
        break;
      if (t.kind == Token::Symbol && t.text == "*") {
        lex_.next();
        continue;
      }
      if (t.kind == Token::Symbol && t.text == "^") {
        lex_.next();
        Token num = lex_.next();
        if (num.kind != Token::Number) fail(num, "expected an exponent");
        if (last_var < 0) fail(num, "exponent without a variable");
        e[last_var] += num.value - 1;  // the factor already added one
        last_var = -1;
        continue;
      }
      if (t.kind == Token::Number) {
        lex_.next();
        if (t.value == 1 && !any) {
          any = true;  // the unit monomial
          continue;
        }
        if (last_var < 0) fail(t, "unexpected number in monomial");
        e[last_var] += t.value - 1;
        last_var = -1;
        continue;
      }
      if (t.kind != Token::Ident) fail(t, "expected a monomial factor");
      lex_.next();
      // split the word against declared names, longest match first
      std::size_t pos = 0;
      while (pos < t.text.size()) {
        int best = -1;
        std::size_t best_len = 0;
        for (int v = 0; v < n; ++v) {
          const std::string& nm = s.ring.names[v];
          if (nm.size() > best_len && t.text.compare(pos, nm.size(), nm) == 0) {
            best = v;
            best_len = nm.size();
          }
        }
        if (best < 0)
          fail(t, "cannot read '" + t.text.substr(pos) + "' as variables");
        pos += best_len;
        Exponent k = 0;
        while (pos < t.text.size() &&
               std::isdigit(static_cast<unsigned char>(t.text[pos]))) {
          k = k * 10 + (t.text[pos] - '0');
          ++pos;
        }
        e[best] += (k > 0 ? k : 1);
        last_var = best;
        any = true;
      }
    }
    if (!any) fail(lex_.peek(), "empty monomial");
    return Monomial(std::move(e));
  }

  std::vector<Monomial> parse_monomial_list(const Session& s) {
    std::vector<Monomial> gens;
    expect_symbol("(");
    if (lex_.peek().kind == Token::Symbol && lex_.peek().text == ")") {
      lex_.next();
      return gens;
    }
    for (;;) {
      gens.push_back(parse_monomial_tokens(s));
      Token t = lex_.next();
      if (t.kind == Token::Symbol && t.text == ")") break;
      if (!(t.kind == Token::Symbol && t.text == ","))
        fail(t, "expected ',' or ')' in generator list");
    }
    return gens;
  }

  void parse_ideal(Session& s) {
    lex_.next();  // ideal
    Token name = expect_ident();
    check_fresh(s, name);
    expect_symbol("=");
    SessionIdeal si;
    Token t = lex_.peek();
    if (t.kind == Token::Ident && t.text == "Q") {
      lex_.next();
      expect_symbol("[");
      Token pname = expect_ident();
      if (!s.posets.count(pname.text))
        fail(pname, "undeclared poset '" + pname.text + "'");
      expect_symbol("]");
      si.poset_name = pname.text;
      si.declared_gens = parse_monomial_list(s);
      si.ideal = q_closure(s.posets.at(pname.text), si.declared_gens);
      if (si.declared_gens.size() == 1) si.q_generator = si.declared_gens[0];
    } else {
      si.declared_gens = parse_monomial_list(s);
      si.ideal = MonomialIdeal::make(s.ring.nvars(), si.declared_gens);
    }
    expect_symbol(";");
    s.ideals.emplace(name.text, std::move(si));
    s.ideal_order.push_back(name.text);
  }

  void parse_cmd(Session& s) {
    Token kw = lex_.next();  // cmd
    Command c;
    c.line = kw.line;
    c.col = kw.col;
    Token name = expect_ident();
    c.name = name.text;
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Token::Symbol && t.text == ";") break;
      if (t.kind == Token::End) fail(t, "unterminated command");
      t = lex_.next();
      if (t.kind == Token::Symbol && t.text == "=") {
        // glue "d = N" style arguments back together
        if (c.args.empty()) fail(t, "unexpected '='");
        Token num = lex_.next();
        if (num.kind != Token::Number) fail(num, "expected a number after '='");
        c.args.back() += "=" + num.text;
        continue;
      }
      c.args.push_back(t.text);
    }
    expect_symbol(";");
    // every referenced name must be declared
    for (const std::string& a : c.args) {
      if (a == "last" || a.find('=') != std::string::npos) continue;
      bool numeric = !a.empty() && std::isdigit(static_cast<unsigned char>(a[0]));
      if (numeric) continue;
      static const char* kWords[] = {"ek", "y", "taylor", "lq", "truncated",
                                     "d2", "exactness"};
      bool keyword = false;
      for (const char* w : kWords) keyword = keyword || a == w;
      if (keyword) continue;
      if (!s.posets.count(a) && !s.ideals.count(a))
        throw ParseError("undeclared name '" + a + "'", c.line, c.col);
    }
    s.commands.push_back(std::move(c));
  }

  Lexer lex_;
};

}  // namespace

Monomial parse_monomial_at(const Ring& ring, const std::string& text, int line,
                           int col) {
  const int n = ring.nvars();
  std::vector<Exponent> e(n, 0);
  std::size_t pos = 0;
  bool any = false;
  int last_var = -1;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '*'))
      ++pos;
  };
  skip_ws();
  if (text.substr(pos, 1) == "1" &&
      (pos + 1 >= text.size() ||
       !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
    return Monomial::unit(n);
  }
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '^') {
      ++pos;
      Exponent k = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        k = k * 10 + (text[pos++] - '0');
      if (last_var < 0 || k <= 0)
        throw ParseError("bad exponent in monomial '" + text + "'", line, col);
      e[last_var] += k - 1;
      last_var = -1;
      continue;
    }
    int best = -1;
    std::size_t best_len = 0;
    for (int v = 0; v < n; ++v) {
      const std::string& nm = ring.names[v];
      if (nm.size() > best_len && text.compare(pos, nm.size(), nm) == 0) {
        best = v;
        best_len = nm.size();
      }
    }
    if (best < 0)
      throw ParseError("cannot read monomial '" + text + "'", line, col);
    pos += best_len;
    Exponent k = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      k = k * 10 + (text[pos++] - '0');
    e[best] += (k > 0 ? k : 1);
    last_var = best;
    any = true;
  }
  if (!any)
    throw ParseError("empty monomial '" + text + "'", line, col);
  return Monomial(std::move(e));
}

Monomial parse_monomial(const Ring& ring, const std::string& text) {
  return parse_monomial_at(ring, text, 1, 1);
}

Session parse_session(const std::string& text) {
  Parser p(text);
  return p.run();
}

namespace {

std::string prime_text(const MonomialPrime& p,
                       const std::vector<std::string>& names) {
  return p.str(names);
}

Json prime_json(const MonomialPrime& p,
                const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (int v : p.vars()) arr.push_back(names[v]);
  return arr;
}

Json factor_list_json(const std::map<MonomialPrime, Exponent>& factors,
                      const std::vector<std::string>& names) {
  Json arr = Json::array();
  for (const auto& [p, e] : factors) {
    Json item;
    item["prime"] = prime_json(p, names);
    item["exp"] = static_cast<long>(e);
    arr.push_back(item);
  }
  return arr;
}

std::string factor_list_text(const std::map<MonomialPrime, Exponent>& factors,
                             const std::vector<std::string>& names,
                             const std::string& sep) {
  std::string s;
  for (const auto& [p, e] : factors) {
    if (!s.empty()) s += sep;
    s += prime_text(p, names);
    if (e != 1) s += "^" + std::to_string(e);
  }
  if (s.empty()) s = "(1)";
  return s;
}

// Full complex serialization: symbols per level plus the differentials as
// sparse triples (column, row, coefficient * monomial).
Json complex_json(const FreeComplex& f, const std::vector<std::string>& names) {
  Json doc;
  Json levels = Json::array();
  for (const auto& lvl : f.levels) {
    Json syms = Json::array();
    for (const BasisSymbol& s : lvl) {
      Json sym;
      sym["gen"] = s.gen.str(names);
      sym["face"] = s.face.str(names);
      if (s.ypow > 0) sym["ypow"] = static_cast<long>(s.ypow);
      sym["multidegree"] = s.multidegree.str(names);
      syms.push_back(sym);
    }
    levels.push_back(syms);
  }
  doc["levels"] = levels;
  Json diffs = Json::array();
  for (std::size_t i = 0; i < f.diffs.size(); ++i) {
    Json triples = Json::array();
    for (std::size_t col = 0; col < f.diffs[i].size(); ++col) {
      for (const DiffEntry& e : f.diffs[i][col]) {
        Json tr;
        tr["col"] = static_cast<long>(col);
        tr["row"] = e.row;
        tr["coeff"] = e.coeff.str();
        tr["mono"] = e.mono.str(names);
        triples.push_back(tr);
      }
    }
    diffs.push_back(triples);
  }
  doc["differentials"] = diffs;
  return doc;
}

Json betti_json(const BettiTable& t) {
  Json by_level;
  for (const auto& [lvl, row] : t.by_total_degree()) {
    Json degrees;
    for (const auto& [d, c] : row) degrees[std::to_string(d)] = c;
    by_level[std::to_string(lvl)] = degrees;
  }
  return by_level;
}

struct Executor {
  const Session& s;
  const ExecOptions& opts;
  std::optional<FreeComplex> last_complex;
  std::optional<MonomialIdeal> last_intended;

  const std::vector<std::string>& names() const { return s.ring.names; }

  const SessionIdeal& ideal_arg(const Command& c, std::size_t i) const {
    if (i >= c.args.size())
      throw MathError("command '" + c.name + "': missing ideal argument");
    auto it = s.ideals.find(c.args[i]);
    if (it == s.ideals.end())
      throw MathError("command '" + c.name + "': unknown ideal '" +
                      c.args[i] + "'");
    return it->second;
  }

  Poset poset_of(const SessionIdeal& si) const {
    if (si.poset_name.empty()) return Poset::antichain(s.ring.nvars());
    return s.posets.at(si.poset_name);
  }

  Monomial principal_gen(const Command& c, const SessionIdeal& si) const {
    if (!si.q_generator.has_value())
      throw MathError("command '" + c.name +
                      "': requires a principal Q-Borel ideal Q[P](m)");
    return *si.q_generator;
  }

  CommandResult run(const Command& c) {
    CommandResult res;
    res.command = c.name;
    Json out;
    out["cmd"] = c.name;
    std::ostringstream text;
    text << c.name;
    for (const auto& a : c.args) text << " " << a;
    text << ":\n";

    if (c.name == "close") {
      const SessionIdeal& si = ideal_arg(c, 0);
      out["target"] = c.args[0];
      Json gens = Json::array();
      for (const Monomial& g : si.ideal.gens())
        gens.push_back(g.str(names()));
      out["generators"] = gens;
      text << "  " << si.ideal.str(names()) << "\n";
    } else if (c.name == "isqborel") {
      if (c.args.size() < 2)
        throw MathError("isqborel needs a poset and an ideal");
      auto pit = s.posets.find(c.args[0]);
      if (pit == s.posets.end())
        throw MathError("isqborel: unknown poset '" + c.args[0] + "'");
      const SessionIdeal& si = ideal_arg(c, 1);
      bool r = is_q_borel(pit->second, si.ideal);
      out["target"] = c.args[1];
      out["poset"] = c.args[0];
      out["result"] = r;
      text << "  " << (r ? "true" : "false") << "\n";
    } else if (c.name == "maxposet") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Poset q = max_stabilizing_poset(si.ideal);
      out["target"] = c.args[0];
      Json covers = Json::array();
      for (auto [i, j] : q.covers())
        covers.push_back(names()[i] + " < " + names()[j]);
      out["covers"] = covers;
      text << "  covers:";
      if (q.covers().empty()) text << " (antichain)";
      for (auto [i, j] : q.covers())
        text << " " << names()[i] << "<" << names()[j];
      text << "\n";
    } else if (c.name == "qgens") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Poset q = poset_of(si);
      std::vector<Monomial> qg =
          min_q_generators(q, si.ideal, opts.node_limit);
      out["target"] = c.args[0];
      Json gens = Json::array();
      for (const Monomial& g : qg) gens.push_back(g.str(names()));
      out["q_generators"] = gens;
      text << "  {";
      for (std::size_t i = 0; i < qg.size(); ++i)
        text << (i ? ", " : " ") << qg[i].str(names());
      text << " }\n";
    } else if (c.name == "factor") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Monomial m = principal_gen(c, si);
      PrimeFactorization f = principal_factorization(poset_of(si), m);
      out["target"] = c.args[0];
      out["factorization"] = factor_list_json(f.factors, names());
      text << "  " << factor_list_text(f.factors, names(), " * ") << "\n";
    } else if (c.name == "primary") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Monomial m = principal_gen(c, si);
      PrimePowerIntersection d =
          principal_primary_decomposition(poset_of(si), m);
      out["target"] = c.args[0];
      out["primary"] = factor_list_json(d.components, names());
      text << "  " << factor_list_text(d.components, names(), " ∩ ")
           << "\n";
    } else if (c.name == "assprimes") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Monomial m = principal_gen(c, si);
      auto primes = associated_primes(poset_of(si), m);
      out["target"] = c.args[0];
      Json arr = Json::array();
      for (const auto& p : primes) arr.push_back(prime_json(p, names()));
      out["assprimes"] = arr;
      text << "  {";
      for (std::size_t i = 0; i < primes.size(); ++i)
        text << (i ? ", " : " ") << prime_text(primes[i], names());
      text << " }\n";
    } else if (c.name == "irreducible") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Poset q = poset_of(si);
      std::vector<Monomial> qg =
          min_q_generators(q, si.ideal, opts.node_limit);
      auto leaves = q_irreducible_decomposition(q, qg, opts.node_limit);
      Json comps = Json::array();
      std::string txt;
      for (const auto& leaf : leaves) {
        for (const auto& f : q_irreducible_expand(q, leaf)) {
          Json comp;
          for (int v = 0; v < s.ring.nvars(); ++v) {
            if (f[v] == kInfExp)
              comp[names()[v]] = "inf";
            else
              comp[names()[v]] = static_cast<long>(f[v]);
          }
          comps.push_back(comp);
          if (!txt.empty()) txt += " ∩ ";
          txt += irreducible_component_ideal(f).str(names());
        }
      }
      out["target"] = c.args[0];
      out["irreducible"] = comps;
      text << "  " << txt << "\n";
    } else if (c.name == "colon") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Monomial m = principal_gen(c, si);
      Poset q = poset_of(si);
      PrimePowerIntersection d =
          product_to_primary(q.size(), principal_factorization(q, m));
      std::vector<MonomialPrime> supp;
      for (const auto& [p, a] : d.components) supp.push_back(p);
      PrimeFamily family = sum_closure(PrimeFamily(q.size(), supp));
      auto [numer, denom] = colon_representation(q.size(), d, family);
      out["target"] = c.args[0];
      out["numerator"] = factor_list_json(numer.factors, names());
      out["denominator"] = factor_list_json(denom.factors, names());
      text << "  ( " << factor_list_text(numer.factors, names(), " * ")
           << " : " << factor_list_text(denom.factors, names(), " * ")
           << " )\n";
    } else if (c.name == "pdim" || c.name == "codim") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Monomial m = principal_gen(c, si);
      int v = c.name == "pdim" ? pdim_principal(poset_of(si), m)
                               : codim_principal(poset_of(si), m);
      out["target"] = c.args[0];
      out["value"] = v;
      text << "  " << v << "\n";
    } else if (c.name == "cm") {
      const SessionIdeal& si = ideal_arg(c, 0);
      Monomial m = principal_gen(c, si);
      CmResult r = is_cohen_macaulay(poset_of(si), m, opts.node_limit);
      out["target"] = c.args[0];
      out["cohen_macaulay"] = r.cohen_macaulay;
      out["case"] = r.tag == CmCase::PrimePower ? "prime power"
                    : r.tag == CmCase::Principal ? "principal"
                                                 : "none";
      text << "  " << (r.cohen_macaulay ? "true" : "false") << " ("
           << std::string(out["case"]) << ")\n";
    } else if (c.name == "resolve") {
      if (c.args.empty()) throw MathError("resolve: missing kind");
      const std::string kind = c.args[0];
      std::size_t ideal_pos = 1;
      Exponent trunc_d = -1;
      if (kind == "truncated") {
        if (c.args.size() < 2 || c.args[1].rfind("d=", 0) != 0)
          throw MathError("resolve truncated: expected d=N");
        trunc_d = std::stol(c.args[1].substr(2));
        ideal_pos = 2;
      }
      const SessionIdeal& si = ideal_arg(c, ideal_pos);
      FreeComplex f;
      if (kind == "ek") {
        f = ek_resolution(si.ideal);
      } else if (kind == "y") {
        int t = s.ring.nvars() - 2;
        if (t < 1) throw MathError("resolve y: need at least 3 variables");
        f = y_resolution(t, si.ideal);
      } else if (kind == "taylor") {
        f = taylor_resolution(si.ideal);
      } else if (kind == "lq") {
        f = lq_resolution(si.ideal);
      } else if (kind == "truncated") {
        Poset q = poset_of(si);
        std::vector<Monomial> qg =
            min_q_generators(q, si.ideal, opts.node_limit);
        f = truncated_resolution(q, qg, trunc_d, true);
      } else {
        throw MathError("resolve: unknown kind '" + kind + "'");
      }
      out["target"] = c.args[ideal_pos];
      out["kind"] = kind;
      Json ranks = Json::array();
      for (long r : f.ranks()) ranks.push_back(r);
      out["ranks"] = ranks;
      out["betti"] = betti_json(betti_of(f));
      text << "  ranks:";
      for (long r : f.ranks()) text << " " << r;
      text << "\n" << betti_of(f).grid();
      last_complex = f;
      last_intended = si.ideal;
    } else if (c.name == "betti") {
      if (!c.args.empty() && c.args[0] == "last") {
        if (!last_complex.has_value())
          throw MathError("betti last: no complex resolved yet");
        out["target"] = "last";
        out["betti"] = betti_json(betti_of(*last_complex));
        text << betti_of(*last_complex).grid();
      } else {
        const SessionIdeal& si = ideal_arg(c, 0);
        Exponent bound = opts.degree_bound >= 0
                             ? opts.degree_bound
                             : si.ideal.max_gen_degree() + s.ring.nvars();
        BettiTable t = koszul_betti(si.ideal, bound);
        out["target"] = c.args[0];
        out["betti"] = betti_json(t);
        text << t.grid();
      }
    } else if (c.name == "export") {
      if (c.args.empty() || c.args[0] != "last")
        throw MathError("export: expected 'export last'");
      if (!last_complex.has_value())
        throw MathError("export last: no complex resolved yet");
      out["target"] = "last";
      out["complex"] = complex_json(*last_complex, names());
      text << "  levels:";
      for (long r : last_complex->ranks()) text << " " << r;
      text << " (see JSON output for symbols and differentials)\n";
    } else if (c.name == "verify") {
      if (c.args.empty() || c.args[0] != "last")
        throw MathError("verify: expected 'verify last d2|exactness N'");
      if (!last_complex.has_value())
        throw MathError("verify last: no complex resolved yet");
      if (c.args.size() < 2) throw MathError("verify: missing mode");
      VerifyReport rep;
      if (c.args[1] == "d2") {
        rep = verify_d2(*last_complex);
        out["mode"] = "d2";
      } else if (c.args[1] == "exactness") {
        Exponent bound = opts.degree_bound;
        if (c.args.size() >= 3) bound = std::stol(c.args[2]);
        if (bound < 0) bound = last_complex->max_symbol_degree();
        rep = verify_exactness(*last_complex, bound,
                               last_intended ? &*last_intended : nullptr);
        out["mode"] = "exactness";
        out["bound"] = static_cast<long>(bound);
        out["strands"] = rep.strands_checked;
      } else {
        throw MathError("verify: unknown mode '" + c.args[1] + "'");
      }
      bool ok = rep.exact();
      out["ok"] = ok;
      if (!ok) out["detail"] = rep.detail;
      text << "  " << (ok ? "certificate OK" : "FAILED: " + rep.detail)
           << "\n";
      if (!rep.nonzero_homology.empty()) {
        Json h = Json::array();
        for (const auto& he : rep.nonzero_homology) {
          Json e;
          e["level"] = he.level;
          e["multidegree"] = he.multidegree.str(names());
          e["dim"] = he.dim;
          h.push_back(e);
        }
        out["nonzero_homology"] = h;
      }
    } else {
      throw MathError("unknown command '" + c.name + "'");
    }
    res.text = text.str();
    res.json = out.dump();
    return res;
  }
};

}  // namespace

std::vector<CommandResult> execute(const Session& session,
                                   const ExecOptions& opts) {
  Executor ex{session, opts, {}, {}};
  std::vector<CommandResult> out;
  for (std::size_t i = 0; i < session.commands.size(); ++i) {
    try {
      out.push_back(ex.run(session.commands[i]));
    } catch (const ParseError&) {
      throw;
    } catch (const MathError& err) {
      throw MathError("command #" + std::to_string(i + 1) + " (" +
                      session.commands[i].name + "): " + err.what());
    }
  }
  return out;
}

std::string render(const std::vector<CommandResult>& results,
                   RenderFormat format) {
  if (format == RenderFormat::Text) {
    std::string s;
    for (const auto& r : results) s += r.text;
    return s;
  }
  Json doc;
  doc["schema"] = 1;
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(Json::parse(r.json));
  doc["results"] = arr;
  return doc.dump(2) + "\n";
}

}  // namespace qborel
