#include "mpa/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "mpa/error.hpp"

namespace mpa {

namespace {

enum class tok {
  ident,    // bare or backtick-quoted
  equals,
  semicolon,
  plus,
  dot,
  parbar,   // ||
  bar,      // |
  lparen,
  rparen,
  lbrace,
  rbrace,
  comma,
  arrow,    // ->
  end,
};

struct token {
  tok kind;
  std::string text;
  bool quoted = false;
  int line = 0;
  int column = 0;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"tau",   "delta",  "lmerge", "sync",
                                       "allow", "block",  "rename", "comm",
                                       "hide"};
  return k;
}

std::vector<token> lex(const std::string& text) {
  std::vector<token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') bump(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(c);
      ++i;
      continue;
    }
    token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        name += text[i];
        bump(text[i++]);
      }
      t.kind = tok::ident;
      t.text = std::move(name);
      out.push_back(std::move(t));
      continue;
    }
    if (c == '`') {
      bump(c);
      ++i;
      std::string name;
      while (i < text.size() && text[i] != '`') {
        if (text[i] == '\n' || text[i] == '"') {
          throw error(errc::syntax_error, "unterminated quoted identifier",
                      t.line, t.column);
        }
        name += text[i];
        bump(text[i++]);
      }
      if (i == text.size()) {
        throw error(errc::syntax_error, "unterminated quoted identifier",
                    t.line, t.column);
      }
      bump(text[i++]);  // closing backtick
      if (name.empty()) {
        throw error(errc::syntax_error, "empty quoted identifier", t.line,
                    t.column);
      }
      t.kind = tok::ident;
      t.text = std::move(name);
      t.quoted = true;
      out.push_back(std::move(t));
      continue;
    }
    auto push1 = [&](tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      bump(c);
      ++i;
      out.push_back(std::move(t));
    };
    switch (c) {
      case '=': push1(tok::equals); continue;
      case ';': push1(tok::semicolon); continue;
      case '+': push1(tok::plus); continue;
      case '.': push1(tok::dot); continue;
      case '(': push1(tok::lparen); continue;
      case ')': push1(tok::rparen); continue;
      case '{': push1(tok::lbrace); continue;
      case '}': push1(tok::rbrace); continue;
      case ',': push1(tok::comma); continue;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '|') {
          t.kind = tok::parbar;
          t.text = "||";
          bump(c);
          bump(c);
          i += 2;
        } else {
          t.kind = tok::bar;
          t.text = "|";
          bump(c);
          ++i;
        }
        out.push_back(std::move(t));
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          t.kind = tok::arrow;
          t.text = "->";
          bump(c);
          bump('>');
          i += 2;
          out.push_back(std::move(t));
          continue;
        }
        throw error(errc::syntax_error, "stray '-' (did you mean '->'?)", line, col);
      default:
        throw error(errc::syntax_error,
                    std::string("unexpected character '") + c + "'", line, col);
    }
  }
  token eof;
  eof.kind = tok::end;
  eof.line = line;
  eof.column = col;
  out.push_back(eof);
  return out;
}

class parser {
 public:
  explicit parser(const std::string& text) : toks_(lex(text)) {
    // Definition names are identifiers followed by '=' at a statement start;
    // collect them up front so references resolve regardless of order.
    bool at_start = true;
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (at_start && toks_[i].kind == tok::ident &&
          toks_[i + 1].kind == tok::equals) {
        def_names_.insert(toks_[i].text);
      }
      at_start = toks_[i].kind == tok::semicolon;
    }
  }

  specification run() {
    specification spec;
    std::set<std::string> seen;
    while (peek().kind != tok::end) {
      token name = expect(tok::ident, "definition name");
      if (!name.quoted && keywords().count(name.text)) {
        fail(name, "'" + name.text + "' is a keyword; quote it with backticks");
      }
      if (!seen.insert(name.text).second) {
        throw error(errc::duplicate_definition,
                    "process '" + name.text + "' is defined twice", name.line,
                    name.column);
      }
      expect(tok::equals, "'='");
      term_ptr body = parse_alt();
      expect(tok::semicolon, "';'");
      spec.add({name.text, body});
    }
    if (spec.definitions().empty()) {
      throw error(errc::syntax_error, "no definitions found", 1, 1);
    }
    return spec;
  }

 private:
  std::vector<token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> def_names_;

  const token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const token& at, const std::string& msg) const {
    throw error(errc::syntax_error, msg, at.line, at.column);
  }

  token expect(tok kind, const char* what) {
    if (peek().kind != kind) {
      const token& t = peek();
      fail(t, std::string("expected ") + what + ", got '" +
                  (t.kind == tok::end ? "end of input" : t.text) + "'");
    }
    return take();
  }

  // +  <  ||  <  .  <  |, all chains associate to the right
  term_ptr parse_alt() {
    std::vector<term_ptr> parts{parse_par()};
    while (peek().kind == tok::plus) {
      take();
      parts.push_back(parse_par());
    }
    return fold(parts, make_alt);
  }

  term_ptr parse_par() {
    std::vector<term_ptr> parts{parse_seq()};
    while (peek().kind == tok::parbar) {
      take();
      parts.push_back(parse_seq());
    }
    return fold(parts, make_par);
  }

  term_ptr parse_seq() {
    std::vector<term_ptr> parts{parse_sync_join()};
    while (peek().kind == tok::dot) {
      take();
      parts.push_back(parse_sync_join());
    }
    return fold(parts, make_seq);
  }

  // '|' joins plain action names into one multi-action; anything else on
  // either side is a syntax error pointing at sync(p, q).
  term_ptr parse_sync_join() {
    token first = peek();
    term_ptr t = parse_primary();
    if (peek().kind != tok::bar) return t;
    std::vector<action> acts;
    auto as_action = [&](const term_ptr& p, const token& at) {
      if (p->kind() != op::multi_act || p->label().size() != 1) {
        fail(at,
             "'|' joins action names only; use sync(p, q) to compose processes "
             "synchronously");
      }
      acts.push_back(p->label().actions().front());
    };
    as_action(t, first);
    while (peek().kind == tok::bar) {
      take();
      token at = peek();
      as_action(parse_primary(), at);
    }
    return make_multi_action(multi_action(std::move(acts)));
  }

  term_ptr parse_primary() {
    const token& t = peek();
    switch (t.kind) {
      case tok::lparen: {
        take();
        term_ptr inner = parse_alt();
        expect(tok::rparen, "')'");
        return inner;
      }
      case tok::ident:
        break;
      default:
        fail(t, "expected a process expression, got '" +
                    (t.kind == tok::end ? "end of input" : t.text) + "'");
    }
    token name = take();
    if (!name.quoted) {
      if (name.text == "tau") return make_tau();
      if (name.text == "delta") return make_deadlock();
      if (name.text == "lmerge" || name.text == "sync") {
        bool left_first = name.text == "lmerge";
        expect(tok::lparen, "'('");
        term_ptr a = parse_alt();
        expect(tok::comma, "','");
        term_ptr b = parse_alt();
        expect(tok::rparen, "')'");
        return left_first ? make_left_merge(a, b) : make_sync(a, b);
      }
      if (name.text == "allow") return parse_allow();
      if (name.text == "block") return parse_action_set_op(op::block);
      if (name.text == "hide") return parse_action_set_op(op::hide);
      if (name.text == "rename") return parse_rename();
      if (name.text == "comm") return parse_comm();
    }
    if (def_names_.count(name.text)) return make_reference(name.text);
    return make_multi_action(multi_action{action(name.text)});
  }

  // An action name inside {...}; 'tau' is not one.
  action parse_action_name(const char* where) {
    token t = expect(tok::ident, "an action name");
    if (!t.quoted && keywords().count(t.text) && t.text != "tau") {
      fail(t, "'" + t.text + "' is a keyword; quote it with backticks");
    }
    if (!t.quoted && t.text == "tau") {
      std::string w(where);
      if (w == "rename") {
        throw error(errc::invalid_rename, "tau cannot be renamed", t.line,
                    t.column);
      }
      if (w == "comm") {
        throw error(errc::tau_in_comm_rule,
                    "tau cannot take part in communication", t.line, t.column);
      }
      fail(t, "tau is not an action and cannot be " +
                  (w == "hide" ? std::string("hidden") : std::string("blocked")));
    }
    return action(t.text);
  }

  multi_action parse_multi_action_literal() {
    // inside allow braces 'tau' is representable (and rejected later)
    std::vector<action> acts;
    token t = expect(tok::ident, "a multi-action");
    if (!(t.quoted || t.text != "tau")) return multi_action();
    if (!t.quoted && keywords().count(t.text)) {
      fail(t, "'" + t.text + "' is a keyword; quote it with backticks");
    }
    acts.push_back(action(t.text));
    while (peek().kind == tok::bar) {
      take();
      token u = expect(tok::ident, "an action name");
      if (!u.quoted && keywords().count(u.text)) {
        fail(u, "'" + u.text + "' is a keyword; quote it with backticks");
      }
      acts.push_back(action(u.text));
    }
    return multi_action(std::move(acts));
  }

  term_ptr parse_allow() {
    expect(tok::lbrace, "'{'");
    std::multiset<multi_action> entries;
    if (peek().kind != tok::rbrace) {
      entries.insert(parse_multi_action_literal());
      while (peek().kind == tok::comma) {
        take();
        entries.insert(parse_multi_action_literal());
      }
    }
    expect(tok::rbrace, "'}'");
    expect(tok::lparen, "'('");
    term_ptr body = parse_alt();
    expect(tok::rparen, "')'");
    return make_allow(std::set<multi_action>(entries.begin(), entries.end()),
                      body);
  }

  term_ptr parse_action_set_op(op kind) {
    const char* where = kind == op::block ? "block" : "hide";
    expect(tok::lbrace, "'{'");
    action_set acts;
    if (peek().kind != tok::rbrace) {
      acts.insert(parse_action_name(where));
      while (peek().kind == tok::comma) {
        take();
        acts.insert(parse_action_name(where));
      }
    }
    expect(tok::rbrace, "'}'");
    expect(tok::lparen, "'('");
    term_ptr body = parse_alt();
    expect(tok::rparen, "')'");
    return kind == op::block ? make_block(acts, body) : make_hide(acts, body);
  }

  term_ptr parse_rename() {
    expect(tok::lbrace, "'{'");
    std::map<action, action> map;
    auto one = [&] {
      token at = peek();
      action from = parse_action_name("rename");
      expect(tok::arrow, "'->'");
      action to = parse_action_name("rename");
      if (!map.emplace(from, to).second) {
        throw error(errc::invalid_rename,
                    "'" + from.name() + "' is renamed twice", at.line,
                    at.column);
      }
    };
    if (peek().kind != tok::rbrace) {
      one();
      while (peek().kind == tok::comma) {
        take();
        one();
      }
    }
    expect(tok::rbrace, "'}'");
    expect(tok::lparen, "'('");
    term_ptr body = parse_alt();
    expect(tok::rparen, "')'");
    return make_rename(map, body);
  }

  term_ptr parse_comm() {
    expect(tok::lbrace, "'{'");
    std::vector<comm_rule> rules;
    auto one = [&] {
      std::vector<action> lhs;
      lhs.push_back(parse_action_name("comm"));
      while (peek().kind == tok::bar) {
        take();
        lhs.push_back(parse_action_name("comm"));
      }
      expect(tok::arrow, "'->'");
      action result = parse_action_name("comm");
      rules.push_back(comm_rule{multi_action(std::move(lhs)), result});
    };
    if (peek().kind != tok::rbrace) {
      one();
      while (peek().kind == tok::comma) {
        take();
        one();
      }
    }
    expect(tok::rbrace, "'}'");
    expect(tok::lparen, "'('");
    term_ptr body = parse_alt();
    expect(tok::rparen, "')'");
    return make_comm(rules, body);
  }

  static term_ptr fold(const std::vector<term_ptr>& parts,
                       term_ptr (*make)(term_ptr, term_ptr)) {
    term_ptr out = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) out = make(parts[i], out);
    return out;
  }
};

bool needs_quoting(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return true;
  }
  if (keywords().count(name)) return true;
  return !std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string quoted(const std::string& name) {
  return needs_quoting(name) ? "`" + name + "`" : name;
}

std::string render_multi_action(const multi_action& m) {
  if (m.is_tau()) return "tau";
  std::string out;
  for (const action& a : m.actions()) {
    if (!out.empty()) out += '|';
    out += quoted(a.name());
  }
  return out;
}

// precedence bands: 0 '+', 1 '||', 2 '.', 3 atoms (multi-actions included,
// '|' being the tightest joiner)
void render(const term_ptr& t, int context, bool left_of_same, std::string& out);

void render_infix(const term_ptr& t, int prec, const char* sym, int context,
                  bool left_of_same, std::string& out) {
  bool parens = prec < context || (prec == context && left_of_same);
  if (parens) out += '(';
  render(t->left(), prec, true, out);
  out += sym;
  render(t->right(), prec, false, out);
  if (parens) out += ')';
}

void render_set_op(const char* name, const std::string& payload,
                   const term_ptr& body, std::string& out) {
  out += name;
  out += '{';
  out += payload;
  out += "}(";
  render(body, 0, false, out);
  out += ')';
}

void render(const term_ptr& t, int context, bool left_of_same, std::string& out) {
  switch (t->kind()) {
    case op::multi_act:
      out += render_multi_action(t->label());
      return;
    case op::deadlock:
      out += "delta";
      return;
    case op::reference:
      out += quoted(t->reference());
      return;
    case op::alt:
      render_infix(t, 0, " + ", context, left_of_same, out);
      return;
    case op::par:
      render_infix(t, 1, " || ", context, left_of_same, out);
      return;
    case op::seq:
      render_infix(t, 2, " . ", context, left_of_same, out);
      return;
    case op::left_merge:
    case op::sync: {
      out += t->kind() == op::left_merge ? "lmerge(" : "sync(";
      render(t->left(), 0, false, out);
      out += ", ";
      render(t->right(), 0, false, out);
      out += ')';
      return;
    }
    case op::allow: {
      std::string payload;
      for (const multi_action& m : t->allow_set()) {
        if (!payload.empty()) payload += ", ";
        payload += render_multi_action(m);
      }
      render_set_op("allow", payload, t->operand(), out);
      return;
    }
    case op::block:
    case op::hide: {
      std::string payload;
      for (const action& a : t->actions_arg()) {
        if (!payload.empty()) payload += ", ";
        payload += quoted(a.name());
      }
      render_set_op(t->kind() == op::block ? "block" : "hide", payload,
                    t->operand(), out);
      return;
    }
    case op::ren: {
      std::string payload;
      for (const auto& [from, to] : t->rename_map()) {
        if (!payload.empty()) payload += ", ";
        payload += quoted(from.name()) + " -> " + quoted(to.name());
      }
      render_set_op("rename", payload, t->operand(), out);
      return;
    }
    case op::comm: {
      std::string payload;
      for (const comm_rule& rule : t->comm_rules()) {
        if (!payload.empty()) payload += ", ";
        payload += render_multi_action(rule.lhs) + " -> " + quoted(rule.result.name());
      }
      render_set_op("comm", payload, t->operand(), out);
      return;
    }
  }
}

}  // namespace

specification parse_specification(const std::string& text) {
  return parser(text).run();
}

std::string format(const term_ptr& t) {
  std::string out;
  render(t, 0, false, out);
  return out;
}

std::string format(const specification& spec) {
  std::string out;
  for (const definition& def : spec.definitions()) {
    out += quoted(def.name);
    out += " = ";
    out += format(def.body);
    out += ";\n";
  }
  return out;
}

}  // namespace mpa
