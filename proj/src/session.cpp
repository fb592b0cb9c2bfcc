#include "opal/session.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace opal {

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    for (;;) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && text[pos] == '#') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
        continue;
      }
      break;
    }
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  std::pair<int, int> line_col(size_t at) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < at && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void error(Errc code, const std::string& what) {
    auto [line, col] = line_col(pos);
    fail(code, what + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) error(Errc::parse_error, std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    size_t save = pos;
    for (char c : w) {
      if (pos >= text.size() || text[pos] != c) {
        pos = save;
        return false;
      }
      ++pos;
    }
    // word boundary
    if (pos < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      pos = save;
      return false;
    }
    return true;
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      error(Errc::parse_error, "expected an identifier");
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) error(Errc::parse_error, "expected an integer");
    return std::stol(std::string(text.substr(start, pos - start)));
  }

  // Raw slice up to (not including) the next stop character at paren depth 0.
  std::string slice_until(std::string_view stops) {
    skip_ws();
    size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0 && stops.find(c) != std::string_view::npos) break;
        --depth;
        if (depth < 0) error(Errc::parse_error, "unbalanced parentheses");
      }
      if (depth == 0 && stops.find(c) != std::string_view::npos && c != ')' && c != ']') break;
      ++pos;
    }
    if (pos == start) error(Errc::parse_error, "expected an expression");
    std::string out(text.substr(start, pos - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
  }
};

// Structural check of a polynomial slice at parse time: token shape only,
// variable names resolve later against the active ring.
void validate_poly_syntax(Cursor& outer, std::string_view text) {
  struct Mini {
    Cursor cur;
    Cursor& outer;

    [[noreturn]] void error(const std::string& what) {
      outer.pos -= cur.text.size() - cur.pos;  // rewind to the offending spot
      outer.error(Errc::parse_error, what);
    }
    void expr() {
      if (cur.peek() == '-' || cur.peek() == '+') ++cur.pos;
      term();
      while (cur.peek() == '+' || cur.peek() == '-') {
        ++cur.pos;
        term();
      }
    }
    void term() {
      factor();
      while (cur.accept('*')) factor();
    }
    void factor() {
      atom();
      if (cur.accept('^')) {
        if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) error("expected an exponent");
        cur.integer();
      }
    }
    void atom() {
      char c = cur.peek();
      if (c == '(') {
        ++cur.pos;
        expr();
        if (!cur.accept(')')) error("expected ')'");
        return;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur.integer();
        if (cur.accept('/')) {
          if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) error("expected a denominator");
          cur.integer();
        }
        return;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        cur.ident();
        return;
      }
      error("expected a term");
    }
  };
  Mini mini{Cursor{text}, outer};
  mini.expr();
  if (!mini.cur.eof()) mini.error("unexpected token in polynomial");
}

struct SessionParser {
  Cursor cur;
  std::map<std::string, SessionItem::Kind> declared;
  bool ring_seen = false;

  void require_declared(const std::string& name, const char* what) {
    if (!declared.count(name)) cur.error(Errc::undefined_name, std::string(what) + " '" + name + "' is not declared");
  }

  bool peek_word(std::string_view w) {
    size_t save = cur.pos;
    bool hit = cur.accept_word(w);
    cur.pos = save;
    return hit;
  }

  void declare(const std::string& name, SessionItem::Kind kind) {
    if (declared.count(name)) cur.error(Errc::parse_error, "duplicate declaration of '" + name + "'");
    declared[name] = kind;
  }

  std::vector<std::string> poly_list(char close) {
    std::vector<std::string> out;
    if (cur.peek() == close) return out;
    for (;;) {
      std::string slice = cur.slice_until(std::string(",;") + close);
      validate_poly_syntax(cur, slice);
      out.push_back(std::move(slice));
      if (cur.accept(',')) continue;
      break;
    }
    return out;
  }

  // closure expressions are kept textual; validate structure and names here
  std::string closure_expr() {
    cur.skip_ws();
    size_t start = cur.pos;
    std::string head = cur.ident();
    if (head == "frobenius") {
      cur.expect('(');
      if (!cur.accept_word("e_max")) cur.error(Errc::parse_error, "frobenius takes e_max=<int>");
      cur.expect('=');
      cur.integer();
      cur.expect(')');
    } else if (head == "finitize") {
      cur.expect('(');
      closure_expr();
      cur.expect(')');
    } else if (head == "standardize") {
      cur.expect('(');
      closure_expr();
      cur.expect(';');
      if (!cur.accept_word("witnesses")) cur.error(Errc::parse_error, "standardize takes witnesses=[..]");
      cur.expect('=');
      if (cur.peek() == '[') {
        cur.expect('[');
        poly_list(']');
        cur.expect(']');
      } else {
        require_declared(cur.ident(), "witness set");
      }
      cur.expect(')');
    } else if (head == "identity" || head == "radical" || head == "integral") {
      // builtin, no parameters
    } else {
      require_declared(head, "closure");
    }
    return std::string(cur.text.substr(start, cur.pos - start));
  }

  // an ideal reference: a declared name or an inline literal "(...)"
  std::string ideal_ref() {
    cur.skip_ws();
    size_t start = cur.pos;
    if (cur.peek() == '(') {
      cur.expect('(');
      poly_list(')');
      cur.expect(')');
    } else {
      std::string name = cur.ident();
      require_declared(name, "name");
    }
    return std::string(cur.text.substr(start, cur.pos - start));
  }

  Session parse() {
    Session session;
    while (!cur.eof()) {
      size_t item_start = cur.pos;
      auto [line, col] = cur.line_col(item_start);
      SessionItem item;
      item.line = line;
      item.col = col;

      if (cur.accept_word("ring")) {
        item.kind = SessionItem::Kind::decl_ring;
        item.name = cur.ident();
        cur.expect('=');
        if (cur.accept_word("QQ")) {
          item.field_spec = "QQ";
        } else if (cur.accept_word("GF")) {
          cur.expect('(');
          item.field_spec = std::to_string(cur.integer());
          cur.expect(')');
        } else {
          cur.error(Errc::parse_error, "expected QQ or GF(p)");
        }
        cur.expect('[');
        for (;;) {
          item.variables.push_back(cur.ident());
          if (cur.accept(',')) continue;
          break;
        }
        cur.expect(']');
        if (cur.accept('/')) {
          cur.expect('(');
          item.relation_texts = poly_list(')');
          cur.expect(')');
        }
        declare(item.name, item.kind);
        ring_seen = true;
      } else if (cur.accept_word("ideal")) {
        item.kind = SessionItem::Kind::decl_ideal;
        item.name = cur.ident();
        cur.expect('=');
        if (!ring_seen) cur.error(Errc::undefined_name, "no ring declared before ideal '" + item.name + "'");
        cur.expect('(');
        item.poly_texts = poly_list(')');
        cur.expect(')');
        declare(item.name, item.kind);
      } else if (cur.accept_word("frac")) {
        item.kind = SessionItem::Kind::decl_frac;
        item.name = cur.ident();
        cur.expect('=');
        if (!ring_seen) cur.error(Errc::undefined_name, "no ring declared before frac '" + item.name + "'");
        cur.expect('(');
        item.poly_texts = poly_list(')');
        cur.expect(')');
        cur.expect('/');
        item.denominator_text = cur.slice_until(";");
        declare(item.name, item.kind);
      } else if (cur.accept_word("closure")) {
        item.kind = SessionItem::Kind::decl_closure;
        item.name = cur.ident();
        cur.expect('=');
        if (!ring_seen) cur.error(Errc::undefined_name, "no ring declared before closure '" + item.name + "'");
        item.closure_text = closure_expr();
        declare(item.name, item.kind);
      } else if (cur.accept_word("witnesses")) {
        item.kind = SessionItem::Kind::decl_witnesses;
        item.name = cur.ident();
        cur.expect('=');
        if (!ring_seen) cur.error(Errc::undefined_name, "no ring declared before witnesses '" + item.name + "'");
        cur.expect('[');
        item.poly_texts = poly_list(']');
        cur.expect(']');
        declare(item.name, item.kind);
      } else if (cur.accept_word("print")) {
        item.kind = SessionItem::Kind::cmd_print;
        parse_printable(item);
      } else if (cur.accept_word("check")) {
        if (cur.accept_word("axioms")) {
          item.kind = SessionItem::Kind::cmd_check_axioms;
          cur.expect('(');
          item.closure_text = closure_expr();
          cur.expect(')');
        } else if (cur.accept_word("correspondence")) {
          item.kind = SessionItem::Kind::cmd_check_correspondence;
          cur.expect('(');
          item.closure_text = closure_expr();
          cur.expect(')');
        } else {
          cur.error(Errc::parse_error, "expected 'axioms' or 'correspondence'");
        }
      } else if (cur.accept_word("decompose")) {
        item.kind = SessionItem::Kind::cmd_decompose;
        item.args.push_back(ideal_ref());
      } else if (peek_word("standardized_radical")) {
        item.kind = SessionItem::Kind::cmd_print;
        parse_printable(item);
      } else {
        cur.error(Errc::parse_error, "expected a declaration or command");
      }
      cur.expect(';');
      item.source = std::string(cur.text.substr(item_start, cur.pos - item_start));
      session.items.push_back(std::move(item));
    }
    return session;
  }

  void parse_printable(SessionItem& item) {
    cur.skip_ws();
    static const char* binary_ops[] = {"intersect", "sum", "product"};
    for (const char* op : binary_ops) {
      if (cur.accept_word(op)) {
        item.print_kind = op;
        cur.expect('(');
        item.args.push_back(ideal_ref());
        cur.expect(',');
        item.args.push_back(ideal_ref());
        cur.expect(')');
        return;
      }
    }
    if (cur.accept_word("standardized_radical")) {
      item.print_kind = "standardized_radical";
      cur.expect('(');
      item.args.push_back(ideal_ref());
      cur.expect(')');
      if (cur.accept_word("with")) {
        if (!cur.accept_word("decomposition")) cur.error(Errc::parse_error, "expected 'decomposition'");
        cur.expect('[');
        for (;;) {
          cur.expect('(');
          cur.expect('(');
          std::vector<std::string> q = poly_list(')');
          cur.expect(')');
          cur.expect(',');
          cur.expect('(');
          std::vector<std::string> p = poly_list(')');
          cur.expect(')');
          cur.expect(')');
          item.decomposition.emplace_back(std::move(q), std::move(p));
          if (cur.accept(',')) continue;
          break;
        }
        cur.expect(']');
      }
      return;
    }
    if (cur.accept_word("power")) {
      item.print_kind = "power";
      cur.expect('(');
      item.args.push_back(ideal_ref());
      cur.expect(',');
      item.args.push_back(std::to_string(cur.integer()));
      cur.expect(')');
      return;
    }
    if (cur.accept_word("colon")) {
      item.print_kind = "colon";
      cur.expect('(');
      item.args.push_back(ideal_ref());
      cur.expect(',');
      item.args.push_back(cur.slice_until(")"));
      cur.expect(')');
      return;
    }
    if (cur.accept_word("apply")) {
      item.print_kind = "apply";
      cur.expect('(');
      item.closure_text = closure_expr();
      cur.expect(',');
      item.args.push_back(ideal_ref());
      cur.expect(')');
      return;
    }
    if (cur.accept_word("member")) {
      item.print_kind = "member";
      cur.expect('(');
      cur.skip_ws();
      size_t save = cur.pos;
      std::string head = cur.ident();
      if (head == "b") {
        item.closure_text = "b";
      } else {
        cur.pos = save;
        item.closure_text = closure_expr();
      }
      cur.expect(',');
      item.args.push_back(cur.slice_until(","));
      cur.expect(',');
      item.args.push_back(ideal_ref());
      cur.expect(')');
      return;
    }
    if (cur.peek() == '(') {
      // an inline ideal literal
      item.print_kind = "literal";
      item.args.push_back(ideal_ref());
      return;
    }
    // plain echo of a declared object
    item.print_kind = "echo";
    std::string name = cur.ident();
    require_declared(name, "name");
    item.args.push_back(name);
  }
};

}  // namespace

Session parse_session(std::string_view text) {
  SessionParser parser{Cursor{text}, {}, false};
  return parser.parse();
}

// ---------------------------------------------------------------------------
// execution

namespace {

struct Environment {
  const ExecOptions& options;
  RingPtr current_ring;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FractionalIdeal> fracs;
  std::map<std::string, ClosureOp> closures;
  std::map<std::string, WitnessSet> witness_sets;

  RingPtr need_ring() const {
    if (!current_ring) fail(Errc::undefined_name, "no ring has been declared");
    return current_ring;
  }

  Ideal resolve_ideal(const std::string& text) const {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    if (!t.empty() && t.front() == '(') {
      // inline literal
      RingPtr R = need_ring();
      std::string inner = t.substr(1, t.find_last_of(')') - 1);
      std::vector<std::string> parts;
      int depth = 0;
      std::string acc;
      for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
          parts.push_back(acc);
          acc.clear();
        } else {
          acc += c;
        }
      }
      if (!acc.empty()) parts.push_back(acc);
      return R->ideal(parts);
    }
    auto it = ideals.find(t);
    if (it == ideals.end()) fail(Errc::undefined_name, "ideal '" + t + "' is not defined");
    return it->second;
  }

  WitnessSet resolve_witnesses(const std::vector<std::string>& texts) const {
    RingPtr R = need_ring();
    std::vector<RingElement> elems;
    for (const auto& t : texts) elems.push_back(R->element(t));
    return WitnessSet(std::move(elems));
  }

  ClosureOp resolve_closure(const std::string& text) const {
    Cursor cur{text};
    ClosureOp op = parse_closure(cur);
    cur.skip_ws();
    if (cur.pos != text.size() && !cur.eof()) fail(Errc::parse_error, "trailing input in closure expression");
    return op;
  }

  ClosureOp parse_closure(Cursor& cur) const {
    std::string head = cur.ident();
    RingPtr R = need_ring();
    if (head == "identity" || head == "radical" || head == "integral") return construct_builtin(head, R);
    if (head == "frobenius") {
      cur.expect('(');
      cur.accept_word("e_max");
      cur.expect('=');
      long e = cur.integer();
      cur.expect(')');
      return construct_builtin("frobenius", R, e);
    }
    if (head == "finitize") {
      cur.expect('(');
      ClosureOp inner = parse_closure(cur);
      cur.expect(')');
      return finitize(inner);
    }
    if (head == "standardize") {
      cur.expect('(');
      ClosureOp inner = parse_closure(cur);
      cur.expect(';');
      cur.accept_word("witnesses");
      cur.expect('=');
      WitnessSet ws = [&] {
        if (cur.peek() == '[') {
          cur.expect('[');
          std::vector<std::string> texts;
          if (cur.peek() != ']')
            for (;;) {
              texts.push_back(cur.slice_until(",]"));
              if (cur.accept(',')) continue;
              break;
            }
          cur.expect(']');
          return resolve_witnesses(texts);
        }
        std::string name = cur.ident();
        auto it = witness_sets.find(name);
        if (it == witness_sets.end()) fail(Errc::undefined_name, "witness set '" + name + "' is not defined");
        return it->second;
      }();
      cur.expect(')');
      return standardize_witnessed(inner, ws);
    }
    auto it = closures.find(head);
    if (it == closures.end()) fail(Errc::undefined_name, "closure '" + head + "' is not defined");
    return it->second;
  }

  // a fraction argument: a polynomial, or num/den split at top-level '/'
  Fraction resolve_fraction(const std::string& text) const {
    RingPtr R = need_ring();
    try {
      return Fraction::over_one(R->element(text));
    } catch (const Error&) {
      // fall through to num/den form
    }
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '/' && depth == 0) {
        RingElement num = R->element(text.substr(0, i));
        RingElement den = R->element(text.substr(i + 1));
        return Fraction{num, den};
      }
    }
    fail(Errc::parse_error, "cannot parse fraction '" + text + "'");
  }
};

nlohmann::json gens_json(const Ideal& I) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : I.canonical_generators()) out.push_back(g.to_string());
  return out;
}

std::string closure_exactness(const ClosureOp& op) {
  if (op.approx_note) return *op.approx_note;
  if (!op.oracle_total && op.semi_decision_bound)
    return "semi-decision(bound=" + std::to_string(*op.semi_decision_bound) + ")";
  return "exact";
}

void exec_print(const SessionItem& item, Environment& env, OutputRecord& rec) {
  const std::string& kind = item.print_kind;
  auto ideal_payload = [&](const Ideal& I) {
    rec.text = I.to_string();
    rec.payload["generators"] = gens_json(I);
  };

  if (kind == "echo") {
    const std::string& name = item.args[0];
    if (auto it = env.ideals.find(name); it != env.ideals.end()) {
      ideal_payload(it->second);
    } else if (auto fit = env.fracs.find(name); fit != env.fracs.end()) {
      rec.text = fit->second.to_string();
      rec.payload["numerator"] = gens_json(fit->second.numerator());
      rec.payload["denominator"] = fit->second.denominator().to_string();
    } else if (auto rit = env.rings.find(name); rit != env.rings.end()) {
      rec.text = rit->second->to_string();
      rec.payload["ring"] = rec.text;
    } else if (auto cit = env.closures.find(name); cit != env.closures.end()) {
      rec.text = cit->second.name;
      rec.payload["closure"] = rec.text;
    } else if (auto wit = env.witness_sets.find(name); wit != env.witness_sets.end()) {
      rec.text = wit->second.to_string();
      rec.payload["witnesses"] = rec.text;
    } else {
      fail(Errc::undefined_name, "'" + name + "' is not defined");
    }
    return;
  }
  if (kind == "literal") {
    ideal_payload(env.resolve_ideal(item.args[0]));
    return;
  }
  if (kind == "intersect" || kind == "sum" || kind == "product") {
    Ideal a = env.resolve_ideal(item.args[0]);
    Ideal b = env.resolve_ideal(item.args[1]);
    Ideal r = kind == "intersect" ? ideal_intersect(a, b) : kind == "sum" ? ideal_sum(a, b) : ideal_product(a, b);
    ideal_payload(r);
    return;
  }
  if (kind == "power") {
    Ideal a = env.resolve_ideal(item.args[0]);
    ideal_payload(ideal_power(a, static_cast<int>(std::stol(item.args[1]))));
    return;
  }
  if (kind == "colon") {
    Ideal a = env.resolve_ideal(item.args[0]);
    RingElement f = env.need_ring()->element(item.args[1]);
    ideal_payload(ideal_colon(a, f));
    return;
  }
  if (kind == "apply") {
    ClosureOp op = env.resolve_closure(item.closure_text);
    Ideal I = env.resolve_ideal(item.args[0]);
    Ideal r = op.apply(I);
    ideal_payload(r);
    // a computed closure is exact; only the op-level note survives
    rec.exactness = op.approx_note ? *op.approx_note : "exact";
    return;
  }
  if (kind == "member") {
    Tri verdict;
    std::string oracle_name;
    Fraction f = env.resolve_fraction(item.args[0]);
    const std::string& target = item.args[1];
    if (item.closure_text == "b") {
      oracle_name = "b";
      if (auto it = env.fracs.find(target); it != env.fracs.end()) {
        verdict = b_member(f, it->second);
      } else {
        verdict = b_member(f, FractionalIdeal(env.resolve_ideal(target), env.need_ring()->one()));
      }
      rec.exactness = verdict == Tri::unknown ? "semi-decision(bound=6)" : "exact";
    } else {
      ClosureOp op = env.resolve_closure(item.closure_text);
      oracle_name = op.name;
      if (auto it = env.fracs.find(target); it != env.fracs.end()) {
        verdict = pi_member(op, f, it->second);
      } else {
        Ideal I = env.resolve_ideal(target);
        if (f.den.is_unit_constant())
          verdict = op.member(f.num, I);  // r/1 over an ideal: plain closure membership
        else
          verdict = pi_member(op, f, FractionalIdeal(I, env.need_ring()->one()));
      }
      // definite answers are certificates; only an unknown is a bounded verdict
      rec.exactness = op.approx_note          ? *op.approx_note
                      : verdict == Tri::unknown ? closure_exactness(op)
                                                : "exact";
    }
    rec.text = std::string("member(") + oracle_name + ", " + f.to_string() + ") = " + tri_name(verdict);
    rec.payload["member"] = tri_name(verdict);
    return;
  }
  if (kind == "standardized_radical") {
    Ideal I = env.resolve_ideal(item.args[0]);
    std::optional<PrimaryDecomposition> D;
    if (!item.decomposition.empty()) {
      std::vector<std::pair<Ideal, Ideal>> comps;
      for (const auto& [qt, pt] : item.decomposition)
        comps.emplace_back(env.need_ring()->ideal(qt), env.need_ring()->ideal(pt));
      D = verify_decomposition(I, comps);
    }
    StandardizedRadicalResult r = standardized_radical_full(I, D);
    ideal_payload(r.result);
    rec.exactness = r.any_assumed ? "assumed-primary-components" : "exact";
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : r.classifications) cls.push_back(c.to_string());
    rec.payload["classifications"] = cls;
    return;
  }
  fail(Errc::invalid_argument, "unknown print form '" + kind + "'");
}

void exec_item(const SessionItem& item, Environment& env, OutputRecord& rec) {
  switch (item.kind) {
    case SessionItem::Kind::decl_ring: {
      Field k = item.field_spec == "QQ" ? Field::rationals() : Field::gf(std::stol(item.field_spec));
      RingPtr R = PresentedRing::make(k, item.variables, item.relation_texts);
      env.rings.emplace(item.name, R);
      env.current_ring = R;
      rec.text = item.name + " = " + R->to_string();
      rec.payload["ring"] = R->to_string();
      return;
    }
    case SessionItem::Kind::decl_ideal: {
      Ideal I = env.need_ring()->ideal(item.poly_texts);
      env.ideals.erase(item.name);
      env.ideals.emplace(item.name, I);
      rec.text = item.name + " = " + I.to_string();
      rec.payload["generators"] = gens_json(I);
      return;
    }
    case SessionItem::Kind::decl_frac: {
      RingPtr R = env.need_ring();
      FractionalIdeal A(R->ideal(item.poly_texts), R->element(item.denominator_text));
      env.fracs.erase(item.name);
      env.fracs.emplace(item.name, A);
      rec.text = item.name + " = " + A.to_string();
      rec.payload["numerator"] = gens_json(A.numerator());
      rec.payload["denominator"] = A.denominator().to_string();
      return;
    }
    case SessionItem::Kind::decl_closure: {
      ClosureOp op = env.resolve_closure(item.closure_text);
      env.closures.erase(item.name);
      env.closures.emplace(item.name, op);
      rec.text = item.name + " = " + op.name;
      rec.payload["closure"] = op.name;
      rec.exactness = closure_exactness(op);
      return;
    }
    case SessionItem::Kind::decl_witnesses: {
      WitnessSet ws = env.resolve_witnesses(item.poly_texts);
      env.witness_sets.erase(item.name);
      env.witness_sets.emplace(item.name, ws);
      rec.text = item.name + " = " + ws.to_string();
      rec.payload["witnesses"] = ws.to_string();
      return;
    }
    case SessionItem::Kind::cmd_print:
      exec_print(item, env, rec);
      return;
    case SessionItem::Kind::cmd_check_axioms: {
      ClosureOp op = env.resolve_closure(item.closure_text);
      AxiomCheckConfig cfg;
      cfg.seed = env.options.seed;
      cfg.samples = env.options.axiom_samples;
      cfg.max_degree = std::min(env.options.degree_bound, 3);
      cfg.monomial_samples = !op.oracle_total || !env.current_ring->relations_trivial();
      if (op.name.rfind("integral", 0) == 0) cfg.monomial_samples = true;
      WitnessSet pool = WitnessSet::default_pool(op.ring);
      for (const auto& t : env.options.extra_witness_texts) {
        RingElement extra = op.ring->element(t);
        if (is_regular(extra)) pool = pool.with(extra);  // declared witnesses are filtered, not trusted
      }
      cfg.witnesses = pool;
      AxiomReport report = check_axioms(op, cfg);
      rec.seed = cfg.seed;
      rec.text = report.to_string();
      rec.status = report.claimed_ok() ? "ok" : "check-failed";
      nlohmann::json results = nlohmann::json::array();
      for (const auto& r : report.results) {
        nlohmann::json jr;
        jr["axiom"] = r.axiom;
        jr["verdict"] = verdict_name(r.verdict);
        jr["samples"] = r.samples;
        jr["claimed"] = r.claimed;
        if (r.witness) {
          jr["witness"] = r.witness->to_string();
          rec.witnesses.push_back(r.axiom + ": " + r.witness->to_string());
        }
        results.push_back(jr);
      }
      rec.payload["axioms"] = results;
      rec.payload["op"] = report.op_name;
      return;
    }
    case SessionItem::Kind::cmd_check_correspondence: {
      ClosureOp op = env.resolve_closure(item.closure_text);
      CorrespondenceConfig cfg;
      cfg.seed = env.options.seed;
      cfg.max_degree = env.options.degree_bound;
      cfg.probe_degree = env.options.degree_bound;
      CorrespondenceReport report = check_correspondence(op, cfg);
      rec.seed = cfg.seed;
      rec.text = report.to_string();
      rec.status = report.ok() ? "ok" : "check-failed";
      nlohmann::json parts = nlohmann::json::array();
      for (const auto& p : report.parts) {
        nlohmann::json jp;
        jp["part"] = p.name;
        jp["passed"] = p.passed;
        jp["checks"] = p.checks;
        if (!p.failure.empty()) jp["failure"] = p.failure;
        parts.push_back(jp);
      }
      rec.payload["parts"] = parts;
      return;
    }
    case SessionItem::Kind::cmd_decompose: {
      Ideal I = env.resolve_ideal(item.args[0]);
      PrimaryDecomposition D = monomial_primary_decomposition(I);
      rec.text = D.to_string();
      nlohmann::json comps = nlohmann::json::array();
      bool any_assumed = false;
      for (const auto& c : D.components) {
        nlohmann::json jc;
        jc["primary"] = gens_json(c.primary);
        jc["prime"] = gens_json(c.prime);
        jc["p_is_prime"] = verify_status_name(c.p_is_prime);
        if (c.p_is_prime == VerifyStatus::assumed) any_assumed = true;
        comps.push_back(jc);
      }
      rec.payload["components"] = comps;
      rec.exactness = any_assumed ? "assumed-primary-components" : "exact";
      return;
    }
  }
  fail(Errc::invalid_argument, "unhandled session item");
}

}  // namespace

ExecResult execute(const Session& session, const ExecOptions& options) {
  ExecResult result;
  Environment env{options, nullptr, {}, {}, {}, {}, {}};
  for (const auto& item : session.items) {
    OutputRecord rec;
    rec.command = item.source;
    rec.status = "ok";
    rec.exactness = "exact";
    rec.seed = options.seed;
    try {
      exec_item(item, env, rec);
    } catch (const Error& e) {
      rec.status = "error";
      rec.text = std::string(e.what()) + " (line " + std::to_string(item.line) + ")";
      rec.payload["error"] = e.what();
    }
    bool bad = rec.status != "ok";
    result.records.push_back(std::move(rec));
    if (bad) {
      result.exit_code = 1;
      if (options.fail_fast) break;
    }
  }
  return result;
}

std::string render_text(const ExecResult& result) {
  std::ostringstream os;
  for (const auto& rec : result.records) {
    os << "> " << rec.command << "\n";
    if (!rec.text.empty()) {
      os << rec.text;
      if (rec.text.back() != '\n') os << "\n";
    }
    if (rec.status != "ok") os << "status: " << rec.status << "\n";
    if (rec.exactness != "exact") os << "exactness: " << rec.exactness << "\n";
    os << "\n";
  }
  return os.str();
}

std::string render_json(const ExecResult& result, const ExecOptions& options) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rec : result.records) {
    nlohmann::json jr;
    jr["command"] = rec.command;
    jr["status"] = rec.status;
    jr["exactness"] = rec.exactness;
    jr["payload"] = rec.payload;
    if (!rec.witnesses.empty()) jr["witnesses"] = rec.witnesses;
    jr["seed"] = rec.seed;
    out.push_back(jr);
  }
  (void)options;
  return out.dump(2) + "\n";
}

std::string run_session_text(std::string_view text, const ExecOptions& options, int* exit_code) {
  Session session = parse_session(text);
  ExecResult result = execute(session, options);
  if (exit_code) *exit_code = result.exit_code;
  return options.format == "json" ? render_json(result, options) : render_text(result);
}

}  // namespace opal
