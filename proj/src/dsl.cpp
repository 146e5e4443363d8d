#include "idealforge/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <optional>

namespace idealforge::dsl {

namespace {

enum class Tok {
  Z, X, Int, LParen, RParen, LAngle, RAngle, LBrace, RBrace, Comma, Slash, Bowtie, OPlus,
  Amalg, Loc, Poly, Mod, Id, Proj, Table, End,
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::Z: return "'Z'";
    case Tok::X: return "'x'";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Slash: return "'/'";
    case Tok::Bowtie: return "'><'";
    case Tok::OPlus: return "'(+)'";
    case Tok::Amalg: return "'amalg'";
    case Tok::Loc: return "'loc'";
    case Tok::Poly: return "'poly'";
    case Tok::Mod: return "'mod'";
    case Tok::Id: return "'id'";
    case Tok::Proj: return "'proj'";
    case Tok::Table: return "'table'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  Span span;
  std::uint64_t value = 0;
};

constexpr std::uint64_t kMaxInt = 1'000'000'000;

[[noreturn]] void fail(std::string_view text, Span span, std::string message, std::vector<std::string> expected) {
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  throw DslError(ErrorKind::syntax_error, Diagnostic{span, position_of(text, span.begin), std::move(expected),
                                                     std::move(message)});
}

std::vector<Token> lex(std::string_view text) {
  if (text.size() > kMaxInput) {
    fail(text, {kMaxInput, text.size()}, "input longer than " + std::to_string(kMaxInput) + " bytes", {});
  }
  static constexpr std::array<std::pair<std::string_view, Tok>, 7> keywords{{
      {"amalg", Tok::Amalg}, {"loc", Tok::Loc}, {"poly", Tok::Poly}, {"mod", Tok::Mod},
      {"id", Tok::Id}, {"proj", Tok::Proj}, {"table", Tok::Table},
  }};
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto single = [&](Tok t, std::size_t len) {
    out.push_back({t, {i, i + len}});
    i += len;
  };
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > kMaxInt) fail(text, {start, i + 1}, "integer literal too large", {});
        ++i;
      }
      out.push_back({Tok::Int, {start, i}, v});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      const std::string_view word = text.substr(start, i - start);
      auto kw = std::find_if(keywords.begin(), keywords.end(), [&](const auto& k) { return k.first == word; });
      if (kw != keywords.end()) {
        out.push_back({kw->second, {start, i}});
        continue;
      }
      // "Z6xZ3": runs of letters outside the keywords split into Z and x.
      for (std::size_t j = start; j < i; ++j) {
        if (text[j] == 'Z') {
          out.push_back({Tok::Z, {j, j + 1}});
        } else if (text[j] == 'x') {
          out.push_back({Tok::X, {j, j + 1}});
        } else {
          fail(text, {start, i}, "unknown word '" + std::string(word) + "'",
               {"'Z'", "'x'", "'amalg'", "'loc'", "'poly'", "'mod'", "'id'", "'proj'", "'table'"});
        }
      }
    } else if (c == '(' && text.substr(i, 3) == "(+)") {
      single(Tok::OPlus, 3);
    } else if (c == '>' && i + 1 < n && text[i + 1] == '<') {
      single(Tok::Bowtie, 2);
    } else {
      switch (c) {
        case '(': single(Tok::LParen, 1); break;
        case ')': single(Tok::RParen, 1); break;
        case '<': single(Tok::LAngle, 1); break;
        case '>': single(Tok::RAngle, 1); break;
        case '{': single(Tok::LBrace, 1); break;
        case '}': single(Tok::RBrace, 1); break;
        case ',': single(Tok::Comma, 1); break;
        case '/': single(Tok::Slash, 1); break;
        default:
          fail(text, {i, i + 1}, std::string("unexpected character '") + c + "'", {});
      }
    }
  }
  out.push_back({Tok::End, {n, n}});
  return out;
}

Span join(Span a, Span b) { return {std::min(a.begin, b.begin), std::max(a.end, b.end)}; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

  Node ring_top() {
    Node r = ring();
    expect_end({Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus});
    return r;
  }
  Node ideal_top() {
    Node r = ideal();
    expect_end({});
    return r;
  }
  Node set_top() {
    Node r = set();
    expect_end({});
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void unexpected(std::initializer_list<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.push_back(tok_name(t));
    const Token& t = peek();
    const std::string found =
        t.kind == Tok::End ? "end of input" : "'" + std::string(text_.substr(t.span.begin, t.span.end - t.span.begin)) + "'";
    fail(text_, t.span, "unexpected " + found, std::move(names));
  }

  const Token& expect(Tok t, std::initializer_list<Tok> also = {}) {
    if (!at(t)) {
      std::vector<Tok> all(also);
      all.push_back(t);
      std::vector<std::string> names;
      for (Tok k : all) names.push_back(tok_name(k));
      const Token& got = peek();
      const std::string found = got.kind == Tok::End
                                    ? "end of input"
                                    : "'" + std::string(text_.substr(got.span.begin, got.span.end - got.span.begin)) + "'";
      fail(text_, got.span, "unexpected " + found, std::move(names));
    }
    return take();
  }

  void expect_end(std::initializer_list<Tok> also) { expect(Tok::End, also); }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) fail(p.text_, p.peek().span, "expression nested too deeply", {});
    }
    ~DepthGuard() { --p.depth_; }
  };

  static Node make(NodeKind kind, Span span, std::vector<Node> children = {}) {
    Node n;
    n.kind = kind;
    n.span = span;
    n.children = std::move(children);
    return n;
  }

  Node ring() {
    DepthGuard g(*this);
    Node left = term();
    while (at(Tok::X)) {
      take();
      Node right = term();
      const Span s = join(left.span, right.span);
      left = make(NodeKind::Product, s, {std::move(left), std::move(right)});
    }
    return left;
  }

  Node term() {
    Node base = atom();
    for (;;) {
      if (at(Tok::Slash)) {
        take();
        Node i = ideal();
        const Span s = join(base.span, i.span);
        base = make(NodeKind::Quotient, s, {std::move(base), std::move(i)});
      } else if (at(Tok::Bowtie)) {
        take();
        Node i = ideal();
        const Span s = join(base.span, i.span);
        base = make(NodeKind::Duplicate, s, {std::move(base), std::move(i)});
      } else if (at(Tok::OPlus)) {
        take();
        Node m = module();
        const Span s = join(base.span, m.span);
        base = make(NodeKind::Idealize, s, {std::move(base), std::move(m)});
      } else {
        return base;
      }
    }
  }

  std::uint64_t integer(Span* span = nullptr) {
    const Token& t = expect(Tok::Int);
    if (span) *span = t.span;
    return t.value;
  }

  Node atom() {
    DepthGuard g(*this);
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Z: {
        take();
        Span is;
        const std::uint64_t n = integer(&is);
        Node z = make(NodeKind::ZnLit, join(t.span, is));
        z.value = n;
        return z;
      }
      case Tok::LParen: {
        take();
        Node r = ring();
        const Token& close = expect(Tok::RParen, {Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus});
        r.span = join(t.span, close.span);
        return r;
      }
      case Tok::Amalg: {
        take();
        expect(Tok::LParen);
        Node r = ring();
        expect(Tok::Comma, {Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus});
        Node s = ring();
        expect(Tok::Comma, {Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus});
        Node h = hom();
        expect(Tok::Comma);
        Node j = ideal();
        const Token& close = expect(Tok::RParen);
        return make(NodeKind::Amalgam, join(t.span, close.span), {std::move(r), std::move(s), std::move(h), std::move(j)});
      }
      case Tok::Loc: {
        take();
        expect(Tok::LParen);
        Node r = ring();
        expect(Tok::Comma, {Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus});
        Node s = set();
        const Token& close = expect(Tok::RParen);
        return make(NodeKind::Localize, join(t.span, close.span), {std::move(r), std::move(s)});
      }
      case Tok::Poly: {
        take();
        expect(Tok::LParen);
        Node r = ring();
        expect(Tok::Comma, {Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus});
        const std::uint64_t k = integer();
        const Token& close = expect(Tok::RParen);
        Node p = make(NodeKind::TruncPoly, join(t.span, close.span), {std::move(r)});
        p.value = k;
        return p;
      }
      default:
        unexpected({Tok::Z, Tok::LParen, Tok::Amalg, Tok::Loc, Tok::Poly});
    }
  }

  Node element() {
    DepthGuard g(*this);
    if (at(Tok::Int)) {
      const Token& t = take();
      Node n = make(NodeKind::IntLit, t.span);
      n.value = t.value;
      return n;
    }
    if (at(Tok::LParen)) {
      const Token& open = take();
      Node a = element();
      expect(Tok::Comma);
      Node b = element();
      const Token& close = expect(Tok::RParen);
      return make(NodeKind::Pair, join(open.span, close.span), {std::move(a), std::move(b)});
    }
    unexpected({Tok::Int, Tok::LParen});
  }

  Node ideal() {
    const Token& open = expect(Tok::LAngle);
    Node out = make(NodeKind::IdealGen, open.span);
    if (at(Tok::RAngle)) {
      out.span = join(open.span, take().span);
      return out;
    }
    out.children.push_back(element());
    while (at(Tok::Comma)) {
      take();
      out.children.push_back(element());
    }
    out.span = join(open.span, expect(Tok::RAngle, {Tok::Comma}).span);
    return out;
  }

  Node set() {
    const Token& open = expect(Tok::LBrace);
    Node out = make(NodeKind::SetLit, open.span);
    out.children.push_back(element());
    while (at(Tok::Comma)) {
      take();
      out.children.push_back(element());
    }
    out.span = join(open.span, expect(Tok::RBrace, {Tok::Comma}).span);
    return out;
  }

  Node module() {
    const Token& kw = expect(Tok::Mod);
    expect(Tok::LParen);
    Node r = ring();
    Node m = make(NodeKind::ModuleRef, kw.span, {std::move(r)});
    m.name = "self";
    if (at(Tok::Comma)) {
      take();
      m.name = "zn";
      m.value = integer();
    }
    m.span = join(kw.span, expect(Tok::RParen, {Tok::Comma, Tok::X, Tok::Slash, Tok::Bowtie, Tok::OPlus}).span);
    return m;
  }

  Node hom() {
    const Token& t = peek();
    Node h = make(NodeKind::HomRef, t.span);
    switch (t.kind) {
      case Tok::Id:
        take();
        h.name = "id";
        return h;
      case Tok::Mod:
      case Tok::Proj: {
        take();
        h.name = t.kind == Tok::Mod ? "mod" : "proj";
        Span is;
        h.value = integer(&is);
        h.span = join(t.span, is);
        return h;
      }
      case Tok::Table: {
        take();
        h.name = "table";
        expect(Tok::LParen);
        for (;;) {
          Span is;
          Node v = make(NodeKind::IntLit, {});
          v.value = integer(&is);
          v.span = is;
          h.children.push_back(std::move(v));
          if (!at(Tok::Comma)) break;
          take();
        }
        h.span = join(t.span, expect(Tok::RParen, {Tok::Comma}).span);
        return h;
      }
      default:
        unexpected({Tok::Id, Tok::Mod, Tok::Proj, Tok::Table});
    }
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

// ----- printing ---------------------------------------------------------

void print_to(const Node& n, std::string& out);

void print_list(const std::vector<Node>& items, std::string& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    print_to(items[i], out);
  }
}

void print_operand(const Node& n, std::string& out) {
  if (n.kind == NodeKind::Product) {
    out += '(';
    print_to(n, out);
    out += ')';
  } else {
    print_to(n, out);
  }
}

void print_to(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::ZnLit:
      out += "Z" + std::to_string(n.value);
      break;
    case NodeKind::Product:
      print_to(n.children[0], out);
      out += " x ";
      print_operand(n.children[1], out);
      break;
    case NodeKind::Quotient:
    case NodeKind::Duplicate:
    case NodeKind::Idealize:
      print_operand(n.children[0], out);
      out += n.kind == NodeKind::Quotient ? " / " : n.kind == NodeKind::Duplicate ? " >< " : " (+) ";
      print_to(n.children[1], out);
      break;
    case NodeKind::Amalgam:
      out += "amalg(";
      print_list(n.children, out);
      out += ')';
      break;
    case NodeKind::Localize:
      out += "loc(";
      print_list(n.children, out);
      out += ')';
      break;
    case NodeKind::TruncPoly:
      out += "poly(";
      print_to(n.children[0], out);
      out += ", " + std::to_string(n.value) + ")";
      break;
    case NodeKind::IdealGen:
      out += '<';
      print_list(n.children, out);
      out += '>';
      break;
    case NodeKind::SetLit:
      out += '{';
      print_list(n.children, out);
      out += '}';
      break;
    case NodeKind::HomRef:
      out += n.name;
      if (n.name == "mod" || n.name == "proj") out += " " + std::to_string(n.value);
      if (n.name == "table") {
        out += '(';
        print_list(n.children, out);
        out += ')';
      }
      break;
    case NodeKind::ModuleRef:
      out += "mod(";
      print_to(n.children[0], out);
      if (n.name == "zn") out += ", " + std::to_string(n.value);
      out += ')';
      break;
    case NodeKind::Pair:
      out += '(';
      print_list(n.children, out);
      out += ')';
      break;
    case NodeKind::IntLit:
      out += std::to_string(n.value);
      break;
  }
}

// ----- evaluation -------------------------------------------------------

bool same_ring(const Ring& a, const Ring& b) {
  return a.order() == b.order() && a.zero() == b.zero() && a.one() == b.one() &&
         std::equal(a.add_table().begin(), a.add_table().end(), b.add_table().begin()) &&
         std::equal(a.mul_table().begin(), a.mul_table().end(), b.mul_table().begin());
}

class Evaluator {
 public:
  Evaluator(std::string_view text, const Caps& caps) : text_(text), caps_(caps) {}

  [[noreturn]] void fail_at(const Node& n, std::string message, std::string detail = {}) const {
    throw DslError(ErrorKind::evaluation_error, Diagnostic{n.span, position_of(text_, n.span.begin), {}, std::move(message)},
                   std::move(detail));
  }

  // Runs a constructor call and attaches the node's span to any failure.
  template <class F>
  auto at(const Node& n, F&& f) const {
    try {
      return f();
    } catch (const DslError&) {
      throw;
    } catch (const Error& e) {
      std::string detail(to_string(e.kind()));
      if (!e.detail().empty()) detail += ":" + e.detail();
      fail_at(n, e.what(), std::move(detail));
    }
  }

  Subject ring(const Node& n) const {
    Subject s;
    s.recipe = print(n);
    switch (n.kind) {
      case NodeKind::ZnLit:
        s.ring = at(n, [&] {
          const auto v = static_cast<unsigned>(std::min<std::uint64_t>(n.value, caps_.direct + 1));
          return make_zn(v, caps_);
        });
        break;
      case NodeKind::Product: {
        const RingPtr a = ring(n.children[0]).ring;
        const RingPtr b = ring(n.children[1]).ring;
        s.product = at(n, [&] { return product_ring(a, b, caps_); });
        s.ring = s.product->ring;
        break;
      }
      case NodeKind::Quotient: {
        const RingPtr base = ring(n.children[0]).ring;
        const Ideal k = ideal(n.children[1], base);
        s.ring = at(n, [&] {
          if (!k.is_proper()) throw Error(ErrorKind::improper_ideal, "quotient by the whole ring");
          return quotient_ring(k, caps_).ring;
        });
        break;
      }
      case NodeKind::Duplicate: {
        const RingPtr base = ring(n.children[0]).ring;
        const Ideal j = ideal(n.children[1], base);
        s.amalgamation = at(n, [&] { return amalgamation({base, base, identity_hom(base), j}, caps_); });
        s.ring = s.amalgamation->ring;
        break;
      }
      case NodeKind::Idealize: {
        const RingPtr base = ring(n.children[0]).ring;
        const ModulePtr m = module(n.children[1], base);
        s.idealization = at(n, [&] { return idealization(base, m, caps_); });
        s.ring = s.idealization->ring;
        break;
      }
      case NodeKind::Amalgam: {
        const Subject r = ring(n.children[0]);
        const RingPtr t = ring(n.children[1]).ring;
        const RingHom f = hom(n.children[2], r, t);
        const Ideal j = ideal(n.children[3], t);
        s.amalgamation = at(n, [&] { return amalgamation({r.ring, t, f, j}, caps_); });
        s.ring = s.amalgamation->ring;
        break;
      }
      case NodeKind::Localize: {
        const RingPtr base = ring(n.children[0]).ring;
        const ElementSet members = set(n.children[1], *base);
        s.ring = at(n, [&] { return localization(MultSet{base, members}, caps_).ring; });
        break;
      }
      case NodeKind::TruncPoly: {
        const RingPtr base = ring(n.children[0]).ring;
        s.ring = at(n, [&] {
          if (n.value > 64) throw Error(ErrorKind::order_cap_exceeded, "truncation degree too large");
          return truncated_poly(base, static_cast<unsigned>(n.value), caps_);
        });
        break;
      }
      default:
        fail_at(n, "expected a ring expression, got " + std::string(to_string(n.kind)));
    }
    return s;
  }

  ModulePtr module(const Node& n, const RingPtr& base) const {
    if (n.kind != NodeKind::ModuleRef) fail_at(n, "expected a module expression");
    const RingPtr r = ring(n.children[0]).ring;
    if (!same_ring(*r, *base)) fail_at(n, "module ring " + print(n.children[0]) + " differs from the base ring", "ring_mismatch");
    if (n.name == "self") return regular_module(base);
    return at(n, [&] {
      if (!base->zn_modulus()) throw Error(ErrorKind::module_violation, "mod(R, m) needs R = Z_n");
      if (n.value < 1 || n.value > caps_.direct) throw Error(ErrorKind::order_out_of_range, "module order out of range");
      return zn_module(base, static_cast<unsigned>(n.value));
    });
  }

  RingHom hom(const Node& n, const Subject& source, const RingPtr& target) const {
    const RingPtr& r = source.ring;
    std::vector<Elem> map(r->order());
    if (n.name == "id") {
      if (!same_ring(*r, *target)) fail_at(n, "id needs equal source and target rings", "ring_mismatch");
      std::iota(map.begin(), map.end(), Elem{0});
    } else if (n.name == "mod") {
      const auto sm = target->zn_modulus();
      if (!r->zn_modulus() || !sm || *sm != n.value) {
        fail_at(n, "mod " + std::to_string(n.value) + " needs Z_n -> Z_" + std::to_string(n.value), "ring_mismatch");
      }
      for (std::size_t x = 0; x < map.size(); ++x) map[x] = static_cast<Elem>(x % n.value);
    } else if (n.name == "proj") {
      const PairLayout* p = r->pairs();
      if (!source.product || !p || (n.value != 1 && n.value != 2)) {
        fail_at(n, "proj needs a product source and index 1 or 2", "ring_mismatch");
      }
      const RingPtr& factor = n.value == 1 ? p->left : p->right;
      if (!same_ring(*factor, *target)) fail_at(n, "proj target differs from the factor", "ring_mismatch");
      for (std::size_t x = 0; x < map.size(); ++x) map[x] = n.value == 1 ? p->coords[x].first : p->coords[x].second;
    } else {
      if (n.children.size() != map.size()) {
        fail_at(n, "table needs " + std::to_string(map.size()) + " entries, got " + std::to_string(n.children.size()),
                "hom_violation");
      }
      for (std::size_t x = 0; x < map.size(); ++x) {
        if (n.children[x].value >= target->order()) {
          fail_at(n.children[x], "element index " + std::to_string(n.children[x].value) + " out of range",
                  "element_out_of_range");
        }
        map[x] = static_cast<Elem>(n.children[x].value);
      }
    }
    return at(n, [&] { return validate_hom(r, target, std::move(map)); });
  }

  Ideal ideal(const Node& n, const RingPtr& r) const {
    if (n.kind != NodeKind::IdealGen) fail_at(n, "expected an ideal expression");
    std::vector<Elem> gens;
    for (const Node& g : n.children) gens.push_back(element(g, *r));
    return at(n, [&] { return ideal_generated_by(r, gens); });
  }

  ElementSet set(const Node& n, const Ring& r) const {
    if (n.kind != NodeKind::SetLit) fail_at(n, "expected a set literal");
    ElementSet out(r.order());
    for (const Node& g : n.children) out.set(element(g, r));
    return out;
  }

  Elem element(const Node& n, const Ring& r) const {
    if (n.kind == NodeKind::IntLit) {
      if (n.value >= r.order()) {
        fail_at(n, "element index " + std::to_string(n.value) + " out of range for " + r.label() + " (order " +
                       std::to_string(r.order()) + ")",
                "element_out_of_range");
      }
      return static_cast<Elem>(n.value);
    }
    if (n.kind != NodeKind::Pair) fail_at(n, "expected an element");
    const PairLayout* p = r.pairs();
    if (!p) fail_at(n, "pair element in " + r.label() + ", which is not a ring of pairs", "element_out_of_range");
    const Elem a = element(n.children[0], *p->left);
    Elem b = 0;
    if (p->right) {
      b = element(n.children[1], *p->right);
    } else {
      const Node& m = n.children[1];
      if (m.kind != NodeKind::IntLit || m.value >= p->right_order) {
        fail_at(m, "module element out of range", "element_out_of_range");
      }
      b = static_cast<Elem>(m.value);
    }
    const auto idx = r.pair_index(a, b);
    if (!idx) fail_at(n, "pair is not an element of " + r.label(), "element_out_of_range");
    return *idx;
  }

 private:
  std::string_view text_;
  const Caps& caps_;
};

}  // namespace

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

std::string_view to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::ZnLit: return "ZnLit";
    case NodeKind::Product: return "Product";
    case NodeKind::Quotient: return "Quotient";
    case NodeKind::Idealize: return "Idealize";
    case NodeKind::Amalgam: return "Amalgam";
    case NodeKind::Duplicate: return "Duplicate";
    case NodeKind::Localize: return "Localize";
    case NodeKind::TruncPoly: return "TruncPoly";
    case NodeKind::IdealGen: return "IdealGen";
    case NodeKind::HomRef: return "HomRef";
    case NodeKind::SetLit: return "SetLit";
    case NodeKind::ModuleRef: return "ModuleRef";
    case NodeKind::Pair: return "Pair";
    case NodeKind::IntLit: return "IntLit";
  }
  return "?";
}

bool same_tree(const Node& a, const Node& b) noexcept {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_tree(a.children[i], b.children[i])) return false;
  }
  return true;
}

namespace {
std::string render(const Diagnostic& d) {
  std::string s = "line " + std::to_string(d.position.line) + ", column " + std::to_string(d.position.column) + ": " +
                  d.message;
  if (!d.expected.empty()) {
    s += "; expected ";
    for (std::size_t i = 0; i < d.expected.size(); ++i) s += (i ? ", " : "") + d.expected[i];
  }
  return s;
}
}  // namespace

DslError::DslError(ErrorKind kind, Diagnostic diagnostic, std::string detail)
    : Error(kind, render(diagnostic), std::move(detail)), diagnostic_(std::move(diagnostic)) {}

Node parse_ring(std::string_view text) { return Parser(text).ring_top(); }
Node parse_ideal(std::string_view text) { return Parser(text).ideal_top(); }
Node parse_set(std::string_view text) { return Parser(text).set_top(); }

std::string print(const Node& node) {
  std::string out;
  print_to(node, out);
  return out;
}

Subject evaluate_ring(const Node& ast, std::string_view text, const Caps& caps) {
  return Evaluator(text, caps).ring(ast);
}

Subject evaluate_ring(std::string_view text, const Caps& caps) { return evaluate_ring(parse_ring(text), text, caps); }

Ideal evaluate_ideal(const Node& ast, std::string_view text, const RingPtr& ring) {
  return Evaluator(text, default_caps()).ideal(ast, ring);
}

Ideal evaluate_ideal(std::string_view text, const RingPtr& ring) {
  return evaluate_ideal(parse_ideal(text), text, ring);
}

ElementSet evaluate_set(const Node& ast, std::string_view text, const RingPtr& ring) {
  return Evaluator(text, default_caps()).set(ast, *ring);
}

std::string element_text(const Ring& ring, Elem e) {
  const PairLayout* p = ring.pairs();
  if (!p) return std::to_string(e);
  const auto [a, b] = p->coords[e];
  return "(" + element_text(*p->left, a) + ", " + (p->right ? element_text(*p->right, b) : std::to_string(b)) + ")";
}

std::string ideal_text(const Ring& ring, const ElementSet& ideal) {
  std::string out = "<";
  const std::vector<Elem> gens = generators_of(ring, ideal);
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + element_text(ring, gens[i]);
  return out + ">";
}

Elem resolve_element(const Node& node, std::string_view text, const Ring& ring) {
  return Evaluator(text, default_caps()).element(node, ring);
}

}  // namespace idealforge::dsl
