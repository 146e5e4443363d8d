#include "idealforge/search.hpp"

#include <algorithm>
#include <cctype>
#include <memory>

#include "idealforge/dsl.hpp"

namespace idealforge {

namespace {

enum Pred : std::size_t {
  p_weakly_j, p_j, p_quasi_j, p_weakly_prime, p_prime, p_n_ideal, p_superfluous, p_spresimp, p_mult_closed,
  p_in_jacobson, p_in_nilradical, p_square_zero, p_zero, p_principal, p_maximal,
  // ring level from here
  p_quasi_local, p_presimplifiable, p_quasi_presimplifiable, p_reduced, p_semiprimitive, p_product,
  p_idealization, p_amalgamation, p_duplication, p_j_in_js,
};
constexpr std::size_t kFirstRingPred = p_quasi_local;

const std::vector<std::string_view> kNames = {
    "weaklyJ", "J", "quasiJ", "weaklyPrime", "prime", "nIdeal", "superfluous", "sPresimp", "weaklyJMultClosed",
    "inJacobson", "inNilradical", "squareZero", "zero", "principal", "maximal",
    "quasiLocal", "presimplifiable", "quasiPresimplifiable", "reduced", "semiprimitive", "product",
    "idealization", "amalgamation", "duplication", "JinJS",
};

enum class T { name, lparen, rparen, amp, bar, bang, star, plus, caret, bowtie, end };

struct Tok {
  T kind;
  std::size_t begin;
  std::size_t end;
  std::string text;
};

[[noreturn]] void malformed(std::string_view text, std::size_t begin, std::size_t end, std::string message,
                            std::vector<std::string> expected = {}) {
  throw dsl::DslError(ErrorKind::malformed_expression,
                      dsl::Diagnostic{{begin, end}, dsl::position_of(text, begin), std::move(expected), std::move(message)});
}

std::vector<Tok> lex(std::string_view text) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t s = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({T::name, s, i, std::string(text.substr(s, i - s))});
      continue;
    }
    if (c == '>' && i + 1 < text.size() && text[i + 1] == '<') {
      out.push_back({T::bowtie, i, i + 2, "><"});
      i += 2;
      continue;
    }
    T k;
    switch (c) {
      case '(': k = T::lparen; break;
      case ')': k = T::rparen; break;
      case '&': k = T::amp; break;
      case '|': k = T::bar; break;
      case '!': k = T::bang; break;
      case '*': k = T::star; break;
      case '+': k = T::plus; break;
      case '^': k = T::caret; break;
      default: malformed(text, i, i + 1, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, i + 1, std::string(1, c)});
    ++i;
  }
  out.push_back({T::end, text.size(), text.size(), ""});
  return out;
}

bool is_variable(std::string_view s) {
  return !s.empty() && s[0] == 'I' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

const std::vector<std::string_view>& predicate_names() { return kNames; }

bool PredicateExpr::needs_amalgamation() const noexcept {
  return std::any_of(var_base_.begin(), var_base_.end(), [](char b) { return b != 0; });
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text), toks_(lex(text)) {}

  std::string_view text_;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::vector<std::string> vars;
  std::vector<char> var_base;
  std::vector<PredicateExpr::Term> terms;
  std::vector<PredicateExpr::Node> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> term_spans;

  const Tok& peek() const { return toks_[pos_]; }
  bool at(T k) const { return peek().kind == k; }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    const Tok& t = peek();
    malformed(text_, t.begin, t.end, t.kind == T::end ? "unexpected end of expression" : "unexpected '" + t.text + "'",
              std::move(expected));
  }

  void enter() {
    if (++depth_ > dsl::kMaxDepth) malformed(text_, peek().begin, peek().end, "expression nested too deeply");
  }

  std::size_t push(PredicateExpr::Node n) {
    nodes.push_back(n);
    return nodes.size() - 1;
  }

  std::size_t disjunction() {
    enter();
    std::size_t lhs = conjunction();
    while (at(T::bar)) {
      ++pos_;
      const std::size_t rhs = conjunction();
      lhs = push({PredicateExpr::Node::disj, 0, 0, lhs, rhs});
    }
    --depth_;
    return lhs;
  }

  std::size_t conjunction() {
    std::size_t lhs = unary();
    while (at(T::amp)) {
      ++pos_;
      const std::size_t rhs = unary();
      lhs = push({PredicateExpr::Node::conj, 0, 0, lhs, rhs});
    }
    return lhs;
  }

  std::size_t unary() {
    enter();
    std::size_t out;
    if (at(T::bang)) {
      ++pos_;
      const std::size_t inner = unary();
      out = push({PredicateExpr::Node::negate, 0, 0, inner, 0});
    } else if (at(T::lparen)) {
      ++pos_;
      out = disjunction();
      if (!at(T::rparen)) unexpected({"')'", "'&'", "'|'"});
      ++pos_;
    } else if (at(T::name)) {
      out = atom();
    } else {
      unexpected({"predicate name", "'!'", "'('"});
    }
    --depth_;
    return out;
  }

  std::size_t atom() {
    const Tok& t = peek();
    auto it = std::find(kNames.begin(), kNames.end(), t.text);
    if (it == kNames.end()) {
      std::vector<std::string> names(kNames.begin(), kNames.end());
      malformed(text_, t.begin, t.end, "unknown predicate '" + t.text + "'", std::move(names));
    }
    ++pos_;
    const auto pred = static_cast<std::size_t>(it - kNames.begin());
    PredicateExpr::Node n{PredicateExpr::Node::pred, pred, 0, 0, 0};
    if (pred >= kFirstRingPred) {
      if (at(T::lparen)) malformed(text_, peek().begin, peek().end, "'" + t.text + "' is a ring property and takes no ideal");
      return push(n);
    }
    if (at(T::lparen)) {
      ++pos_;
      n.term = ideal_term();
      if (!at(T::rparen)) unexpected({"')'", "'*'", "'+'", "'^'"});
      ++pos_;
    } else {
      n.term = variable("I", false, t.begin, t.end);
    }
    return push(n);
  }

  std::size_t variable(const std::string& name, bool base, std::size_t b, std::size_t e) {
    auto it = std::find(vars.begin(), vars.end(), name);
    std::size_t v;
    if (it == vars.end()) {
      vars.push_back(name);
      var_base.push_back(0);
      v = vars.size() - 1;
    } else {
      v = static_cast<std::size_t>(it - vars.begin());
    }
    if (base) var_base[v] = 1;
    terms.push_back({PredicateExpr::Term::var, v, 0, 0, false});
    term_spans.emplace_back(b, e);
    return terms.size() - 1;
  }

  std::size_t push_term(PredicateExpr::Term t, std::size_t b, std::size_t e) {
    terms.push_back(t);
    term_spans.emplace_back(b, e);
    return terms.size() - 1;
  }

  std::size_t ideal_term() {
    enter();
    const std::size_t b = peek().begin;
    std::size_t lhs = ideal_factor();
    for (;;) {
      PredicateExpr::Term::Kind k;
      if (at(T::star)) {
        k = PredicateExpr::Term::product;
      } else if (at(T::plus)) {
        k = PredicateExpr::Term::sum;
      } else if (at(T::caret)) {
        k = PredicateExpr::Term::meet;
      } else {
        break;
      }
      ++pos_;
      const std::size_t rhs = ideal_factor();
      lhs = push_term({k, 0, lhs, rhs, false}, b, toks_[pos_ - 1].end);
    }
    --depth_;
    return lhs;
  }

  std::size_t ideal_factor() {
    if (at(T::lparen)) {
      ++pos_;
      const std::size_t t = ideal_term();
      if (!at(T::rparen)) unexpected({"')'", "'*'", "'+'", "'^'"});
      ++pos_;
      return t;
    }
    if (!at(T::name) || !is_variable(peek().text)) unexpected({"ideal variable (I, I1, I2, ...)", "'('"});
    const Tok& t = toks_[pos_++];
    if (at(T::bowtie)) {
      ++pos_;
      if (!at(T::name) || peek().text != "J") unexpected({"'J'"});
      const std::size_t end = toks_[pos_++].end;
      const std::size_t v = variable(t.text, true, t.begin, t.end);
      return push_term({PredicateExpr::Term::amalgamated, terms[v].var_index, v, 0, false}, t.begin, end);
    }
    return variable(t.text, false, t.begin, t.end);
  }

  // Marks every term with the ring it lives in and rejects mixtures.
  void resolve_rings() {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto& t = terms[i];
      switch (t.kind) {
        case PredicateExpr::Term::var: t.base = var_base[t.var_index] != 0; break;
        case PredicateExpr::Term::amalgamated: t.base = false; break;
        default:
          if (terms[t.lhs].base != terms[t.rhs].base) {
            malformed(text_, term_spans[i].first, term_spans[i].second,
                      "term combines ideals of the base ring and of the amalgamation");
          }
          t.base = terms[t.lhs].base;
      }
    }
  }
};

}  // namespace

PredicateExpr parse_predicate(std::string_view text) {
  if (text.size() > dsl::kMaxInput) malformed(text, 0, text.size(), "expression too long");
  ExprParser p(text);
  const std::size_t root = p.disjunction();
  if (!p.at(T::end)) p.unexpected({"'&'", "'|'", "end of expression"});
  p.resolve_rings();
  PredicateExpr e;
  e.text_ = std::string(text);
  e.root_ = root;
  e.terms_ = std::move(p.terms);
  e.nodes_ = std::move(p.nodes);
  // Enumeration order is by variable name so I1 varies slower than I2.
  std::vector<std::size_t> order(p.vars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return p.vars[a] < p.vars[b]; });
  std::vector<std::size_t> remap(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    e.vars_.push_back(p.vars[order[i]]);
    e.var_base_.push_back(p.var_base[order[i]]);
  }
  for (auto& t : e.terms_) {
    if (t.kind == PredicateExpr::Term::var || t.kind == PredicateExpr::Term::amalgamated) t.var_index = remap[t.var_index];
  }
  return e;
}

namespace {

class Evaluator {
 public:
  Evaluator(const PredicateExpr& e, RingContext& main, RingContext* base, const Subject& s)
      : e_(e), main_(main), base_(base), subject_(s) {}

  std::vector<std::size_t> assignment;

  bool eval(std::size_t node) {
    const auto& n = e_.nodes()[node];
    switch (n.kind) {
      case PredicateExpr::Node::negate: return !eval(n.lhs);
      case PredicateExpr::Node::conj: return eval(n.lhs) && eval(n.rhs);
      case PredicateExpr::Node::disj: return eval(n.lhs) || eval(n.rhs);
      case PredicateExpr::Node::pred: break;
    }
    if (n.predicate >= kFirstRingPred) return ring_pred(n.predicate);
    const auto& t = e_.terms()[n.term];
    RingContext& c = t.base ? *base_ : main_;
    return ideal_pred(n.predicate, c, term(n.term));
  }

 private:
  std::size_t term(std::size_t i) {
    const auto& t = e_.terms()[i];
    switch (t.kind) {
      case PredicateExpr::Term::var: return assignment[t.var_index];
      case PredicateExpr::Term::amalgamated: {
        const std::size_t bi = term(t.lhs);
        return main_.index_of(amalgamated_ideal_I(*subject_.amalgamation, base_->ideal(bi)).members());
      }
      default: {
        RingContext& c = t.base ? *base_ : main_;
        const std::size_t a = term(t.lhs);
        const std::size_t b = term(t.rhs);
        if (t.kind == PredicateExpr::Term::product) return c.product(a, b);
        if (t.kind == PredicateExpr::Term::sum) return c.sum(a, b);
        return c.meet(a, b);
      }
    }
  }

  bool ideal_pred(std::size_t p, RingContext& c, std::size_t i) {
    if (p == p_principal) return c.lat().principal[i];
    if (!c.proper(i)) return false;
    switch (p) {
      case p_weakly_j: return c.weakly_j(i);
      case p_j: return c.j(i);
      case p_quasi_j: return c.quasi_j(i);
      case p_weakly_prime: return c.weakly_prime(i);
      case p_prime: return c.prime(i);
      case p_n_ideal: return c.n_ideal(i);
      case p_superfluous: return c.superfluous(i);
      case p_spresimp: return c.s_presimp(i);
      case p_mult_closed:
        try {
          return is_weakly_j_mult_closed(MultSet{c.ring_ptr(), c.set(i).complement()}).holds;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::definition_precondition) throw;
          return false;
        }
      case p_in_jacobson: return c.in_jacobson(i);
      case p_in_nilradical: return c.in_nilradical(i);
      case p_square_zero: return c.product_is_zero(i, i);
      case p_zero: return i == c.zero_index();
      case p_maximal: return std::find(c.lat().maximal.begin(), c.lat().maximal.end(), i) != c.lat().maximal.end();
      default: return false;
    }
  }

  bool ring_pred(std::size_t p) {
    switch (p) {
      case p_quasi_local: return main_.quasi_local();
      case p_presimplifiable: return main_.presimplifiable();
      case p_quasi_presimplifiable: return main_.quasi_presimplifiable();
      case p_reduced: return main_.lat().nilradical.count() == 1;
      case p_semiprimitive: return main_.lat().jacobson.count() == 1;
      case p_product: return subject_.product.has_value();
      case p_idealization: return subject_.idealization.has_value();
      case p_amalgamation: return subject_.amalgamation.has_value();
      case p_duplication: {
        if (!subject_.amalgamation) return false;
        const auto& sp = subject_.amalgamation->spec;
        if (sp.base != sp.target) return false;
        const auto t = sp.hom.table();
        for (std::size_t x = 0; x < t.size(); ++x) {
          if (t[x] != x) return false;
        }
        return true;
      }
      case p_j_in_js: {
        if (!subject_.amalgamation) return false;
        const auto& sp = subject_.amalgamation->spec;
        return sp.ideal.members().subset_of(lattice(*sp.target).jacobson);
      }
      default: return false;
    }
  }

  const PredicateExpr& e_;
  RingContext& main_;
  RingContext* base_;
  const Subject& subject_;
};

}  // namespace

std::vector<SearchHit> search(const PredicateExpr& expr, const std::vector<Subject>& subjects, std::size_t limit) {
  std::vector<SearchHit> hits;
  if (limit == 0) return hits;
  const std::size_t nvars = expr.variables().size();
  for (std::size_t s = 0; s < subjects.size() && hits.size() < limit; ++s) {
    const Subject& subject = subjects[s];
    if (expr.needs_amalgamation() && !subject.amalgamation) continue;
    RingContext main(subject);
    std::unique_ptr<Subject> base_subject;
    std::unique_ptr<RingContext> base;
    if (subject.amalgamation) {
      const RingPtr& r = subject.amalgamation->spec.base;
      base_subject = std::make_unique<Subject>(Subject{r->label(), r, {}, {}, {}});
      base = std::make_unique<RingContext>(*base_subject);
    }
    Evaluator ev(expr, main, base.get(), subject);
    std::vector<std::size_t> bound(nvars);
    for (std::size_t v = 0; v < nvars; ++v) bound[v] = expr.variable_is_base(v) ? base->whole() : main.whole();
    if (std::any_of(bound.begin(), bound.end(), [](std::size_t b) { return b == 0; })) continue;
    ev.assignment.assign(nvars, 0);
    for (;;) {
      if (ev.eval(expr.root())) {
        SearchHit hit{s, subject.recipe, {}};
        for (std::size_t v = 0; v < nvars; ++v) {
          RingContext& c = expr.variable_is_base(v) ? *base : main;
          hit.bindings.push_back({expr.variables()[v], c.ring_ptr(), c.set(ev.assignment[v])});
        }
        hits.push_back(std::move(hit));
        if (hits.size() >= limit) break;
      }
      // Odometer with the last variable fastest.
      bool carry = true;
      for (std::size_t v = nvars; carry && v-- > 0;) {
        carry = ++ev.assignment[v] == bound[v];
        if (carry) ev.assignment[v] = 0;
      }
      if (carry) break;
    }
  }
  return hits;
}

}  // namespace idealforge
