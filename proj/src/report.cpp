#include "idealforge/report.hpp"

#include <algorithm>

#include "idealforge/dsl.hpp"

namespace idealforge::report {

namespace {

Json base(Json command) {
  Json r;
  r["version"] = kVersion;
  r["command"] = std::move(command);
  r["instances"] = Json::array();
  r["verdicts"] = Json::array();
  r["summary"] = Json::object();
  r["elapsed_ms"] = nullptr;
  return r;
}

Json ring_json(const Subject& s) {
  Json j;
  j["recipe"] = s.recipe;
  j["label"] = s.ring->label();
  j["order"] = s.ring->order();
  return j;
}

Json pred_witness(const Ring& ring, const PredicateVerdict& v) {
  if (v.holds) return nullptr;
  Json w = elements_json(ring, v.witness);
  if (v.predicate == predicate::superfluous) w["role"] = "generators of K";
  return w;
}

}  // namespace

Json elements_json(const Ring& ring, const std::vector<Elem>& elements) {
  Json j;
  j["indices"] = elements;
  Json labels = Json::array();
  for (Elem e : elements) labels.push_back(ring.element_label(e));
  j["labels"] = std::move(labels);
  return j;
}

Json ideal_json(const Ring& ring, const ElementSet& ideal) {
  Json j;
  j["text"] = dsl::ideal_text(ring, ideal);
  j["generators"] = elements_json(ring, generators_of(ring, ideal));
  j["size"] = ideal.count();
  return j;
}

Json witness_json(const Witness& w, bool replayed) {
  Json j;
  j["note"] = w.note;
  Json parts = Json::array();
  for (const WitnessPart& p : w.parts) {
    Json pj;
    pj["role"] = p.role;
    if (p.ring) {
      pj["ring"] = p.ring->label();
      pj[p.is_ideal ? "generators" : "elements"] = elements_json(*p.ring, p.elements);
    } else {
      pj["ring"] = nullptr;
      pj["elements"] = Json{{"indices", p.elements}};
    }
    parts.push_back(std::move(pj));
  }
  j["parts"] = std::move(parts);
  j["replayed"] = replayed;
  return j;
}

Json classify(const ClassifyInput& in) {
  Json r = base(Json{{"name", "classify"}, {"ring", in.ring_text}, {"ideal", in.ideal_text}});
  const Ring& ring = *in.subject->ring;
  Json inst = ring_json(*in.subject);
  inst["ideal"] = ideal_json(ring, in.ideal->members());
  r["instances"].push_back(std::move(inst));
  for (const PredicateVerdict& v : in.verdicts->verdicts) {
    Json vj;
    vj["predicate"] = v.predicate;
    vj["holds"] = v.holds;
    vj["vacuous"] = false;
    vj["witness"] = pred_witness(ring, v);
    r["verdicts"].push_back(std::move(vj));
  }
  Json& s = r["summary"];
  s["in_jacobson"] = in.verdicts->in_jacobson;
  s["in_nilradical"] = in.verdicts->in_nilradical;
  s["square_zero"] = in.verdicts->square_zero;
  const StrongZeroDivisors& sz = *in.strong_zero_divisors;
  Json szj = elements_json(*sz.quotient.ring, sz.cosets.members());
  szj["quotient"] = sz.quotient.ring->label();
  s["strong_zero_divisors"] = std::move(szj);
  return r;
}

Json verify(const VerifyInput& in) {
  Json r = base(Json{{"name", "verify"}, {"suite", in.suite}, {"corpus", in.corpus}, {"all_verdicts", in.all_verdicts}});
  for (std::size_t i = 0; i < in.subjects->size(); ++i) {
    Json j = ring_json((*in.subjects)[i]);
    j["index"] = i;
    r["instances"].push_back(std::move(j));
  }
  std::size_t total_failures = 0;
  for (const TheoremVerdict& v : in.result->verdicts) {
    total_failures += v.failures;
    if (!in.all_verdicts && v.failures == 0 && v.guard_outside == 0) continue;
    Json vj;
    vj["theorem_id"] = v.theorem_id;
    vj["subject"] = v.subject_index;
    vj["instance"] = v.subject;
    vj["holds"] = v.holds();
    vj["vacuous"] = v.vacuous();
    vj["checked"] = v.checked;
    vj["nonvacuous"] = v.nonvacuous;
    vj["failures"] = v.failures;
    vj["guard_outside"] = v.guard_outside;
    vj["witness"] = v.witness ? witness_json(*v.witness, v.replayed) : Json(nullptr);
    r["verdicts"].push_back(std::move(vj));
  }
  Json theorems = Json::array();
  for (const TheoremSummary& t : in.result->summary) {
    Json tj;
    tj["theorem_id"] = t.theorem_id;
    tj["subjects"] = t.subjects;
    tj["checked"] = t.checked;
    tj["vacuous"] = t.checked - t.nonvacuous;
    tj["nonvacuous"] = t.nonvacuous;
    tj["passed"] = t.nonvacuous - t.failures;
    tj["failures"] = t.failures;
    tj["guard_outside"] = t.guard_outside;
    theorems.push_back(std::move(tj));
  }
  Json& s = r["summary"];
  s["theorems"] = std::move(theorems);
  s["total_failures"] = total_failures;
  Json diags = Json::array();
  if (in.corpus_diagnostics) {
    for (const auto& d : *in.corpus_diagnostics) diags.push_back(d);
  }
  for (const auto& d : in.result->diagnostics) diags.push_back(d);
  s["diagnostics"] = std::move(diags);
  return r;
}

Json search(const SearchInput& in) {
  Json r = base(Json{{"name", "search"}, {"where", in.where}, {"corpus", in.corpus}, {"limit", in.limit}});
  std::vector<std::size_t> seen;
  for (const SearchHit& h : *in.hits) {
    if (std::find(seen.begin(), seen.end(), h.subject_index) == seen.end()) {
      seen.push_back(h.subject_index);
      Json j = ring_json((*in.subjects)[h.subject_index]);
      j["index"] = h.subject_index;
      r["instances"].push_back(std::move(j));
    }
    Json vj;
    vj["predicate"] = in.where;
    vj["holds"] = true;
    vj["vacuous"] = false;
    vj["subject"] = h.subject_index;
    vj["instance"] = h.subject;
    Json bindings = Json::array();
    for (const SearchBinding& b : h.bindings) {
      Json bj = ideal_json(*b.ring, b.ideal);
      bj = Json{{"variable", b.variable}, {"ring", b.ring->label()}, {"ideal", std::move(bj)}};
      bindings.push_back(std::move(bj));
    }
    vj["witness"] = Json{{"bindings", std::move(bindings)}};
    r["verdicts"].push_back(std::move(vj));
  }
  r["summary"]["hits"] = in.hits->size();
  r["summary"]["subjects"] = in.subjects->size();
  return r;
}

Json enumerate_ring(const std::string& ring_text, const Subject& subject) {
  Json r = base(Json{{"name", "enumerate"}, {"ring", ring_text}});
  const Ring& ring = *subject.ring;
  const Lattice& lat = lattice(ring);
  r["instances"].push_back(ring_json(subject));
  Json ideals = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json j = ideal_json(ring, lat.ideals[i]);
    j["index"] = i;
    j["principal"] = static_cast<bool>(lat.principal[i]);
    j["maximal"] = std::find(lat.maximal.begin(), lat.maximal.end(), i) != lat.maximal.end();
    ideals.push_back(std::move(j));
  }
  Json& s = r["summary"];
  s["ideals"] = std::move(ideals);
  s["units"] = lat.units.count();
  s["jacobson"] = ideal_json(ring, lat.jacobson);
  s["nilradical"] = ideal_json(ring, lat.nilradical);
  s["quasi_local"] = lat.maximal.size() == 1;
  s["presimplifiable"] = is_presimplifiable(ring);
  s["quasi_presimplifiable"] = is_quasi_presimplifiable(ring);
  return r;
}

Json enumerate_corpus(const std::string& corpus, const std::vector<Subject>& subjects,
                      const std::vector<std::string>& diagnostics) {
  Json r = base(Json{{"name", "enumerate"}, {"corpus", corpus}});
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    Json j = ring_json(subjects[i]);
    j["index"] = i;
    j["ideals"] = lattice(*subjects[i].ring).size();
    r["instances"].push_back(std::move(j));
  }
  r["summary"]["subjects"] = subjects.size();
  r["summary"]["diagnostics"] = diagnostics;
  return r;
}

void set_elapsed(Json& report, std::optional<double> ms) {
  report["elapsed_ms"] = ms ? Json(*ms) : Json(nullptr);
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace idealforge::report
