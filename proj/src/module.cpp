#include "idealforge/module.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "idealforge/error.hpp"
#include "idealforge/ideal.hpp"

namespace idealforge {

ModuleTable::ModuleTable(ModuleData data)
    : ring_(std::move(data.ring)),
      m_(data.order),
      add_(std::move(data.add)),
      action_(std::move(data.action)),
      neg_(data.order, 0),
      zero_(data.zero),
      label_(std::move(data.label)),
      labels_(std::move(data.element_labels)) {
  for (std::size_t x = 0; x < m_; ++x) {
    for (std::size_t y = 0; y < m_; ++y) {
      if (add_[x * m_ + y] == zero_) {
        neg_[x] = static_cast<Elem>(y);
        break;
      }
    }
  }
}

std::string ModuleTable::element_label(Elem x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

ModulePtr make_module(ModuleData data) { return std::make_shared<const ModuleTable>(std::move(data)); }

ModulePtr validate_module(ModuleData data) {
  const std::size_t m = data.order;
  const Ring& r = *data.ring;
  const std::size_t n = r.order();
  auto fail = [](const std::string& law, std::vector<std::size_t> w) {
    throw Error(ErrorKind::module_violation, "module law violated: " + law, law, std::move(w));
  };
  if (m == 0 || data.add.size() != m * m || data.action.size() != n * m) fail("table-shape", {});
  if (data.zero >= m) fail("zero-in-range", {});
  for (Elem e : data.add) {
    if (e >= m) fail("closure", {});
  }
  for (Elem e : data.action) {
    if (e >= m) fail("closure", {});
  }
  auto add = [&](std::size_t x, std::size_t y) -> std::size_t { return data.add[x * m + y]; };
  auto act = [&](std::size_t a, std::size_t x) -> std::size_t { return data.action[a * m + x]; };
  for (std::size_t x = 0; x < m; ++x) {
    if (add(x, data.zero) != x) fail("additive-identity", {x});
    bool inverse = false;
    for (std::size_t y = 0; y < m; ++y) {
      if (add(x, y) != add(y, x)) fail("additive-commutativity", {x, y});
      if (add(x, y) == data.zero) inverse = true;
      for (std::size_t z = 0; z < m; ++z) {
        if (add(add(x, y), z) != add(x, add(y, z))) fail("additive-associativity", {x, y, z});
      }
    }
    if (!inverse) fail("additive-inverse", {x});
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (act(r.one(), x) != x) fail("unital-action", {x});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Elem>(a);
      const auto eb = static_cast<Elem>(b);
      for (std::size_t x = 0; x < m; ++x) {
        if (act(r.add(ea, eb), x) != add(act(a, x), act(b, x))) fail("additive-in-ring", {a, b, x});
        if (act(r.mul(ea, eb), x) != act(a, act(b, x))) fail("compatible-action", {a, b, x});
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (act(a, add(x, y)) != add(act(a, x), act(a, y))) fail("additive-in-module", {a, x, y});
      }
    }
  }
  return make_module(std::move(data));
}

ModulePtr regular_module(const RingPtr& ring) {
  ModuleData d;
  d.ring = ring;
  d.order = ring->order();
  d.add.assign(ring->add_table().begin(), ring->add_table().end());
  d.action.assign(ring->mul_table().begin(), ring->mul_table().end());
  d.zero = ring->zero();
  d.label = "mod(" + ring->label() + ")";
  for (std::size_t x = 0; x < d.order; ++x) d.element_labels.push_back(ring->element_label(static_cast<Elem>(x)));
  return make_module(std::move(d));
}

ModulePtr zn_module(const RingPtr& zn, unsigned m) {
  const auto modulus = zn->zn_modulus();
  if (!modulus) throw Error(ErrorKind::module_violation, "Z_m modules need a Z_n base ring", "base");
  const unsigned n = *modulus;
  if (m == 0 || n % m != 0) {
    throw Error(ErrorKind::module_violation,
                "Z" + std::to_string(m) + " is not a module over Z" + std::to_string(n) + " (m must divide n)",
                "divisibility");
  }
  ModuleData d;
  d.ring = zn;
  d.order = m;
  d.add.resize(std::size_t{m} * m);
  d.action.resize(std::size_t{n} * m);
  for (unsigned x = 0; x < m; ++x) {
    for (unsigned y = 0; y < m; ++y) d.add[x * m + y] = static_cast<Elem>((x + y) % m);
  }
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned x = 0; x < m; ++x) d.action[r * m + x] = static_cast<Elem>((r % m) * x % m);
  }
  d.zero = 0;
  d.label = "mod(" + zn->label() + "," + std::to_string(m) + ")";
  return make_module(std::move(d));
}

ModulePtr quotient_module(const Ideal& k) {
  const Ring& r = k.ring();
  const std::size_t n = r.order();
  std::vector<std::int32_t> coset(n, -1);
  std::vector<Elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const auto id = static_cast<std::int32_t>(reps.size());
    reps.push_back(static_cast<Elem>(a));
    k.members().for_each([&](Elem x) { coset[r.add(static_cast<Elem>(a), x)] = id; });
  }
  const std::size_t m = reps.size();
  ModuleData d;
  d.ring = k.ring_ptr();
  d.order = m;
  d.add.resize(m * m);
  d.action.resize(n * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) d.add[x * m + y] = static_cast<Elem>(coset[r.add(reps[x], reps[y])]);
    d.element_labels.push_back("[" + r.element_label(reps[x]) + "]");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < m; ++x) {
      d.action[a * m + x] = static_cast<Elem>(coset[r.mul(static_cast<Elem>(a), reps[x])]);
    }
  }
  d.zero = static_cast<Elem>(coset[r.zero()]);
  d.label = r.label() + "/K";
  return make_module(std::move(d));
}

ModulePtr zero_module(const RingPtr& ring) {
  ModuleData d;
  d.ring = ring;
  d.order = 1;
  d.add = {0};
  d.action.assign(ring->order(), 0);
  d.zero = 0;
  d.label = "0";
  return make_module(std::move(d));
}

ElementSet submodule_generated(const ModuleTable& module, std::span<const Elem> generators) {
  const std::size_t m = module.order();
  const std::size_t n = module.ring()->order();
  ElementSet out(m);
  out.set(module.zero());
  std::vector<Elem> frontier;
  for (Elem g : generators) {
    for (std::size_t r = 0; r < n; ++r) {
      const Elem x = module.act(static_cast<Elem>(r), g);
      if (!out.test(x)) {
        out.set(x);
        frontier.push_back(x);
      }
    }
  }
  // Additive closure of a set closed under the action is a submodule.
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    for (Elem y : out.members()) {
      const Elem s = module.add(x, y);
      if (!out.test(s)) {
        out.set(s);
        frontier.push_back(s);
      }
    }
  }
  return out;
}

bool is_submodule(const ModuleTable& module, const ElementSet& subset) {
  if (!subset.test(module.zero())) return false;
  const std::size_t n = module.ring()->order();
  bool ok = true;
  subset.for_each([&](Elem x) {
    if (!ok) return;
    subset.for_each([&](Elem y) {
      if (ok && !subset.test(module.add(x, y))) ok = false;
    });
    for (std::size_t r = 0; r < n && ok; ++r) ok = subset.test(module.act(static_cast<Elem>(r), x));
  });
  return ok;
}

std::vector<ElementSet> submodules(const ModuleTable& module) {
  const std::size_t m = module.order();
  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet s) {
    if (seen.emplace(s, found.size()).second) found.push_back(std::move(s));
  };
  std::vector<ElementSet> cyclic;
  for (std::size_t x = 0; x < m; ++x) {
    const Elem g = static_cast<Elem>(x);
    cyclic.push_back(submodule_generated(module, std::span<const Elem>(&g, 1)));
    add(cyclic.back());
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t x = 0; x < m; ++x) {
      if (found[i].test(x)) continue;
      std::vector<Elem> gens = found[i].members();
      gens.push_back(static_cast<Elem>(x));
      add(submodule_generated(module, gens));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const ElementSet& a, const ElementSet& b) { return canonical_order(a, b) < 0; });
  return found;
}

ElementSet ideal_times_module(const Ideal& ideal, const ModuleTable& module) {
  std::vector<Elem> products;
  ideal.members().for_each([&](Elem i) {
    for (std::size_t x = 0; x < module.order(); ++x) products.push_back(module.act(i, static_cast<Elem>(x)));
  });
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());
  return submodule_generated(module, products);
}

ElementSet module_annihilator(const ModuleTable& module) {
  const std::size_t n = module.ring()->order();
  ElementSet out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Elem* row = module.act_row(static_cast<Elem>(r));
    bool kills = true;
    for (std::size_t x = 0; x < module.order() && kills; ++x) kills = row[x] == module.zero();
    if (kills) out.set(r);
  }
  return out;
}

}  // namespace idealforge
