#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "idealforge/element_set.hpp"
#include "idealforge/ring.hpp"

namespace idealforge {

class Ideal;

struct ModuleData {
  RingPtr ring;
  std::size_t order = 0;
  std::vector<Elem> add;     // order * order
  std::vector<Elem> action;  // ring order * order: (r, x) -> r.x
  Elem zero = 0;
  std::string label;
  std::vector<std::string> element_labels;
};

// A finite module over a RingTable, given by its group table and the action
// table.
class ModuleTable {
 public:
  explicit ModuleTable(ModuleData data);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return m_; }
  Elem zero() const noexcept { return zero_; }
  Elem add(Elem x, Elem y) const noexcept { return add_[std::size_t{x} * m_ + y]; }
  Elem neg(Elem x) const noexcept { return neg_[x]; }
  Elem act(Elem r, Elem x) const noexcept { return action_[std::size_t{r} * m_ + x]; }
  const Elem* act_row(Elem r) const noexcept { return action_.data() + std::size_t{r} * m_; }
  const Elem* add_row(Elem x) const noexcept { return add_.data() + std::size_t{x} * m_; }

  const std::string& label() const noexcept { return label_; }
  std::string element_label(Elem x) const;

 private:
  RingPtr ring_;
  std::size_t m_;
  std::vector<Elem> add_;
  std::vector<Elem> action_;
  std::vector<Elem> neg_;
  Elem zero_;
  std::string label_;
  std::vector<std::string> labels_;
};

using ModulePtr = std::shared_ptr<const ModuleTable>;

// Checks the group axioms and the action laws; throws Error{module_violation}.
ModulePtr validate_module(ModuleData data);
ModulePtr make_module(ModuleData data);

// R as a module over itself.
ModulePtr regular_module(const RingPtr& ring);
// Z_m over Z_n for m | n, acting by residue multiplication.
ModulePtr zn_module(const RingPtr& zn, unsigned m);
// The cyclic module R/K.
ModulePtr quotient_module(const Ideal& k);
ModulePtr zero_module(const RingPtr& ring);

ElementSet submodule_generated(const ModuleTable& module, std::span<const Elem> generators);
std::vector<ElementSet> submodules(const ModuleTable& module);
bool is_submodule(const ModuleTable& module, const ElementSet& subset);

// IM: the submodule generated by {i.x}.
ElementSet ideal_times_module(const Ideal& ideal, const ModuleTable& module);

// Ann(M) = {r : r.x = 0 for all x}.
ElementSet module_annihilator(const ModuleTable& module);

}  // namespace idealforge
