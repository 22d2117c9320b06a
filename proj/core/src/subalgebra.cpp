#include "esakia/subalgebra.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "esakia/errors.hpp"
#include "esakia/heyting.hpp"
#include "esakia/types.hpp"

namespace esakia {

std::vector<PointSet> lattice_closure(const Poset& p, std::span<const PointSet> s, const Budget& budget) {
  std::vector<PointSet> elems;
  std::set<PointSet> seen;
  auto add = [&](const PointSet& x) {
    if (!seen.insert(x).second) return;
    if (elems.size() >= budget.max_upsets)
      throw BudgetExceeded("lattice closure exceeds " + std::to_string(budget.max_upsets) + " elements");
    elems.push_back(x);
  };
  add(PointSet{});
  add(p.all());
  for (const auto& x : s) {
    p.check_members(x);
    add(x);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const PointSet a = elems[i];
      const PointSet b = elems[j];
      add(a & b);
      add(a | b);
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::size_t> RankedAlgebra::id_of(const PointSet& s) const {
  auto it = ids_.find(s);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<PointSet> RankedAlgebra::stratum(std::size_t n) const {
  std::vector<PointSet> out;
  for (std::size_t id = 0; id < elements_.size(); ++id)
    if (ranks_[id] <= n) out.push_back(elements_[id]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> RankedAlgebra::rank_of(const Upset& u) const {
  if (!u.parent().same_as(parent_)) throw PosetMismatch();
  auto id = id_of(u.members());
  if (!id) return std::nullopt;
  return ranks_[*id];
}

std::string RankedAlgebra::witness_text(std::size_t id) const {
  const Term& t = terms_.at(id);
  switch (t.kind) {
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::One:
      return "1";
    case Term::Kind::Generator:
      return "g" + std::to_string(t.generator);
    case Term::Kind::Meet:
      return "(and " + witness_text(t.lhs) + " " + witness_text(t.rhs) + ")";
    case Term::Kind::Join:
      return "(or " + witness_text(t.lhs) + " " + witness_text(t.rhs) + ")";
    case Term::Kind::Implies:
      return "(-> " + witness_text(t.lhs) + " " + witness_text(t.rhs) + ")";
  }
  return {};
}

std::size_t RankedAlgebra::witness_rank(std::size_t id) const {
  std::vector<std::optional<std::size_t>> memo(elements_.size());
  auto go = [&](auto&& self, std::size_t i) -> std::size_t {
    if (memo[i]) return *memo[i];
    const Term& t = terms_[i];
    std::size_t r = 0;
    switch (t.kind) {
      case Term::Kind::Zero:
      case Term::Kind::One:
      case Term::Kind::Generator:
        r = 0;
        break;
      case Term::Kind::Meet:
      case Term::Kind::Join:
        r = std::max(self(self, t.lhs), self(self, t.rhs));
        break;
      case Term::Kind::Implies:
        r = std::max(self(self, t.lhs), self(self, t.rhs)) + 1;
        break;
    }
    memo[i] = r;
    return r;
  };
  return go(go, id);
}

Upset RankedAlgebra::evaluate_witness(std::size_t id) const {
  std::vector<std::optional<Upset>> memo(elements_.size());
  auto go = [&](auto&& self, std::size_t i) -> Upset {
    if (memo[i]) return *memo[i];
    const Term& t = terms_[i];
    Upset out = Upset::empty(parent_);
    switch (t.kind) {
      case Term::Kind::Zero:
        break;
      case Term::Kind::One:
        out = Upset::full(parent_);
        break;
      case Term::Kind::Generator:
        out = Upset(parent_, generators_.at(t.generator));
        break;
      case Term::Kind::Meet:
        out = meet(self(self, t.lhs), self(self, t.rhs));
        break;
      case Term::Kind::Join:
        out = join(self(self, t.lhs), self(self, t.rhs));
        break;
      case Term::Kind::Implies:
        out = implies(self(self, t.lhs), self(self, t.rhs));
        break;
    }
    memo[i] = out;
    return out;
  };
  return go(go, id);
}

RankedAlgebra generate(const Poset& p, std::span<const PointSet> generators, const Budget& budget) {
  for (const auto& g : generators) Upset(p, g);  // validates membership and up-closure

  RankedAlgebra ra(p);
  ra.generators_.assign(generators.begin(), generators.end());

  auto add = [&](const PointSet& s, std::size_t rank, Term term) {
    if (ra.ids_.contains(s)) return;
    if (ra.elements_.size() >= budget.max_upsets)
      throw BudgetExceeded("generated subalgebra exceeds " + std::to_string(budget.max_upsets) + " elements");
    const std::size_t id = ra.elements_.size();
    ra.ids_.emplace(s, id);
    ra.elements_.push_back(s);
    ra.ranks_.push_back(rank);
    ra.terms_.push_back(term);
  };
  // Pairs (j, i) with j <= i are combined once i is reached; new elements join the queue.
  auto close_lattice = [&](std::size_t from, std::size_t rank) {
    for (std::size_t i = from; i < ra.elements_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const PointSet a = ra.elements_[j];
        const PointSet b = ra.elements_[i];
        const auto lhs = static_cast<std::uint32_t>(j);
        const auto rhs = static_cast<std::uint32_t>(i);
        add(a & b, rank, Term{Term::Kind::Meet, 0, lhs, rhs});
        add(a | b, rank, Term{Term::Kind::Join, 0, lhs, rhs});
      }
    }
  };

  add(PointSet{}, 0, Term{Term::Kind::Zero});
  add(p.all(), 0, Term{Term::Kind::One});
  for (std::size_t i = 0; i < generators.size(); ++i)
    add(generators[i], 0, Term{Term::Kind::Generator, static_cast<std::uint32_t>(i)});
  close_lattice(0, 0);
  ra.stratum_sizes_.push_back(ra.elements_.size());

  // Implications between two members of S_{n-1} already landed in S_n.
  std::size_t previous_end = 0;
  for (std::size_t rank = 1;; ++rank) {
    const std::size_t current_end = ra.elements_.size();
    for (std::size_t a = 0; a < current_end; ++a) {
      for (std::size_t b = 0; b < current_end; ++b) {
        if (a < previous_end && b < previous_end) continue;
        add(implies_set(p, ra.elements_[a], ra.elements_[b]), rank,
            Term{Term::Kind::Implies, 0, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
      }
    }
    close_lattice(current_end, rank);
    if (ra.elements_.size() == current_end) break;
    ra.stratum_sizes_.push_back(ra.elements_.size());
    previous_end = current_end;
  }
  ra.closed_ = true;
  return ra;
}

RankedAlgebra generate(const Poset& p, std::span<const Upset> generators, const Budget& budget) {
  std::vector<PointSet> sets;
  for (const auto& g : generators) {
    if (!g.parent().same_as(p)) throw PosetMismatch();
    sets.push_back(g.members());
  }
  return generate(p, sets, budget);
}

bool check_rank_type_lemma(const Poset& p, std::span<const PointSet> generators, std::size_t n,
                           const Budget& budget) {
  const RankedAlgebra ra = generate(p, generators, budget);
  const auto by_types = stage_partition(p, generators, n);
  const auto stratum = ra.stratum(n);
  const auto by_membership = initial_partition(p, stratum);
  return by_types.same_blocks(by_membership);
}

DualityCheck check_duality_theorem(const Poset& p, std::span<const PointSet> generators, const Budget& budget) {
  DualityCheck out;
  out.generated_size = generate(p, generators, budget).size();
  out.upset_count = enumerate_upset_sets(p, budget).size();
  out.generates_all = out.generated_size == out.upset_count;
  out.coloured = is_coloured(p, generators);
  return out;
}

}  // namespace esakia
