#include "ccswb/equivalence.hpp"

#include <algorithm>
#include <deque>

#include "ccswb/errors.hpp"

namespace ccswb {

std::vector<StateId> tau_closure(const Lts& lts, std::span<const StateId> seed) {
  std::vector<char> seen(lts.state_count(), 0);
  std::vector<StateId> stack;
  for (StateId s : seed) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  std::vector<StateId> out;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    out.push_back(s);
    for (const auto& t : lts.outgoing(s)) {
      if (t.label.is_tau() && !seen[t.target]) {
        seen[t.target] = 1;
        stack.push_back(t.target);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dts determinize(const Lts& lts) {
  if (lts.truncated()) throw TruncatedLtsError("cannot determinize a truncated LTS");
  Dts dts;
  std::map<std::vector<StateId>, std::size_t> index;
  const StateId init = lts.initial();
  dts.macro_states.push_back(tau_closure(lts, std::span<const StateId>(&init, 1)));
  dts.transitions.emplace_back();
  index.emplace(dts.macro_states.back(), 0);

  for (std::size_t m = 0; m < dts.macro_states.size(); ++m) {
    std::map<GroundLabel, std::vector<StateId>> post;
    for (StateId s : dts.macro_states[m]) {
      for (const auto& t : lts.outgoing(s)) {
        if (!t.label.is_tau()) post[t.label].push_back(t.target);
      }
    }
    for (auto& [label, targets] : post) {
      std::vector<StateId> closed = tau_closure(lts, targets);
      auto [it, inserted] = index.emplace(std::move(closed), dts.macro_states.size());
      if (inserted) {
        dts.macro_states.push_back(it->first);
        dts.transitions.emplace_back();
      }
      dts.transitions[m].emplace(label, it->second);
    }
  }
  return dts;
}

EqVerdict trace_equivalent(const Lts& a, const Lts& b) {
  const Dts da = determinize(a);
  const Dts db = determinize(b);

  struct Node {
    std::size_t left, right;
    std::size_t parent;
    const GroundLabel* via;
  };
  std::vector<Node> nodes;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> visited;
  nodes.push_back({da.initial, db.initial, 0, nullptr});
  visited.emplace(std::make_pair(da.initial, db.initial), 0);

  auto path_to = [&](std::size_t n) {
    Trace path;
    for (; nodes[n].via != nullptr; n = nodes[n].parent) path.push_back(*nodes[n].via);
    std::reverse(path.begin(), path.end());
    return path;
  };

  // Nodes are appended in BFS order, so a plain index scan is the queue.
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const auto& left = da.transitions[nodes[n].left];
    const auto& right = db.transitions[nodes[n].right];
    auto li = left.begin();
    auto ri = right.begin();
    while (li != left.end() || ri != right.end()) {
      const bool left_only = ri == right.end() || (li != left.end() && li->first < ri->first);
      const bool right_only = li == left.end() || (ri != right.end() && ri->first < li->first);
      if (left_only || right_only) {
        EqVerdict verdict;
        verdict.equivalent = false;
        Trace witness = path_to(n);
        witness.push_back(left_only ? li->first : ri->first);
        verdict.witness = std::move(witness);
        verdict.witness_side = left_only ? WitnessSide::First : WitnessSide::Second;
        return verdict;
      }
      ++li;
      ++ri;
    }
    for (li = left.begin(), ri = right.begin(); li != left.end(); ++li, ++ri) {
      auto key = std::make_pair(li->second, ri->second);
      if (visited.count(key) != 0) continue;
      visited.emplace(key, nodes.size());
      nodes.push_back({li->second, ri->second, n, &li->first});
    }
  }
  return EqVerdict{};
}

std::set<Trace> bounded_traces(const Lts& lts, std::size_t depth) {
  // Each frontier entry is one observable trace together with every state a
  // run producing exactly that trace can end in (after any trailing taus).
  auto saturate = [&](std::set<StateId>& states) {
    std::vector<StateId> work(states.begin(), states.end());
    while (!work.empty()) {
      StateId s = work.back();
      work.pop_back();
      for (const auto& t : lts.outgoing(s)) {
        if (t.label.is_tau() && states.insert(t.target).second) work.push_back(t.target);
      }
    }
  };

  std::set<Trace> out;
  std::map<Trace, std::set<StateId>> frontier;
  frontier[Trace{}].insert(lts.initial());
  saturate(frontier[Trace{}]);
  out.insert(Trace{});

  for (std::size_t len = 0; len < depth && !frontier.empty(); ++len) {
    std::map<Trace, std::set<StateId>> next;
    for (const auto& [trace, states] : frontier) {
      for (StateId s : states) {
        for (const auto& t : lts.outgoing(s)) {
          if (t.label.is_tau()) continue;
          Trace extended = trace;
          extended.push_back(t.label);
          next[std::move(extended)].insert(t.target);
        }
      }
    }
    for (auto& [trace, states] : next) {
      saturate(states);
      out.insert(trace);
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace ccswb
