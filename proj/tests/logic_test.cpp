#include <gtest/gtest.h>

#include <map>

#include "ccswb/equivalence.hpp"
#include "ccswb/errors.hpp"
#include "ccswb/logic.hpp"
#include "ccswb/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace ccswb {
namespace {

using testing::lts_of;

std::string witness_of(const Lts& lts, const std::string& formula) {
  auto w = diamond_witness(lts, parse_formula(formula));
  return w ? render_trace(*w) : "<none>";
}

TEST(StateSet, Algebra) {
  StateSet a(4);
  a.insert(1);
  a.insert(3);
  StateSet b = StateSet::all(4);
  EXPECT_EQ(a.count(), 2u);
  EXPECT_EQ(a.complement().members(), (std::vector<StateId>{0, 2}));
  EXPECT_EQ((a & b), a);
  EXPECT_EQ((a | a.complement()), b);
  EXPECT_TRUE(a.subset_of(b));
  EXPECT_FALSE(b.subset_of(a));
  EXPECT_TRUE(StateSet::none(4).empty());
}

TEST(SatStates, ModalBasics) {
  Lts lts = lts_of("M = a . b . 0 + 'c . 0", "M");
  EXPECT_TRUE(check(lts, parse_formula("<a><b>tt")));
  EXPECT_FALSE(check(lts, parse_formula("<a><'c>tt")));
  EXPECT_TRUE(check(lts, parse_formula("<'c>[-]ff")));
  EXPECT_FALSE(check(lts, parse_formula("[a]ff")));
  EXPECT_TRUE(check(lts, parse_formula("[b]ff")));
  EXPECT_TRUE(check(lts, parse_formula("<->tt && [tau]ff")));
  EXPECT_FALSE(check(lts, parse_formula("ff || [-]<->tt")));
  EXPECT_EQ(sat_states(lts, parse_formula("tt")).count(), lts.state_count());
}

TEST(SatStates, WeakModalities) {
  Lts lts = lts_of("M = ('h . 0 | h . a . 'b . 0) \\ {h}", "M");
  EXPECT_FALSE(check(lts, parse_formula("<a>tt")));
  EXPECT_TRUE(check(lts, parse_formula("<<a>>tt")));
  EXPECT_TRUE(check(lts, parse_formula("<<a>><<'b>>tt")));
  EXPECT_TRUE(check(lts, parse_formula("<<tau>>tt")));
  EXPECT_TRUE(check(lts, parse_formula("[[-]]<<'b>>tt")));
  EXPECT_FALSE(check(lts, parse_formula("[[a]]ff")));
  // Weak tau diamond needs at least one tau step.
  Lts plain = lts_of("M = a . 0", "M");
  EXPECT_FALSE(check(plain, parse_formula("<<tau>>tt")));
}

TEST(SatStates, Fixpoints) {
  Lts spec = testing::spec_lts();
  EXPECT_TRUE(check(spec, parse_formula("max X . <->X")));
  EXPECT_TRUE(check(spec, parse_formula("min X . <'keep(1)>tt || <->X")));
  EXPECT_FALSE(check(spec, parse_formula("min X . [-]X")));

  Lts finite = lts_of("M = a . b . 0", "M");
  EXPECT_FALSE(check(finite, parse_formula("max X . <->X")));
  EXPECT_TRUE(check(finite, parse_formula("min X . [-]X")));
  EXPECT_TRUE(check(finite, parse_formula("min X . <b>tt || <->X")));

  EvalStats stats;
  sat_states(finite, parse_formula("min X . [-]X"), &stats);
  EXPECT_EQ(stats.max_fixpoint_rounds, 4u);  // 0, {2}, {1,2}, {0,1,2}, stable
}

TEST(Check, ProtocolProperty) {
  Formula f = testing::choose0_keep1_formula();
  EXPECT_FALSE(check(testing::bb84_lts(), f));
  EXPECT_TRUE(check(testing::bb84p_lts(), f));
  EXPECT_FALSE(check(testing::spec_lts(), f));
  EXPECT_TRUE(check(testing::bb84_lts(), parse_formula("<<choose(0)>><<'keep(0)>>tt")));
}

TEST(DiamondWitness, Examples) {
  EXPECT_EQ(render_trace(*diamond_witness(testing::bb84p_lts(), testing::choose0_keep1_formula())),
            "choose(0).'keep(1)");
  EXPECT_FALSE(diamond_witness(testing::bb84_lts(), testing::choose0_keep1_formula()));

  Lts m = lts_of("M = a . 0 + b . c . 0", "M");
  EXPECT_EQ(witness_of(m, "<a>tt && <b><c>tt"), "b.c");
  EXPECT_EQ(witness_of(m, "<b><c>tt && <a>tt"), "b.c");
  EXPECT_EQ(witness_of(m, "<b><c>tt || <a>tt"), "a");
  EXPECT_EQ(witness_of(m, "<->tt"), "a");
  EXPECT_EQ(witness_of(m, "tt"), "");
  EXPECT_EQ(witness_of(m, "<c>tt"), "<none>");

  Lts hidden = lts_of("M = ('h . 0 | h . a . 0) \\ {h}", "M");
  EXPECT_EQ(witness_of(hidden, "<tau><a>tt"), "tau.a");
  EXPECT_EQ(witness_of(hidden, "<<a>>tt"), "a");
  EXPECT_EQ(witness_of(hidden, "<<tau>>tt"), "");
}

TEST(DiamondWitness, Errors) {
  Lts m = lts_of("M = a . 0", "M");
  EXPECT_THROW(diamond_witness(m, parse_formula("[a]tt")), FormulaError);
  EXPECT_THROW(diamond_witness(m, parse_formula("ff")), FormulaError);
  EXPECT_THROW(diamond_witness(m, parse_formula("min X . <a>tt || <->X")), FormulaError);
}

TEST(SatStates, Errors) {
  Lts m = lts_of("M = a . 0", "M");
  EXPECT_THROW(sat_states(m, Formula::var("X")), FormulaError);
  EXPECT_THROW(check(m, Formula::diamond(LabelPattern::tau(), Formula::var("Y"))), FormulaError);
  Lts truncated = build_lts(parse_model("C = up . (C | C)"), "C", ExploreLimits{3, 1000});
  EXPECT_THROW(sat_states(truncated, Formula::tt()), TruncatedLtsError);
  EXPECT_THROW(diamond_witness(truncated, Formula::tt()), TruncatedLtsError);
}

// Reference semantics: fixpoints unrolled into |S|+1 syntactic approximants,
// then evaluated state by state from the definitions of the modalities.
class ReferenceChecker {
 public:
  explicit ReferenceChecker(const Lts& lts) : lts_(lts), n_(lts.state_count()) {
    // Reflexive-transitive tau reachability by Warshall's algorithm.
    reach_.assign(n_, std::vector<bool>(n_, false));
    for (std::size_t s = 0; s < n_; ++s) reach_[s][s] = true;
    for (const auto& t : lts.transitions())
      if (t.label.is_tau()) reach_[t.source][t.target] = true;
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (reach_[i][k])
          for (std::size_t j = 0; j < n_; ++j)
            if (reach_[k][j]) reach_[i][j] = true;
  }

  std::vector<bool> sat(const Formula& f) {
    Formula flat = unroll(f);
    memo_.clear();  // keyed by node address, only valid while `flat` lives
    std::vector<bool> out(n_);
    for (std::size_t s = 0; s < n_; ++s) out[s] = holds(static_cast<StateId>(s), flat);
    return out;
  }

 private:
  static Formula substitute(const Formula& f, const std::string& var, const Formula& by) {
    return std::visit(
        [&](const auto& node) -> Formula {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, And>) {
            return Formula::conj(substitute(node.lhs, var, by), substitute(node.rhs, var, by));
          } else if constexpr (std::is_same_v<T, Or>) {
            return Formula::disj(substitute(node.lhs, var, by), substitute(node.rhs, var, by));
          } else if constexpr (std::is_same_v<T, Modal>) {
            return Formula::modal(node.modality, node.pattern, substitute(node.body, var, by));
          } else if constexpr (std::is_same_v<T, FixVar>) {
            return node.name == var ? by : f;
          } else if constexpr (std::is_same_v<T, Fix>) {
            if (node.var == var) return f;
            Formula body = substitute(node.body, var, by);
            return node.kind == FixKind::Least ? Formula::mu(node.var, body)
                                               : Formula::nu(node.var, body);
          } else {
            return f;
          }
        },
        f.node().v);
  }

  Formula unroll(const Formula& f) const {
    return std::visit(
        [&](const auto& node) -> Formula {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, And>) {
            return Formula::conj(unroll(node.lhs), unroll(node.rhs));
          } else if constexpr (std::is_same_v<T, Or>) {
            return Formula::disj(unroll(node.lhs), unroll(node.rhs));
          } else if constexpr (std::is_same_v<T, Modal>) {
            return Formula::modal(node.modality, node.pattern, unroll(node.body));
          } else if constexpr (std::is_same_v<T, Fix>) {
            Formula body = unroll(node.body);
            Formula approx = node.kind == FixKind::Least ? Formula::ff() : Formula::tt();
            for (std::size_t i = 0; i <= n_; ++i) approx = substitute(body, node.var, approx);
            return approx;
          } else {
            return f;
          }
        },
        f.node().v);
  }

  bool holds(StateId s, const Formula& f) {
    auto key = std::make_pair(f.id(), s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = std::visit(
        [&](const auto& node) -> bool {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Tt>) {
            return true;
          } else if constexpr (std::is_same_v<T, Ff>) {
            return false;
          } else if constexpr (std::is_same_v<T, And>) {
            return holds(s, node.lhs) && holds(s, node.rhs);
          } else if constexpr (std::is_same_v<T, Or>) {
            return holds(s, node.lhs) || holds(s, node.rhs);
          } else if constexpr (std::is_same_v<T, Modal>) {
            return modal(s, node);
          } else {
            ADD_FAILURE() << "fixpoint survived unrolling";
            return false;
          }
        },
        f.node().v);
    memo_.emplace(key, result);
    return result;
  }

  bool modal(StateId s, const Modal& m) {
    const bool weak = m.modality == Modality::DiamondWeak || m.modality == Modality::BoxWeak;
    const bool box = m.modality == Modality::BoxStrong || m.modality == Modality::BoxWeak;
    // Collect every state reachable by one matching step (weakly: tau* step tau*).
    for (std::size_t pre = 0; pre < n_; ++pre) {
      if (weak ? !reach_[s][pre] : pre != s) continue;
      for (const auto& t : lts_.outgoing(static_cast<StateId>(pre))) {
        if (!m.pattern.matches(t.label)) continue;
        for (std::size_t post = 0; post < n_; ++post) {
          if (weak ? !reach_[t.target][post] : post != t.target) continue;
          const bool h = holds(static_cast<StateId>(post), m.body);
          if (box && !h) return false;
          if (!box && h) return true;
        }
      }
    }
    return box;
  }

  const Lts& lts_;
  std::size_t n_;
  std::vector<std::vector<bool>> reach_;
  std::map<std::pair<const void*, StateId>, bool> memo_;
};

std::vector<bool> as_bits(const StateSet& s) {
  std::vector<bool> out(s.universe());
  for (StateId m : s.members()) out[m] = true;
  return out;
}

template <class Fn>
int for_small_lts(std::uint64_t seed, int wanted, std::size_t max_states, Fn fn) {
  testing::Rng rng(seed);
  int done = 0;
  for (int i = 0; i < wanted * 10 && done < wanted; ++i) {
    auto lts = testing::build_small(testing::random_model(rng), max_states);
    if (!lts) continue;
    fn(*lts, rng);
    if (::testing::Test::HasFatalFailure()) return done;
    ++done;
  }
  return done;
}

TEST(ModelCheckingProperty, AgreesWithUnrolledReference) {
  int done = for_small_lts(31, 150, 25, [](const Lts& lts, testing::Rng& rng) {
    ReferenceChecker ref(lts);
    for (int k = 0; k < 4; ++k) {
      Formula f = testing::random_formula(rng, 4);
      ASSERT_EQ(as_bits(sat_states(lts, f)), ref.sat(f)) << print_formula(f);
    }
  });
  EXPECT_GE(done, 100);
}

TEST(ModelCheckingProperty, FixpointsConvergeWithinStateCountPlusOne) {
  int done = for_small_lts(32, 150, 200, [](const Lts& lts, testing::Rng& rng) {
    for (int k = 0; k < 4; ++k) {
      Formula f = testing::random_formula(rng, 5);
      EvalStats stats;
      sat_states(lts, f, &stats);
      ASSERT_LE(stats.max_fixpoint_rounds, lts.state_count() + 1) << print_formula(f);
    }
  });
  EXPECT_GE(done, 100);
}

TEST(ModelCheckingProperty, StrongImpliesWeakAndDuality) {
  int done = for_small_lts(33, 150, 200, [](const Lts& lts, testing::Rng& rng) {
    for (int k = 0; k < 4; ++k) {
      Formula body = testing::random_formula(rng, 3);
      const LabelPattern patterns[] = {
          LabelPattern::tau(), LabelPattern::any_visible(),
          LabelPattern::exact(GroundLabel::input("a")),
          LabelPattern::exact(GroundLabel::output("b", {Value::One}))};
      const LabelPattern& p = patterns[rng() % 4];
      StateSet sd = sat_states(lts, Formula::diamond(p, body));
      StateSet wd = sat_states(lts, Formula::weak_diamond(p, body));
      StateSet sb = sat_states(lts, Formula::box(p, body));
      StateSet wb = sat_states(lts, Formula::weak_box(p, body));
      ASSERT_TRUE(sd.subset_of(wd));
      ASSERT_TRUE(wb.subset_of(sb));
      // [p]f is the complement of <p> applied to the complement of f.
      StateSet neg = sat_states(lts, body).complement();
      StateSet dual(lts.state_count());
      for (const auto& t : lts.transitions())
        if (p.matches(t.label) && neg.contains(t.target)) dual.insert(t.source);
      ASSERT_EQ(sb, dual.complement());
    }
  });
  EXPECT_GE(done, 100);
}

Formula strengthen(const Formula& f) {
  return std::visit(
      [&](const auto& node) -> Formula {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, And>) {
          return Formula::conj(strengthen(node.lhs), strengthen(node.rhs));
        } else if constexpr (std::is_same_v<T, Or>) {
          return Formula::disj(strengthen(node.lhs), strengthen(node.rhs));
        } else if constexpr (std::is_same_v<T, Modal>) {
          Modality m = node.modality == Modality::DiamondWeak ? Modality::DiamondStrong
                       : node.modality == Modality::BoxWeak   ? Modality::BoxStrong
                                                              : node.modality;
          return Formula::modal(m, node.pattern, strengthen(node.body));
        } else if constexpr (std::is_same_v<T, Fix>) {
          return node.kind == FixKind::Least ? Formula::mu(node.var, strengthen(node.body))
                                             : Formula::nu(node.var, strengthen(node.body));
        } else {
          return f;
        }
      },
      f.node().v);
}

TEST(ModelCheckingProperty, WeakEqualsStrongWithoutTau) {
  int checked = 0;
  for_small_lts(34, 300, 200, [&](const Lts& lts, testing::Rng& rng) {
    for (const auto& t : lts.transitions())
      if (t.label.is_tau()) return;
    ++checked;
    for (int k = 0; k < 4; ++k) {
      Formula f = testing::random_formula(rng, 5);
      ASSERT_EQ(sat_states(lts, f), sat_states(lts, strengthen(f))) << print_formula(f);
    }
  });
  EXPECT_GE(checked, 30);
}

Formula trace_formula(const Trace& t) {
  Formula f = Formula::tt();
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    f = Formula::weak_diamond(LabelPattern::exact(*it), f);
  return f;
}

TEST(ModelCheckingProperty, WeakDiamondChainsAreTraces) {
  int samples = 0;
  for_small_lts(35, 150, 200, [&](const Lts& lts, testing::Rng& rng) {
    if (testing::count_traces(determinize(lts), 3, 5000) > 5000) return;
    std::set<Trace> traces = bounded_traces(lts, 3);
    std::vector<Trace> pool(traces.begin(), traces.end());
    for (int k = 0; k < 6; ++k) {
      Trace t = pool[rng() % pool.size()];
      if (k % 2 == 1 && !t.empty()) {
        // Perturb into a candidate non-trace.
        GroundLabel& l = t[rng() % t.size()];
        l.polarity = l.polarity == Polarity::Input ? Polarity::Output : Polarity::Input;
      }
      const bool expected = traces.count(t) != 0;
      Formula f = trace_formula(t);
      ASSERT_EQ(check(lts, f), expected) << render_trace(t);
      auto w = diamond_witness(lts, f);
      ASSERT_EQ(w.has_value(), expected);
      if (w) ASSERT_EQ(*w, t);
      ++samples;
    }
  });
  EXPECT_GE(samples, 500);
}

TEST(ModelCheckingProperty, ExistentialWitnessesAreRuns) {
  int done = for_small_lts(36, 150, 200, [](const Lts& lts, testing::Rng& rng) {
    const Dts dts = determinize(lts);
    for (int k = 0; k < 4; ++k) {
      Formula f = testing::random_existential_formula(rng, 4);
      auto w = diamond_witness(lts, f);
      ASSERT_EQ(w.has_value(), check(lts, f)) << print_formula(f);
      if (!w) continue;
      // Visible part of the witness is an observable trace.
      std::size_t at = dts.initial;
      for (const auto& l : *w) {
        if (l.is_tau()) continue;
        auto next = dts.transitions[at].find(l);
        ASSERT_NE(next, dts.transitions[at].end())
            << print_formula(f) << " -> " << render_trace(*w);
        at = next->second;
      }
    }
  });
  EXPECT_GE(done, 100);
}

}  // namespace
}  // namespace ccswb
