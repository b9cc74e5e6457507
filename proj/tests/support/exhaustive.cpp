#include "support/exhaustive.hpp"

#include <optional>
#include <vector>

#include "rgcount/embed.hpp"

namespace rgc::testing {

namespace {

// Replays a fixed prefix of choices; records the branching factor of the
// first decision past the prefix (and picks 0 there, discarding the rest of
// that probe run).
struct ScriptChooser {
  const std::vector<std::size_t>* script;
  std::size_t pos = 0;
  std::optional<std::size_t> probe;

  std::size_t pick(std::size_t count) {
    if (pos < script->size()) return (*script)[pos++];
    if (!probe) probe = count;
    return 0;
  }
};

template <class RunFn>
PathExpectation enumerate_paths(RunFn&& run) {
  PathExpectation result{0, 0, 0};
  std::vector<std::size_t> script;

  auto dfs = [&](auto&& self) -> void {
    ScriptChooser chooser{&script, 0, std::nullopt};
    const EmbedTrace trace = run(chooser);
    if (chooser.probe) {
      const std::size_t width = *chooser.probe;
      script.push_back(0);
      for (std::size_t c = 0; c < width; ++c) {
        script.back() = c;
        self(self);
      }
      script.pop_back();
      return;
    }
    // Leaf: the script covered every decision. P(path) = prod 1/X_i over the
    // steps that actually made a pick.
    BigRat prob = 1;
    for (auto f : trace.factors) prob /= BigRat(BigInt(f));
    ++result.leaves;
    if (trace.success) {
      result.success_probability += prob;
      result.expectation += prob * trace.estimate.exact_value();
    }
  };
  dfs(dfs);
  return result;
}

}  // namespace

PathExpectation exhaustive_clique_expectation(const Graph& g, unsigned k) {
  return enumerate_paths([&](ScriptChooser& chooser) {
    return embed_clique_once(g, k, chooser, ValueMode::Exact);
  });
}

PathExpectation exhaustive_cover_expectation(const Graph& g, unsigned k) {
  return enumerate_paths([&](ScriptChooser& chooser) {
    return embed_cover_once(g, k, chooser, ValueMode::Exact);
  });
}

}  // namespace rgc::testing
