#include <algorithm>
#include <array>

#include "srlab/enumerate.hpp"
#include "srlab/error.hpp"
#include "srlab/parallel.hpp"

namespace srlab {

namespace {

constexpr std::size_t kProbes = 6;
const std::array<std::string, 3> kVars = {"I", "J", "K"};

std::vector<std::array<std::size_t, 3>> graded_triples(std::size_t p) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c) out.push_back({a, b, c});
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return *std::max_element(x.begin(), x.end()) < *std::max_element(y.begin(), y.end());
  });
  return out;
}

}  // namespace

nlohmann::ordered_json FalsifyCounterexample::to_json() const {
  nlohmann::ordered_json j;
  j["semiring"] = semiring;
  j["phase"] = phase;
  j["index"] = index;
  nlohmann::ordered_json a = nlohmann::ordered_json::object();
  for (const auto& [name, I] : assignment) a[name] = format(I);
  j["assignment"] = a;
  j["verification"] = verification.str();
  return j;
}

std::optional<FalsifyCounterexample> falsify(const Expr& e, const std::vector<SemiringPtr>& carriers,
                                             const Sampler& sampler) {
  if (!e.is_comparison()) throw PreconditionError("falsify needs a comparison (== or <=)");
  const auto vars = expr_variables(e);
  for (const auto& v : vars)
    if (std::find(kVars.begin(), kVars.end(), v) == kVars.end())
      throw PreconditionError("falsify binds only I, J, K; found " + v);

  for (const auto& S : carriers) {
    auto probes = S->probe_elements(5);
    if (probes.size() > kProbes) probes.resize(kProbes);
    std::vector<Ideal> principals;
    for (const auto& g : probes) principals.push_back(principal(S, g));
    const auto triples = graded_triples(principals.size());

    auto assignment = [&](std::size_t i) {
      std::vector<std::pair<std::string, Ideal>> a;
      if (i < triples.size()) {
        for (std::size_t k = 0; k < 3; ++k) a.emplace_back(kVars[k], principals[triples[i][k]]);
      } else {
        Rng rng(derive_seed(sampler.seed, i - triples.size()));
        for (const auto& name : kVars) a.emplace_back(name, sampler.ideal(S, rng));
      }
      return a;
    };
    auto evaluate = [&](const std::vector<std::pair<std::string, Ideal>>& a) {
      Env env;
      for (const auto& [name, I] : a) env.emplace(name, I);
      return eval_expr(e, S, env);
    };

    const std::size_t total = triples.size() + sampler.samples;
    auto hit = find_first(total, sampler.threads, [&](std::size_t i) { return !evaluate(assignment(i)).truth(); }, 16);
    if (!hit) continue;
    FalsifyCounterexample cx;
    cx.semiring = S->id();
    cx.phase = *hit < triples.size() ? "probe" : "sample";
    cx.index = *hit < triples.size() ? *hit : *hit - triples.size();
    for (auto& [name, I] : assignment(*hit))
      if (std::find(vars.begin(), vars.end(), name) != vars.end())
        cx.assignment.emplace_back(name, I);
    cx.verification = evaluate(cx.assignment).verification;
    return cx;
  }
  return std::nullopt;
}

}  // namespace srlab
