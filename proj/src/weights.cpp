#include "matsec/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "matsec/errors.hpp"
#include "matsec/rng.hpp"

namespace matsec {

AdversaryWeights weights_from_rats(std::vector<Rat> sorted) {
  if (!std::is_sorted(sorted.begin(), sorted.end(), std::greater<Rat>()))
    throw InputError("weights must be sorted nonincreasing");
  if (!sorted.empty() && sorted.back() < 0) throw InputError("weights must be nonnegative");
  AdversaryWeights w;
  w.exact = std::move(sorted);
  w.has_exact = true;
  for (const Rat& q : w.exact) w.values.push_back(rat_double(q));
  return w;
}

WeightGenerator WeightGenerator::parse(const std::string& name,
                                       const std::map<std::string, std::string>& params) {
  WeightGenerator g;
  g.name_ = name;
  auto param = [&params](const char* key, const char* fallback) {
    auto it = params.find(key);
    return it == params.end() ? std::string(fallback) : it->second;
  };
  if (name == "geometric") {
    g.ratio_ = parse_rat(param("rho", "1/2"));
    if (g.ratio_ <= 0 || g.ratio_ > 1) throw InputError("geometric needs 0 < rho <= 1");
  } else if (name == "one-heavy") {
    g.eps_ = parse_rat(param("eps", "0"));
    if (g.eps_ < 0 || g.eps_ > 1) throw InputError("one-heavy needs 0 <= eps <= 1");
  } else if (name == "equal") {
  } else if (name == "uniform-iid" || name == "exponential-iid") {
    g.iid_ = true;
  } else {
    throw InputError("unknown weight generator '" + name + "'");
  }
  return g;
}

AdversaryWeights WeightGenerator::generate(int n, uint64_t seed) const {
  if (n < 1) throw InputError("weight lists need n >= 1");
  if (name_ == "geometric") {
    std::vector<Rat> w(n);
    w[0] = 1;
    for (int i = 1; i < n; ++i) w[i] = w[i - 1] * ratio_;
    return weights_from_rats(std::move(w));
  }
  if (name_ == "one-heavy") {
    std::vector<Rat> w(n, eps_);
    w[0] = 1;
    return weights_from_rats(std::move(w));
  }
  if (name_ == "equal") return weights_from_rats(std::vector<Rat>(n, Rat(1)));

  CounterRng rng(seed);
  AdversaryWeights w;
  w.values.resize(n);
  for (int i = 0; i < n; ++i) {
    double u = rng.unit_double();
    w.values[i] = name_ == "uniform-iid" ? u : -std::log(1.0 - u);
  }
  std::sort(w.values.begin(), w.values.end(), std::greater<>());
  return w;
}

}  // namespace matsec
