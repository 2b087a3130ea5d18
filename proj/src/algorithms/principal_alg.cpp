#include "matsec/algorithms/principal_alg.hpp"

#include "matsec/errors.hpp"
#include "matsec/principal.hpp"

namespace matsec {

std::shared_ptr<const PrincipalPlan> PrincipalPlan::build(MatroidPtr m,
                                                          const EnumerationOptions& opts) {
  if (!m) throw InputError("null matroid");
  auto plan = std::make_shared<PrincipalPlan>();
  plan->matroid = m;
  plan->minor_of.assign(m->size(), -1);
  plan->local_id.assign(m->size(), -1);

  std::vector<int> loop_set = loops(*m);
  std::vector<bool> is_loop(m->size(), false);
  for (int e : loop_set) is_loop[e] = true;
  std::vector<int> rest;
  for (int e = 0; e < m->size(); ++e)
    if (!is_loop[e]) rest.push_back(e);
  if (rest.empty()) return plan;

  // Minors of the loopless deletion flatten to views over m itself.
  auto deletion = restriction(m, rest);
  PrincipalSequence seq = principal_sequence(deletion, opts);
  plan->minors = seq.minors;
  for (size_t i = 0; i < plan->minors.size(); ++i) {
    const auto& minor = plan->minors[i];
    const auto& ground = minor->local_to_base();
    for (int local = 0; local < static_cast<int>(ground.size()); ++local) {
      plan->minor_of[ground[local]] = static_cast<int>(i);
      plan->local_id[ground[local]] = local;
    }
    plan->stream_len.push_back(static_cast<int>(ground.size()));
    plan->minor_rank.push_back(seq.step_ranks[i]);
  }
  return plan;
}

PrincipalThreshold::PrincipalThreshold(std::shared_ptr<const PrincipalPlan> plan, Prob p)
    : plan_(std::move(plan)), p_(p) {}

void PrincipalThreshold::start(const StreamInfo& info, RandomSource& rng) {
  if (info.n != plan_->matroid->size())
    throw InputError("stream length differs from the planned matroid");
  token_of_.assign(info.n, Token{});
  size_t k = plan_->minors.size();
  cores_.assign(k, {});
  forks_.clear();
  for (size_t i = 0; i < k; ++i) {
    forks_.push_back(rng.fork(i + 1));
    cores_[i].start(plan_->stream_len[i], plan_->minor_rank[i], p_, *forks_[i]);
  }
}

bool PrincipalThreshold::on_reveal(Token t, SessionView& view) {
  int e = t.element;
  token_of_[e] = t;
  int i = plan_->minor_of[e];
  if (i < 0) return false;  // loop

  auto heavier = [&](int a, int b) { return view.heavier(token_of_[a], token_of_[b]); };
  auto can_extend = [&](const std::vector<int>& accepted, int elem) {
    const auto& minor = *plan_->minors[i];
    std::vector<int> locals;
    locals.reserve(accepted.size() + 1);
    for (int x : accepted) locals.push_back(plan_->local_id[x]);
    locals.push_back(plan_->local_id[elem]);
    return minor.independent(locals);
  };
  return cores_[i].process(e, heavier, can_extend);
}

}  // namespace matsec
