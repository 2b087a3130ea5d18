#include "matsec/algorithms/threshold.hpp"

#include "matsec/errors.hpp"

namespace matsec {

void ThresholdCore::start(int stream_len, int rank, const Prob& p, RandomSource& rng) {
  if (rank < 0 || stream_len < 0) throw InputError("bad threshold configuration");
  rank_ = rank;
  pos_ = 0;
  top_.clear();
  accepted_.clear();
  sample_size_ = rng.binomial(stream_len, p);
}

bool ThresholdCore::process(int elem, const std::function<bool(int, int)>& heavier,
                            const std::function<bool(const std::vector<int>&, int)>& can_extend) {
  bool sampled = pos_ < sample_size_;
  ++pos_;
  if (rank_ == 0) return false;

  bool enters;
  bool evicted_ok;  // the leaving member is a dummy or sampled
  if (static_cast<int>(top_.size()) < rank_) {
    enters = true;
    evicted_ok = true;  // a dummy leaves
    top_.push_back({elem, sampled});
  } else {
    size_t lightest = 0;
    for (size_t i = 1; i < top_.size(); ++i)
      if (heavier(top_[lightest].elem, top_[i].elem)) lightest = i;
    enters = heavier(elem, top_[lightest].elem);
    evicted_ok = enters && top_[lightest].sampled;
    if (enters) top_[lightest] = {elem, sampled};
  }

  if (sampled || !enters || !evicted_ok) return false;
  if (!can_extend(accepted_, elem)) return false;
  accepted_.push_back(elem);
  if (static_cast<int>(accepted_.size()) > rank_)
    throw InternalCheckError("threshold rule accepted more than rank elements");
  return true;
}

DenseThreshold::DenseThreshold(int rank, Prob p) : rank_(rank), p_(p) {}

void DenseThreshold::start(const StreamInfo& info, RandomSource& rng) {
  token_of_.assign(info.n, Token{});
  core_.start(info.n, rank_, p_, rng);
}

bool DenseThreshold::on_reveal(Token t, SessionView& view) {
  token_of_[t.element] = t;
  auto heavier = [&](int a, int b) { return view.heavier(token_of_[a], token_of_[b]); };
  auto can_extend = [&](const std::vector<int>&, int) { return view.can_accept(t); };
  return core_.process(t.element, heavier, can_extend);
}

}  // namespace matsec
