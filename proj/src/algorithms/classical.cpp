#include "matsec/algorithms/classical.hpp"

#include "matsec/errors.hpp"
#include "matsec/real.hpp"

namespace matsec {

int classical_sample_size(int n) {
  if (n < 0) throw InputError("negative stream length");
  Real v = Real(n) * consts::inv_e();
  return static_cast<int>(floor(v).convert_to<long>());
}

void ClassicalSecretary::start(const StreamInfo& info, RandomSource&) {
  sample_ = classical_sample_size(info.n);
  taken_ = false;
  best_ = Token{};
}

bool ClassicalSecretary::on_reveal(Token t, SessionView& view) {
  Token self[1] = {t};
  if (!view.independent(self)) return false;  // loop
  if (t.pos < sample_) {
    if (!best_.valid() || view.heavier(t, best_)) best_ = t;
    return false;
  }
  if (taken_) return false;
  if (!best_.valid() || view.heavier(t, best_)) {
    taken_ = true;
    return true;
  }
  return false;
}

void ClassSecretary::configure(int ground_size, const std::vector<std::vector<int>>& classes) {
  class_of_.assign(ground_size, -1);
  states_.assign(classes.size(), {});
  for (size_t c = 0; c < classes.size(); ++c) {
    states_[c].sample_size = classical_sample_size(static_cast<int>(classes[c].size()));
    for (int e : classes[c]) class_of_[e] = static_cast<int>(c);
  }
}

bool ClassSecretary::process(Token t, SessionView& view) {
  int c = class_of(t.element);
  if (c < 0) return false;
  ClassState& st = states_[c];
  int pos_in_class = st.arrivals++;
  if (pos_in_class < st.sample_size) {
    if (!st.best.valid() || view.heavier(t, st.best)) st.best = t;
    return false;
  }
  if (st.taken) return false;
  if (!st.best.valid() || view.heavier(t, st.best)) {
    st.taken = true;
    return true;
  }
  return false;
}

}  // namespace matsec
