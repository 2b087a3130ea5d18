#include "matsec/session.hpp"

#include <string>

#include "matsec/errors.hpp"

namespace matsec {

// All mutable trial state lives here; SessionView is the restricted lens
// algorithms get. Weights never enter the session at all: scoring happens
// at the caller from the accepted ids.
class Session {
 public:
  Session(const Matroid& m, const std::vector<int>& strict_rank,
          const std::vector<int>& arrival, bool log_comparisons)
      : m_(m), strict_rank_(strict_rank), arrival_(arrival),
        log_comparisons_(log_comparisons) {
    if (static_cast<int>(strict_rank.size()) != m.size() ||
        static_cast<int>(arrival.size()) != m.size())
      throw InputError("session permutations must cover the ground set");
    revealed_.reserve(m.size());
    accepted_.reserve(m.size());
  }

  const Matroid& matroid() const { return m_; }
  int n() const { return m_.size(); }
  int revealed_count() const { return static_cast<int>(revealed_.size()); }
  std::span<const Token> revealed() const { return revealed_; }
  std::span<const Token> accepted() const { return accepted_; }

  bool heavier(Token a, Token b) {
    require_seen(a);
    require_seen(b);
    ++comparisons_;
    if (log_comparisons_) comparison_log_.emplace_back(a.element, b.element);
    return strict_rank_[a.element] < strict_rank_[b.element];
  }

  bool independent(std::span<const Token> tokens) {
    elems_.clear();
    for (Token t : tokens) {
      require_seen(t);
      elems_.push_back(t.element);
    }
    return m_.independent(elems_);
  }

  bool can_accept(Token t) {
    require_seen(t);
    elems_.clear();
    for (Token a : accepted_) elems_.push_back(a.element);
    elems_.push_back(t.element);
    return m_.independent(elems_);
  }

  SessionResult run(OnlineAlgorithm& alg, RandomSource& rng) {
    SessionView view(this);
    StreamInfo info;
    info.n = n();
    info.matroid = &m_;
    info.rank = -1;
    alg.start(info, rng);
    SessionResult result;
    for (int pos = 0; pos < n(); ++pos) {
      Token t{arrival_[pos], pos};
      revealed_.push_back(t);
      bool accept = alg.on_reveal(t, view);
      result.decisions.push_back(accept);
      if (accept) {
        if (!can_accept(t))
          throw ContractViolation(
              "algorithm accepted element " + std::to_string(t.element) +
              " making the accepted set dependent");
        accepted_.push_back(t);
        result.accepted.push_back(t.element);
      }
    }
    alg.finish();
    result.comparisons = comparisons_;
    result.comparison_log = std::move(comparison_log_);
    return result;
  }

 private:
  void require_seen(Token t) const {
    if (!t.valid() || t.pos < 0 || t.pos >= revealed_count() ||
        revealed_[t.pos].element != t.element)
      throw InputError("token does not refer to a revealed element");
  }

  const Matroid& m_;
  const std::vector<int>& strict_rank_;
  const std::vector<int>& arrival_;
  std::vector<Token> revealed_;
  std::vector<Token> accepted_;
  std::vector<int> elems_;
  long long comparisons_ = 0;
  bool log_comparisons_ = false;
  std::vector<std::pair<int, int>> comparison_log_;
};

int SessionView::n() const { return s_->n(); }
int SessionView::revealed_count() const { return s_->revealed_count(); }
std::span<const Token> SessionView::revealed() const { return s_->revealed(); }
std::span<const Token> SessionView::accepted() const { return s_->accepted(); }
bool SessionView::heavier(Token a, Token b) const { return s_->heavier(a, b); }
bool SessionView::independent(std::span<const Token> tokens) const {
  return s_->independent(tokens);
}
bool SessionView::can_accept(Token t) const { return s_->can_accept(t); }

SessionResult run_session(const Matroid& m, const std::vector<int>& strict_rank,
                          const std::vector<int>& arrival, OnlineAlgorithm& alg,
                          RandomSource& rng, bool log_comparisons) {
  Session session(m, strict_rank, arrival, log_comparisons);
  return session.run(alg, rng);
}

}  // namespace matsec
