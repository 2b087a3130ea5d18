#pragma once

#include <vector>

#include "matsec/matroid.hpp"

namespace matsec {

// (base / contracted) | restricted, presented on local ids [0, |restricted|).
// Independence of a local set X is tested as base-independence of
// X union (a fixed basis of the contracted set), which realizes the rank
// identity r_view(X) = r(X + C) - r(C). A view of a view flattens to a
// single (contracted, restricted) pair over the root matroid.
class MinorView final : public Matroid {
 public:
  MinorView(MatroidPtr base, std::vector<int> contracted, std::vector<int> restricted);

  const MatroidPtr& base() const { return base_; }
  const std::vector<int>& contracted_set() const { return contracted_; }
  const std::vector<int>& local_to_base() const { return local_to_base_; }
  int to_base(int local) const;
  int to_local(int base_id) const;  // -1 when not in the view

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  MatroidPtr base_;
  std::vector<int> contracted_;
  std::vector<int> contracted_basis_;
  std::vector<int> local_to_base_;
  std::vector<int> base_to_local_;
};

std::shared_ptr<const MinorView> make_minor(MatroidPtr base, std::vector<int> contracted,
                                            std::vector<int> restricted);

// Restriction to `keep` (no contraction).
std::shared_ptr<const MinorView> restriction(MatroidPtr base, std::vector<int> keep);

class DirectSumMatroid final : public Matroid {
 public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> parts);

  const std::vector<MatroidPtr>& parts() const { return parts_; }
  int part_of(int e) const;
  int offset_of_part(int i) const { return offsets_[i]; }

 protected:
  bool independent_impl(std::span<const int> elements) const override;

 private:
  std::vector<MatroidPtr> parts_;
  std::vector<int> offsets_;
};

MatroidPtr direct_sum(std::vector<MatroidPtr> parts);

}  // namespace matsec
