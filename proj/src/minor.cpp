#include "matsec/minor.hpp"

#include <algorithm>
#include <string>

#include "matsec/errors.hpp"

namespace matsec {

namespace {

std::vector<int> sorted_unique(std::vector<int> v, int n, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw InputError(std::string(what) + " contains duplicates");
  if (!v.empty() && (v.front() < 0 || v.back() >= n))
    throw InputError(std::string(what) + " has out-of-range ids");
  return v;
}

}  // namespace

MinorView::MinorView(MatroidPtr base, std::vector<int> contracted, std::vector<int> restricted)
    : Matroid(static_cast<int>(restricted.size())) {
  if (!base) throw InputError("minor of a null matroid");
  contracted = sorted_unique(std::move(contracted), base->size(), "contracted set");
  restricted = sorted_unique(std::move(restricted), base->size(), "restricted set");
  for (int e : restricted)
    if (std::binary_search(contracted.begin(), contracted.end(), e))
      throw InputError("contracted and restricted sets overlap");

  // Flatten a view of a view into one (C, S) pair over the root oracle.
  if (auto inner = std::dynamic_pointer_cast<const MinorView>(base)) {
    std::vector<int> c = inner->contracted_;
    for (int local : contracted) c.push_back(inner->to_base(local));
    std::vector<int> s;
    s.reserve(restricted.size());
    for (int local : restricted) s.push_back(inner->to_base(local));
    base = inner->base_;
    contracted = sorted_unique(std::move(c), base->size(), "flattened contracted set");
    restricted = sorted_unique(std::move(s), base->size(), "flattened restricted set");
  }

  base_ = std::move(base);
  contracted_ = std::move(contracted);
  local_to_base_ = std::move(restricted);
  base_to_local_.assign(base_->size(), -1);
  for (int local = 0; local < static_cast<int>(local_to_base_.size()); ++local)
    base_to_local_[local_to_base_[local]] = local;
  for (int e : contracted_)
    if (base_->independent_with(contracted_basis_, e)) contracted_basis_.push_back(e);
}

int MinorView::to_base(int local) const {
  if (local < 0 || local >= size()) throw InputError("local id out of range");
  return local_to_base_[local];
}

int MinorView::to_local(int base_id) const {
  if (base_id < 0 || base_id >= static_cast<int>(base_to_local_.size())) return -1;
  return base_to_local_[base_id];
}

bool MinorView::independent_impl(std::span<const int> elements) const {
  std::vector<int> probe = contracted_basis_;
  probe.reserve(probe.size() + elements.size());
  for (int local : elements) probe.push_back(local_to_base_[local]);
  return base_->independent(probe);
}

std::shared_ptr<const MinorView> make_minor(MatroidPtr base, std::vector<int> contracted,
                                            std::vector<int> restricted) {
  return std::make_shared<MinorView>(std::move(base), std::move(contracted),
                                     std::move(restricted));
}

std::shared_ptr<const MinorView> restriction(MatroidPtr base, std::vector<int> keep) {
  return make_minor(std::move(base), {}, std::move(keep));
}

DirectSumMatroid::DirectSumMatroid(std::vector<MatroidPtr> parts)
    : Matroid([&parts] {
        int n = 0;
        for (const auto& p : parts) {
          if (!p) throw InputError("direct sum of a null matroid");
          n += p->size();
        }
        return n;
      }()),
      parts_(std::move(parts)) {
  offsets_.reserve(parts_.size());
  int off = 0;
  for (const auto& p : parts_) {
    offsets_.push_back(off);
    off += p->size();
  }
}

int DirectSumMatroid::part_of(int e) const {
  if (e < 0 || e >= size()) throw InputError("element id out of range");
  int i = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), e) -
                           offsets_.begin()) -
          1;
  return i;
}

bool DirectSumMatroid::independent_impl(std::span<const int> elements) const {
  // Local buffers: parts may themselves be direct sums.
  std::vector<std::vector<int>> slices(parts_.size());
  for (int e : elements) {
    int i = part_of(e);
    slices[i].push_back(e - offsets_[i]);
  }
  for (size_t i = 0; i < parts_.size(); ++i)
    if (!slices[i].empty() && !parts_[i]->independent(slices[i])) return false;
  return true;
}

MatroidPtr direct_sum(std::vector<MatroidPtr> parts) {
  return std::make_shared<DirectSumMatroid>(std::move(parts));
}

}  // namespace matsec
