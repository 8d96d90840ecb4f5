#pragma once

#include "mfx/groebner.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mfx {

/// Graded quotient S/I of an ambient polynomial ring by homogeneous generators.
template <Field K>
class GradedRing {
 public:
  GradedRing() = default;
  explicit GradedRing(PolyRingPtr ambient, std::vector<Polynomial<K>> ideal = {})
      : ambient_(std::move(ambient)), ideal_(std::move(ideal)) {
    std::vector<Polynomial<K>> nonzero;
    for (auto& g : ideal_) {
      if (!same_ring(g.ring(), ambient_)) throw ArityError("defining generator from a different ring");
      if (!g.is_homogeneous()) throw NonHomogeneousError("defining generator is not homogeneous");
      if (!g.is_zero()) nonzero.push_back(g);
    }
    ideal_ = std::move(nonzero);
    auto ord = ModuleOrder::plain(ambient_, {0});
    std::vector<ModuleVector<K>> vs;
    for (const auto& g : ideal_) vs.push_back(as_vector(ord, g));
    basis_ = std::make_shared<const GroebnerBasis<K>>(groebner_basis<K>(ord, std::move(vs)));
  }

  const PolyRingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial<K>>& ideal() const { return ideal_; }
  const GroebnerBasis<K>& ideal_basis() const { return *basis_; }
  bool is_hypersurface() const { return ideal_.size() == 1; }
  int nvars() const { return ambient_->nvars(); }

  Polynomial<K> var(const std::string& name) const { return Polynomial<K>::variable(ambient_, name); }
  Polynomial<K> constant(const K& c) const { return Polynomial<K>::constant(ambient_, c); }
  Polynomial<K> zero() const { return Polynomial<K>(ambient_); }

  /// Normal form modulo the defining ideal.
  Polynomial<K> reduce(const Polynomial<K>& p) const {
    auto ord = ModuleOrder::plain(ambient_, {0});
    return basis_->reduce(as_vector(ord, p)).to_column(ambient_, 1)[0];
  }
  bool is_zero_mod(const Polynomial<K>& p) const { return reduce(p).is_zero(); }

  long hilbert_value(int d) const { return basis_->hilbert_value(d); }

  /// Adds generators to the defining ideal.
  GradedRing quotient(const std::vector<Polynomial<K>>& extra) const {
    auto gens = ideal_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return GradedRing(ambient_, std::move(gens));
  }

  /// The ambient polynomial ring with no relations.
  GradedRing free() const { return GradedRing(ambient_); }

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    if (!same_ring(a.ambient_, b.ambient_) || a.ideal_.size() != b.ideal_.size()) return false;
    for (std::size_t i = 0; i < a.ideal_.size(); ++i)
      if (!(a.ideal_[i] == b.ideal_[i])) return false;
    return true;
  }

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial<K>> ideal_;
  std::shared_ptr<const GroebnerBasis<K>> basis_;
};

}  // namespace mfx
