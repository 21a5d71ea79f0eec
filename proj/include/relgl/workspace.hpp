#pragma once

#include <map>
#include <memory>
#include <vector>

#include "relgl/subgroup.hpp"

namespace relgl {

/// Shared state for a batch of checks over one ring and degree: caps, worker count,
/// and memoised subgroups (GL and the per-ideal elementary and congruence subgroups).
class Workspace {
 public:
  Workspace(RingPtr ring, unsigned n, Caps caps = {}, unsigned workers = 1)
      : ring_(std::move(ring)), n_(n), caps_(caps), workers_(workers) {
    if (n_ < 2 || n_ > caps_.degree)
      fail(ErrorKind::invalid_parameter, "degree must be between 2 and " + std::to_string(caps_.degree));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  unsigned n() const noexcept { return n_; }
  const Caps& caps() const noexcept { return caps_; }
  unsigned workers() const noexcept { return workers_; }

  const SubgroupSet& gl() {
    if (!gl_) gl_ = std::make_unique<SubgroupSet>(enumerate_gl(*ring_, n_, caps_));
    return *gl_;
  }

  /// E(n, I)
  const SubgroupSet& elementary(const Ideal& i) {
    return memo(elementary_, i, [&] { return elementary_subgroup(i, n_, caps_); });
  }
  /// E(n, R, I)
  const SubgroupSet& relative_elementary(const Ideal& i) {
    return memo(relative_, i, [&] { return relgl::relative_elementary(i, n_, caps_); });
  }
  /// GL(n, R, I)
  const SubgroupSet& principal(const Ideal& i) {
    if (i.is_unit()) return gl();
    return memo(principal_, i, [&] { return principal_congruence_subgroup(i, n_, caps_); });
  }

 private:
  using Cache = std::map<std::vector<Elem>, std::unique_ptr<SubgroupSet>>;

  template <class Make>
  const SubgroupSet& memo(Cache& cache, const Ideal& i, Make&& make) {
    if (i.ring() != ring_) fail(ErrorKind::invalid_pair, "ideal from a different ring");
    auto key = i.elements();
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<SubgroupSet>(make())).first;
    return *it->second;
  }

  RingPtr ring_;
  unsigned n_;
  Caps caps_;
  unsigned workers_;
  std::unique_ptr<SubgroupSet> gl_;
  Cache elementary_, relative_, principal_;
};

}  // namespace relgl
