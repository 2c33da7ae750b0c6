#pragma once

#include <concepts>
#include <type_traits>

#include "tic/core/connectivity.hpp"
#include "tic/core/op_counter.hpp"
#include "tic/core/snapshot.hpp"

namespace tic {

/// The two-operation graph algebra every algorithm is written against.
/// Each intersect / is_connected call must bump the attached counter by one.
template <class A>
concept GraphAlgebra = requires(A& alg, const A& calg, const typename A::element_type& x) {
  typename A::element_type;
  { alg.intersect(x, x) } -> std::same_as<typename A::element_type>;
  { alg.is_connected(x) } -> std::same_as<bool>;
  { alg.counter() } -> std::same_as<OpCounter&>;
  { calg.counter() } -> std::same_as<const OpCounter&>;
};

template <class A>
using element_t = typename std::remove_cvref_t<A>::element_type;

/// Concrete algebra over edge-list snapshots.
class SnapshotAlgebra {
 public:
  using element_type = Snapshot;

  Snapshot intersect(const Snapshot& a, const Snapshot& b) {
    auto out = primitive::intersect(a, b);
    counter_.count_intersection();
    return out;
  }

  bool is_connected(const Snapshot& g) {
    const bool connected = primitive::is_connected(g);
    counter_.count_connectivity_test();
    return connected;
  }

  OpCounter& counter() noexcept { return counter_; }
  const OpCounter& counter() const noexcept { return counter_; }

 private:
  OpCounter counter_;
};

static_assert(GraphAlgebra<SnapshotAlgebra>);

}  // namespace tic
