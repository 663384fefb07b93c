#pragma once

// Internal helpers for writing structure maps as chains of slot operations.

#include "hopfkit/yd.hpp"

namespace hk::detail {

// Small wrapper so pipelines read like the diagrams they implement.
struct Pipe {
  const Field& F;
  Tensor& t;
  Pipe& map(std::size_t pos, std::size_t count, const LinMap& f, std::vector<std::size_t> out) {
    t.apply(F, pos, count, f, out);
    return *this;
  }
  Pipe& swap(std::size_t pos) {
    t.swap(F, pos);
    return *this;
  }
};

struct HMaps {
  std::size_t h;
  LinMap mult, comult, S, Sinv;
  explicit HMaps(const HopfData& H)
      : h(H.dim), mult(H.mult), comult(H.comult), S(dense_map(H.antipode)), Sinv(dense_map(H.s_inv())) {}
};

}  // namespace hk::detail
