#pragma once

#include <cstdint>
#include <span>

#include "stonework/bits.hpp"
#include "stonework/error.hpp"

namespace stonework::detail {

// Visits every S ⊆ universe with: i ∈ S ⇒ up[i] ⊆ S and i ∉ S ⇒ down[i] ∩ S = ∅,
// given that up/down are transitively closed and mutually inverse. Under those
// conditions every branch reaches a leaf, so the cost is linear in the output.
// `budget` bounds the number of leaves; past it CapExceeded is thrown.
template <class F>
class UpSetWalker {
 public:
  UpSetWalker(Mask universe, std::span<const Mask> up, std::span<const Mask> down,
              std::int64_t budget, F& visit)
      : universe_(universe), up_(up), down_(down), budget_(budget), visit_(visit) {}

  void run(Mask in, Mask out) { step(in, out); }

 private:
  void step(Mask in, Mask out) {
    Mask open = universe_ & ~(in | out);
    if (!open) {
      if (--budget_ < 0) fail(ErrorCode::CapExceeded, "closed-set search exceeded its budget");
      visit_(in);
      return;
    }
    const int i = lowest(open);
    Mask in2 = in | bit(i) | up_[i];
    if (!(in2 & out)) step(in2, out);
    Mask out2 = out | bit(i) | down_[i];
    if (!(out2 & in)) step(in, out2);
  }

  Mask universe_;
  std::span<const Mask> up_, down_;
  std::int64_t budget_;
  F& visit_;
};

template <class F>
void for_each_up_set(Mask universe, std::span<const Mask> up, std::span<const Mask> down,
                     Mask forced_in, Mask forced_out, std::int64_t budget, F&& visit) {
  UpSetWalker<std::remove_reference_t<F>> w(universe, up, down, budget, visit);
  w.run(forced_in, forced_out);
}

}  // namespace stonework::detail
