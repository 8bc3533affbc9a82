#pragma once

namespace commlie::fault {

// Test-only switch: when set, the unitary class sum uses the plain q Pochhammer for odd
// degrees instead of the q ↦ −q one. verify must then report a mismatch.
void set_flip_u_odd_sign(bool on);
bool flip_u_odd_sign();

class ScopedFlipUOddSign {
 public:
  ScopedFlipUOddSign() : previous_(flip_u_odd_sign()) { set_flip_u_odd_sign(true); }
  ~ScopedFlipUOddSign() { set_flip_u_odd_sign(previous_); }
  ScopedFlipUOddSign(const ScopedFlipUOddSign&) = delete;
  ScopedFlipUOddSign& operator=(const ScopedFlipUOddSign&) = delete;

 private:
  bool previous_;
};

}  // namespace commlie::fault
