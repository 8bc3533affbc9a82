#include "commlie/fault.hpp"

#include <atomic>

namespace commlie::fault {

namespace {
std::atomic<bool> g_flip_u_odd{false};
}

void set_flip_u_odd_sign(bool on) { g_flip_u_odd.store(on); }
bool flip_u_odd_sign() { return g_flip_u_odd.load(); }

}  // namespace commlie::fault
