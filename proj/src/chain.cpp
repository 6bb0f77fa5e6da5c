#include "tilted_ising/chain.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "tilted_ising/errors.hpp"

namespace tilted_ising {

void ChainParams::validate() const {
  if (L < 1) throw std::invalid_argument("ChainParams: L must be >= 1");
  check_chain_length(L);
}

int max_chain_length() {
  if (const char* env = std::getenv("TILTED_ISING_MAX_L")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 62) return static_cast<int>(v);
  }
  return 14;
}

void check_chain_length(int L) {
  int limit = max_chain_length();
  if (L > limit) {
    throw ResourceLimitError("chain length L=" + std::to_string(L) + " exceeds the guard of " +
                             std::to_string(limit) + " (set TILTED_ISING_MAX_L to raise it)");
  }
}

}  // namespace tilted_ising
