#include "artin/rings.hpp"

namespace artin {

thread_local uint64_t FpCtx::modulus = 2;

} // namespace artin
