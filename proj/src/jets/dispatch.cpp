#include <atomic>
#include <cstdlib>
#include <string>

#include "finsler/jets/kernels.hpp"

namespace finsler::jets {
namespace {

const KernelTable* from_name(std::string_view name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") return avx2_kernels();
  if (name == "auto" || name.empty()) {
    if (const auto* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }
  return nullptr;
}

const KernelTable* initial() {
  const char* env = std::getenv("FINSLER_SIMD");
  if (const auto* t = from_name(env ? env : "auto")) return t;
  return from_name("auto");
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial()};
  return table;
}

}  // namespace

const KernelTable& active_kernels() { return *current().load(std::memory_order_acquire); }

bool select_kernels(std::string_view name) {
  const auto* t = from_name(name);
  if (!t) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace finsler::jets
