#include "indexcap/limits.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "indexcap/error.hpp"
#include "indexcap/parallel.hpp"

namespace indexcap {

Deadline::Deadline(std::optional<double> seconds) {
  if (seconds) {
    until_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(*seconds));
  }
}

bool Deadline::expired() const {
  return until_ && std::chrono::steady_clock::now() >= *until_;
}

void Deadline::check(const char* what) const {
  if (!until_) return;
  if ((++counter_ & 0xFFU) != 0) return;
  if (expired()) throw TimeoutError(std::string(what) + ": timeout");
}

unsigned default_threads() {
  if (const char* env = std::getenv("INDEXCAP_THREADS")) {
    try {
      int value = std::stoi(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace indexcap
