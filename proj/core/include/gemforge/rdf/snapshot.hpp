#pragma once

#include <memory>
#include <mutex>
#include <utility>

namespace gemforge::rdf {

/// Holds an immutable value that readers pin by shared_ptr. publish() swaps
/// in a new value atomically; readers holding the old pointer keep a
/// consistent view until they release it.
template <typename T>
class Snapshot {
 public:
  Snapshot() = default;
  explicit Snapshot(T initial) : current_(std::make_shared<const T>(std::move(initial))) {}

  std::shared_ptr<const T> get() const {
    std::lock_guard lock(mutex_);
    return current_;
  }

  void publish(T next) { publish(std::make_shared<const T>(std::move(next))); }

  void publish(std::shared_ptr<const T> next) {
    std::lock_guard lock(mutex_);
    current_.swap(next);
    // The previous value (now in `next`) is released after the lock.
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const T> current_;
};

}  // namespace gemforge::rdf
