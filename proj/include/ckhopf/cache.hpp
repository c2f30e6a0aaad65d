#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace ckhopf {

// Memo table with concurrent lookups and exclusive inserts. Results must not
// depend on whether an entry was present.
template <class Key, class Value>
class ConcurrentMemo {
public:
  std::optional<Value> find(const Key& key) const
  {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end())
      return std::nullopt;
    return it->second;
  }

  const Value& insert(const Key& key, Value value)
  {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute)
  {
    if (auto hit = find(key))
      return *hit;
    return insert(key, compute());
  }

  std::size_t size() const
  {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear()
  {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

} // namespace ckhopf
