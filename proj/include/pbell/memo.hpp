#ifndef PBELL_MEMO_HPP
#define PBELL_MEMO_HPP

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace pbell {

// Thread-safe memo table. Values are computed outside the lock, so two
// threads may race to insert the same key; both compute identical values
// and the first insert wins.
template <typename Key, typename Value>
class MemoTable {
public:
  std::optional<Value> find(const Key &key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end())
      return std::nullopt;
    return it->second;
  }

  Value insert(const Key &key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  template <typename Fn>
  Value get_or_compute(const Key &key, Fn &&compute) {
    if (auto hit = find(key))
      return *std::move(hit);
    return insert(key, compute());
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

} // namespace pbell

#endif // PBELL_MEMO_HPP
