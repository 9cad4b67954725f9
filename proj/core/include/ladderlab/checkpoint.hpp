#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "ladderlab/moments.hpp"

namespace ladderlab {

/// Append-only text file of moment-integral results.
///
/// Each record is one line of tab-separated fields
///
///     LLCK1  kind  params  upper  tol  value  error  checksum
///
/// where the four numbers are C99 hexadecimal floats (exact round trip) and
/// the checksum is the FNV-1a 64-bit hash of everything before it. On open,
/// the file is truncated after the last valid record and a warning recorded.
/// Writes take an exclusive lock on "<path>.lock".
class CheckpointStore final : public MomentCache {
 public:
  explicit CheckpointStore(std::filesystem::path path);

  std::optional<CachedMoment> lookup(const MomentKey& key) const override;
  void store(const MomentKey& key, const CachedMoment& moment) override;

  std::size_t size() const;
  const std::filesystem::path& path() const noexcept { return path_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Serialized record line, including the trailing newline.
  static std::string format_record(const MomentKey& key, const CachedMoment& moment);

 private:
  using Key = std::tuple<std::string, std::string, double, double>;

  void load();

  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::map<Key, CachedMoment> records_;
  std::vector<std::string> warnings_;
};

}  // namespace ladderlab
