#include "ladderlab/checkpoint.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>

#include "ladderlab/error.hpp"

namespace ladderlab {
namespace {

constexpr const char* kMagic = "LLCK1";

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hexfloat(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

bool parse_hexfloat(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size();
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Exclusive advisory lock on "<path>.lock" for the lifetime of the object.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    const std::string lock_path = path.string() + ".lock";
    fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error(ErrorKind::io, "cannot open lock file " + lock_path);
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw Error(ErrorKind::io, "cannot lock " + lock_path);
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string CheckpointStore::format_record(const MomentKey& key, const CachedMoment& moment) {
  for (const std::string* field : {&key.kind, &key.params}) {
    if (field->find_first_of("\t\n") != std::string::npos) {
      throw Error(ErrorKind::domain, "checkpoint key fields may not contain tabs or newlines");
    }
  }
  std::string body = std::string(kMagic) + '\t' + key.kind + '\t' + key.params + '\t' +
                     hexfloat(key.upper) + '\t' + hexfloat(key.tol) + '\t' +
                     hexfloat(moment.value) + '\t' + hexfloat(moment.abs_error_estimate) + '\t';
  char checksum[24];
  std::snprintf(checksum, sizeof checksum, "%016" PRIx64, fnv1a(body));
  return body + checksum + '\n';
}

CheckpointStore::CheckpointStore(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  FileLock lock(path_);
  load();
}

void CheckpointStore::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;
  const std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();

  std::size_t pos = 0;
  std::size_t valid_end = 0;
  std::size_t line_no = 0;
  while (pos < contents.size()) {
    const auto newline = contents.find('\n', pos);
    ++line_no;
    if (newline == std::string::npos) break;
    const std::string line = contents.substr(pos, newline - pos);
    const auto fields = split_tabs(line);
    bool ok = fields.size() == 8 && fields[0] == kMagic;
    MomentKey key;
    CachedMoment moment;
    if (ok) {
      const std::string body = line.substr(0, line.size() - fields[7].size());
      char expected[24];
      std::snprintf(expected, sizeof expected, "%016" PRIx64, fnv1a(body));
      ok = fields[7] == expected && parse_hexfloat(fields[3], key.upper) &&
           parse_hexfloat(fields[4], key.tol) && parse_hexfloat(fields[5], moment.value) &&
           parse_hexfloat(fields[6], moment.abs_error_estimate);
    }
    if (!ok) break;
    key.kind = fields[1];
    key.params = fields[2];
    records_.emplace(Key{key.kind, key.params, key.upper, key.tol}, moment);
    pos = newline + 1;
    valid_end = pos;
  }
  if (valid_end < contents.size()) {
    std::ostringstream msg;
    msg << "checkpoint " << path_.string() << ": invalid record at line " << line_no
        << "; truncated to " << records_.size() << " valid records";
    warnings_.push_back(msg.str());
    std::filesystem::resize_file(path_, valid_end);
  }
}

std::optional<CachedMoment> CheckpointStore::lookup(const MomentKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = records_.find(Key{key.kind, key.params, key.upper, key.tol});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void CheckpointStore::store(const MomentKey& key, const CachedMoment& moment) {
  const std::string record = format_record(key, moment);
  std::unique_lock lock(mutex_);
  const Key k{key.kind, key.params, key.upper, key.tol};
  if (records_.contains(k)) return;
  FileLock file_lock(path_);
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  out << record;
  out.flush();
  if (!out) throw Error(ErrorKind::io, "cannot append to checkpoint " + path_.string());
  records_.emplace(k, moment);
}

std::size_t CheckpointStore::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

}  // namespace ladderlab
