#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alive/types.hpp"

namespace alive {

struct StoreError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a record fails its type invariants before being written.
struct RecordRejected : std::runtime_error {
  explicit RecordRejected(const std::vector<std::string>& violations);
  std::vector<std::string> violations;
};

// Append-only JSONL stream. Single writer, any number of readers; a record is
// visible only once its full line (including the newline) has been written.
class RecordStore {
 public:
  RecordStore() = default;
  explicit RecordStore(const std::filesystem::path& path);
  ~RecordStore();

  RecordStore(RecordStore&&) noexcept;
  RecordStore& operator=(RecordStore&&) noexcept;
  RecordStore(const RecordStore&) = delete;
  RecordStore& operator=(const RecordStore&) = delete;

  // Appends one raw JSON record; returns the byte offset the record starts at.
  // Offsets within one file are strictly increasing.
  uint64_t append(const nlohmann::json& record);

  // Validates the record's invariants, then appends. Throws RecordRejected
  // (naming the offending fields) without writing anything when they fail.
  template <typename T>
  uint64_t append_record(const T& rec) {
    auto violations = validate(rec);
    if (!violations.empty()) throw RecordRejected(violations);
    nlohmann::json j = rec;
    return append(j);
  }

  void flush();
  void close();
  bool is_open() const { return out_.is_open(); }
  const std::filesystem::path& path() const { return path_; }

  // Reads every complete record in the file. A trailing line without a
  // newline (torn write) is ignored rather than reported as corruption.
  static std::vector<nlohmann::json> read_all(const std::filesystem::path& path);

  // Like read_all but also reports each record's starting byte offset.
  static std::vector<std::pair<uint64_t, nlohmann::json>> read_all_with_offsets(
      const std::filesystem::path& path);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  uint64_t offset_ = 0;
};

}  // namespace alive
