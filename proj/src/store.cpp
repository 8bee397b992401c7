#include "alive/store.hpp"

#include <sstream>

namespace alive {

namespace {
std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}
}  // namespace

RecordRejected::RecordRejected(const std::vector<std::string>& v)
    : std::runtime_error("record rejected: " + join(v)), violations(v) {}

RecordStore::RecordStore(const std::filesystem::path& path) : path_(path) {
  out_.open(path, std::ios::out | std::ios::app | std::ios::binary);
  if (!out_) throw StoreError("cannot open store for writing: " + path.string());
  out_.seekp(0, std::ios::end);
  offset_ = static_cast<uint64_t>(out_.tellp());
}

RecordStore::~RecordStore() {
  if (out_.is_open()) out_.flush();
}

RecordStore::RecordStore(RecordStore&& other) noexcept
    : path_(std::move(other.path_)), out_(std::move(other.out_)), offset_(other.offset_) {}

RecordStore& RecordStore::operator=(RecordStore&& other) noexcept {
  path_ = std::move(other.path_);
  out_ = std::move(other.out_);
  offset_ = other.offset_;
  return *this;
}

uint64_t RecordStore::append(const nlohmann::json& record) {
  if (!out_.is_open()) throw StoreError("store not open for writing");
  const uint64_t at = offset_;
  std::string line = record.dump();
  line.push_back('\n');
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  if (!out_) throw StoreError("write failure at offset " + std::to_string(at) + " in " +
                              path_.string());
  offset_ += line.size();
  return at;
}

void RecordStore::flush() {
  if (out_.is_open()) out_.flush();
}

void RecordStore::close() {
  if (out_.is_open()) {
    out_.flush();
    out_.close();
  }
}

std::vector<nlohmann::json> RecordStore::read_all(const std::filesystem::path& path) {
  std::vector<nlohmann::json> out;
  for (auto& [off, j] : read_all_with_offsets(path)) {
    (void)off;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<std::pair<uint64_t, nlohmann::json>> RecordStore::read_all_with_offsets(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::in | std::ios::binary);
  if (!in) throw StoreError("cannot open store for reading: " + path.string());
  std::vector<std::pair<uint64_t, nlohmann::json>> out;
  uint64_t offset = 0;
  std::string line;
  while (std::getline(in, line)) {
    // getline hitting EOF means the line had no trailing newline: a torn
    // final write, which readers must never surface as a record.
    if (in.eof()) break;
    uint64_t at = offset;
    offset += line.size() + 1;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw StoreError("corrupt record at offset " + std::to_string(at) + " in " + path.string());
    out.emplace_back(at, std::move(j));
  }
  return out;
}

}  // namespace alive
