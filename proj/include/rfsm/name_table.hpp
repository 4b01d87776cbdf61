#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace rfsm {

/// Names are whitespace-free tokens; braces and '#' are reserved by the
/// text format.
inline bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '{' || c == '}' || c == '#')
      return false;
  }
  return true;
}

/// Ordered list of distinct names with reverse lookup.
class NameTable {
 public:
  NameTable() = default;

  NameTable(std::vector<std::string> names, ErrorKind duplicate_kind) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_valid_name(names_[i]))
        throw Error(ErrorKind::invalid_name, "'" + names_[i] + "' is not a valid name");
      if (!index_.emplace(names_[i], i).second)
        throw Error(duplicate_kind, "'" + names_[i] + "' appears more than once");
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const NameTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace rfsm
