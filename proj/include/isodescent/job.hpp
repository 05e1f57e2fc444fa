#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isod {

/// Flat key/value job description. Keys are `section.name`; the text form
/// groups them under `[section]` headers.
class Job {
 public:
  /// Throws InvalidArgument naming an unknown key.
  void set(std::string_view key, std::string_view value);
  std::optional<std::string> get(std::string_view key) const;
  bool has(std::string_view key) const { return get(key).has_value(); }
  void erase(std::string_view key);

  /// Merges `[section]` / `key = value` text; `#` starts a comment.
  /// Throws SyntaxError with the offending line.
  void load(std::string_view text);
  void load_file(const std::string& path);
  /// Canonical text, sections and keys in a fixed order.
  std::string to_string() const;

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Every key a job may carry, in canonical order.
const std::vector<std::string_view>& job_keys();

struct CommandResult {
  int status = 0;
  std::string json;
  std::string summary;
  /// Job text produced by `forge`.
  std::string emitted_job;
};

/// Runs descend, degrees, forge, oracle, verify or factor. Never throws;
/// failures become a report with an `error` member and a nonzero status.
CommandResult run_command(const Job& job, std::string_view command);

}  // namespace isod
