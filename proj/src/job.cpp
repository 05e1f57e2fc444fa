#include "isodescent/job.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "isodescent/error.hpp"

namespace isod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const std::vector<std::string_view>& job_keys() {
  static const std::vector<std::string_view> keys{
      "job.command",    "job.seed",         "job.budget",          "field.spec",      "form.text",
      "form.deg",       "form.vars",        "form.norm",           "extension.f",     "extension.point",
      "extension.n",    "extension.m",      "extension.m-max",     "descend.iterate", "descend.max-rounds",
      "poly.text",
  };
  return keys;
}

void Job::set(std::string_view key, std::string_view value) {
  const auto& keys = job_keys();
  if (std::find(keys.begin(), keys.end(), key) == keys.end())
    throw Error(Errc::InvalidArgument, "unknown job key '" + std::string(key) + "'");
  entries_[std::string(key)] = std::string(trim(value));
}

std::optional<std::string> Job::get(std::string_view key) const {
  auto it = entries_.find(std::string(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Job::erase(std::string_view key) { entries_.erase(std::string(key)); }

void Job::load(std::string_view text) {
  std::string section;
  std::size_t line_no = 0, offset = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw); offset += raw.size() + 1) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw SyntaxError(offset, "line " + std::to_string(line_no) + ": unterminated section");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw SyntaxError(offset, "line " + std::to_string(line_no) + ": expected key = value");
    if (section.empty())
      throw SyntaxError(offset, "line " + std::to_string(line_no) + ": key outside of a section");
    std::string key = section + "." + std::string(trim(line.substr(0, eq)));
    try {
      set(key, line.substr(eq + 1));
    } catch (const Error& e) {
      throw SyntaxError(offset, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void Job::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read job file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  load(buf.str());
}

std::string Job::to_string() const {
  std::string out, section;
  for (std::string_view key : job_keys()) {
    auto value = get(key);
    if (!value) continue;
    auto dot = key.find('.');
    std::string sec(key.substr(0, dot));
    if (sec != section) {
      if (!out.empty()) out += "\n";
      out += "[" + sec + "]\n";
      section = sec;
    }
    out += std::string(key.substr(dot + 1)) + " = " + *value + "\n";
  }
  return out;
}

}  // namespace isod
