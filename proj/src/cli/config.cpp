#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "zssusy/cli.hpp"

namespace zssusy::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty() || value.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": empty key or value");
    }
    if (!out.emplace(key, value).second) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": duplicate key " + key);
    }
  }
  return out;
}

std::vector<std::string> merge_config(
    const std::map<std::string, std::string>& config,
    const std::vector<std::string>& args) {
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> merged;
  for (const auto& [key, value] : config) {
    if (!given(key)) merged.push_back("--" + key + "=" + value);
  }
  merged.insert(merged.end(), args.begin(), args.end());
  return merged;
}

}  // namespace zssusy::cli
