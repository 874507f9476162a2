#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlperim::cli {

/// Flat TOML-style configuration: [section] headers, key = value lines,
/// # comments. Values are kept as raw strings and converted on access.
class Config {
public:
  static Config parse_file(const std::string& path);
  static Config parse_text(const std::string& text);

  const std::string& raw_text() const { return raw_; }

  bool has(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key, double fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int_or(const std::string& section, const std::string& key,
                       long long fallback) const;
  /// Comma/space separated list of numbers.
  std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

private:
  std::string raw_;
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Configuration or command-line usage problem; mapped to exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nlperim::cli
