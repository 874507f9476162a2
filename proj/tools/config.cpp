#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace nlperim::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\'')))
    return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Config Config::parse_text(const std::string& text) {
  Config cfg;
  cfg.raw_ = text;
  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header at line " +
                                                std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      cfg.sections_[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key = value at line " + std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("empty key at line " + std::to_string(lineno));
    cfg.sections_[section][key] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto sit = sections_.find(section);
  return sit != sections_.end() && sit->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  const auto sit = sections_.find(section);
  if (sit == sections_.end() || !sit->second.count(key))
    throw ConfigError("missing key '" + key + "' in section [" + section + "]");
  return sit->second.at(key);
}

std::string Config::get_string_or(const std::string& section, const std::string& key,
                                  const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  const std::string v = get_string(section, key);
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (trim(v.substr(pos)).empty()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("key '" + key + "' in [" + section + "] is not a number: '" + v + "'");
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
  const double x = get_double(section, key);
  const long long n = static_cast<long long>(x);
  if (static_cast<double>(n) != x)
    throw ConfigError("key '" + key + "' in [" + section + "] is not an integer");
  return n;
}

long long Config::get_int_or(const std::string& section, const std::string& key,
                             long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::vector<double> Config::get_double_list(const std::string& section,
                                            const std::string& key) const {
  std::string v = get_string(section, key);
  for (auto& c : v)
    if (c == ',') c = ' ';
  std::istringstream is(v);
  std::vector<double> out;
  double x = 0;
  while (is >> x) out.push_back(x);
  if (out.empty())
    throw ConfigError("key '" + key + "' in [" + section + "] holds no numbers");
  return out;
}

}  // namespace nlperim::cli
