// SPDX-License-Identifier: Apache-2.0
#include "qnas/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qnas {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

long long parse_int_token(const std::string& tok, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw std::invalid_argument(context + ": expected integer, got '" + tok +
                                "'");
  }
  return v;
}

double parse_double_token(const std::string& tok, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw std::invalid_argument(context + ": expected number, got '" + tok +
                                "'");
  }
  return v;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

KeyValueConfig KeyValueConfig::parse_string(const std::string& text,
                                            const std::string& origin) {
  KeyValueConfig cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = origin + ":" + std::to_string(lineno);
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument(where + ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw std::invalid_argument(where + ": empty section name");
      }
      cfg.sections_[section];  // allow empty sections
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(where + ": expected 'key = value'");
    }
    if (section.empty()) {
      throw std::invalid_argument(where + ": key outside any [section]");
    }
    std::string key = trim(line.substr(0, eq));
    std::string rest = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(where + ": empty key");

    Entry entry;
    std::istringstream toks(rest);
    std::string tok;
    while (toks >> tok) {
      if (!tok.empty() && tok.front() == '*') {
        if (entry.seed_index >= 0) {
          throw std::invalid_argument(where + ": multiple '*' seed markers");
        }
        entry.seed_index = static_cast<int>(entry.tokens.size());
        tok.erase(0, 1);
      }
      if (tok.empty()) {
        throw std::invalid_argument(where + ": bare '*' marker");
      }
      entry.tokens.push_back(tok);
    }
    if (entry.tokens.empty()) {
      throw std::invalid_argument(where + ": key '" + key + "' has no value");
    }
    auto& sec = cfg.sections_[section];
    if (sec.count(key)) {
      throw std::invalid_argument(where + ": duplicate key '" + key +
                                  "' in [" + section + "]");
    }
    sec.emplace(key, std::move(entry));
  }
  return cfg;
}

void KeyValueConfig::fail(const std::string& what) const {
  throw std::invalid_argument(origin_ + ": " + what);
}

bool KeyValueConfig::has_section(const std::string& section) const {
  return sections_.count(section) != 0;
}

bool KeyValueConfig::has(const std::string& section,
                         const std::string& key) const {
  auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) != 0;
}

std::vector<std::string> KeyValueConfig::sections() const {
  std::vector<std::string> out;
  out.reserve(sections_.size());
  for (const auto& [name, _] : sections_) out.push_back(name);
  return out;
}

const KeyValueConfig::Entry& KeyValueConfig::entry(
    const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  if (it == sections_.end()) fail("missing section [" + section + "]");
  auto jt = it->second.find(key);
  if (jt == it->second.end()) {
    fail("missing key '" + key + "' in [" + section + "]");
  }
  return jt->second;
}

std::string KeyValueConfig::get_string(const std::string& sec,
                                       const std::string& key) const {
  const Entry& e = entry(sec, key);
  if (e.tokens.size() != 1) {
    fail("key '" + key + "' in [" + sec + "] must hold a single value");
  }
  return e.tokens[0];
}

std::string KeyValueConfig::get_string(const std::string& sec,
                                       const std::string& key,
                                       const std::string& fallback) const {
  return has(sec, key) ? get_string(sec, key) : fallback;
}

long long KeyValueConfig::get_int(const std::string& sec,
                                  const std::string& key) const {
  return parse_int_token(get_string(sec, key), "[" + sec + "] " + key);
}

long long KeyValueConfig::get_int(const std::string& sec,
                                  const std::string& key,
                                  long long fallback) const {
  return has(sec, key) ? get_int(sec, key) : fallback;
}

double KeyValueConfig::get_double(const std::string& sec,
                                  const std::string& key) const {
  return parse_double_token(get_string(sec, key), "[" + sec + "] " + key);
}

double KeyValueConfig::get_double(const std::string& sec,
                                  const std::string& key,
                                  double fallback) const {
  return has(sec, key) ? get_double(sec, key) : fallback;
}

bool KeyValueConfig::get_bool(const std::string& sec, const std::string& key,
                              bool fallback) const {
  if (!has(sec, key)) return fallback;
  std::string v = get_string(sec, key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail("key '" + key + "' in [" + sec + "] is not a boolean: " + v);
  return fallback;  // unreachable
}

std::vector<long long> KeyValueConfig::get_ints(const std::string& sec,
                                                const std::string& key) const {
  const Entry& e = entry(sec, key);
  std::vector<long long> out;
  out.reserve(e.tokens.size());
  for (const auto& t : e.tokens) {
    out.push_back(parse_int_token(t, "[" + sec + "] " + key));
  }
  return out;
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& sec,
                                                const std::string& key) const {
  const Entry& e = entry(sec, key);
  std::vector<double> out;
  out.reserve(e.tokens.size());
  for (const auto& t : e.tokens) {
    out.push_back(parse_double_token(t, "[" + sec + "] " + key));
  }
  return out;
}

int KeyValueConfig::seed_index(const std::string& sec,
                               const std::string& key) const {
  return entry(sec, key).seed_index;
}

}  // namespace qnas
