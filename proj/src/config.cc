// Copyright 2026 The kerrqnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kerrqnd/config.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace kerrqnd {

namespace {

std::string trim(const std::string &s) {
    const char *ws = " \t\r\n";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

bool valid_key(const std::string &key) {
    if (key.empty()) {
        return false;
    }
    for (char c : key) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream &in, const std::string &source) {
    KeyValueConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::string origin = source + ":" + std::to_string(lineno);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key)) {
            throw ConfigError(origin + ": invalid key '" + key + "'");
        }
        if (value.empty()) {
            throw ConfigError(origin + ": empty value for '" + key + "'");
        }
        if (cfg.has(key)) {
            throw ConfigError(origin + ": duplicate key '" + key + "' (first set at " + cfg.entries_[key].origin + ")");
        }
        cfg.entries_[key] = Entry{value, origin};
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::parse_string(const std::string &text, const std::string &source) {
    std::istringstream in(text);
    return parse(in, source);
}

KeyValueConfig KeyValueConfig::load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse(in, path);
}

void KeyValueConfig::apply_override(const std::string &assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("--set " + assignment + ": expected key=value");
    }
    std::string key = trim(assignment.substr(0, eq));
    std::string value = trim(assignment.substr(eq + 1));
    if (!valid_key(key) || value.empty()) {
        throw ConfigError("--set " + assignment + ": expected key=value");
    }
    set(key, value, "--set " + key);
}

void KeyValueConfig::set(const std::string &key, const std::string &value, const std::string &origin) {
    entries_[key] = Entry{value, origin};
}

void KeyValueConfig::require_known(const std::set<std::string> &known) const {
    for (const auto &[key, entry] : entries_) {
        if (!known.count(key)) {
            throw ConfigError(entry.origin + ": unknown key '" + key + "'");
        }
    }
}

void KeyValueConfig::fail(const std::string &key, const std::string &what) const {
    auto it = entries_.find(key);
    std::string where = it != entries_.end() ? it->second.origin + ": " : "";
    throw ConfigError(where + key + " " + what);
}

std::optional<double> KeyValueConfig::find_double(const std::string &key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    const std::string &text = it->second.value;
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        fail(key, "is not a finite number: '" + text + "'");
    }
    return value;
}

double KeyValueConfig::get_double(const std::string &key) const {
    auto v = find_double(key);
    if (!v) {
        throw ConfigError("missing required key '" + key + "'");
    }
    return *v;
}

double KeyValueConfig::get_double(const std::string &key, double fallback) const {
    return find_double(key).value_or(fallback);
}

std::int64_t KeyValueConfig::get_int(const std::string &key, std::int64_t fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string &text = it->second.value;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        fail(key, "is not an integer: '" + text + "'");
    }
    return value;
}

bool KeyValueConfig::get_bool(const std::string &key, bool fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string &v = it->second.value;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    fail(key, "is not a boolean: '" + v + "'");
}

}  // namespace kerrqnd
