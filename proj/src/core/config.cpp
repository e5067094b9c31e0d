#include "config.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace star {

static std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t cut = line.find_first_of("#;");
        if (cut != std::string::npos) line = line.substr(0, cut);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError("config line " + std::to_string(lineno) + ": empty section name");
            cfg.sections_[section];
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": key outside any section");
        cfg.sections_[section][key] = val;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::vector<std::string> Config::sections() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : sections_) out.push_back(name);
    return out;
}

const std::string& Config::raw(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) throw ConfigError("missing config section [" + section + "]");
    auto k = s->second.find(key);
    if (k == s->second.end())
        throw ConfigError("missing config key '" + key + "' in section [" + section + "]");
    return k->second;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    return raw(section, key);
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& dflt) const {
    return has(section, key) ? raw(section, key) : dflt;
}

static double parse_double(const std::string& v, const std::string& where) {
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("config value for " + where + " is not a number: '" + v + "'");
    return d;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    return parse_double(raw(section, key), section + "." + key);
}

double Config::get_double(const std::string& section, const std::string& key, double dflt) const {
    return has(section, key) ? get_double(section, key) : dflt;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
    double d = get_double(section, key);
    long long i = (long long)d;
    if (double(i) != d)
        throw ConfigError("config value for " + section + "." + key + " is not an integer");
    return i;
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long dflt) const {
    return has(section, key) ? get_int(section, key) : dflt;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool dflt) const {
    if (!has(section, key)) return dflt;
    std::string v = raw(section, key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config value for " + section + "." + key + " is not a boolean: '" + v + "'");
}

std::vector<double> Config::get_vector(const std::string& section, const std::string& key) const {
    const std::string& v = raw(section, key);
    std::vector<double> out;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw ConfigError("config value for " + section + "." + key + " has an empty element");
        out.push_back(parse_double(item, section + "." + key));
    }
    if (out.empty())
        throw ConfigError("config value for " + section + "." + key + " is an empty list");
    return out;
}

std::vector<double> Config::get_vector(const std::string& section, const std::string& key,
                                       const std::vector<double>& dflt) const {
    return has(section, key) ? get_vector(section, key) : dflt;
}

void Config::set(const std::string& dotted_key, const std::string& value) {
    size_t dot = dotted_key.find('.');
    if (dot == std::string::npos || dot == 0 || dot == dotted_key.size() - 1)
        throw ConfigError("override key must be 'section.key', got '" + dotted_key + "'");
    set(dotted_key.substr(0, dot), dotted_key.substr(dot + 1), value);
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    sections_[section][key] = value;
}

std::string Config::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, kv] : sections_) {
        if (!first) out << "\n";
        first = false;
        out << "[" << name << "]\n";
        for (const auto& [k, v] : kv) out << k << " = " << v << "\n";
    }
    return out.str();
}

} // namespace star
