#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace star {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sectioned key = value text format. '#' and ';' start comments, keys are
// case-sensitive, values keep interior whitespace trimmed at the ends.
// Vector values are comma separated.
class Config {
  public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::vector<std::string> sections() const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& dflt) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double dflt) const;
    long long get_int(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key, long long dflt) const;
    bool get_bool(const std::string& section, const std::string& key, bool dflt) const;
    std::vector<double> get_vector(const std::string& section, const std::string& key) const;
    std::vector<double> get_vector(const std::string& section, const std::string& key,
                                   const std::vector<double>& dflt) const;

    // "section.key" addressing used by the C API's override entry point.
    void set(const std::string& dotted_key, const std::string& value);
    void set(const std::string& section, const std::string& key, const std::string& value);

    // canonical text round-trip, used for config echo in run manifests
    std::string to_string() const;

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
    const std::string& raw(const std::string& section, const std::string& key) const;
};

} // namespace star
