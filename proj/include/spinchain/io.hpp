#pragma once
// Flat key-value config files with [section] headers, and deterministic
// CSV / JSON-lines emission.  All numeric parsing and printing is
// locale-independent (C locale semantics, decimal point only).

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinchain {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Locale-independent double parsing; throws on trailing garbage.
inline double parse_double(const std::string& s) {
    const char* c = s.c_str();
    char* end = nullptr;
    double v = std::strtod(c, &end);
    if (end == c || trim(end)[0] != '\0')
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

// Keys are stored as "section.key"; lines outside any section use the key
// alone.  '#' starts a comment.
class ConfigFile {
  public:
    static ConfigFile parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_text(ss.str());
    }

    static ConfigFile parse_text(const std::string& text) {
        ConfigFile cfg;
        std::string section;
        std::stringstream ss(text);
        std::string line;
        int lineno = 0;
        while (std::getline(ss, line)) {
            ++lineno;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw std::invalid_argument("config line " + std::to_string(lineno) +
                                             ": malformed section header");
                section = trim(line.substr(1, line.size() - 2));
                continue;
            }
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                         ": expected key = value");
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (key.empty())
                throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
            cfg.values_[section.empty() ? key : section + "." + key] = val;
        }
        return cfg;
    }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw std::invalid_argument("missing config key: " + key);
        return it->second;
    }

    std::string get(const std::string& key, const std::string& fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    double get_double(const std::string& key) const {
        try {
            return parse_double(get(key));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config key " + key + ": " + e.what());
        }
    }

    double get_double(const std::string& key, double fallback) const {
        return has(key) ? get_double(key) : fallback;
    }

    int get_int(const std::string& key, int fallback) const {
        if (!has(key)) return fallback;
        return static_cast<int>(get_double(key));
    }

    bool get_bool(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        std::string v = get(key);
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw std::invalid_argument("config key " + key + ": expected a boolean, got '" + v + "'");
    }

    std::vector<double> get_double_list(const std::string& key) const {
        std::vector<double> out;
        for (const std::string& item : split(get(key), ','))
            if (!item.empty()) out.push_back(parse_double(item));
        return out;
    }

    const std::map<std::string, std::string>& all() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

// Shortest round-trippable decimal representation; NaN prints literally as
// "NaN" so emitted files never depend on platform NaN spellings.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "NaN";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    double back = 0.0;
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

struct SweepRow {
    double tuning = 0.0;
    double kT = 0.0;
    std::string quantity;
    double value = 0.0;
    std::string branch;  // empty for non-TQD rows
};

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "tuning,kT,quantity,value,branch\n";
    for (const SweepRow& r : rows)
        out << format_double(r.tuning) << ',' << format_double(r.kT) << ',' << r.quantity << ','
            << format_double(r.value) << ',' << r.branch << '\n';
}

inline void write_sweep_jsonl(std::ostream& out, const std::vector<SweepRow>& rows) {
    for (const SweepRow& r : rows) {
        out << "{\"tuning\":" << format_double(r.tuning) << ",\"kT\":" << format_double(r.kT)
            << ",\"quantity\":\"" << r.quantity << "\",\"value\":"
            << (std::isnan(r.value) ? std::string("null") : format_double(r.value))
            << ",\"branch\":";
        if (r.branch.empty())
            out << "null";
        else
            out << '"' << r.branch << '"';
        out << "}\n";
    }
}

inline std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::vector<SweepRow> rows;
    std::string line;
    if (!std::getline(in, line) || trim(line) != "tuning,kT,quantity,value,branch")
        throw std::runtime_error("parse_sweep_csv: bad header");
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> f = split(line, ',');
        if (f.size() != 5) throw std::runtime_error("parse_sweep_csv: bad row: " + line);
        SweepRow r;
        r.tuning = parse_double(f[0]);
        r.kT = parse_double(f[1]);
        r.quantity = f[2];
        r.value = f[3] == "NaN" ? std::numeric_limits<double>::quiet_NaN() : parse_double(f[3]);
        r.branch = f[4];
        rows.push_back(r);
    }
    return rows;
}

struct CPRow {
    double kT = 0.0;
    std::string estimator;
    std::string method;  // "no-estimate" when the detector found nothing
    double location = 0.0;
    double uncertainty = 0.0;
};

inline void write_cp_csv(std::ostream& out, const std::vector<CPRow>& rows) {
    out << "kT,estimator,method,location,uncertainty\n";
    for (const CPRow& r : rows)
        out << format_double(r.kT) << ',' << r.estimator << ',' << r.method << ','
            << format_double(r.location) << ',' << format_double(r.uncertainty) << '\n';
}

inline void write_cp_jsonl(std::ostream& out, const std::vector<CPRow>& rows) {
    for (const CPRow& r : rows) {
        out << "{\"kT\":" << format_double(r.kT) << ",\"estimator\":\"" << r.estimator
            << "\",\"method\":\"" << r.method << "\",\"location\":"
            << (std::isnan(r.location) ? std::string("null") : format_double(r.location))
            << ",\"uncertainty\":"
            << (std::isnan(r.uncertainty) ? std::string("null") : format_double(r.uncertainty))
            << "}\n";
    }
}

}  // namespace spinchain
