#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "infl/errors.hpp"

namespace infl {

/// Calendar month position. The code YYYY.MM maps to the decimal year
/// YYYY + MM/12, so December of one year coincides with the start of the next.
struct MonthCode {
    int year;
    int month;  // 1..12
};

inline double month_code_to_time(MonthCode code) {
    if (code.month < 1 || code.month > 12)
        throw domain_error("month code " + std::to_string(code.year) + "." +
                           std::to_string(code.month) + ": month must be in 1..12");
    return static_cast<double>(code.year) + static_cast<double>(code.month) / 12.0;
}

/// One index observation: decimal-year time and a positive index level.
struct CpiObservation {
    double time;
    double value;
};

/// Ordered index observations with strictly increasing times, length >= 2.
class CpiSeries {
public:
    explicit CpiSeries(std::vector<CpiObservation> observations)
        : obs_(std::move(observations)) {
        std::stable_sort(obs_.begin(), obs_.end(),
                         [](const CpiObservation& a, const CpiObservation& b) { return a.time < b.time; });
        if (obs_.size() < 2)
            throw domain_error("cpi series needs at least 2 observations, got " +
                               std::to_string(obs_.size()));
        for (const CpiObservation& o : obs_) {
            if (!std::isfinite(o.time))
                throw domain_error("cpi series: non-finite observation time");
            if (!(o.value > 0.0) || !std::isfinite(o.value))
                throw domain_error("cpi series: observation value must be positive and finite");
        }
        for (std::size_t i = 1; i < obs_.size(); ++i)
            if (!(obs_[i - 1].time < obs_[i].time))
                throw domain_error("cpi series: duplicate observation time " +
                                   std::to_string(obs_[i].time));
    }

    std::span<const CpiObservation> observations() const { return obs_; }
    std::size_t size() const { return obs_.size(); }
    const CpiObservation& operator[](std::size_t i) const { return obs_[i]; }
    const CpiObservation& front() const { return obs_.front(); }
    const CpiObservation& back() const { return obs_.back(); }

    double span_start() const { return obs_.front().time; }
    double span_end() const { return obs_.back().time; }

    std::vector<double> times() const {
        std::vector<double> t;
        t.reserve(obs_.size());
        for (const CpiObservation& o : obs_) t.push_back(o.time);
        return t;
    }

private:
    std::vector<CpiObservation> obs_;
};

namespace detail {

inline bool is_month_code_token(const std::string& tok) {
    if (tok.size() != 7 || tok[4] != '.') return false;
    for (int i : {0, 1, 2, 3, 5, 6})
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline double parse_full_double(const std::string& tok, int line_no, const char* what) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end != begin + tok.size() || tok.empty() || errno == ERANGE || !std::isfinite(v))
        throw parse_error("line " + std::to_string(line_no) + ": cannot parse " +
                          std::string(what) + " '" + tok + "'");
    return v;
}

/// Shortest round-trip decimal form; a trailing zero is appended when the
/// result would collide with the YYYY.MM month-code shape on re-parse.
inline std::string format_time(double t) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), t);
    std::string s(buf, p);
    if (is_month_code_token(s)) s.push_back('0');
    return s;
}

inline std::string format_value(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

}  // namespace detail

/// Parse CSV records of the form `time,value`. The time field is either a
/// YYYY.MM month code (exactly two digits after the dot, month 01..12) or a
/// decimal year. Lines starting with `#` are comments; blank lines and CRLF
/// endings are accepted.
inline CpiSeries parse_cpi_csv(std::istream& in) {
    std::vector<CpiObservation> obs;
    std::vector<int> lines;
    std::string line;
    int line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
                static_cast<unsigned char>(line[1]) == 0xBB &&
                static_cast<unsigned char>(line[2]) == 0xBF)
                line.erase(0, 3);
            first = false;
        }
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;

        std::size_t comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected exactly two comma-separated fields");
        std::string time_tok = detail::trim(t.substr(0, comma));
        std::string value_tok = detail::trim(t.substr(comma + 1));

        double time;
        if (detail::is_month_code_token(time_tok)) {
            int year = std::stoi(time_tok.substr(0, 4));
            int month = std::stoi(time_tok.substr(5, 2));
            if (month < 1 || month > 12)
                throw parse_error("line " + std::to_string(line_no) + ": invalid month in '" +
                                  time_tok + "'");
            time = month_code_to_time({year, month});
        } else {
            time = detail::parse_full_double(time_tok, line_no, "time");
        }
        double value = detail::parse_full_double(value_tok, line_no, "value");
        if (!(value > 0.0))
            throw parse_error("line " + std::to_string(line_no) + ": value must be positive, got '" +
                              value_tok + "'");
        obs.push_back({time, value});
        lines.push_back(line_no);
    }

    // Report duplicates with the offending line number before handing off
    // to the series constructor.
    std::vector<std::size_t> order(obs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return obs[a].time < obs[b].time; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (obs[order[i - 1]].time == obs[order[i]].time)
            throw parse_error("line " + std::to_string(lines[order[i]]) + ": duplicate time " +
                              detail::format_time(obs[order[i]].time));

    try {
        return CpiSeries(std::move(obs));
    } catch (const domain_error& e) {
        throw parse_error(std::string("invalid cpi series: ") + e.what());
    }
}

inline CpiSeries parse_cpi_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_cpi_csv(in);
}

inline void write_cpi_csv(const CpiSeries& series, std::ostream& out) {
    out << "# time,value\n";
    for (const CpiObservation& o : series.observations())
        out << detail::format_time(o.time) << ',' << detail::format_value(o.value) << '\n';
}

/// Consecutive-interval log ratio: ln(v_{i+1}) - ln(v_i) on <t_i, t_{i+1}>.
struct LogRatio {
    double t0;
    double t1;
    double log_ratio;
};

inline std::vector<LogRatio> series_log_ratios(const CpiSeries& series) {
    std::vector<LogRatio> out;
    out.reserve(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
        out.push_back({series[i].time, series[i + 1].time,
                       std::log(series[i + 1].value) - std::log(series[i].value)});
    return out;
}

}  // namespace infl
