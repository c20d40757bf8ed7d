#pragma once

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "pel/census.hpp"
#include "pel/numeric.hpp"
#include "pel/outcome.hpp"
#include "pel/verify.hpp"

namespace pel {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format: " + s);
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

inline std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

/// Fixed decimal rendering so equal doubles print identically everywhere.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

/// Census rows. Exact integers are emitted as raw JSON digits (arbitrary
/// precision), probabilities always as reduced "num/den" strings.
inline std::string census_line(const CensusReport& r, OutputFormat fmt, bool header = false) {
  switch (fmt) {
    case OutputFormat::json: {
      std::ostringstream out;
      out << "{\"group\":" << detail::json_str(r.group) << ",\"prime\":" << r.prime
          << ",\"count\":" << r.count << ",\"order\":" << r.order
          << ",\"probability\":" << detail::json_str(fraction_string(r.probability)) << "}";
      return out.str();
    }
    case OutputFormat::csv: {
      if (header) return "group,prime,count,order,probability";
      std::ostringstream out;
      out << detail::csv_escape(r.group) << "," << r.prime << "," << r.count << "," << r.order
          << "," << fraction_string(r.probability);
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "P_" << r.prime << "(" << r.group << ") = " << r.count << "/" << r.order << " = "
          << fraction_string(r.probability);
      return out.str();
    }
  }
  return {};
}

inline std::string pair_line(const PairReport& r, OutputFormat fmt, bool header = false) {
  switch (fmt) {
    case OutputFormat::json: {
      std::ostringstream out;
      out << "{\"group\":" << detail::json_str(r.group) << ",\"prime\":" << r.prime
          << ",\"element\":" << detail::json_str(r.element) << ",\"count\":" << r.count
          << ",\"probability\":" << detail::json_str(fraction_string(r.probability)) << "}";
      return out.str();
    }
    case OutputFormat::csv: {
      if (header) return "group,prime,element,count,probability";
      std::ostringstream out;
      out << detail::csv_escape(r.group) << "," << r.prime << ","
          << detail::csv_escape(r.element) << "," << r.count << ","
          << fraction_string(r.probability);
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      if (r.element.empty())
        out << "P_" << r.prime << "(" << r.group << "," << r.group
            << ") = " << fraction_string(r.probability);
      else
        out << "|Omega_" << r.prime << "(" << r.element << "," << r.group << ")| = " << r.count
            << " (" << fraction_string(r.probability) << ")";
      return out.str();
    }
  }
  return {};
}

inline std::string estimate_line(const EstimateReport& r, OutputFormat fmt,
                                 bool header = false) {
  switch (fmt) {
    case OutputFormat::json: {
      std::ostringstream out;
      out << "{\"group\":" << detail::json_str(r.group) << ",\"prime\":" << r.prime
          << ",\"samples\":" << r.samples << ",\"seed\":" << r.seed << ",\"hits\":" << r.hits
          << ",\"estimate\":" << detail::format_double(r.estimate)
          << ",\"wilson_low\":" << detail::format_double(r.wilson_low)
          << ",\"wilson_high\":" << detail::format_double(r.wilson_high) << "}";
      return out.str();
    }
    case OutputFormat::csv: {
      if (header) return "group,prime,samples,seed,hits,estimate,wilson_low,wilson_high";
      std::ostringstream out;
      out << detail::csv_escape(r.group) << "," << r.prime << "," << r.samples << "," << r.seed
          << "," << r.hits << "," << detail::format_double(r.estimate) << ","
          << detail::format_double(r.wilson_low) << "," << detail::format_double(r.wilson_high);
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << "P_" << r.prime << "(" << r.group << ") ~ " << detail::format_double(r.estimate)
          << "  95% Wilson [" << detail::format_double(r.wilson_low) << ", "
          << detail::format_double(r.wilson_high) << "]  (" << r.hits << "/" << r.samples
          << ", seed " << r.seed << ")";
      return out.str();
    }
  }
  return {};
}

/// Outcome rows: (claim, params, computed, relation, pass, ms). When timing
/// is off, ms is written as 0 so identical runs emit identical bytes.
inline std::string outcome_line(const VerificationOutcome& o, OutputFormat fmt,
                                bool with_timing, bool header = false) {
  const long long ms = with_timing ? static_cast<long long>(o.ms) : 0;
  switch (fmt) {
    case OutputFormat::json: {
      std::ostringstream out;
      out << "{\"claim\":" << detail::json_str(o.claim) << ",\"params\":{";
      for (std::size_t i = 0; i < o.params.size(); ++i) {
        if (i) out << ",";
        out << detail::json_str(o.params[i].first) << ":" << detail::json_str(o.params[i].second);
      }
      out << "},\"computed\":[";
      for (std::size_t i = 0; i < o.computed.size(); ++i) {
        if (i) out << ",";
        out << "{\"name\":" << detail::json_str(o.computed[i].first)
            << ",\"value\":" << detail::json_str(o.computed[i].second) << "}";
      }
      out << "],\"relation\":" << detail::json_str(o.relation)
          << ",\"pass\":" << (o.pass ? "true" : "false") << ",\"ms\":" << ms << "}";
      return out.str();
    }
    case OutputFormat::csv: {
      if (header) return "claim,params,computed,relation,pass,ms";
      std::ostringstream params, computed;
      for (std::size_t i = 0; i < o.params.size(); ++i) {
        if (i) params << ";";
        params << o.params[i].first << "=" << o.params[i].second;
      }
      for (std::size_t i = 0; i < o.computed.size(); ++i) {
        if (i) computed << ";";
        computed << o.computed[i].first << "=" << o.computed[i].second;
      }
      std::ostringstream out;
      out << detail::csv_escape(o.claim) << "," << detail::csv_escape(params.str()) << ","
          << detail::csv_escape(computed.str()) << "," << detail::csv_escape(o.relation) << ","
          << (o.pass ? "true" : "false") << "," << ms;
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      out << (o.pass ? "PASS" : "FAIL") << "  " << o.claim;
      for (const auto& [k, v] : o.params)
        if (k != "status") out << " " << k << "=" << v;
      for (const auto& [k, v] : o.computed) out << "  " << k << "=" << v;
      if (with_timing) out << "  [" << ms << "ms]";
      return out.str();
    }
  }
  return {};
}

inline std::string tower_line(const TowerEvaluation& ev, OutputFormat fmt, bool with_timing) {
  switch (fmt) {
    case OutputFormat::json: {
      std::ostringstream out;
      out << "{\"family\":" << detail::json_str(ev.family) << ",\"exact\":[";
      for (std::size_t i = 0; i < ev.exact_depths.size(); ++i) {
        if (i) out << ",";
        out << "{\"depth\":" << ev.exact_depths[i]
            << ",\"value\":" << detail::json_str(fraction_string(ev.exact_values[i])) << "}";
      }
      out << "],\"closed\":[";
      for (std::size_t i = 0; i < ev.closed_depths.size(); ++i) {
        if (i) out << ",";
        out << "{\"depth\":" << ev.closed_depths[i]
            << ",\"value\":" << detail::json_str(fraction_string(ev.closed_values[i])) << "}";
      }
      out << "],\"limit\":" << detail::json_str(fraction_string(ev.limit))
          << ",\"monotone\":" << (ev.monotone ? "true" : "false")
          << ",\"direction\":" << detail::json_str(ev.monotone_direction)
          << ",\"pass\":" << (ev.pass ? "true" : "false")
          << ",\"ms\":" << (with_timing ? static_cast<long long>(ev.ms) : 0) << "}";
      return out.str();
    }
    default:
      return outcome_line(ev.to_outcome(), fmt, with_timing);
  }
}

}  // namespace pel
