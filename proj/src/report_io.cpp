#include "gftlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gftlab {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void JsonWriter::separator() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (!first_in_scope_.back()) out_ += ',';
    first_in_scope_.back() = false;
  }
}

void JsonWriter::begin_object() {
  separator();
  out_ += '{';
  first_in_scope_.push_back(true);
}

void JsonWriter::end_object() {
  out_ += '}';
  first_in_scope_.pop_back();
}

void JsonWriter::begin_array() {
  separator();
  out_ += '[';
  first_in_scope_.push_back(true);
}

void JsonWriter::end_array() {
  out_ += ']';
  first_in_scope_.pop_back();
}

void JsonWriter::key(const std::string& k) {
  separator();
  out_ += '"';
  out_ += escape_json(k);
  out_ += "\":";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  separator();
  if (std::isfinite(v))
    out_ += format_double(v);
  else
    out_ += "null";
}

void JsonWriter::value(long long v) {
  separator();
  out_ += std::to_string(v);
}

void JsonWriter::value(unsigned long long v) {
  separator();
  out_ += std::to_string(v);
}

void JsonWriter::value(const std::string& v) {
  separator();
  out_ += '"';
  out_ += escape_json(v);
  out_ += '"';
}

void JsonWriter::value_null() {
  separator();
  out_ += "null";
}

void JsonWriter::raw_bool(bool b) {
  separator();
  out_ += b ? "true" : "false";
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out += '"';
      for (char ch : f) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    } else {
      out += f;
    }
  }
  out += '\n';
  return out;
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
  const auto bad = [&] {
    throw std::invalid_argument("malformed alpha grid '" + spec + "'");
  };
  std::vector<double> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t next = spec.find(':', pos);
    const std::string tok = spec.substr(pos, next == std::string::npos
                                                 ? std::string::npos
                                                 : next - pos);
    if (tok.empty()) bad();
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(tok, &used));
      if (used != tok.size()) bad();
    } catch (const std::logic_error&) {
      bad();
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (parts.size() == 1) return {parts[0]};
  if (parts.size() != 3) bad();
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (step <= 0.0 || stop < start) bad();
  std::vector<double> grid;
  for (double a = start; a <= stop + 1e-12; a += step) grid.push_back(std::min(a, stop));
  return grid;
}

namespace {

void write_report(JsonWriter& w, const SearchReport& r) {
  w.begin_object();
  w.key("claim");
  w.value(r.claim.name());
  w.key("class");
  w.value(r.claim.class_name());
  w.key("alpha");
  w.value(r.alpha);
  w.key("claimed");
  w.value(r.claimed);
  w.key("claimed_formula");
  w.value(r.claim.formula);
  w.key("estimated_sup");
  w.value(r.estimated_sup);
  w.key("witness");
  if (r.witness_value)
    w.value(*r.witness_value);
  else
    w.value_null();
  w.key("slack");
  w.value(r.slack);
  w.key("sharp");
  w.raw_bool(r.claim.sharp);
  w.key("ok");
  w.raw_bool(r.ok());
  w.key("budget");
  w.value(static_cast<long long>(r.budget));
  w.key("seed");
  w.value(static_cast<unsigned long long>(r.seed));
  w.key("argmax");
  w.begin_object();
  w.key("angles");
  w.begin_array();
  for (const cplx& p : r.argmax.points) w.value(std::arg(p));
  w.end_array();
  w.key("weights");
  w.begin_array();
  for (double wt : r.argmax.weights) w.value(wt);
  w.end_array();
  w.end_object();
  w.end_object();
}

}  // namespace

std::string report_to_json(const std::vector<SearchReport>& reports) {
  JsonWriter w;
  w.begin_array();
  for (const auto& r : reports) write_report(w, r);
  w.end_array();
  return w.str() + "\n";
}

std::string report_to_csv(const std::vector<SearchReport>& reports) {
  std::string out = csv_row({"claim", "class", "alpha", "claimed", "claimed_formula",
                             "estimated_sup", "witness", "slack", "sharp", "ok",
                             "budget", "seed"});
  for (const auto& r : reports) {
    out += csv_row({r.claim.name(), r.claim.class_name(), format_double(r.alpha),
                    format_double(r.claimed), r.claim.formula,
                    format_double(r.estimated_sup),
                    r.witness_value ? format_double(*r.witness_value) : "",
                    format_double(r.slack), r.claim.sharp ? "true" : "false",
                    r.ok() ? "true" : "false", std::to_string(r.budget),
                    std::to_string(r.seed)});
  }
  return out;
}

std::string battery_to_json(const std::vector<BatteryCheck>& checks) {
  JsonWriter w;
  w.begin_array();
  for (const auto& c : checks) {
    w.begin_object();
    w.key("key");
    w.value(std::string(1, c.key));
    w.key("name");
    w.value(c.name);
    w.key("pass");
    w.raw_bool(c.pass);
    w.key("worst_margin");
    w.value(c.worst);
    w.key("correction");
    w.value(c.correction);
    w.key("special");
    w.value(c.special);
    w.key("detail");
    w.value(c.detail);
    w.end_object();
  }
  w.end_array();
  return w.str() + "\n";
}

std::string suites_to_json(const std::vector<SuiteResult>& suites) {
  JsonWriter w;
  w.begin_array();
  for (const auto& s : suites) {
    w.begin_object();
    w.key("name");
    w.value(s.name);
    w.key("pass");
    w.raw_bool(s.pass);
    w.key("samples");
    w.value(static_cast<long long>(s.samples));
    w.key("violations");
    w.value(static_cast<long long>(s.violations));
    w.key("worst");
    w.value(s.worst);
    w.key("detail");
    w.value(s.detail);
    w.end_object();
  }
  w.end_array();
  return w.str() + "\n";
}

}  // namespace gftlab
