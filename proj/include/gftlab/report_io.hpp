#ifndef GFTLAB_REPORT_IO_HPP
#define GFTLAB_REPORT_IO_HPP

#include <string>
#include <vector>

#include "gftlab/verify.hpp"

namespace gftlab {

// Fixed 17-significant-digit formatting so repeated runs emit byte-identical
// output regardless of locale or stream state.
std::string format_double(double v);

// Minimal ordered JSON emitter. Keys are written in insertion order; numbers
// go through format_double.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(double v);
  void value(long long v);
  void value(unsigned long long v);
  void value(const std::string& v);
  void value_null();
  void raw_bool(bool b);
  std::string str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

std::string escape_json(const std::string& s);

// RFC-4180 style CSV: comma separator, LF line endings, quotes only when needed.
std::string csv_row(const std::vector<std::string>& fields);

// "start:stop:step" inclusive of both endpoints (within 1e-12), or a single
// value. Throws std::invalid_argument on malformed input.
std::vector<double> parse_alpha_grid(const std::string& spec);

std::string report_to_json(const std::vector<SearchReport>& reports);
std::string report_to_csv(const std::vector<SearchReport>& reports);
std::string battery_to_json(const std::vector<BatteryCheck>& checks);
std::string suites_to_json(const std::vector<SuiteResult>& suites);

}  // namespace gftlab

#endif
