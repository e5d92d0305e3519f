#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dirac_rm::cli {

/// 17 significant digits; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double x);

/// Streaming JSON writer with two-space indentation. Fields come out in
/// call order; non-finite doubles are written as null.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double x);
  JsonWriter& value(int x);
  JsonWriter& value(bool x);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null();

  template <class T>
  JsonWriter& field(std::string_view name, const T& x) {
    key(name);
    return value(x);
  }

 private:
  struct Frame {
    bool array = false;
    bool empty = true;
  };

  void before_value();
  void write_string(std::string_view s);
  void newline();
  JsonWriter& close(char bracket);

  std::ostream& os_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

}  // namespace dirac_rm::cli
