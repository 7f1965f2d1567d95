// Copyright 2026 The realqm Authors
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

#ifndef REALQM_TOOLS_REPORT_HPP_
#define REALQM_TOOLS_REPORT_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace rqm::cli {

/// Minimal JSON document builder.  Keys keep insertion order and doubles are
/// printed with 17 significant digits, so a given report is byte-stable.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::null) {}

  static JsonValue boolean(bool b);
  static JsonValue integer(std::int64_t i);
  static JsonValue number(double d);
  static JsonValue string(std::string s);
  static JsonValue array();
  static JsonValue object();

  JsonValue& set(const std::string& key, JsonValue value);  // object
  JsonValue& push(JsonValue value);                         // array

  bool is_object() const { return kind_ == Kind::object; }
  const JsonValue* find(const std::string& key) const;

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { null, boolean, integer, number, string, array, object };
  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  std::int64_t int_ = 0;
  double num_ = 0;
  std::string str_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

std::string format_double(double d);

}  // namespace rqm::cli

#endif  // REALQM_TOOLS_REPORT_HPP_
