#pragma once

#include <stdexcept>
#include <string>

namespace operad {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A Groebner query outside the completed (arity, weight) region.
class not_completed_error : public error {
 public:
  not_completed_error(int arity, int weight)
      : error("region not completed: arity " + std::to_string(arity) +
              ", weight " + std::to_string(weight)),
        arity(arity), weight(weight) {}
  int arity;
  int weight;
};

class resource_error : public error {
 public:
  explicit resource_error(const std::string& what) : error("resource limit exceeded: " + what) {}
};

class parse_error : public error {
 public:
  parse_error(int line, int col, const std::string& what)
      : error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line;
  int col;
};

}  // namespace operad
