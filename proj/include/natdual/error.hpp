#ifndef NATDUAL_ERROR_HPP
#define NATDUAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace natdual {

enum class ErrorKind {
  invalid_parameter,
  needs_seed,
  signature_mismatch,
  type_mismatch,
  invalid_congruence,
  index_out_of_range,
  invalid_generator,
  not_a_hom,
  size_guard,
  ill_defined,
  parse,
};

char const* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace natdual

#endif  // NATDUAL_ERROR_HPP
