#ifndef HGC_ERROR_HPP
#define HGC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hgc {

// Exit codes used by the CLI: 0 ok, 2 parse, 3 validation, 4 contract,
// 5 verification failure.
struct parse_error : std::runtime_error {
  int line = 0, column = 0;
  parse_error(const std::string& msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(line_ > 0 ? msg + " (line " + std::to_string(line_) +
                                           ", column " + std::to_string(col_) + ")"
                                     : msg),
        line(line_), column(col_) {}
};

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct verify_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hgc

#endif
