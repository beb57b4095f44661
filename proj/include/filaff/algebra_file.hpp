// Text format for filiform algebra inputs.  Grammar (one item per line,
// '#' starts a comment, blank lines ignored):
//
//   n: 9
//   label: anything        (optional)
//   seed: 7                (optional)
//   alpha:
//     2,5: 1
//     3,7: -2/3
//
// Rationals are kept as exact strings until conversion.  Parse errors
// carry the offending line number.
#pragma once

#include "filaff/filiform.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace filaff {

struct AlgebraFile {
  int n = 0;
  std::optional<std::string> label;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::string> alpha;  // "k,s" -> rational text
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

AlgebraFile parse_algebra_file(std::istream& in);
AlgebraFile read_algebra_file(const std::string& path);

// Converts the raw strings; throws ParseError (line 0) when a key is
// outside the admissible index set or a value is not a valid rational.
FiliformParams to_params(const AlgebraFile& f);

// Renders parameters back into the file format (round-trips through the
// parser).
std::string format_algebra_file(const FiliformParams& params,
                                const std::optional<std::string>& label,
                                const std::optional<std::uint64_t>& seed);

}  // namespace filaff
