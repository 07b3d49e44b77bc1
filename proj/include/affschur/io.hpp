#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "affschur/algebra.hpp"
#include "affschur/simple_modules.hpp"
#include "affschur/stratification.hpp"

namespace affschur {

enum class ParseErrorKind { Malformed, NegativeEntry, WeightMismatch, RowOutOfRange, DuplicateEntry };

std::string to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string source, int line, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::string source_;
  int line_;
};

/// Text format: a header "n=<int> r=<int>", then one "<i> <j> <v>" line per
/// nonzero entry with 1 <= i <= n, any integer j, v > 0. Blank lines and
/// '#' comments are ignored. Input starting with '{' is read as JSON
/// {"n":..,"r":..,"entries":[[i,j,v],...]}.
PeriodicMatrix parse_matrix(std::string_view text, const std::string& source = "<input>");
std::string format_matrix(const PeriodicMatrix& a);
nlohmann::json matrix_to_json(const PeriodicMatrix& a);
PeriodicMatrix matrix_from_json(const nlohmann::json& j, const std::string& source = "<input>");

/// Element text format: the matrix header, then blocks "term <coef>" each
/// followed by entry lines. A file with no "term" line is one basis element.
/// JSON: {"n","r","terms":[{"coefficient":"<int>","entries":[[i,j,v],...]}]}.
AlgebraElement parse_element(std::string_view text, const std::string& source = "<input>");
std::string format_element(const AlgebraElement& x);
nlohmann::json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& j, const std::string& source = "<input>");

/// One "<value> <length>" pair per line; values "p", "p/q" or "(re,im)".
SegmentMultiset parse_segments(std::string_view text, const std::string& source = "<input>");
std::string format_segments(const SegmentMultiset& s);
nlohmann::json segments_to_json(const SegmentMultiset& s);

/// "lambda=<parts>" line, then a line of coordinates.
OmegaPoint parse_omega(std::string_view text, const std::string& source = "<input>");
std::string format_omega(const OmegaPoint& b);
nlohmann::json omega_to_json(const OmegaPoint& b);

nlohmann::json certificate_to_json(const MembershipCertificate& c);
std::string format_certificate(const MembershipCertificate& c);

std::string read_file(const std::string& path);

}  // namespace affschur
