#pragma once

#include <stdexcept>
#include <string>

namespace dilution {

// Error categories surfaced by the library. The CLI maps these onto exit
// codes; tests match on them instead of parsing messages.
enum class Errc {
  malformed_file,
  corrupt_record,
  duplicate_key,
  empty_annotation,
  manifest_parse,
  image_too_small,
  degenerate_statistics,
  insufficient_data,
  shape_mismatch,
  too_few_points,
  range_error,
  config_error,
  dependency_error,
  alignment_error,
  empty_set,
  empty_pool,
  divergence,
  malformed_container,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace dilution
