#include "dilution/error.hpp"

namespace dilution {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_file: return "malformed-file";
    case Errc::corrupt_record: return "corrupt-record";
    case Errc::duplicate_key: return "duplicate-key";
    case Errc::empty_annotation: return "empty-annotation";
    case Errc::manifest_parse: return "manifest-parse";
    case Errc::image_too_small: return "image-too-small";
    case Errc::degenerate_statistics: return "degenerate-statistics";
    case Errc::insufficient_data: return "insufficient-data";
    case Errc::shape_mismatch: return "shape";
    case Errc::too_few_points: return "too-few-points";
    case Errc::range_error: return "range";
    case Errc::config_error: return "config";
    case Errc::dependency_error: return "dependency";
    case Errc::alignment_error: return "alignment";
    case Errc::empty_set: return "empty-set";
    case Errc::empty_pool: return "empty-pool";
    case Errc::divergence: return "divergence";
    case Errc::malformed_container: return "malformed-container";
  }
  return "unknown";
}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace dilution
