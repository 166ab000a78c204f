#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dilution {

inline constexpr int kImageSide = 32;
inline constexpr int kImagePixels = kImageSide * kImageSide;  // per channel
inline constexpr int kImageBytes = 3 * kImagePixels;          // 3072
inline constexpr int kFeatureDim = 36;

enum class Split { train, test };

// One 32x32 RGB image, channel-planar (R plane, G plane, B plane), each
// plane row-major. The layout matches the CIFAR-10 binary record body.
struct ImageRecord {
  int id = 0;
  std::array<std::uint8_t, kImageBytes> pixels{};
  int clean_label = 0;
  Split source_split = Split::train;

  std::uint8_t plane(int channel, int row, int col) const {
    return pixels[channel * kImagePixels + row * kImageSide + col];
  }
  std::uint8_t& plane(int channel, int row, int col) {
    return pixels[channel * kImagePixels + row * kImageSide + col];
  }
};

// Per-image annotator labels keyed by image id; label lists preserve
// annotator order.
struct MultiAnnotationTable {
  std::map<int, std::vector<int>> rows;
};

enum class Tier { clean, single_dilution, multi_dilution };

enum class Strategy { nss, density, random, human, synthetic, clean };

const char* tier_name(Tier t);
Tier tier_from_name(const std::string& name);
const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

// Pool sizing и label-set cardinality for dilution. multi_fraction and
// single_fraction must sum to pool_fraction.
struct DilutionConfig {
  double pool_fraction = 0.40;
  double multi_fraction = 0.10;
  double single_fraction = 0.30;
  int k_max = 3;
  Strategy strategy = Strategy::nss;
  std::uint64_t seed = 0;

  void validate() const;  // throws Errc::config_error

  bool operator==(const DilutionConfig&) const = default;
};

struct ManifestEntry {
  int id = 0;
  std::vector<int> labels;  // distinct; clean label first in diluted sets
  bool pool_member = false;
  Tier tier = Tier::clean;

  bool operator==(const ManifestEntry&) const = default;
};

struct DilutionManifest {
  std::vector<ManifestEntry> entries;
  DilutionConfig config_echo;
  std::uint64_t seed = 0;

  bool operator==(const DilutionManifest&) const = default;
};

// One replicated training example: a manifest entry contributes one row per
// label in its set, `replication_index` being the position in that set.
struct TrainingRow {
  int id = 0;
  int label = 0;
  int replication_index = 0;

  bool operator==(const TrainingRow&) const = default;
};

struct FeatureVector {
  std::array<double, kFeatureDim> values{};
  int image_id = 0;
};

}  // namespace dilution
