#pragma once

#include <stdexcept>
#include <string>

namespace concord {

struct InvalidPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidIndex : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InvalidK : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSize : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SpectralFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dataset ingestion problems; message carries the 1-based line number.
struct IngestError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense n-by-n working memory refused (n beyond the configured cap).
struct MemoryGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace concord
