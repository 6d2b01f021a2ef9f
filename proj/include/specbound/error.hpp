#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specbound {

enum class ErrorCode {
  BadLength,
  ByteOutOfRange,
  NonzeroPadding,
  OrderTooLarge,
  InvalidParams,
  SizeMismatch,
  NoSuchEdge,
  NoConvergence,
  EmptyGraph,
  Overflow,
  NotConnectedNonbipartite,
  KcapExceeded,
  RTooLargeForOrder,
  MalformedTrace,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library surfaces as this exception. The byte offset is
// set for graph6 decoding errors only.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace specbound
