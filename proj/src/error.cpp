#include "specbound/error.hpp"

namespace specbound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::ByteOutOfRange: return "ByteOutOfRange";
    case ErrorCode::NonzeroPadding: return "NonzeroPadding";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotConnectedNonbipartite: return "NotConnectedNonbipartite";
    case ErrorCode::KcapExceeded: return "KcapExceeded";
    case ErrorCode::RTooLargeForOrder: return "RTooLargeForOrder";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> offset) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  if (offset) out += " (byte offset " + std::to_string(*offset) + ")";
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(decorate(code, message, offset)),
      code_(code),
      offset_(offset) {}

}  // namespace specbound
