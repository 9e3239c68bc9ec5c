#include "braidcover/error.hpp"

namespace braidcover {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
    case ErrorKind::NotSimple:
      return "NotSimple";
    case ErrorKind::Disconnected:
      return "Disconnected";
    case ErrorKind::NotLiftable:
      return "NotLiftable";
    case ErrorKind::RelationViolated:
      return "RelationViolated";
    case ErrorKind::NotBoundaryClass:
      return "NotBoundaryClass";
    case ErrorKind::NotAllowable:
      return "NotAllowable";
    case ErrorKind::RankNotOne:
      return "RankNotOne";
    case ErrorKind::Inconsistent:
      return "Inconsistent";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> index) {
  std::string out{to_string(kind)};
  if (index) {
    out += " at index " + std::to_string(*index);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(decorate(kind, message, index)),
      kind_(kind),
      index_(index) {}

}  // namespace braidcover
