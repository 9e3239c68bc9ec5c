#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace braidcover {

enum class ErrorKind {
  InvalidArgument,  // malformed input, index out of range, size mismatch
  NotSimple,        // a covering value is not a transposition
  Disconnected,     // covering values generate an intransitive group
  NotLiftable,
  RelationViolated,  // descent relation of the 4-dimensional cover fails
  NotBoundaryClass,  // lifted curve is not a combination of boundary classes
  NotAllowable,      // lifted curve is null-homologous on the page
  RankNotOne,
  Inconsistent,  // internal invariant broken; indicates a bug
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `index()` carries the 1-based
/// position of the offending item (band, covering value, ...) when known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::optional<std::size_t> index() const noexcept {
    return index_;
  }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace braidcover
