#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gspin {

enum class ErrorKind {
  DegenerateForm,
  ZeroArgument,
  ZeroEntry,
  UnsupportedField,
  FieldMismatch,
  BasisMismatch,
  NotInvertible,
  BasisNotExtension,
  DimensionCap,
  HypothesisViolation,
  NotSplit,
  FormNotFound,
  InvalidDecomposition,
  TargetMismatch,
  InvalidClass,
  PoleAtS,
  RankMismatch,
  SingularSatake,
  CentralCharacterMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gspin
