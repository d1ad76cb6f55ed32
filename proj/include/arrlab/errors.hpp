#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroNormal : Error {
  ZeroNormal() : Error("zero vector supplied as hyperplane normal") {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct AffineNotSupported : Error {
  AffineNotSupported() : Error("affine arrangements (nonzero offsets) are not supported") {}
};

struct NotARegion : Error {
  explicit NotARegion(const std::string& signs)
      : Error("sign vector is not a realizable region: " + signs) {}
};

struct NotEssential : Error {
  explicit NotEssential(const std::string& what) : Error(what) {}
};

struct FlatNotFound : Error {
  FlatNotFound() : Error("flat not found in lattice") {}
};

struct NotRank2 : Error {
  explicit NotRank2(const std::string& what) : Error(what) {}
};

struct ConvergenceFailure : Error {
  explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

struct BadSpec : Error {
  explicit BadSpec(const std::string& what) : Error(what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace arrlab
