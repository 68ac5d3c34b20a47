#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bkclab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A configured cap (dimension, |W|, height, degree) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The group/characteristic pair fails the validity checks.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// An exact re-check failed. Indicates a bug, never a mathematical outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A rational entry has a denominator divisible by p.
class NonIntegral : public Error {
 public:
  NonIntegral(std::size_t row, std::size_t col, std::string denominator, std::uint64_t p)
      : Error("entry (" + std::to_string(row) + "," + std::to_string(col) + ") has denominator " +
              denominator + " divisible by " + std::to_string(p)),
        row_(row),
        col_(col),
        denominator_(std::move(denominator)) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::size_t row_;
  std::size_t col_;
  std::string denominator_;
};

/// e^{(j)} has no reduction mod p on the chosen lattice.
class DividedPowerUndefined : public Error {
 public:
  DividedPowerUndefined(std::uint64_t p, std::size_t j)
      : Error("divided power e^(" + std::to_string(j) + ") is not defined mod " + std::to_string(p)),
        p_(p),
        j_(j) {}

  std::uint64_t p() const noexcept { return p_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::uint64_t p_;
  std::size_t j_;
};

/// Lowest-alcove construction requested outside its regime.
class RegimeViolated : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace bkclab
