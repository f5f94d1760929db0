#ifndef MAPPERFORGE_ERRORS_HPP
#define MAPPERFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mapperforge {

enum class Errc {
  EmptyFace,
  NegativeId,
  UnknownVertex,
  NegativeEpsilon,
  IncompatibleCoverShape,
  MissingLensEntry,
  InsufficientPoints,
  RoundTripFailed,
  DimensionMismatch,
  DimensionTooSmall,
  PointOutside,
  UnsupportedDimension,
  DuplicateDomainPoints,
  NotInInterior,
  LipschitzZero,
  PointOutsideU,
  BadInput,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

/// Thrown when a synthesis target needs more data points than supplied.
class InsufficientPointsError : public Error {
public:
  InsufficientPointsError(long needed, long got)
      : Error(Errc::InsufficientPoints,
              "insufficient points: need at least " + std::to_string(needed) + ", got " +
                  std::to_string(got)),
        needed(needed), got(got) {}
  long needed;
  long got;
};

class NotInInteriorError : public Error {
public:
  explicit NotInInteriorError(int point_id)
      : Error(Errc::NotInInterior,
              "lens value of point " + std::to_string(point_id) +
                  " does not lie in the interior of any cover set"),
        point_id(point_id) {}
  int point_id;
};

/// New data points that fall outside every certified safety ball.
class PointOutsideUError : public Error {
public:
  explicit PointOutsideUError(std::vector<int> ids)
      : Error(Errc::PointOutsideU, describe(ids)), point_ids(std::move(ids)) {}
  std::vector<int> point_ids;

private:
  static std::string describe(const std::vector<int>& ids) {
    std::string s = "points outside every safety ball:";
    for (int id : ids) s += " " + std::to_string(id);
    return s;
  }
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace mapperforge

#endif
