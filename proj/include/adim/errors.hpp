#ifndef ADIM_ERRORS_HPP
#define ADIM_ERRORS_HPP

#include <stdexcept>

namespace adim {

// Base of every failure this library raises on a violated precondition or
// malformed input. Internal invariant breaks use std::logic_error instead.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrderOutOfRange : Error { using Error::Error; };
struct InvalidEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };
struct EmptyGraph : Error { using Error::Error; };
struct DisconnectedGraph : Error { using Error::Error; };
struct EmptyLandmarkSet : Error { using Error::Error; };
struct DuplicateLandmark : Error { using Error::Error; };
struct MalformedGraph6 : Error { using Error::Error; };
struct InvalidParameters : Error { using Error::Error; };
struct ScopeTooLarge : Error { using Error::Error; };
struct IOError : Error { using Error::Error; };

}  // namespace adim

#endif  // ADIM_ERRORS_HPP
