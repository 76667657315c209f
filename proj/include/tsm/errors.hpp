#pragma once

#include <stdexcept>
#include <string>

namespace tsm {

enum class Errc {
  non_symmetric,
  disconnected,
  loop_present,
  euler_violation,
  non_planar,
  unknown_face,
  unknown_vertex,
  unknown_edge,
  parallel_edge_contraction,
  not_two_vertex,
  identical_neighbours,
  not_a_cut,
  not_a_component,
  has_bridge,
  no_cyclic_cut,
  special_graph,
  bad_vertex,
  not_a_cycle,
  bad_degrees,
  bad_params,
  budget_exceeded,
  precondition_violated,
  internal_assertion,
  invalid_decomposition,
  parse_error,
};

const char* errc_name(Errc c);

/// Library error. `payload()` carries optional JSON (a witness for
/// precondition violations, a surgery-log replay for internal assertions).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::string payload = {});
  Errc code() const { return code_; }
  const std::string& payload() const { return payload_; }

 private:
  Errc code_;
  std::string payload_;
};

[[noreturn]] void fail(Errc code, const std::string& message,
                       std::string payload = {});

#define TSM_ASSERT(cond, msg)                                         \
  do {                                                                \
    if (!(cond)) ::tsm::fail(::tsm::Errc::internal_assertion, (msg)); \
  } while (0)

}  // namespace tsm
