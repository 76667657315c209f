#include "tsm/errors.hpp"

namespace tsm {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::non_symmetric: return "NonSymmetric";
    case Errc::disconnected: return "Disconnected";
    case Errc::loop_present: return "LoopPresent";
    case Errc::euler_violation: return "EulerViolation";
    case Errc::non_planar: return "NonPlanar";
    case Errc::unknown_face: return "UnknownFace";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::parallel_edge_contraction: return "ParallelEdgeContraction";
    case Errc::not_two_vertex: return "NotTwoVertex";
    case Errc::identical_neighbours: return "IdenticalNeighbours";
    case Errc::not_a_cut: return "NotACut";
    case Errc::not_a_component: return "NotAComponent";
    case Errc::has_bridge: return "HasBridge";
    case Errc::no_cyclic_cut: return "NoCyclicCut";
    case Errc::special_graph: return "SpecialGraph";
    case Errc::bad_vertex: return "BadVertex";
    case Errc::not_a_cycle: return "NotACycle";
    case Errc::bad_degrees: return "BadDegrees";
    case Errc::bad_params: return "BadParams";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::internal_assertion: return "InternalAssertion";
    case Errc::invalid_decomposition: return "InvalidDecomposition";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::string payload)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      payload_(std::move(payload)) {}

void fail(Errc code, const std::string& message, std::string payload) {
  throw Error(code, message, std::move(payload));
}

}  // namespace tsm
