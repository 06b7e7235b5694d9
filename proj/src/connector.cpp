#include "rsos/connector.hpp"

#include "rsos/sos.hpp"

namespace rsos {

bool ConnectedSystem::operator==(const ConnectedSystem& other) const {
  if (link != other.link || right != other.right || left.index() != other.left.index()) return false;
  if (const auto* p = std::get_if<Process>(&left)) return *p == std::get<Process>(other.left);
  return *std::get<1>(left) == *std::get<1>(other.left);
}

namespace {

struct SideStep {
  Label label;
  std::variant<Process, std::shared_ptr<const ConnectedSystem>> target;
};

std::vector<SideStep> left_steps(const ConnectedSystem& s) {
  std::vector<SideStep> out;
  if (const auto* p = std::get_if<Process>(&s.left)) {
    for (auto& step : dominant_step(*p)) out.push_back({std::move(step.label), std::move(step.target)});
  } else {
    for (auto& step : connector_step(*std::get<1>(s.left))) {
      out.push_back({std::move(step.label), std::make_shared<const ConnectedSystem>(std::move(step.target))});
    }
  }
  return out;
}

}  // namespace

std::vector<ConnectorStep> connector_step(const ConnectedSystem& s) {
  std::vector<ConnectorStep> out;
  const auto right = dominant_step(s.right);
  if (right.empty()) return out;
  for (const auto& l : left_steps(s)) {
    const EntitySet injected = s.link & l.label.p;
    for (const auto& r : right) {
      Label label{l.label.w | r.label.w, l.label.r | r.label.r, l.label.i | r.label.i, l.label.p | r.label.p};
      const auto& m = r.target.mixture();
      Process target(Mixture(m.reactions(), m.state() | injected, m.contexts()));
      out.push_back({std::move(label), ConnectedSystem{l.target, s.link, std::move(target)}});
    }
  }
  return out;
}

std::string to_string(const ConnectedSystem& s, const Universe& universe) {
  std::string left;
  if (const auto* p = std::get_if<Process>(&s.left)) {
    left = to_string(*p, universe);
  } else {
    left = "(" + to_string(*std::get<1>(s.left), universe) + ")";
  }
  return left + " <" + brace_set(s.link, universe) + "> " + to_string(s.right, universe);
}

}  // namespace rsos
