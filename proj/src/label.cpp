#include "rsos/label.hpp"

namespace rsos {

std::string to_string(const Label& label, const Universe& universe) {
  return join_names(label.w, universe, "-") + " |> " + join_names(label.r, universe, "-") + " ; " +
         join_names(label.i, universe, "-") + " ; " + join_names(label.p, universe, "-");
}

}  // namespace rsos
