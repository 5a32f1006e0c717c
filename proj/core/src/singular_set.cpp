#include "singcbf/singular_set.hpp"

#include "singcbf/csv.hpp"
#include "singcbf/gram.hpp"

namespace singcbf {

std::vector<SingularitySample> sample_singular_set(const SystemModel& model,
                                                   const GridSpec& grid,
                                                   double threshold) {
  grid.validate();
  if (grid.dims() != model.n)
    throw ContractViolation("sample_singular_set: grid dims != model.n");

  std::vector<SingularitySample> out;
  const long total = grid.total_nodes();
  for (long idx = 0; idx < total; ++idx) {
    const StateVector x = grid.node(grid.unflatten(idx));
    const double sigma = smallest_singular_value(mapping_matrix(model, x));
    if (sigma < threshold) out.push_back({x, sigma});
  }
  return out;
}

std::string singular_set_csv(const std::vector<SingularitySample>& samples,
                             int state_dims) {
  std::string out;
  for (int i = 0; i < state_dims; ++i) {
    out += 'x';
    out += std::to_string(i + 1);
    out += ',';
  }
  out += "sigma_min\n";
  for (const auto& s : samples) {
    for (int i = 0; i < state_dims; ++i) {
      out += format_g9(s.state[i]);
      out += ',';
    }
    out += format_g9(s.sigma_min);
    out += '\n';
  }
  return out;
}

}  // namespace singcbf
