// Explicit instantiation of the R50 kernels.
#define CG_ENGINE_INSTANTIATE
#include "legendre/leg_t.hpp"

namespace cg::detail {
template struct Hyp<R50>;
template struct Leg<R50>;
}  // namespace cg::detail
