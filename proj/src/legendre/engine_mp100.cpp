// Explicit instantiation of the R100 kernels.
#define CG_ENGINE_INSTANTIATE
#include "legendre/leg_t.hpp"

namespace cg::detail {
template struct Hyp<R100>;
template struct Leg<R100>;
}  // namespace cg::detail
