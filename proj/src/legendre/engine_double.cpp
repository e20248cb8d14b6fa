// Explicit instantiation of the double kernels.
#define CG_ENGINE_INSTANTIATE
#include "legendre/leg_t.hpp"

namespace cg::detail {
template struct Hyp<double>;
template struct Leg<double>;
}  // namespace cg::detail
