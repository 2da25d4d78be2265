#pragma once

#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/constants.hpp"
#include "zetalab/euler_products.hpp"
#include "zetalab/field_lab.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/io.hpp"
#include "zetalab/kernels.hpp"
#include "zetalab/laurent.hpp"
#include "zetalab/lfunc.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/poly_mod.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/random_euler.hpp"
#include "zetalab/resonator.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/weights.hpp"
#include "zetalab/zeta.hpp"
