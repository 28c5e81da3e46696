#ifndef CAPFLOW_CAPFLOW_HPP
#define CAPFLOW_CAPFLOW_HPP

#include "capflow/analytic.hpp"
#include "capflow/error.hpp"
#include "capflow/geometry.hpp"
#include "capflow/network.hpp"
#include "capflow/network_io.hpp"
#include "capflow/quadrature.hpp"
#include "capflow/sampling.hpp"

#endif
