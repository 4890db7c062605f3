#ifndef TOALAB_TOALAB_HPP
#define TOALAB_TOALAB_HPP

#include "toalab/config.hpp"
#include "toalab/csv.hpp"
#include "toalab/errors.hpp"
#include "toalab/propagation_oracle.hpp"
#include "toalab/quadrature.hpp"
#include "toalab/svg.hpp"
#include "toalab/tail_and_classical.hpp"
#include "toalab/toa_distributions.hpp"
#include "toalab/units_packets.hpp"

#endif
