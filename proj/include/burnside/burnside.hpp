#ifndef BURNSIDE_BURNSIDE_HPP
#define BURNSIDE_BURNSIDE_HPP

#include "burnside/common.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/fusion.hpp"
#include "burnside/stable.hpp"
#include "burnside/ideals.hpp"
#include "burnside/io.hpp"
#include "burnside/report.hpp"

#endif
