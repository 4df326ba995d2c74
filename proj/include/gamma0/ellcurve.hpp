// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_ELLCURVE_HPP_
#define GAMMA0_ELLCURVE_HPP_

#include "gamma0/ellcurve/automorphism.hpp"
#include "gamma0/ellcurve/curve.hpp"
#include "gamma0/ellcurve/geometric.hpp"
#include "gamma0/ellcurve/torsion.hpp"

#endif  // GAMMA0_ELLCURVE_HPP_
