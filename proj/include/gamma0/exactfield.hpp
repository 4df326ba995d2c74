// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_EXACTFIELD_HPP_
#define GAMMA0_EXACTFIELD_HPP_

#include "gamma0/exactfield/ext_field.hpp"
#include "gamma0/exactfield/prime_field.hpp"
#include "gamma0/exactfield/roots.hpp"
#include "gamma0/exactfield/upoly.hpp"

#endif  // GAMMA0_EXACTFIELD_HPP_
