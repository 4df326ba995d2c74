// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_SYMCHECK_HPP_
#define GAMMA0_SYMCHECK_HPP_

#include "gamma0/symcheck/identities.hpp"
#include "gamma0/symcheck/multipoly.hpp"

#endif  // GAMMA0_SYMCHECK_HPP_
