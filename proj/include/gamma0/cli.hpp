// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_CLI_HPP_
#define GAMMA0_CLI_HPP_

#include "gamma0/cli/lambda_order.hpp"
#include "gamma0/cli/report.hpp"
#include "gamma0/cli/scan.hpp"
#include "gamma0/cli/special_points.hpp"
#include "gamma0/cli/verify.hpp"

#endif  // GAMMA0_CLI_HPP_
